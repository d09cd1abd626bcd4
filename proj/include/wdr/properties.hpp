#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wdr/analysis.hpp"
#include "wdr/arcs.hpp"
#include "wdr/closure.hpp"
#include "wdr/isomorphism.hpp"
#include "wdr/scheme.hpp"

// Executable statements about commutative thick weakly distance-regular
// digraphs. Each check returns the violations it found; an empty list means
// the statement held on the instance.
namespace wdr {

struct Finding {
  std::string property;
  std::string detail;
};

namespace property {

inline constexpr const char* kMixedIffConfiguration = "mixed_iff_configuration";
inline constexpr const char* kMixedProductTypes = "mixed_product_types";
inline constexpr const char* kArcTypeRelationship = "arc_type_relationship";
inline constexpr const char* kShortestPathArcBound = "shortest_path_arc_bound";
inline constexpr const char* kSquareOfArcType = "square_of_arc_type";
inline constexpr const char* kDeltaBasePoint = "delta_base_point";
inline constexpr const char* kQuotientClassification = "quotient_classification";

}  // namespace property

// For every q in T: C(q) or D(q) exists exactly when (1, q-1) is mixed.
inline std::vector<Finding> check_mixed_iff_configuration(const Digraph& g, const SchemeTensor& t,
                                                          PurityMode mode = PurityMode::all_arcs) {
  std::vector<Finding> out;
  for (int q : t_set(g)) {
    const bool config = has_configuration_C(g, t, q) || has_configuration_D(g, t, q);
    const bool mixed = !is_pure(g, q, mode).pure;
    if (config != mixed)
      out.push_back({property::kMixedIffConfiguration, "q=" + std::to_string(q) + " configuration=" +
                                                           detail::bool_text(config) + " mixed=" + detail::bool_text(mixed)});
  }
  return out;
}

// p^{(1,q-1)}_{(1,s-1),(1,t-1)} != 0 with s != t forces q in {s, t}.
inline std::vector<Finding> check_mixed_product_types(const SchemeTensor& t, const TSet& types) {
  std::vector<Finding> out;
  for (int q : types)
    for (int s : types)
      for (int u : types) {
        if (s == u || q == s || q == u) continue;
        if (t.p(arc_label(q), arc_label(s), arc_label(u)) != 0)
          out.push_back({property::kMixedProductTypes,
                         "q=" + std::to_string(q) + " s=" + std::to_string(s) + " t=" + std::to_string(u)});
      }
  return out;
}

// For distinct q, p in T at least one holds: C(q) with p = q-1; C(p) with
// q = p-1; Gamma^2_{1,q-1} meets Gamma_{1,p-1}Gamma_{p-1,1}; or the same with
// q and p swapped.
inline std::vector<Finding> check_arc_type_relationship(const Digraph& g, const SchemeTensor& t, const TSet& types) {
  std::vector<Finding> out;
  auto square = [&](int q) { return relation_product(t, {arc_label(q)}, {arc_label(q)}); };
  auto round_trip = [&](int p) { return relation_product(t, {arc_label(p)}, {arc_label(p).converse()}); };
  auto meets = [](const LabelSet& a, const LabelSet& b) {
    return std::any_of(a.begin(), a.end(), [&](const TwoWayLabel& l) { return b.count(l) != 0; });
  };
  for (int q : types)
    for (int p : types) {
      if (p <= q) continue;
      const bool holds = (p == q - 1 && has_configuration_C(g, t, q)) || (q == p - 1 && has_configuration_C(g, t, p)) ||
                         meets(square(q), round_trip(p)) || meets(square(p), round_trip(q));
      if (!holds)
        out.push_back({property::kArcTypeRelationship, "q=" + std::to_string(q) + " p=" + std::to_string(p)});
    }
  return out;
}

// Most arcs of type (1, q-1) on any shortest x -> y path, for every pair.
// Dynamic programme over the shortest-path DAG from each source.
inline SquareMatrix<int> max_type_arcs_on_shortest_paths(const Digraph& g, int q) {
  const auto& d = distance_matrix(g);
  const int n = g.order();
  SquareMatrix<int> best(n, 0);
  std::vector<Vertex> order(n);
  for (Vertex x = 0; x < n; ++x) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d(x, a) < d(x, b); });
    for (Vertex w : order) {
      if (w == x) continue;
      int m = 0;
      for (Vertex u : g.in_neighbors(w))
        if (d(x, u) + 1 == d(x, w)) m = std::max(m, best(x, u) + (d(w, u) == q - 1 ? 1 : 0));
      best(x, w) = m;
    }
  }
  return best;
}

// Where C(q) exists, no shortest path carries more than two arcs of type (1, q-1).
inline std::vector<Finding> check_shortest_path_arc_bound(const Digraph& g, const SchemeTensor& t, const TSet& types) {
  std::vector<Finding> out;
  for (int q : types) {
    if (!has_configuration_C(g, t, q)) continue;
    auto best = max_type_arcs_on_shortest_paths(g, q);
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = 0; y < g.order(); ++y)
        if (best(x, y) > 2) {
          out.push_back({property::kShortestPathArcBound, "q=" + std::to_string(q) + " pair (" + std::to_string(x) +
                                                              "," + std::to_string(y) + ") carries " +
                                                              std::to_string(best(x, y))});
          x = g.order();
          break;
        }
  }
  return out;
}

// For q > 2 in T, Gamma^2_{1,q-1} is {(2,q-2)}, {(1,q-2)}, {(1,q-2),(2,q-1)} or {(2,q-1)}.
inline std::vector<Finding> check_square_of_arc_type(const SchemeTensor& t, const TSet& types) {
  std::vector<Finding> out;
  for (int q : types) {
    if (q <= 2) continue;
    const auto sq = relation_product(t, {arc_label(q)}, {arc_label(q)});
    const std::vector<LabelSet> allowed{
        {TwoWayLabel{2, q - 2}}, {TwoWayLabel{1, q - 2}}, {TwoWayLabel{1, q - 2}, TwoWayLabel{2, q - 1}},
        {TwoWayLabel{2, q - 1}}};
    if (std::find(allowed.begin(), allowed.end(), sq) == allowed.end()) {
      std::string s;
      for (const auto& l : sq) s += to_string(l);
      out.push_back({property::kSquareOfArcType, "q=" + std::to_string(q) + " square=" + s});
    }
  }
  return out;
}

// Delta_I(x) is isomorphic to Delta_I(0) for every x.
inline std::vector<Finding> check_delta_base_point(const Digraph& g, const SchemeTensor& t, const TSet& types) {
  std::vector<Finding> out;
  const auto base = canonical_form(delta_subdigraph(g, t, types, 0).digraph);
  for (Vertex x = 1; x < g.order(); ++x)
    if (canonical_form(delta_subdigraph(g, t, types, x).digraph) != base) {
      out.push_back({property::kDeltaBasePoint, "I={" + detail::join_ints(types, ",") + "} x=" + std::to_string(x)});
      break;
    }
  return out;
}

// Every statement above plus the quotient classification verdict, on a
// commutative thick weakly distance-regular digraph.
inline std::vector<Finding> check_theorem_properties(const Digraph& g, const AnalysisReport& report,
                                                     const TheoremVerdict& verdict) {
  std::vector<Finding> out;
  const auto* t = report.tensor();
  if (!t || !report.commutative_thick_wdr()) return out;
  auto append = [&](std::vector<Finding> f) { out.insert(out.end(), f.begin(), f.end()); };
  append(check_mixed_iff_configuration(g, *t));
  append(check_mixed_product_types(*t, report.t_set));
  append(check_arc_type_relationship(g, *t, report.t_set));
  append(check_shortest_path_arc_bound(g, *t, report.t_set));
  append(check_square_of_arc_type(*t, report.t_set));
  for (const auto& a : verdict.attempts) append(check_delta_base_point(g, *t, a.kept));
  if (!verdict.passed()) out.push_back({property::kQuotientClassification, verdict.reason});
  return out;
}

}  // namespace wdr
