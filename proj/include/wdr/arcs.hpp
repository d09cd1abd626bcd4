#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "wdr/digraph.hpp"
#include "wdr/scheme.hpp"

namespace wdr {

using TSet = std::set<int>;

// q such that (1, q-1) is a two-way label.
inline TSet t_set(const Digraph& g) {
  const auto& d = distance_matrix(g);
  TSet out;
  for (auto [u, v] : g.arcs()) out.insert(d(v, u) + 1);
  return out;
}

// An arc (u, v) has type (1, q-1) when d(v, u) = q - 1.
inline int arc_type_q(const Digraph& g, Vertex u, Vertex v) { return g.raw_distances()(v, u) + 1; }

inline TwoWayLabel arc_label(int q) { return {1, q - 1}; }

// Calls visit(circuit) for every directed cycle on exactly `length` distinct
// vertices that uses the arc (u, v). Circuits are listed starting u, v, ...
// Stops early when visit returns false; the return value reports whether the
// enumeration ran to completion.
template <typename Visitor>
bool for_each_circuit_through_arc(const Digraph& g, Arc arc, int length, Visitor&& visit) {
  auto [u, v] = arc;
  if (!g.has_arc(u, v)) throw error("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
  if (length < 2) throw error("circuit length must be at least 2");
  const auto& d = g.raw_distances();
  if (d(v, u) == kUnreachable || d(v, u) > length - 1) return true;

  std::vector<Vertex> path{u, v};
  std::vector<char> on_path(g.order(), 0);
  on_path[u] = on_path[v] = 1;

  auto extend = [&](auto&& self) -> bool {
    const Vertex cur = path.back();
    const int s = static_cast<int>(path.size());
    if (s == length) return g.has_arc(cur, u) ? static_cast<bool>(visit(std::span<const Vertex>(path))) : true;
    for (Vertex w : g.out_neighbors(cur)) {
      if (on_path[w]) continue;
      const int back = d(w, u);
      if (back == kUnreachable || back > length - s) continue;
      path.push_back(w);
      on_path[w] = 1;
      bool go_on = self(self);
      on_path[w] = 0;
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return extend(extend);
}

inline std::vector<std::vector<Vertex>> circuits_through_arc(const Digraph& g, Arc arc, int length) {
  std::vector<std::vector<Vertex>> out;
  for_each_circuit_through_arc(g, arc, length, [&](std::span<const Vertex> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

struct PurityVerdict {
  int q = 0;
  bool pure = true;
  std::vector<Vertex> witness;  // mixed only: a length-q circuit with an arc of another type
};

enum class PurityMode {
  all_arcs,        // every arc of type (1, q-1); sound for any digraph
  representative,  // first such arc only; valid on weakly distance-regular inputs
};

inline PurityVerdict is_pure(const Digraph& g, int q, PurityMode mode = PurityMode::all_arcs) {
  const auto& d = distance_matrix(g);
  PurityVerdict verdict{q, true, {}};
  bool any = false;
  for (auto [u, v] : g.arcs()) {
    if (d(v, u) != q - 1) continue;
    any = true;
    for_each_circuit_through_arc(g, {u, v}, q, [&](std::span<const Vertex> c) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Vertex a = c[k], b = c[(k + 1) % c.size()];
        if (d(b, a) != q - 1) {
          verdict.pure = false;
          verdict.witness.assign(c.begin(), c.end());
          return false;
        }
      }
      return true;
    });
    if (!verdict.pure || mode == PurityMode::representative) break;
  }
  if (!any) throw error("no arc of type (1," + std::to_string(q - 1) + ")");
  return verdict;
}

namespace detail {

inline bool previous_type_pure(const Digraph& g, const SchemeTensor& t, int q) {
  return q >= 3 && t.contains(arc_label(q - 1)) && is_pure(g, q - 1, PurityMode::representative).pure;
}

}  // namespace detail

// C(q): p^{(1,q-2)}_{(1,q-1),(1,q-1)} != 0 and (1, q-2) pure.
inline bool has_configuration_C(const Digraph& g, const SchemeTensor& t, int q) {
  if (q < 3 || !t.contains(arc_label(q - 1)) || !t.contains(arc_label(q))) return false;
  return t.p(arc_label(q - 1), arc_label(q), arc_label(q)) != 0 && detail::previous_type_pure(g, t, q);
}

// D(q): p^{(1,q-1)}_{(1,q-2),(q-2,1)} != 0 and (1, q-2) pure.
inline bool has_configuration_D(const Digraph& g, const SchemeTensor& t, int q) {
  if (q < 3 || !t.contains(arc_label(q - 1)) || !t.contains(arc_label(q))) return false;
  return t.p(arc_label(q), arc_label(q - 1), arc_label(q - 1).converse()) != 0 &&
         detail::previous_type_pure(g, t, q);
}

}  // namespace wdr
