#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "wdr/arcs.hpp"
#include "wdr/closure.hpp"
#include "wdr/digraph.hpp"
#include "wdr/isomorphism.hpp"
#include "wdr/scheme.hpp"

namespace wdr {

struct ArcTypeReport {
  int q = 0;
  PurityVerdict purity;
  std::optional<bool> config_c;  // only when a tensor exists
  std::optional<bool> config_d;
};

struct AnalysisReport {
  int order = 0;
  std::size_t arcs = 0;
  bool strongly_connected = false;
  std::optional<WdrResult> wdr;
  bool commutative = false;
  bool thick = false;
  bool thin = false;
  bool quasi_thin = false;
  int max_intersection_number = 0;
  TSet t_set;
  std::vector<ArcTypeReport> arc_types;

  bool is_wdr() const { return wdr && wdr::is_wdr(*wdr); }
  const SchemeTensor* tensor() const { return is_wdr() ? &std::get<SchemeTensor>(*wdr) : nullptr; }
  const WdrFailure* failure() const { return wdr && !is_wdr() ? &std::get<WdrFailure>(*wdr) : nullptr; }
  bool commutative_thick_wdr() const { return is_wdr() && commutative && thick; }
};

inline AnalysisReport analyze(const Digraph& g) {
  AnalysisReport r;
  r.order = g.order();
  r.arcs = g.arc_count();
  r.strongly_connected = is_strongly_connected(g);
  if (!r.strongly_connected) return r;
  r.wdr = check_weakly_distance_regular(g);
  if (const auto* t = r.tensor()) {
    r.commutative = is_commutative(*t);
    r.thick = is_thick(*t);
    r.max_intersection_number = max_intersection_number(*t);
    r.thin = is_thin(*t);
    r.quasi_thin = is_quasi_thin(*t);
  }
  if (g.order() < 2) return r;
  r.t_set = t_set(g);
  const auto mode = r.is_wdr() ? PurityMode::representative : PurityMode::all_arcs;
  for (int q : r.t_set) {
    ArcTypeReport a{q, is_pure(g, q, mode), std::nullopt, std::nullopt};
    if (const auto* t = r.tensor()) {
      a.config_c = has_configuration_C(g, *t, q);
      a.config_d = has_configuration_D(g, *t, q);
    }
    r.arc_types.push_back(std::move(a));
  }
  return r;
}

namespace detail {

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }
inline const char* bool_text(bool b) { return b ? "true" : "false"; }

inline std::string join_ints(const TSet& s, const char* sep) {
  std::string out;
  for (int q : s) out += (out.empty() ? "" : sep) + std::to_string(q);
  return out;
}

inline std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

inline std::string pair_text(Arc a) { return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")"; }

}  // namespace detail

// One `key = value` per line, nested keys dotted, fixed key order.
inline void write_report_kv(std::ostream& os, const AnalysisReport& r) {
  using detail::bool_text;
  os << "order = " << r.order << '\n';
  os << "arcs = " << r.arcs << '\n';
  os << "strongly_connected = " << bool_text(r.strongly_connected) << '\n';
  if (!r.strongly_connected) return;
  os << "wdr = " << bool_text(r.is_wdr()) << '\n';
  if (const auto* f = r.failure()) {
    os << "wdr.witness.h = " << f->h << '\n';
    os << "wdr.witness.i = " << f->i << '\n';
    os << "wdr.witness.j = " << f->j << '\n';
    os << "wdr.witness.first_pair = " << detail::pair_text(f->first_pair) << '\n';
    os << "wdr.witness.first_count = " << f->first_count << '\n';
    os << "wdr.witness.second_pair = " << detail::pair_text(f->second_pair) << '\n';
    os << "wdr.witness.second_count = " << f->second_count << '\n';
  }
  if (r.is_wdr()) {
    os << "commutative = " << bool_text(r.commutative) << '\n';
    os << "thick = " << bool_text(r.thick) << '\n';
    os << "thin = " << bool_text(r.thin) << '\n';
    os << "quasi_thin = " << bool_text(r.quasi_thin) << '\n';
    os << "max_intersection_number = " << r.max_intersection_number << '\n';
  }
  os << "t_set = " << detail::join_ints(r.t_set, ",") << '\n';
  for (const auto& a : r.arc_types) {
    const std::string key = "arc_type." + std::to_string(a.q);
    os << key << ".pure = " << bool_text(a.purity.pure) << '\n';
    if (!a.purity.pure) os << key << ".witness = " << detail::join_vertices(a.purity.witness) << '\n';
    if (a.config_c) os << key << ".config_C = " << bool_text(*a.config_c) << '\n';
    if (a.config_d) os << key << ".config_D = " << bool_text(*a.config_d) << '\n';
  }
  if (const auto* t = r.tensor())
    for (std::size_t i = 0; i < t->rank(); ++i) os << "valency." << t->label(i) << " = " << t->k(i) << '\n';
}

inline void write_report_text(std::ostream& os, const AnalysisReport& r) {
  using detail::yes_no;
  os << "order " << r.order << ", " << r.arcs << " arcs\n";
  os << "strongly connected: " << yes_no(r.strongly_connected) << '\n';
  if (!r.strongly_connected) return;
  os << "weakly distance-regular: " << yes_no(r.is_wdr()) << '\n';
  if (const auto* f = r.failure()) {
    os << "  witness: h=" << f->h << " i=" << f->i << " j=" << f->j << ": pair " << detail::pair_text(f->first_pair)
       << " has " << f->first_count << ", pair " << detail::pair_text(f->second_pair) << " has " << f->second_count
       << '\n';
  }
  if (r.is_wdr()) {
    os << "commutative: " << yes_no(r.commutative) << '\n';
    os << "thick: " << yes_no(r.thick) << '\n';
    os << "thin: " << yes_no(r.thin) << '\n';
    os << "quasi-thin: " << yes_no(r.quasi_thin) << '\n';
    os << "max intersection number: " << r.max_intersection_number << '\n';
  }
  os << "T = {" << detail::join_ints(r.t_set, ", ") << "}\n";
  for (const auto& a : r.arc_types) {
    os << "  (1," << a.q - 1 << "): " << (a.purity.pure ? "pure" : "mixed");
    if (!a.purity.pure) os << " [circuit " << detail::join_vertices(a.purity.witness) << "]";
    if (a.config_c) os << ", C(" << a.q << ") " << yes_no(*a.config_c);
    if (a.config_d) os << ", D(" << a.q << ") " << yes_no(*a.config_d);
    os << '\n';
  }
  if (const auto* t = r.tensor()) {
    os << "intersection numbers:\n";
    dump_tensor(os, *t);
  }
}

struct TheoremAttempt {
  TSet removed;  // I, a nonempty subset of {q-1, q} within T
  TSet kept;     // T \ I
  int delta_order = 0;
  bool delta_thick_wdr = false;
  int quotient_order = 0;
  std::optional<FamilyId> family;

  bool passes() const { return delta_thick_wdr && family.has_value(); }
};

enum class TheoremStatus { pass, theorem_failure, precondition_failure };

struct TheoremVerdict {
  TheoremStatus status = TheoremStatus::precondition_failure;
  int q_max = 0;
  std::vector<TheoremAttempt> attempts;
  std::string reason;

  bool passed() const { return status == TheoremStatus::pass; }
};

inline bool is_thick_wdr(const Digraph& g) {
  if (!is_strongly_connected(g)) return false;
  auto r = check_weakly_distance_regular(g);
  return is_wdr(r) && is_thick(std::get<SchemeTensor>(r));
}

// Candidate I: {q}, {q-1}, {q-1, q}, restricted to nonempty subsets of T.
inline std::vector<TSet> candidate_removals(const TSet& t, int q) {
  std::vector<TSet> out{{q}};
  if (t.count(q - 1)) {
    out.push_back({q - 1});
    out.push_back({q - 1, q});
  }
  return out;
}

inline TheoremVerdict verify_theorem(const Digraph& g, const AnalysisReport& report) {
  TheoremVerdict v;
  if (!report.strongly_connected) {
    v.reason = "not strongly connected";
    return v;
  }
  if (!report.commutative_thick_wdr()) {
    v.reason = !report.is_wdr() ? "not weakly distance-regular" : !report.thick ? "not thick" : "not commutative";
    return v;
  }
  if (report.t_set.empty()) {
    v.reason = "no arcs";
    return v;
  }
  const auto& t = *report.tensor();
  v.q_max = *report.t_set.rbegin();
  for (const auto& removed : candidate_removals(report.t_set, v.q_max)) {
    TheoremAttempt a;
    a.removed = removed;
    for (int s : report.t_set)
      if (!removed.count(s)) a.kept.insert(s);
    auto delta = delta_subdigraph(g, t, a.kept, 0);
    a.delta_order = delta.digraph.order();
    a.delta_thick_wdr = is_thick_wdr(delta.digraph);
    auto quo = quotient(g, arc_closure(t, a.kept));
    a.quotient_order = quo.digraph.order();
    a.family = identify_family(quo.digraph);
    v.attempts.push_back(std::move(a));
  }
  const bool ok = std::any_of(v.attempts.begin(), v.attempts.end(), [](const auto& a) { return a.passes(); });
  v.status = ok ? TheoremStatus::pass : TheoremStatus::theorem_failure;
  if (!ok) v.reason = "no subset I gives a thick weakly distance-regular subdigraph with a listed quotient";
  return v;
}

inline TheoremVerdict verify_theorem(const Digraph& g) { return verify_theorem(g, analyze(g)); }

inline void write_verdict(std::ostream& os, const TheoremVerdict& v) {
  switch (v.status) {
    case TheoremStatus::pass: os << "result = pass\n"; break;
    case TheoremStatus::theorem_failure: os << "result = theorem_failure\n"; break;
    case TheoremStatus::precondition_failure: os << "result = precondition_failure\n"; break;
  }
  if (!v.reason.empty()) os << "reason = " << v.reason << '\n';
  if (v.status == TheoremStatus::precondition_failure) return;
  os << "q_max = " << v.q_max << '\n';
  for (std::size_t k = 0; k < v.attempts.size(); ++k) {
    const auto& a = v.attempts[k];
    const std::string key = "attempt." + std::to_string(k);
    os << key << ".I = {" << detail::join_ints(a.removed, ",") << "}\n";
    os << key << ".kept = {" << detail::join_ints(a.kept, ",") << "}\n";
    os << key << ".delta_order = " << a.delta_order << '\n';
    os << key << ".delta_thick_wdr = " << detail::bool_text(a.delta_thick_wdr) << '\n';
    os << key << ".quotient_order = " << a.quotient_order << '\n';
    os << key << ".family = " << (a.family ? a.family->to_string() : "none") << '\n';
    os << key << ".passes = " << detail::bool_text(a.passes()) << '\n';
  }
}

}  // namespace wdr
