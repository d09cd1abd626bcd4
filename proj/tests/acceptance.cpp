// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wdr/wdr.hpp"

using namespace wdr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<FamilyId> family_instances() {
  std::vector<FamilyId> out;
  for (Family f : kAllFamilies) {
    const bool small = f == Family::I || f == Family::II;
    for (int k = small ? 2 : 3; k <= 8; ++k) out.push_back({f, k});
  }
  return out;
}

// Every instance whose tensor is built here is also checked explicitly.
std::size_t explicit_identity_checks = 0;
std::size_t explicit_identity_violations = 0;

void audit(const WdrResult& r) {
  if (const auto* t = std::get_if<SchemeTensor>(&r)) {
    ++explicit_identity_checks;
    explicit_identity_violations += identity_violations(*t).size();
  }
}

const CensusResult& census_set() {
  static const CensusResult r = census({12, 3, GroupFamily::all, 1});
  return r;
}

Outcome family_soundness() {
  Outcome o;
  int checked = 0;
  std::string bad;
  for (const auto& id : family_instances()) {
    auto r = check_weakly_distance_regular(build_family(id));
    audit(r);
    ++checked;
    const auto* t = std::get_if<SchemeTensor>(&r);
    if (!t || !is_commutative(*t) || !is_thick(*t)) {
      o.pass = false;
      bad += " " + id.to_string() + (t ? "" : "(not wdr)");
    }
  }
  o.detail = std::to_string(checked) + " instances" + (bad.empty() ? "" : "; failing:" + bad);
  return o;
}

Outcome theorem_end_to_end() {
  Outcome o;
  std::string bad;
  int families = 0, census_checked = 0;
  for (const auto& id : family_instances()) {
    ++families;
    auto v = verify_theorem(build_family(id));
    if (!v.passed()) bad += " " + id.to_string() + "(" + v.reason + ")";
  }
  for (const auto& e : census_set().entries) {
    if (!e.verdict) continue;
    ++census_checked;
    if (!e.verdict->passed()) bad += " " + e.spec.to_string();
  }
  o.pass = bad.empty();
  o.detail = std::to_string(families) + " family instances, " + std::to_string(census_checked) +
             " census instances" + (bad.empty() ? "" : "; failing:" + bad);
  return o;
}

Outcome census_property(const std::function<std::vector<Finding>(const CensusEntry&, const SchemeTensor&)>& check) {
  Outcome o;
  std::size_t n = 0, violations = 0;
  std::string first;
  for (const auto& e : census_set().entries) {
    if (!e.report.commutative_thick_wdr()) continue;
    ++n;
    auto f = check(e, *e.report.tensor());
    violations += f.size();
    if (!f.empty() && first.empty()) first = e.spec.to_string() + ": " + f.front().detail;
  }
  o.pass = violations == 0 && n > 0;
  o.detail = std::to_string(n) + " digraphs, " + std::to_string(violations) + " violations" +
             (first.empty() ? "" : "; first " + first);
  return o;
}

Outcome scheme_identities() {
  // Build tensors across the census and the families; construction asserts
  // the identities and bumps the process-wide tally.
  for (const auto& e : census_set().entries)
    if (e.report.wdr) audit(*e.report.wdr);
  for (const auto& id : family_instances()) audit(check_weakly_distance_regular(build_family(id)));
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial)
    audit(check_weakly_distance_regular(oracle::random_strong_digraph(2 + trial % 6, 0.5, rng)));
  const auto& tally = identity_tally();
  Outcome o;
  o.pass = tally.violations == 0 && explicit_identity_violations == 0 && explicit_identity_checks > 0;
  o.detail = std::to_string(tally.checked.load()) + " tensors asserted at construction, " +
             std::to_string(explicit_identity_checks) + " rechecked, " +
             std::to_string(tally.violations.load() + explicit_identity_violations) + " violations";
  return o;
}

Outcome isomorphism_oracle() {
  std::mt19937_64 rng(2024);
  int disagreements = 0, isomorphic = 0, relabel_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    std::bernoulli_distribution coin(0.45);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng)) arcs.emplace_back(u, v);
    Digraph a(n, arcs);
    Digraph b = oracle::relabel(a, oracle::random_permutation(n, rng));
    if (trial % 2 == 1 && n > 1) {
      auto barcs = b.arcs();
      std::uniform_int_distribution<int> pick(0, n - 1);
      int u = pick(rng), v = pick(rng);
      if (u != v) {
        auto it = std::find(barcs.begin(), barcs.end(), Arc{u, v});
        if (it == barcs.end())
          barcs.emplace_back(u, v);
        else
          barcs.erase(it);
      }
      b = Digraph(n, barcs);
    }
    const bool expected = oracle::isomorphic_by_permutations(a, b);
    isomorphic += expected;
    if (are_isomorphic(a, b) != expected) ++disagreements;
    const auto form = canonical_form(a);
    for (int r = 0; r < 50; ++r)
      if (canonical_form(oracle::relabel(a, oracle::random_permutation(n, rng))) != form) ++relabel_failures;
  }
  Outcome o;
  o.pass = disagreements == 0 && relabel_failures == 0;
  o.detail = "200 pairs (" + std::to_string(isomorphic) + " isomorphic), " + std::to_string(disagreements) +
             " disagreements, " + std::to_string(relabel_failures) + " relabeling mismatches";
  return o;
}

Outcome arc_powers() {
  int violations = 0, cases = 0;
  std::string first;
  for (int q = 3; q <= 5; ++q)
    for (int m = 1; m <= 3; ++m) {
      CayleySpec spec{q, m, {}};
      for (int b = 0; b < m; ++b) spec.connection.emplace_back(1, b);
      auto r = check_weakly_distance_regular(cayley(spec));
      audit(r);
      const auto* t = std::get_if<SchemeTensor>(&r);
      if (!t) {
        ++violations;
        continue;
      }
      LabelSet power{TwoWayLabel{1, q - 1}};
      for (int l = 1; l <= q - 1; ++l) {
        ++cases;
        if (power != LabelSet{TwoWayLabel{l, q - l}}) {
          ++violations;
          if (first.empty()) first = spec.to_string() + " l=" + std::to_string(l);
        }
        power = relation_product(*t, power, {TwoWayLabel{1, q - 1}});
      }
    }
  return {violations == 0, std::to_string(cases) + " powers, " + std::to_string(violations) + " violations" +
                               (first.empty() ? "" : "; first " + first)};
}

Outcome alpha_beta_arithmetic() {
  Outcome o;
  auto expect = [&](int q, int alpha, Rational beta) {
    auto ab = alpha_beta(q);
    if (ab.alpha != alpha || ab.beta != beta) {
      o.pass = false;
      o.detail += " q=" + std::to_string(q) + " wrong";
    }
  };
  expect(5, 0, Rational(0));
  expect(4, -1, Rational(3, 2));
  expect(3, -1, Rational(1, 2));
  int failures = 0;
  for (int q = 3; q <= 50; ++q) {
    try {
      auto s = family_v_spec(q);
      if (s.connection.size() != 3 || s.n * s.m != 4 * (q - 1)) ++failures;
    } catch (const error&) {
      ++failures;
    }
  }
  if (failures) o.pass = false;
  o.detail = "alpha/beta at q=3,4,5 checked; " + std::to_string(failures) + " integrality failures for 3<=q<=50" + o.detail;
  return o;
}

Outcome negative_control() {
  auto g = cayley({5, 1, {{1, 0}, {2, 0}}});
  auto r = check_weakly_distance_regular(g);
  const auto* f = std::get_if<WdrFailure>(&r);
  if (!f) return {false, "accepted as weakly distance-regular"};
  const auto& d = distance_matrix(g);
  auto label = [&](Arc p) { return TwoWayLabel{d(p.first, p.second), d(p.second, p.first)}; };
  const int c1 = count_intermediates(g, f->first_pair, f->i, f->j);
  const int c2 = count_intermediates(g, f->second_pair, f->i, f->j);
  const bool valid = label(f->first_pair) == f->h && label(f->second_pair) == f->h && c1 == f->first_count &&
                     c2 == f->second_count && c1 != c2;
  std::ostringstream os;
  os << "h=" << f->h << " i=" << f->i << " j=" << f->j << " pair (" << f->first_pair.first << ","
     << f->first_pair.second << ") recounts " << c1 << ", pair (" << f->second_pair.first << ","
     << f->second_pair.second << ") recounts " << c2;
  return {valid, os.str()};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "family soundness", family_soundness},
      {2, "classification end to end", theorem_end_to_end},
      {3, "mixed arcs iff configuration",
       [] {
         return census_property([](const CensusEntry& e, const SchemeTensor& t) {
           return check_mixed_iff_configuration(e.digraph, t);
         });
       }},
      {4, "mixed product types",
       [] {
         return census_property(
             [](const CensusEntry& e, const SchemeTensor& t) { return check_mixed_product_types(t, e.report.t_set); });
       }},
      {5, "arc type relationship",
       [] {
         return census_property([](const CensusEntry& e, const SchemeTensor& t) {
           return check_arc_type_relationship(e.digraph, t, e.report.t_set);
         });
       }},
      {6, "scheme identities", scheme_identities},
      {7, "isomorphism oracle", isomorphism_oracle},
      {8, "arc type powers", arc_powers},
      {9, "alpha/beta arithmetic", alpha_beta_arithmetic},
      {10, "negative control", negative_control},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
              << secs << " s]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
