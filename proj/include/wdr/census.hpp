#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wdr/analysis.hpp"
#include "wdr/cayley.hpp"
#include "wdr/isomorphism.hpp"
#include "wdr/properties.hpp"

namespace wdr {

enum class GroupFamily { cyclic, z2, all };

inline std::optional<GroupFamily> parse_group_family(const std::string& s) {
  if (s == "cyclic") return GroupFamily::cyclic;
  if (s == "z2" || s == "cyclic_x_Z2") return GroupFamily::z2;
  if (s == "all") return GroupFamily::all;
  return std::nullopt;
}

struct CensusOptions {
  int max_order = 8;
  int max_valency = 2;
  GroupFamily groups = GroupFamily::all;
  int jobs = 1;
};

struct CensusEntry {
  CayleySpec spec;
  Digraph digraph;
  AnalysisReport report;
  std::optional<TheoremVerdict> verdict;  // commutative thick WDR entries only
  std::vector<Finding> findings;
};

struct CensusResult {
  std::size_t candidates = 0;
  std::size_t strongly_connected = 0;
  std::vector<CensusEntry> entries;  // one per isomorphism class, first-found order

  std::size_t count_if_report(bool (AnalysisReport::*pred)() const) const {
    return std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return (e.report.*pred)(); });
  }
  std::size_t finding_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.findings.size();
    return n;
  }
};

// Runs fn(i) for i in [0, count) on `jobs` threads. The first exception thrown
// by any worker is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

// Connection sets of size 1..max_valency over each group, in enumeration order.
inline std::vector<CayleySpec> census_candidates(const CensusOptions& opt) {
  std::vector<std::pair<int, int>> groups;
  if (opt.groups != GroupFamily::z2)
    for (int n = 2; n <= opt.max_order; ++n) groups.emplace_back(n, 1);
  if (opt.groups != GroupFamily::cyclic)
    for (int n = 1; 2 * n <= opt.max_order; ++n) groups.emplace_back(n, 2);

  std::vector<CayleySpec> out;
  for (auto [n, m] : groups) {
    std::vector<std::pair<int, int>> elems;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < m; ++b)
        if (a != 0 || b != 0) elems.emplace_back(a, b);
    const int e = static_cast<int>(elems.size());
    std::vector<int> pick;
    auto choose = [&](auto&& self, int from, int size) -> void {
      if (static_cast<int>(pick.size()) == size) {
        CayleySpec spec{n, m, {}};
        for (int k : pick) spec.connection.push_back(elems[k]);
        out.push_back(std::move(spec));
        return;
      }
      for (int k = from; k < e; ++k) {
        pick.push_back(k);
        self(self, k + 1, size);
        pick.pop_back();
      }
    };
    for (int s = 1; s <= std::min(opt.max_valency, e); ++s) choose(choose, 0, s);
  }
  return out;
}

namespace detail {

inline std::optional<Digraph> try_cayley(const CayleySpec& spec) {
  std::vector<Arc> arcs;
  for (int a = 0; a < spec.n; ++a)
    for (int b = 0; b < spec.m; ++b)
      for (auto [s, t] : spec.connection)
        arcs.emplace_back(a * spec.m + b, ((a + s) % spec.n) * spec.m + (b + t) % spec.m);
  Digraph g(spec.n * spec.m, arcs);
  if (!is_strongly_connected(g)) return std::nullopt;
  return g;
}

}  // namespace detail

// Enumerates candidates, drops non-strongly-connected ones, keeps the first
// member of each isomorphism class, then analyses the survivors. Commutative
// thick WDR survivors also get a theorem verdict and property findings.
inline CensusResult census(const CensusOptions& opt) {
  const auto specs = census_candidates(opt);
  CensusResult result;
  result.candidates = specs.size();

  std::vector<std::optional<Digraph>> graphs(specs.size());
  std::vector<std::optional<CanonicalForm>> forms(specs.size());
  parallel_for(specs.size(), opt.jobs, [&](std::size_t i) {
    graphs[i] = detail::try_cayley(specs[i]);
    if (graphs[i]) forms[i] = canonical_form(*graphs[i]);
  });

  std::vector<std::size_t> unique;
  std::vector<CanonicalForm> seen;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!forms[i]) continue;
    ++result.strongly_connected;
    auto it = std::lower_bound(seen.begin(), seen.end(), *forms[i]);
    if (it != seen.end() && *it == *forms[i]) continue;
    seen.insert(it, *forms[i]);
    unique.push_back(i);
  }

  std::vector<std::optional<CensusEntry>> entries(unique.size());
  parallel_for(unique.size(), opt.jobs, [&](std::size_t k) {
    const auto i = unique[k];
    CensusEntry e{specs[i], *graphs[i], analyze(*graphs[i]), std::nullopt, {}};
    if (e.report.commutative_thick_wdr()) {
      e.verdict = verify_theorem(e.digraph, e.report);
      e.findings = check_theorem_properties(e.digraph, e.report, *e.verdict);
    }
    entries[k] = std::move(e);
  });
  for (auto& e : entries) result.entries.push_back(std::move(*e));
  return result;
}

}  // namespace wdr
