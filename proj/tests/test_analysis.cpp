#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wdr/wdr.hpp"

using namespace wdr;

namespace {

Digraph cyc(int n, std::vector<int> s) {
  CayleySpec spec{n, 1, {}};
  for (int x : s) spec.connection.emplace_back(x, 0);
  return cayley(spec);
}

std::string kv(const Digraph& g) {
  std::ostringstream os;
  write_report_kv(os, analyze(g));
  return os.str();
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(Analyze, FamilyThreeAtFour) {
  auto r = analyze(build_family({Family::III, 4}));
  EXPECT_TRUE(r.is_wdr());
  EXPECT_TRUE(r.commutative);
  EXPECT_TRUE(r.thick);
  EXPECT_EQ(r.t_set, (TSet{3, 4}));
  auto text = kv(build_family({Family::III, 4}));
  EXPECT_TRUE(has_line(text, "wdr = true"));
  EXPECT_TRUE(has_line(text, "t_set = 3,4"));
}

TEST(Analyze, NonWdrWitnessInReport) {
  auto text = kv(cyc(5, {1, 2}));
  EXPECT_TRUE(has_line(text, "wdr = false"));
  EXPECT_TRUE(has_line(text, "wdr.witness.h = (1,2)"));
  EXPECT_TRUE(has_line(text, "wdr.witness.first_pair = (0,1)"));
  EXPECT_TRUE(has_line(text, "wdr.witness.first_count = 0"));
  EXPECT_TRUE(has_line(text, "wdr.witness.second_pair = (0,2)"));
  EXPECT_TRUE(has_line(text, "wdr.witness.second_count = 1"));
}

TEST(Analyze, ThreeCycle) {
  auto r = analyze(cyc(3, {1}));
  EXPECT_TRUE(r.thin);
  EXPECT_EQ(r.t_set, (TSet{3}));
}

TEST(Analyze, NotStronglyConnected) {
  auto r = analyze(from_arc_list(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(r.strongly_connected);
  EXPECT_FALSE(r.wdr.has_value());
  EXPECT_TRUE(has_line(kv(from_arc_list(3, {{0, 1}, {1, 2}})), "strongly_connected = false"));
}

TEST(Analyze, ReportsAreDeterministic) {
  for (auto g : {build_family({Family::V, 4}), cyc(6, {1, 2, 3}), cyc(7, {1, 3})}) {
    std::ostringstream a, b;
    write_report_text(a, analyze(g));
    write_report_text(b, analyze(g));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(kv(g), kv(g));
  }
}

TEST(VerifyTheorem, FamilyFiveAtFive) {
  auto g = build_family({Family::V, 5});
  auto v = verify_theorem(g);
  ASSERT_TRUE(v.passed()) << v.reason;
  EXPECT_EQ(v.q_max, 5);
  bool found = false;
  for (const auto& a : v.attempts)
    if (a.kept.empty()) {
      found = true;
      EXPECT_EQ(a.delta_order, 1);
      EXPECT_EQ(a.quotient_order, 16);
      EXPECT_EQ(a.family, (FamilyId{Family::V, 5}));
    }
  EXPECT_TRUE(found);
}

TEST(VerifyTheorem, FamilyTwoAtFive) {
  auto v = verify_theorem(build_family({Family::II, 5}));
  ASSERT_TRUE(v.passed());
  bool two = false;
  for (const auto& a : v.attempts)
    if (a.family && a.family->variant == Family::II) two = true;
  EXPECT_TRUE(two);
}

TEST(VerifyTheorem, Preconditions) {
  auto v = verify_theorem(cyc(5, {1, 2}));
  EXPECT_EQ(v.status, TheoremStatus::precondition_failure);
  EXPECT_EQ(v.reason, "not weakly distance-regular");
  EXPECT_EQ(verify_theorem(cyc(7, {1, 2, 4})).reason, "not thick");
  EXPECT_EQ(verify_theorem(from_arc_list(2, {{0, 1}})).status, TheoremStatus::precondition_failure);
}

TEST(VerifyTheorem, CandidateRemovals) {
  EXPECT_EQ(candidate_removals({2, 3}, 3), (std::vector<TSet>{{3}, {2}, {2, 3}}));
  EXPECT_EQ(candidate_removals({5}, 5), (std::vector<TSet>{{5}}));
}

TEST(VerifyTheorem, VerdictText) {
  std::ostringstream os;
  write_verdict(os, verify_theorem(cyc(4, {1, 2})));
  EXPECT_TRUE(has_line(os.str(), "result = pass"));
  EXPECT_TRUE(has_line(os.str(), "q_max = 3"));
}

TEST(VerifyTheorem, EveryFamilyMemberPasses) {
  for (Family f : kAllFamilies)
    for (int k = (f == Family::I || f == Family::II) ? 2 : 3; k <= 8; ++k) {
      if (f == Family::VI && k == 3) continue;  // not weakly distance-regular
      auto g = build_family({f, k});
      auto report = analyze(g);
      auto v = verify_theorem(g, report);
      EXPECT_TRUE(v.passed()) << to_string(f) << k << ' ' << v.reason;
      EXPECT_TRUE(check_theorem_properties(g, report, v).empty()) << to_string(f) << k;
    }
}

TEST(Properties, ShortestPathDynamicProgrammeMatchesEnumeration) {
  // Enumerate every shortest path directly and count arcs of each type.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_strong_digraph(3 + trial % 4, 0.4, rng);
    const auto d = oracle::floyd_warshall(g);
    for (int q : t_set(g)) {
      auto best = max_type_arcs_on_shortest_paths(g, q);
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
          int most = 0;
          auto walk = [&](auto&& self, int at, int count) -> void {
            if (at == y) {
              most = std::max(most, count);
              return;
            }
            for (int w = 0; w < g.order(); ++w)
              if (g.has_arc(at, w) && d[x][w] == d[x][at] + 1 && d[w][y] == d[at][y] - 1)
                self(self, w, count + (d[w][at] == q - 1));
          };
          walk(walk, x, 0);
          ASSERT_EQ(best(x, y), most);
        }
    }
  }
}

TEST(Properties, SquareOfArcTypeOnFamilies) {
  auto g = build_family({Family::III, 5});
  auto t = std::get<SchemeTensor>(check_weakly_distance_regular(g));
  EXPECT_TRUE(check_square_of_arc_type(t, t_set(g)).empty());
  EXPECT_TRUE(check_mixed_product_types(t, t_set(g)).empty());
  EXPECT_TRUE(check_arc_type_relationship(g, t, t_set(g)).empty());
}

TEST(Census, DirectedCycles) {
  auto r = census({5, 1, GroupFamily::cyclic, 1});
  ASSERT_EQ(r.entries.size(), 4u);
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    EXPECT_EQ(e.report.order, static_cast<int>(i) + 2);
    EXPECT_EQ(e.report.arcs, i + 2);
    EXPECT_TRUE(e.report.thin);
    EXPECT_TRUE(e.report.commutative_thick_wdr());
    ASSERT_TRUE(e.verdict);
    EXPECT_TRUE(e.verdict->passed());
  }
}

TEST(Census, SmallCyclicIncludesZ4) {
  auto r = census({4, 2, GroupFamily::cyclic, 1});
  EXPECT_EQ(r.finding_count(), 0u);
  bool z4 = false;
  for (const auto& e : r.entries) z4 = z4 || are_isomorphic(e.digraph, cyc(4, {1, 2}));
  EXPECT_TRUE(z4);
}

TEST(Census, NoIsomorphicDuplicatesAndDeterministicAcrossJobs) {
  auto one = census({8, 2, GroupFamily::all, 1});
  auto many = census({8, 2, GroupFamily::all, 3});
  ASSERT_EQ(one.entries.size(), many.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    EXPECT_EQ(one.entries[i].spec.to_string(), many.entries[i].spec.to_string());
    for (std::size_t j = i + 1; j < one.entries.size(); ++j)
      if (one.entries[i].digraph.order() == one.entries[j].digraph.order() &&
          one.entries[i].digraph.order() <= 8) {
        ASSERT_FALSE(oracle::isomorphic_by_permutations(one.entries[i].digraph, one.entries[j].digraph));
      }
  }
  EXPECT_EQ(one.candidates, many.candidates);
  EXPECT_EQ(one.strongly_connected, many.strongly_connected);
}

TEST(Census, GroupFamilies) {
  EXPECT_EQ(parse_group_family("cyclic"), GroupFamily::cyclic);
  EXPECT_EQ(parse_group_family("cyclic_x_Z2"), GroupFamily::z2);
  EXPECT_FALSE(parse_group_family("dihedral"));
  for (const auto& s : census_candidates({6, 2, GroupFamily::z2, 1})) EXPECT_EQ(s.m, 2);
  for (const auto& s : census_candidates({6, 2, GroupFamily::cyclic, 1})) EXPECT_EQ(s.m, 1);
}

TEST(Census, ParallelForPropagatesExceptions) {
  EXPECT_THROW(parallel_for(10, 2, [](std::size_t i) {
                 if (i == 7) throw error("boom");
               }),
               error);
}
