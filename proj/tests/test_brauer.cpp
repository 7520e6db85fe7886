#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "pqcheck/brauer.hpp"
#include "pqcheck/character.hpp"

using namespace pqcheck;

namespace {

BrauerLine line_of(int p) {
  BrauerLine l;
  l.id = "L" + std::to_string(p);
  l.p = p;
  for (int i = 1; i <= p; ++i) l.characters.push_back("x" + std::to_string(i));
  l.unramified_asserted = true;
  return l;
}

oracle::parts_t lambda_parts(int p, std::int64_t r, std::int64_t s, std::int64_t a) {
  oracle::parts_t out;
  for (std::int64_t i = 0; i < a; ++i) out.push_back(p);
  for (std::int64_t i = a; i < r; ++i) out.push_back(p - 1);
  for (std::int64_t i = a; i < s; ++i) out.push_back(1);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::pair<std::int64_t, std::int64_t> inequality_ref(const EigenvalueProfile& pr, int p) {
  std::int64_t lhs = pr.r[p - 2] - pr.r[p - 1];
  std::int64_t rhs = pr.s[0];
  for (int i = 1; i <= p - 2; ++i) rhs -= (i % 2 ? -1 : 1) * pr.r[i - 1];
  return {lhs, rhs};
}

bool nz(const oracle::parts_t& outer, const oracle::parts_t& a, const oracle::parts_t& b) {
  return oracle::lr_brute(outer, a, b) != 0;
}

// Chain oracle for p = 3 and p = 5 by trying every intermediate partition.
bool chain_ref(const EigenvalueProfile& pr, int p) {
  std::vector<std::vector<oracle::parts_t>> opts(p);
  for (int i = 0; i < p; ++i)
    for (std::int64_t a = 0; a <= std::min(pr.r[i], pr.s[i]); ++a) opts[i].push_back(lambda_parts(p, pr.r[i], pr.s[i], a));
  if (p == 3) {
    for (auto& l1 : opts[0])
      for (auto& l2 : opts[1])
        for (auto& l3 : opts[2])
          if (nz(l2, l1, l3)) return true;
    return false;
  }
  REQUIRE(p == 5);
  for (auto& l1 : opts[0])
    for (auto& l5 : opts[4])
      for (auto& l2 : opts[1])
        for (auto& l3 : opts[2])
          for (auto& l4 : opts[3]) {
            int m2 = oracle::total(l2) - oracle::total(l1);
            int m3 = oracle::total(l4) - oracle::total(l5);
            if (m2 < 0 || m3 < 0) continue;
            for (auto& mu2 : oracle::partitions(m2)) {
              if (!nz(l2, l1, mu2)) continue;
              for (auto& mu3 : oracle::partitions(m3))
                if (nz(l3, mu2, mu3) && nz(l4, mu3, l5)) return true;
            }
          }
  return false;
}

template <class F>
void each_profile(int p, int max_entry, F f) {
  int n = 2 * p;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  while (true) {
    EigenvalueProfile pr;
    pr.s.assign(v.begin(), v.begin() + p);
    pr.r.assign(v.begin() + p, v.end());
    f(pr);
    int i = 0;
    while (i < n && v[static_cast<std::size_t>(i)] == max_entry) v[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++v[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_CASE("theorem2_check examples") {
  auto l5 = line_of(5);
  EigenvalueProfile a{{33, 0, 0, 0, 0}, {2, 2119, 7029, 5071, 104}};
  auto ra = theorem2_check(a, l5);
  CHECK(ra.lhs == 4967);
  CHECK(ra.rhs == 4945);
  CHECK_FALSE(ra.holds);

  EigenvalueProfile b{{29, 0, 0, 0, 0}, {3, 2118, 7030, 5070, 105}};
  auto rb = theorem2_check(b, l5);
  CHECK(rb.lhs == 4965);
  CHECK(rb.rhs == 4944);
  CHECK_FALSE(rb.holds);

  auto zero = theorem2_check(EigenvalueProfile{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}, l5);
  CHECK(zero.holds);
  CHECK(zero.lhs == 0);
  CHECK(zero.rhs == 0);
}

TEST_CASE("theorem2_check input errors") {
  auto l = line_of(5);
  CHECK_THROWS_AS(theorem2_check(EigenvalueProfile{{0, 0, 0}, {0, 0, 0}}, l), InputError);
  l.unramified_asserted = false;
  CHECK_THROWS_AS(theorem2_check(EigenvalueProfile{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}, l), InputError);
}

TEST_CASE("theorem2_check matches the closed form") {
  for (int p : {3, 5}) {
    auto l = line_of(p);
    each_profile(p, 2, [&](const EigenvalueProfile& pr) {
      auto got = theorem2_check(pr, l);
      auto [lhs, rhs] = inequality_ref(pr, p);
      REQUIRE(got.lhs == lhs);
      REQUIRE(got.rhs == rhs);
      REQUIRE(got.holds == (lhs <= rhs));
    });
  }
}

TEST_CASE("lambda_for") {
  CHECK(lambda_for(5, 2, 3, 1) == Partition{5, 4, 1, 1});
  CHECK(lambda_for(3, 0, 0, 0).empty());
  CHECK(lambda_for(3, 2, 0, 0) == Partition{2, 2});
  CHECK(lambda_for(2, 1, 1, 1) == Partition{2});
  CHECK_THROWS_AS(lambda_for(3, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(lambda_for(3, 1, 2, -1), std::invalid_argument);
}

TEST_CASE("find_chain small cases") {
  LrCache cache;
  auto yes = find_chain({{Partition{1}}, {Partition{2, 1}}, {Partition{1, 1}}}, cache);
  REQUIRE(yes);
  CHECK(yes->mu == std::vector<Partition>{Partition{1}, Partition{1, 1}});
  CHECK_FALSE(find_chain({{Partition{1}}, {Partition{3}}, {Partition{1, 1}}}, cache));
  CHECK(find_chain({{Partition{1}}, {Partition{3}, Partition{2, 1}}, {Partition{1, 1}}}, cache)->choice[1] == 1);
  CHECK_THROWS_AS(find_chain({{Partition{1}}, {Partition{1}}}, cache), std::invalid_argument);

  auto l3 = line_of(3);
  auto zero = chain_feasibility(EigenvalueProfile{{0, 0, 0}, {0, 0, 0}}, l3);
  CHECK(zero.status == ChainStatus::feasible);
  REQUIRE(zero.witness);
  for (auto& m : zero.witness->mu) CHECK(m.empty());
}

TEST_CASE("chain_feasibility size ceiling") {
  auto l5 = line_of(5);
  EigenvalueProfile big{{33, 0, 0, 0, 0}, {2, 2119, 7029, 5071, 104}};
  auto v = chain_feasibility(big, l5);
  CHECK(v.status == ChainStatus::skipped_size);
  CHECK(v.largest_partition == 4 * 7029);
  CHECK_FALSE(v.note.empty());
  CHECK(std::string(to_string(ChainStatus::skipped_size)) == "skipped (size)");
  auto cv = cross_validate(big, l5);
  CHECK_FALSE(cv.evaluated);
  CHECK(cv.consistent);
}

TEST_CASE("chain_feasibility matches the brute-force chain oracle, p = 3") {
  auto l = line_of(3);
  LrCache cache;
  int feasible = 0;
  each_profile(3, 2, [&](const EigenvalueProfile& pr) {
    auto v = chain_feasibility(pr, l, 40, &cache);
    bool ref = chain_ref(pr, 3);
    REQUIRE(v.status == (ref ? ChainStatus::feasible : ChainStatus::infeasible));
    feasible += ref;
  });
  CHECK(feasible > 0);
}

TEST_CASE("chain_feasibility matches the brute-force chain oracle, p = 5") {
  auto l = line_of(5);
  LrCache cache;
  int feasible = 0;
  each_profile(5, 1, [&](const EigenvalueProfile& pr) {
    auto v = chain_feasibility(pr, l, 40, &cache);
    bool ref = chain_ref(pr, 5);
    REQUIRE(v.status == (ref ? ChainStatus::feasible : ChainStatus::infeasible));
    feasible += ref;
  });
  CHECK(feasible > 0);
}

TEST_CASE("chain witnesses are real chains") {
  auto l = line_of(3);
  each_profile(3, 2, [&](const EigenvalueProfile& pr) {
    auto v = chain_feasibility(pr, l);
    if (v.status != ChainStatus::feasible) return;
    REQUIRE(v.witness);
    auto& w = *v.witness;
    REQUIRE(w.choice.size() == 3);
    auto l1 = lambda_for(3, pr.r[0], pr.s[0], static_cast<std::int64_t>(w.choice[0]));
    auto l2 = lambda_for(3, pr.r[1], pr.s[1], static_cast<std::int64_t>(w.choice[1]));
    auto l3 = lambda_for(3, pr.r[2], pr.s[2], static_cast<std::int64_t>(w.choice[2]));
    CHECK(w.mu.front() == l1);
    CHECK(w.mu.back() == l3);
    CHECK(nz(l2.parts(), w.mu[0].parts(), w.mu[1].parts()));
  });
}

TEST_CASE("violated inequality means no chain") {
  auto l = line_of(3);
  each_profile(3, 3, [&](const EigenvalueProfile& pr) {
    auto cv = cross_validate(pr, l);
    if (!cv.inequality.holds) REQUIRE(cv.chain.status == ChainStatus::infeasible);
  });
}

TEST_CASE("cross_validate summaries") {
  auto s = cross_validate_exhaustive(3, 2);
  CHECK(s.profiles == 729);
  CHECK(s.inconsistent == 0);
  CHECK(s.feasible > 0);
  CHECK(s.violated > 0);

  auto a = cross_validate_sampled(5, 3, 500, 42);
  auto b = cross_validate_sampled(5, 3, 500, 42);
  CHECK(a.profiles == 500);
  CHECK(a.inconsistent == 0);
  CHECK(a.feasible == b.feasible);
  CHECK(a.violated == b.violated);
}
