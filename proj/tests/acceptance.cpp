// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// selected criterion fails.
//
//   acceptance              run all eight
//   acceptance --criterion N

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "pqcheck/brauer.hpp"
#include "pqcheck/case.hpp"
#include "pqcheck/form_a.hpp"
#include "pqcheck/help.hpp"
#include "pqcheck/multiplicities.hpp"
#include "pqcheck/tableau.hpp"

using namespace pqcheck;

namespace {

// Every comparison below is exact integer equality; tolerance is zero.
constexpr double limit_co3_seconds = 60.0;
constexpr double limit_co1_seconds = 600.0;
constexpr double limit_lr_seconds = 300.0;
constexpr double limit_bounds_seconds = 300.0;
constexpr int lr_max_boxes = 8;
constexpr int bounds_max_boxes = 12;
constexpr int roundtrip_samples = 10'000;
constexpr std::uint64_t roundtrip_seed = 0x5eed'2024;
constexpr std::int64_t roundtrip_max_entry = 1'000'000;
constexpr int consistency_max_entry = 4;
constexpr int chain_ceiling = 40;

using tuple_t = std::vector<std::int64_t>;

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      failures_.push_back(os.str());
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failures_.empty(); }

  std::string summary() const {
    std::string out;
    const auto& items = failures_.empty() ? notes_ : failures_;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "; " : "") + items[i];
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string show(const tuple_t& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

CaseFile fixture(const std::string& name) { return load_case(std::string(PQCHECK_FIXTURE_DIR) + "/" + name); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CandidateReport* find_candidate(const TargetReport& t, const tuple_t& tuple) {
  for (auto& c : t.candidates)
    if (c.tuple == tuple) return &c;
  return nullptr;
}

const CharacterRow* find_row(const CandidateReport& c, const std::string& chi) {
  for (auto& r : c.rows)
    if (r.character == chi) return &r;
  return nullptr;
}

std::string tuples_string(const TargetReport& t) {
  std::string s;
  for (auto& c : t.candidates) s += (s.empty() ? "" : " ") + show(c.tuple);
  return s.empty() ? "none" : s;
}

// Order-35 candidates of Co3 and Co2, with the printed inequality pairs and
// the printed multiplicities of the line characters under each candidate.
struct Order35 {
  tuple_t tuple;
  std::int64_t lhs, rhs;
  std::int64_t one_first;                    // μ(1) of the first line character
  std::vector<std::int64_t> zeta5;           // μ(ζ5) along the line
};

void check_order35(Criterion& c, const std::string& file, const std::vector<Order35>& want, bool tables,
                   bool inequalities) {
  auto cf = fixture(file);
  auto t = run_target(cf, 35, RunOptions{});
  std::set<tuple_t> got_set, want_set;
  for (auto& cand : t.candidates) got_set.insert(cand.tuple);
  for (auto& w : want) want_set.insert(w.tuple);
  c.expect(got_set == want_set, "candidate set " + tuples_string(t));
  c.expect(!t.bound_saturated, "search bound saturated");
  auto* line = cf.line(t.line);
  if (!line) {
    c.expect(false, "no Brauer line in the report");
    return;
  }
  for (auto& w : want) {
    auto* cand = find_candidate(t, w.tuple);
    if (!cand) continue;
    if (inequalities) {
      if (!cand->inequality) {
        c.expect(false, show(w.tuple) + " has no inequality");
      } else {
        c.equal(cand->inequality->lhs, w.lhs, show(w.tuple) + " lhs");
        c.equal(cand->inequality->rhs, w.rhs, show(w.tuple) + " rhs");
        c.expect(!cand->inequality->holds, show(w.tuple) + " inequality should be violated");
        c.note(std::to_string(cand->inequality->lhs) + " <= " + std::to_string(cand->inequality->rhs) + " violated");
      }
    }
    if (tables) {
      auto* first = find_row(*cand, line->characters[0]);
      if (first) c.equal(first->m.one, w.one_first, show(w.tuple) + " mu(1) " + line->characters[0]);
      for (std::size_t i = 0; i < line->characters.size(); ++i) {
        auto* row = find_row(*cand, line->characters[i]);
        if (!row || !row->feasible) {
          c.expect(false, show(w.tuple) + " no multiplicities for " + line->characters[i]);
          continue;
        }
        c.equal(row->m.zeta_p, w.zeta5[i], show(w.tuple) + " mu(zeta5) " + line->characters[i]);
      }
    }
  }
  if (tables) c.note("all " + std::to_string(want.size() * (want[0].zeta5.size() + 1)) + " multiplicities match");
}

const std::vector<Order35> co3_table = {
    {{-4, 5, 3, 12, -14}, 4967, 4945, 33, {2, 2119, 7029, 5071, 104}},
    {{-3, 4, 4, 11, -14}, 4965, 4944, 29, {3, 2118, 7030, 5070, 105}},
};

const std::vector<Order35> co2_table = {
    {{-4, 5, 3, 12, -14}, 10142, 10120, 33, {2, 3269, 13354, 11396, 1254}},
    {{-3, 4, 4, 11, -14}, 10140, 10119, 29, {3, 3268, 13355, 11395, 1255}},
};

void criterion1(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto cf = fixture("co3.case");
  // the enumerator on its own, with the characters named in the criterion
  HelpQuery q5{5, {*cf.character("chi2")}, cf.classes};
  HelpQuery q7{7, {*cf.character("chi2")}, cf.classes};
  HelpQuery q35{35, {*cf.character("chi2"), *cf.character("chi3")}, cf.classes};
  auto got = enumerate_order_pq(q35, enumerate_prime_order(q7), enumerate_prime_order(q5));
  std::vector<tuple_t> tuples;
  for (auto& u : got.candidates) tuples.push_back(u.tuple());
  c.expect(tuples == std::vector<tuple_t>{co3_table[0].tuple, co3_table[1].tuple}, "enumerate_order_pq tuples");
  c.expect(!got.bound_saturated, "enumerator bound saturated");
  check_order35(c, "co3.case", co3_table, false, true);
  double s = seconds_since(t0);
  c.expect(s < limit_co3_seconds, "runtime " + std::to_string(s) + " s");
  c.note("2 candidates");
  c.note(std::to_string(s) + " s");
}

void criterion2(Criterion& c) { check_order35(c, "co3.case", co3_table, true, false); }

void criterion3(Criterion& c) {
  check_order35(c, "co2.case", co2_table, true, true);
  // same tuple set as Co3
  auto a = run_target(fixture("co3.case"), 35, RunOptions{});
  auto b = run_target(fixture("co2.case"), 35, RunOptions{});
  c.expect(tuples_string(a) == tuples_string(b), "Co2 and Co3 candidate sets differ");
}

// Co1, order 55: candidate tuple, printed inequality pair, and the printed
// multiplicity column along the 11-line. The printed column is compared
// against μ(ζ5); μ(1) is printed only for the first line character.
struct Order55 {
  tuple_t tuple;
  std::int64_t lhs, rhs;
  std::vector<std::int64_t> column;
};

const std::vector<Order55> co1_table = {
    {{1, 5, -5, 1, -6, -5, 11}, 290408, 290389,
     {0, 5668, 138600, 391385, 1929876, 4495195, 5326485, 3734505, 1522180, 297293, 6885}},
    {{1, 6, -6, 1, -5, -6, 11}, 290410, 290391,
     {0, 5670, 138600, 391385, 1929870, 4495195, 5326495, 3734505, 1522180, 297285, 6875}},
    {{2, 6, -7, 2, -5, -7, 11}, 290423, 290304,
     {0, 5638, 138520, 391350, 1929856, 4495195, 5326570, 3734540, 1522180, 297303, 6880}},
    {{2, 7, -8, 2, -4, -8, 11}, 290425, 290306,
     {0, 5640, 138520, 391350, 1929850, 4495195, 5326580, 3734540, 1522180, 297295, 6870}},
};

void criterion4(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto cf = fixture("co1.case");

  HelpQuery q5{5, {*cf.character("chi2"), *cf.character("chi3"), *cf.character("psi")}, cf.classes};
  auto five = enumerate_prime_order(q5);
  c.equal(five.candidates.size(), std::size_t{98}, "order-5 candidates");
  c.expect(!five.bound_saturated, "order-5 bound saturated");

  auto t65 = run_target(cf, 65, RunOptions{});
  c.expect(t65.candidates.empty(), "order-65 candidates " + tuples_string(t65));
  c.expect(!t65.bound_saturated, "order-65 bound saturated");
  c.equal(t65.conclusion, std::string("no units of order 65"), "order-65 conclusion");

  auto t55 = run_target(cf, 55, RunOptions{});
  std::vector<tuple_t> got;
  for (auto& cand : t55.candidates) got.push_back(cand.tuple);
  std::vector<tuple_t> want;
  for (auto& w : co1_table) want.push_back(w.tuple);
  c.expect(std::set<tuple_t>(got.begin(), got.end()) == std::set<tuple_t>(want.begin(), want.end()),
           "order-55 candidates " + tuples_string(t55));
  c.expect(!t55.bound_saturated, "order-55 bound saturated");

  auto* line = cf.line("B11");
  if (!line) {
    c.expect(false, "fixture has no B11 line");
    return;
  }
  for (auto& w : co1_table) {
    auto* cand = find_candidate(t55, w.tuple);
    if (!cand) continue;
    EigenvalueProfile prof;
    for (std::size_t i = 0; i < line->characters.size(); ++i) {
      auto* row = find_row(*cand, line->characters[i]);
      if (!row || !row->feasible) {
        c.expect(false, show(w.tuple) + " no multiplicities for " + line->characters[i]);
        prof.s.push_back(0);
        prof.r.push_back(0);
        continue;
      }
      c.equal(row->m.zeta_q, w.column[i], show(w.tuple) + " mu(zeta5) " + line->characters[i]);
      prof.s.push_back(row->m.one);
      prof.r.push_back(row->m.zeta_q);
    }
    c.equal(prof.s[0], std::int64_t{1}, show(w.tuple) + " mu(1) " + line->characters[0]);
    auto ineq = theorem2_check(prof, *line);
    c.equal(ineq.lhs, w.lhs, show(w.tuple) + " lhs");
    c.equal(ineq.rhs, w.rhs, show(w.tuple) + " rhs");
    c.expect(!ineq.holds, show(w.tuple) + " inequality should be violated");
    c.expect(cand->excluded(), show(w.tuple) + " not excluded by the pipeline");
  }
  c.equal(t55.conclusion, std::string("no units of order 55"), "order-55 conclusion");
  double s = seconds_since(t0);
  c.expect(s < limit_co1_seconds, "runtime " + std::to_string(s) + " s");
  c.note("98 order-5 candidates, order 65 empty, 4 order-55 candidates, all multiplicities and inequalities match");
  c.note(std::to_string(s) + " s");
}

void criterion5(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t triples = 0, nonzero = 0;
  for (auto& outer : oracle::partitions_up_to(lr_max_boxes))
    for (auto& inner : oracle::partitions_up_to(oracle::total(outer))) {
      if (!oracle::contains(outer, inner)) continue;
      for (auto& nu : oracle::partitions(oracle::total(outer) - oracle::total(inner))) {
        ++triples;
        Partition lo(outer), li(inner), ln(nu);
        auto got = lr_coefficient(lo, li, ln);
        auto want = oracle::lr_brute(outer, inner, nu);
        if (got != want) {
          c.equal(got, want, "c^" + lo.to_string() + "_" + li.to_string() + "," + ln.to_string());
          continue;
        }
        nonzero += got != 0;
        auto swapped = lr_coefficient(lo, ln, li);
        if (swapped != got) c.equal(swapped, got, "symmetry at " + lo.to_string() + "/" + li.to_string());
      }
    }
  double s = seconds_since(t0);
  c.expect(s < limit_lr_seconds, "runtime " + std::to_string(s) + " s");
  c.note(std::to_string(triples) + " triples, " + std::to_string(nonzero) + " nonzero, symmetric");
  c.note(std::to_string(s) + " s");
}

void criterion6(Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  for (int p : {3, 5}) {
    auto r = verify_form_a_bounds(p, bounds_max_boxes);
    c.equal(r.counterexample_count, std::size_t{0}, "p=" + std::to_string(p) + " counterexamples");
    c.expect(r.tableaux_checked > 0, "p=" + std::to_string(p) + " checked nothing");
    c.note("p=" + std::to_string(p) + ": " + std::to_string(r.form_a_shapes) + " shapes, " +
           std::to_string(r.tableaux_checked) + " tableaux, 0 counterexamples");
  }
  double s = seconds_since(t0);
  c.expect(s < limit_bounds_seconds, "runtime " + std::to_string(s) + " s");
  c.note(std::to_string(s) + " s");
}

void criterion7(Criterion& c) {
  std::mt19937_64 rng(roundtrip_seed);
  std::uniform_int_distribution<std::int64_t> entry(0, roundtrip_max_entry);
  for (auto [p, q] : {std::pair{5, 7}, {5, 11}, {3, 7}}) {
    int bad = 0;
    for (int i = 0; i < roundtrip_samples; ++i) {
      MultiplicityQuadruple m{};
      do {
        m = {entry(rng), entry(rng), entry(rng), entry(rng)};
      } while (m.one == 0 && m.zeta_p == 0 && m.zeta_q == 0 && m.zeta_pq == 0);
      auto v = forward_character_values(m, p, q);
      auto back = multiplicities_order_pq(v.degree, v.at_up, v.at_uq, v.at_u, p, q);
      if (!back || !(back.value() == m)) ++bad;
    }
    c.equal(bad, 0, "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ") mismatches");
  }
  c.note(std::to_string(roundtrip_samples) + " quadruples for each of (5,7), (5,11), (3,7)");
}

void criterion8(Criterion& c) {
  for (int p : {3, 5}) {
    auto s = cross_validate_exhaustive(p, consistency_max_entry, chain_ceiling);
    c.equal(s.inconsistent, std::uint64_t{0}, "p=" + std::to_string(p) + " inconsistent profiles");
    c.expect(s.feasible > 0, "p=" + std::to_string(p) + " no feasible chain at all");
    c.note("p=" + std::to_string(p) + ": " + std::to_string(s.profiles) + " profiles, " +
           std::to_string(s.feasible) + " chain-feasible, " + std::to_string(s.violated) + " violate the inequality");
  }
}

const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
    {"Co3 order-35 candidates and inequalities", criterion1},
    {"Co3 multiplicity table", criterion2},
    {"Co2 order-35 candidates, inequalities and table", criterion3},
    {"Co1 orders 5, 55, 65 and the 11-line table", criterion4},
    {"LR coefficients against brute force", criterion5},
    {"form-A bounds", criterion6},
    {"multiplicity roundtrip", criterion7},
    {"chain feasibility implies the inequality", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, static_cast<int>(criteria.size())));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    all_ok = all_ok && c.passed();
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << c.summary() << std::endl;
  }
  return all_ok ? 0 : 1;
}
