#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "pqcheck/case.hpp"

using namespace pqcheck;

namespace {

std::string fixture_path(const std::string& name) { return std::string(PQCHECK_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// a small valid case to mutate
const char* tiny = R"({
  "format": "pqcheck-case/1",
  "group": "T",
  "classes": [{"id": "1a", "order": 1}, {"id": "3a", "order": 3}, {"id": "5a", "order": 5}],
  "characters": [
    {"id": "t1", "degree": 1, "values": {"1a": 1, "3a": 1, "5a": 1}},
    {"id": "t2", "degree": 4, "values": {"1a": 4, "3a": 1, "5a": -1}}
  ],
  "brauer_lines": [{"id": "L", "p": 3, "characters": ["t1", "t2", "t1"], "unramified": true}],
  "targets": [{"order": 15, "characters": ["t2"], "line": "L"}]
})";

std::vector<std::string> problems_of(const std::string& text) {
  try {
    parse_case(text, "mem");
  } catch (const CaseError& e) {
    return e.problems();
  }
  return {};
}

bool mentions(const std::vector<std::string>& problems, const std::string& needle) {
  return std::any_of(problems.begin(), problems.end(), [&](auto& p) { return p.find(needle) != std::string::npos; });
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("load the shipped fixtures") {
  auto co3 = load_case(fixture_path("co3.case"));
  CHECK(co3.group == "Co3");
  CHECK(co3.classes.size() == 4);
  for (auto id : {"chi2", "chi3", "chi5", "chi12", "chi29", "chi35", "chi39"}) CHECK(co3.character(id) != nullptr);
  REQUIRE(co3.brauer_lines.size() == 1);
  CHECK(co3.brauer_lines[0].p == 5);
  CHECK(co3.brauer_lines[0].unramified_asserted);
  CHECK(co3.target(35) != nullptr);
  CHECK(co3.target(55) == nullptr);

  auto co1 = load_case(fixture_path("co1.case"));
  REQUIRE(co1.character("psi"));
  CHECK(co1.character("psi")->kind == CharacterKind::brauer);
  CHECK(co1.character("psi")->characteristic == 2);
  CHECK(co1.line("B11")->characters.size() == 11);
}

TEST_CASE("psi agrees with chi1 - chi2 + chi3 on the listed classes") {
  auto co1 = load_case(fixture_path("co1.case"));
  auto& psi = *co1.character("psi");
  auto& c1 = *co1.character("chi1");
  auto& c2 = *co1.character("chi2");
  auto& c3 = *co1.character("chi3");
  for (auto& [cls, v] : psi.values) CHECK(v == *c1.value(cls) - *c2.value(cls) + *c3.value(cls));
}

TEST_CASE("parse errors") {
  auto empty = problems_of("");
  REQUIRE_FALSE(empty.empty());
  auto broken = problems_of("{\n  \"format\": \n}");
  REQUIRE(broken.size() == 1);
  CHECK(broken[0].find("mem:3:") == 0);
  CHECK_THROWS_AS(load_case(fixture_path("does-not-exist.case")), InputError);
  CHECK(problems_of(tiny).empty());
  // comments are accepted
  CHECK(problems_of(std::string("// note\n") + tiny).empty());
}

TEST_CASE("validation lists every problem") {
  auto s = replace(tiny, "\"5a\": -1}", "\"5a\": 1.5}");
  s = replace(s, "\"3a\": 1, \"5a\": 1}", "\"3a\": \"b7\", \"5a\": 1}");
  s = replace(s, "\"group\": \"T\",", "\"group\": \"T\", \"colour\": 3,");
  auto probs = problems_of(s);
  CHECK(probs.size() >= 3);
  CHECK(mentions(probs, "not an exact integer"));
  CHECK(mentions(probs, "only integral characters"));
  CHECK(mentions(probs, "unknown field 'colour'"));
}

TEST_CASE("validation of references and shapes") {
  CHECK(mentions(problems_of(replace(tiny, "\"1a\": 4,", "\"1a\": 5,")), "differs from degree"));
  CHECK(mentions(problems_of(replace(tiny, "\"3a\": 1, \"5a\": -1", "\"3a\": 1, \"7a\": -1")), "undeclared class"));
  CHECK(mentions(problems_of(replace(tiny, "[\"t1\", \"t2\", \"t1\"]", "[\"t1\", \"t2\"]")), "but p = 3"));
  CHECK(mentions(problems_of(replace(tiny, "[\"t1\", \"t2\", \"t1\"]", "[\"t1\", \"t2\", \"t9\"]")),
                 "undeclared character 't9'"));
  CHECK(mentions(problems_of(replace(tiny, "\"order\": 15", "\"order\": 45")), "order"));
  CHECK(mentions(problems_of(replace(tiny, "\"order\": 15", "\"order\": 10")), "does not divide"));
  CHECK(mentions(problems_of(replace(tiny, "\"format\": \"pqcheck-case/1\"", "\"format\": \"x/2\"")),
                 "unsupported format"));
  CHECK(mentions(problems_of(replace(tiny, "{\"id\": \"1a\", \"order\": 1}, ", "")), "element order 1"));

  // a Brauer value on a class whose order the characteristic divides
  auto b = replace(tiny, "{\"id\": \"t2\", \"degree\": 4", "{\"id\": \"t2\", \"kind\": \"brauer\", \"characteristic\": 3, \"degree\": 4");
  CHECK(mentions(problems_of(b), "characteristic 3"));
}

TEST_CASE("expected candidates are validated") {
  auto good = replace(tiny, "\"line\": \"L\"}", "\"line\": \"L\", \"expected_candidates\": [[1, 0]]}");
  CHECK(problems_of(good).empty());
  auto bad_sum = replace(tiny, "\"line\": \"L\"}", "\"line\": \"L\", \"expected_candidates\": [[1, 1]]}");
  CHECK_FALSE(problems_of(bad_sum).empty());
  auto bad_len = replace(tiny, "\"line\": \"L\"}", "\"line\": \"L\", \"expected_candidates\": [[1, 0, 0]]}");
  CHECK_FALSE(problems_of(bad_len).empty());
}

TEST_CASE("tuple layout and candidate_from_tuple") {
  auto co3 = load_case(fixture_path("co3.case"));
  CHECK(tuple_layout(co3, 35, 5) == "(eps_5a(u^7), eps_5b(u^7), eps_5a(u), eps_5b(u), eps_7a(u))");
  auto u = candidate_from_tuple(co3, 35, 5, {-4, 5, 3, 12, -14});
  CHECK(u.p == 5);
  CHECK(u.pa_uq.eps == std::vector<std::int64_t>{-4, 5});
  CHECK(u.pa_up.eps == std::vector<std::int64_t>{1});
  CHECK(u.tuple() == std::vector<std::int64_t>{-4, 5, 3, 12, -14});
  CHECK_THROWS_AS(candidate_from_tuple(co3, 35, 5, {-4, 5, 3, 12}), InputError);
  CHECK_THROWS_AS(candidate_from_tuple(co3, 35, 5, {-4, 4, 3, 12, -14}), InputError);

  auto co1 = load_case(fixture_path("co1.case"));
  CHECK(tuple_layout(co1, 55, 11) ==
        "(eps_5a(u^11), eps_5b(u^11), eps_5c(u^11), eps_5a(u), eps_5b(u), eps_5c(u), eps_11a(u))");
}

TEST_CASE("evaluate_candidate on the first Co3 candidate") {
  auto co3 = load_case(fixture_path("co3.case"));
  auto u = candidate_from_tuple(co3, 35, 5, {-4, 5, 3, 12, -14});
  auto rep = evaluate_candidate(co3, u, co3.line("B5"), RunOptions{});
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[0].character == "chi5");
  CHECK(rep.rows[0].m.one == 33);
  CHECK(rep.rows[0].m.zeta_p == 2);
  CHECK(rep.rows[3].m.zeta_p == 5071);
  REQUIRE(rep.inequality);
  CHECK(rep.inequality->lhs == 4967);
  CHECK(rep.inequality->rhs == 4945);
  CHECK(rep.excluded_by == "inequality");
  REQUIRE(rep.chain_status);
  CHECK(*rep.chain_status == ChainStatus::skipped_size);
}

TEST_CASE("run_case conclusions") {
  auto co3 = run_case(load_case(fixture_path("co3.case")));
  REQUIRE(co3.targets.size() == 1);
  auto& t = co3.targets[0];
  CHECK(t.candidates.size() == 2);
  CHECK(t.excluded);
  CHECK(t.conclusion == "no units of order 35");
  REQUIRE(t.expected_match);
  CHECK(*t.expected_match);
  CHECK(t.unramified_asserted);

  auto co1 = run_case(load_case(fixture_path("co1.case")), {}, 65);
  REQUIRE(co1.targets.size() == 1);
  CHECK(co1.targets[0].candidates.empty());
  CHECK(co1.targets[0].conclusion == "no units of order 65");

  auto co2 = run_case(load_case(fixture_path("co2.case")));
  for (auto& c : co2.targets[0].candidates) CHECK(c.excluded_by == "inequality");
}

TEST_CASE("a saturated search is undecided") {
  auto s = replace(tiny, "\"characters\": [\"t2\"], \"line\"", "\"characters\": [\"t1\"], \"line\"");
  auto cf = parse_case(s);
  RunOptions opts;
  opts.bound = 4;
  auto r = run_target(cf, 15, opts);
  CHECK(r.bound_saturated);
  CHECK_FALSE(r.excluded);
  CHECK(r.conclusion.find("undecided") == 0);
}

TEST_CASE("text report") {
  auto rep = run_case(load_case(fixture_path("co3.case")));
  auto text = emit_text(rep);
  CHECK(text.find("mu(1)") != std::string::npos);
  CHECK(text.find("no units of order 35") != std::string::npos);
  std::istringstream in(text);
  std::string row;
  bool found = false;
  while (std::getline(in, row)) {
    std::istringstream cols(row);
    std::string name;
    cols >> name;
    if (name != "chi5") continue;
    std::string bar;
    std::int64_t one = 0, zp = 0;
    cols >> bar >> one >> zp;
    CHECK(one == 33);
    CHECK(zp == 2);
    found = true;
    break;
  }
  CHECK(found);

  CaseReport empty;
  empty.group = "none";
  auto e = emit_text(empty);
  CHECK_FALSE(e.empty());
  CHECK(e.find("order") == std::string::npos);
}

TEST_CASE("structured report roundtrip and determinism") {
  auto cf = load_case(fixture_path("co1.case"));
  auto a = emit_structured(run_case(cf));
  auto b = emit_structured(run_case(cf));
  CHECK(a == b);
  CHECK(emit_structured(parse_report(a)) == a);
  CHECK(a.find(report_format) != std::string::npos);
  CHECK_THROWS(parse_report("{}"));

  auto co1 = parse_report(a);
  REQUIRE(co1.targets.size() == 2);
  auto& t55 = co1.targets[0].order == 55 ? co1.targets[0] : co1.targets[1];
  REQUIRE(t55.candidates.size() == 4);
  CHECK(t55.candidates[0].tuple == std::vector<std::int64_t>{1, 5, -5, 1, -6, -5, 11});
}

TEST_CASE("every fixture character names its source") {
  for (auto name : {"co3.case", "co2.case", "co1.case"}) {
    auto cf = load_case(fixture_path(name));
    for (auto& c : cf.characters) CHECK_FALSE(c.source.empty());
    CHECK_FALSE(read_file(fixture_path(name)).empty());
  }
}
