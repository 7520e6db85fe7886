// pqcheck command line front end.
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqcheck/brauer.hpp"
#include "pqcheck/case.hpp"
#include "pqcheck/checked.hpp"
#include "pqcheck/form_a.hpp"
#include "pqcheck/help.hpp"
#include "pqcheck/tableau.hpp"

using namespace pqcheck;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_undecided = 2;

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw InputError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<CharacterData> pick(const CaseFile& cf, const std::vector<std::string>& ids) {
  std::vector<CharacterData> out;
  for (const auto& id : ids) {
    const auto* c = cf.character(id);
    if (!c) throw InputError("case " + cf.group + " has no character '" + id + "'");
    out.push_back(*c);
  }
  return out;
}

std::string tuple_text(const std::vector<std::int64_t>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + std::to_string(t[i]);
  return out + ")";
}

struct Globals {
  std::int64_t bound = 128;
  int chain_ceiling = 40;
  std::uint64_t seed = 1;
};

int cmd_lr(const std::string& outer, const std::string& inner, const std::string& content) {
  std::cout << lr_coefficient(Partition::parse(outer), Partition::parse(inner), Partition::parse(content)) << "\n";
  return exit_ok;
}

int cmd_check_combinatorics(int p, int max_boxes) {
  auto r = verify_form_a_bounds(p, max_boxes);
  std::cout << "p = " << r.p << ", boxes <= " << r.max_boxes << "\n"
            << "skew shapes: " << r.shapes_enumerated << "\n"
            << "form A shapes: " << r.form_a_shapes << "\n"
            << "tableaux checked: " << r.tableaux_checked << "\n"
            << "assertions checked: " << r.assertions_checked << "\n"
            << "counterexamples: " << r.counterexample_count << "\n";
  for (const auto& c : r.counterexamples)
    std::cout << "  " << c.statement << " on " << c.tableau.shape().to_string() << " " << c.tableau.to_string()
              << ": " << c.detail << "\n";
  return r.counterexample_count == 0 ? exit_ok : exit_undecided;
}

int cmd_multiplicities(const std::string& path, int order, const std::string& candidate, const Globals& g) {
  auto cf = load_case(path);
  const auto* spec = cf.target(order);
  const BrauerLine* line = nullptr;
  int p = 0;
  if (spec && !spec->line.empty()) {
    line = cf.line(spec->line);
    p = spec->p ? spec->p : line->p;
  } else {
    for (const auto& l : cf.brauer_lines)
      if (order % l.p == 0) {
        line = &l;
        p = l.p;
        break;
      }
  }
  if (!line) throw InputError("no Brauer line of a prime dividing " + std::to_string(order));
  auto u = candidate_from_tuple(cf, order, p, parse_ints(candidate));
  RunOptions opts{g.bound, g.chain_ceiling};
  auto rep = evaluate_candidate(cf, u, line, opts);
  std::cout << "candidate " << tuple_text(rep.tuple) << " of order " << order << " (p = " << u.p << ", q = " << u.q
            << ")\nlayout " << tuple_layout(cf, order, p) << "\nline " << line->id << "\n";
  std::cout << "character  mu(1)  mu(z" << u.p << ")  mu(z" << u.q << ")  mu(z" << order << ")\n";
  for (const auto& r : rep.rows) {
    std::cout << r.character;
    if (r.feasible)
      std::cout << "  " << r.m.one << "  " << r.m.zeta_p << "  " << r.m.zeta_q << "  " << r.m.zeta_pq << "\n";
    else
      std::cout << "  infeasible: " << r.failure << "\n";
  }
  if (rep.inequality)
    std::cout << "inequality " << rep.inequality->lhs << " <= " << rep.inequality->rhs << ": "
              << (rep.inequality->holds ? "holds" : "violated") << "\n";
  std::cout << "chain: " << (rep.chain_status ? to_string(*rep.chain_status) : "not run");
  if (!rep.chain_note.empty()) std::cout << " (" << rep.chain_note << ")";
  std::cout << "\n" << (rep.excluded() ? "excluded by " + rep.excluded_by : std::string("not excluded")) << "\n";
  return rep.excluded() ? exit_ok : exit_undecided;
}

int cmd_enumerate(const std::string& path, int order, const std::string& chars, const std::string& format,
                  const Globals& g) {
  auto cf = load_case(path);
  auto ids = split_ids(chars);
  HelpQuery q;
  q.unit_order = order;
  q.constraint_characters = pick(cf, ids);
  q.classes = cf.classes;
  q.search_bound = g.bound;
  nlohmann::ordered_json doc;
  doc["format"] = "pqcheck-candidates/1";
  doc["group"] = cf.group;
  doc["order"] = order;
  doc["characters"] = ids;
  doc["bound"] = g.bound;
  std::vector<std::vector<std::int64_t>> tuples;
  std::string layout;
  bool saturated = false;
  if (is_prime(order)) {
    auto set = enumerate_prime_order(q);
    saturated = set.bound_saturated;
    std::vector<std::string> parts;
    for (const auto& c : support_classes(cf.classes, order)) parts.push_back("eps_" + c.id + "(u)");
    for (const auto& s : parts) layout += (layout.empty() ? "(" : ", ") + s;
    layout += ")";
    for (const auto& c : set.candidates) tuples.push_back(c.eps);
  } else {
    const auto* spec = cf.target(order);
    int pref = 0;
    if (spec) pref = spec->p ? spec->p : (spec->line.empty() ? 0 : cf.line(spec->line)->p);
    auto [p, qq] = split_order(order, pref);
    q.p = p;
    auto power = [&](int r) {
      HelpQuery pq = q;
      pq.unit_order = r;
      pq.p = 0;
      if (spec) {
        auto it = spec->power_characters.find(r);
        if (it != spec->power_characters.end()) pq.constraint_characters = pick(cf, it->second);
      }
      return enumerate_prime_order(pq);
    };
    auto set_p = power(p);
    auto set_q = power(qq);
    auto set = enumerate_order_pq(q, set_q, set_p);
    saturated = set.bound_saturated || set_p.bound_saturated || set_q.bound_saturated;
    layout = tuple_layout(cf, order, p);
    for (const auto& c : set.candidates) tuples.push_back(c.tuple());
  }
  doc["tuple_layout"] = layout;
  doc["bound_saturated"] = saturated;
  doc["candidates"] = tuples;
  if (format == "structured") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << cf.group << ", order " << order << ", characters " << chars << "\n"
              << "layout " << layout << "\n"
              << tuples.size() << " candidate" << (tuples.size() == 1 ? "" : "s")
              << (saturated ? " (WARNING: search bound saturated)" : "") << "\n";
    for (const auto& t : tuples) std::cout << "  " << tuple_text(t) << "\n";
  }
  return exit_ok;
}

int cmd_verify_case(const std::string& path, int order, const std::string& format, const Globals& g) {
  auto cf = load_case(path);
  RunOptions opts{g.bound, g.chain_ceiling};
  auto rep = run_case(cf, opts, order > 0 ? std::optional<int>(order) : std::nullopt);
  std::cout << (format == "structured" ? emit_structured(rep) : emit_text(rep));
  bool all = std::all_of(rep.targets.begin(), rep.targets.end(), [](const TargetReport& t) {
    return t.excluded && t.expected_match.value_or(true);
  });
  return all ? exit_ok : exit_undecided;
}

int cmd_cross_validate(int p, int max_entry, std::uint64_t samples, const Globals& g) {
  auto sum = samples == 0 ? cross_validate_exhaustive(p, max_entry, g.chain_ceiling)
                          : cross_validate_sampled(p, max_entry, samples, g.seed, g.chain_ceiling);
  std::cout << "p = " << sum.p << ", entries <= " << sum.max_entry
            << (samples ? ", sampled with seed " + std::to_string(g.seed) : std::string(", exhaustive")) << "\n"
            << "profiles: " << sum.profiles << "\n"
            << "chain searches: " << sum.searched << "\n"
            << "chain feasible: " << sum.feasible << "\n"
            << "inequality violated: " << sum.violated << "\n"
            << "feasible but violated: " << sum.inconsistent << "\n";
  for (const auto& pr : sum.inconsistencies) std::cout << "  s = " << tuple_text(pr.s) << " r = " << tuple_text(pr.r) << "\n";
  return sum.inconsistent == 0 ? exit_ok : exit_undecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for torsion units of mixed order pq"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--bound", g.bound, "box bound B for partial augmentations")->check(CLI::PositiveNumber);
  app.add_option("--chain-ceiling", g.chain_ceiling, "largest partition the chain search accepts")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for sampled property checks");

  std::string outer, inner, content;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^outer_{inner,content}");
  lr->add_option("--outer", outer)->required();
  lr->add_option("--inner", inner)->default_val("");
  lr->add_option("--content", content)->required();

  int p = 5, max_boxes = 12;
  auto* comb = app.add_subcommand("check-combinatorics", "exhaustive form A bounds check");
  comb->add_option("--p", p)->required();
  comb->add_option("--max-boxes", max_boxes)->required();

  std::string case_path, candidate, chars, format = "text";
  int order = 0;
  auto* mult = app.add_subcommand("multiplicities", "eigenvalue multiplicities of one candidate on a Brauer line");
  mult->add_option("case", case_path)->required()->check(CLI::ExistingFile);
  mult->add_option("--unit-order", order)->required();
  mult->add_option("--candidate", candidate, "tuple in report layout, e.g. -4,5,3,12,-14")->required();

  auto* en = app.add_subcommand("enumerate", "HeLP candidates for a unit order");
  en->add_option("case", case_path)->required()->check(CLI::ExistingFile);
  en->add_option("--order", order)->required();
  en->add_option("--characters", chars)->required();
  en->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  auto* vc = app.add_subcommand("verify-case", "run every target of a case file");
  vc->add_option("case", case_path)->required()->check(CLI::ExistingFile);
  vc->add_option("--order", order, "only this target");
  vc->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  int max_entry = 4;
  std::uint64_t samples = 0;
  auto* cv = app.add_subcommand("cross-validate", "chain search against the closed-form inequality");
  cv->add_option("--p", p)->required();
  cv->add_option("--max-entry", max_entry);
  cv->add_option("--samples", samples, "random profiles instead of the exhaustive range");

  // bounds and seeds may also follow the subcommand
  for (auto* sub : {mult, en, vc, cv}) {
    sub->add_option("--bound", g.bound)->check(CLI::PositiveNumber);
    sub->add_option("--chain-ceiling", g.chain_ceiling)->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", g.seed);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_error;
  }

  try {
    if (*lr) return cmd_lr(outer, inner, content);
    if (*comb) return cmd_check_combinatorics(p, max_boxes);
    if (*mult) return cmd_multiplicities(case_path, order, candidate, g);
    if (*en) return cmd_enumerate(case_path, order, chars, format, g);
    if (*vc) return cmd_verify_case(case_path, order, format, g);
    if (*cv) return cmd_cross_validate(p, max_entry, samples, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
