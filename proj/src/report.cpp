#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "pqcheck/case.hpp"

namespace pqcheck {

using nlohmann::ordered_json;

namespace {

struct Layout {
  int p = 0;
  int q = 0;
  std::vector<ClassInfo> classes_p;   // support of u^q
  std::vector<ClassInfo> classes_q;   // support of u^p
  std::vector<ClassInfo> classes_pq;  // support of u
};

Layout layout_for(const CaseFile& cf, int order, int p) {
  Layout l;
  std::tie(l.p, l.q) = split_order(order, p);
  l.classes_p = support_classes(cf.classes, l.p);
  l.classes_q = support_classes(cf.classes, l.q);
  l.classes_pq = support_classes(cf.classes, order);
  if (l.classes_p.empty() || l.classes_q.empty())
    throw InputError("the case declares no class of order " + std::to_string(l.classes_p.empty() ? l.p : l.q));
  return l;
}

std::vector<std::string> ids(const std::vector<ClassInfo>& classes) {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back(c.id);
  return out;
}

int effective_p(const CaseFile& cf, const TargetSpec& spec) {
  if (spec.p) return spec.p;
  if (!spec.line.empty())
    if (const auto* line = cf.line(spec.line)) return line->p;
  return 0;
}

std::vector<CharacterData> characters_of(const CaseFile& cf, const std::vector<std::string>& ids) {
  std::vector<CharacterData> out;
  for (const auto& id : ids) {
    const auto* c = cf.character(id);
    if (!c) throw InputError("unknown character '" + id + "'");
    out.push_back(*c);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string tuple_text(const std::vector<std::int64_t>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + std::to_string(t[i]);
  return out + ")";
}

}  // namespace

std::string tuple_layout(const CaseFile& cf, int order, int p) {
  auto l = layout_for(cf, order, p);
  std::vector<std::string> parts;
  // powers in increasing order of their order: u^q has order p
  std::vector<std::pair<int, std::pair<std::string, const std::vector<ClassInfo>*>>> powers{
      {l.p, {"u^" + std::to_string(l.q), &l.classes_p}}, {l.q, {"u^" + std::to_string(l.p), &l.classes_q}}};
  std::sort(powers.begin(), powers.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [ord, named] : powers) {
    if (named.second->size() <= 1) continue;
    for (const auto& c : *named.second) parts.push_back("eps_" + c.id + "(" + named.first + ")");
  }
  for (const auto& c : l.classes_pq) parts.push_back("eps_" + c.id + "(u)");
  return "(" + join(parts, ", ") + ")";
}

UnitCandidate candidate_from_tuple(const CaseFile& cf, int order, int p, const std::vector<std::int64_t>& tuple) {
  auto l = layout_for(cf, order, p);
  UnitCandidate u;
  u.p = l.p;
  u.q = l.q;
  u.pa_uq = {l.p, ids(l.classes_p), {}};
  u.pa_up = {l.q, ids(l.classes_q), {}};
  u.pa_u = {order, ids(l.classes_pq), {}};
  std::vector<PartialAugmentation*> order_of_parts;
  if (l.p < l.q)
    order_of_parts = {&u.pa_uq, &u.pa_up};
  else
    order_of_parts = {&u.pa_up, &u.pa_uq};
  std::size_t expected = u.pa_u.classes.size();
  for (auto* pa : order_of_parts)
    if (pa->classes.size() > 1) expected += pa->classes.size();
  if (tuple.size() != expected)
    throw InputError("tuple " + tuple_text(tuple) + " has " + std::to_string(tuple.size()) + " entries, layout " +
                     tuple_layout(cf, order, p) + " needs " + std::to_string(expected));
  std::size_t at = 0;
  for (auto* pa : order_of_parts) {
    if (pa->classes.size() == 1) {
      pa->eps = {1};
      continue;
    }
    pa->eps.assign(tuple.begin() + static_cast<std::ptrdiff_t>(at),
                   tuple.begin() + static_cast<std::ptrdiff_t>(at + pa->classes.size()));
    at += pa->classes.size();
  }
  u.pa_u.eps.assign(tuple.begin() + static_cast<std::ptrdiff_t>(at), tuple.end());
  for (const auto* pa : {&u.pa_uq, &u.pa_up, &u.pa_u}) {
    auto problems = validate_partial_augmentation(*pa, cf.classes);
    if (!problems.empty())
      throw InputError("tuple " + tuple_text(tuple) + ", part of order " + std::to_string(pa->unit_order) + ": " +
                       join(problems, "; "));
  }
  return u;
}

CandidateReport evaluate_candidate(const CaseFile& cf, const UnitCandidate& u, const BrauerLine* line,
                                   const RunOptions& opts, LrCache* cache) {
  CandidateReport rep;
  rep.tuple = u.tuple();
  if (!line) return rep;
  if (line->p != u.p)
    throw InputError("line " + line->id + " has prime " + std::to_string(line->p) + " but the candidate uses p = " +
                     std::to_string(u.p));
  EigenvalueProfile profile;
  bool all_feasible = true;
  for (const auto& id : line->characters) {
    const auto* chi = cf.character(id);
    if (!chi) throw InputError("line " + line->id + " names unknown character '" + id + "'");
    CharacterRow row;
    row.character = id;
    auto res = multiplicities_order_pq(chi->degree, chi_of_unit(*chi, u.pa_up), chi_of_unit(*chi, u.pa_uq),
                                       chi_of_unit(*chi, u.pa_u), u.p, u.q);
    if (res) {
      row.m = res.value();
      profile.s.push_back(row.m.one);
      profile.r.push_back(row.m.zeta_p);
    } else {
      row.feasible = false;
      row.failure = std::string(to_string(res.reason())) + ": " + res.detail();
      all_feasible = false;
    }
    rep.rows.push_back(std::move(row));
  }
  if (!all_feasible) {
    rep.excluded_by = "help";
    rep.chain_note = "not run: a line character has infeasible multiplicities";
    return rep;
  }
  if (!line->unramified_asserted) {
    rep.chain_note = "not run: line is not asserted unramified";
    return rep;
  }
  rep.inequality = theorem2_check(profile, *line);
  auto chain = chain_feasibility(profile, *line, opts.chain_ceiling, cache);
  rep.chain_status = chain.status;
  rep.witness = chain.witness;
  rep.chain_note = chain.note;
  if (!rep.inequality->holds)
    rep.excluded_by = "inequality";
  else if (chain.status == ChainStatus::infeasible)
    rep.excluded_by = "chain";
  return rep;
}

TargetReport run_target(const CaseFile& cf, int order, const RunOptions& opts) {
  const TargetSpec* spec = cf.target(order);
  if (!spec) throw InputError("no target of order " + std::to_string(order) + " in case " + cf.group);
  const BrauerLine* line = spec->line.empty() ? nullptr : cf.line(spec->line);
  if (!spec->line.empty() && !line) throw InputError("unknown Brauer line '" + spec->line + "'");

  TargetReport rep;
  rep.order = order;
  std::tie(rep.p, rep.q) = split_order(order, effective_p(cf, *spec));
  rep.characters = spec->characters;
  rep.bound = opts.bound;
  rep.layout = tuple_layout(cf, order, rep.p);

  auto power_set = [&](int r) {
    auto it = spec->power_characters.find(r);
    const auto& ids = it != spec->power_characters.end() ? it->second : spec->characters;
    HelpQuery q;
    q.unit_order = r;
    q.constraint_characters = characters_of(cf, ids);
    q.classes = cf.classes;
    q.search_bound = opts.bound;
    auto set = enumerate_prime_order(q);
    PowerSummary s;
    s.power = "u^" + std::to_string(order / r);
    s.order = r;
    s.characters = ids;
    s.count = set.candidates.size();
    s.bound_saturated = set.bound_saturated;
    rep.powers.push_back(s);
    return set;
  };
  // summaries listed by increasing order
  auto low = power_set(std::min(rep.p, rep.q));
  auto high = power_set(std::max(rep.p, rep.q));
  const auto& set_p = rep.p < rep.q ? low : high;
  const auto& set_q = rep.p < rep.q ? high : low;

  HelpQuery query;
  query.unit_order = order;
  query.constraint_characters = characters_of(cf, spec->characters);
  query.classes = cf.classes;
  query.search_bound = opts.bound;
  query.p = rep.p;
  auto set = enumerate_order_pq(query, set_q, set_p);
  rep.bound_saturated = set.bound_saturated;
  for (const auto& s : rep.powers) rep.bound_saturated = rep.bound_saturated || s.bound_saturated;

  if (line) {
    rep.line = line->id;
    rep.line_characters = line->characters;
    rep.unramified_asserted = line->unramified_asserted;
  }
  LrCache cache;
  for (const auto& u : set.candidates) rep.candidates.push_back(evaluate_candidate(cf, u, line, opts, &cache));

  if (!spec->expected_candidates.empty()) {
    auto expected = spec->expected_candidates;
    std::vector<std::vector<std::int64_t>> got;
    for (const auto& c : rep.candidates) got.push_back(c.tuple);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    rep.expected_match = expected == got;
  }

  bool all = std::all_of(rep.candidates.begin(), rep.candidates.end(),
                         [](const CandidateReport& c) { return c.excluded(); });
  rep.excluded = all && !rep.bound_saturated;
  if (rep.excluded)
    rep.conclusion = "no units of order " + std::to_string(order);
  else if (all)
    rep.conclusion = "undecided (search bound " + std::to_string(opts.bound) + " saturated)";
  else
    rep.conclusion = "undecided";
  return rep;
}

CaseReport run_case(const CaseFile& cf, const RunOptions& opts, std::optional<int> only_order) {
  CaseReport rep;
  rep.group = cf.group;
  rep.provenance = cf.provenance;
  for (const auto& t : cf.targets)
    if (!only_order || *only_order == t.order) rep.targets.push_back(run_target(cf, t.order, opts));
  if (only_order && rep.targets.empty())
    throw InputError("no target of order " + std::to_string(*only_order) + " in case " + cf.group);
  return rep;
}

// ---- text ----

std::string emit_text(const CaseReport& report) {
  std::ostringstream os;
  os << "group: " << report.group << "\n";
  if (!report.provenance.empty()) os << "provenance: " << report.provenance << "\n";
  for (const auto& t : report.targets) {
    os << "\n== order " << t.order << " (p = " << t.p << ", q = " << t.q << ") ==\n";
    os << "constraint characters: " << join(t.characters, ", ") << "\n";
    for (const auto& s : t.powers)
      os << "power " << s.power << " (order " << s.order << "): " << s.count << " candidate"
         << (s.count == 1 ? "" : "s") << " from " << join(s.characters, ", ")
         << (s.bound_saturated ? " [bound saturated]" : "") << "\n";
    os << "search bound: " << t.bound << (t.bound_saturated ? " (SATURATED, result may depend on it)" : "") << "\n";
    os << "tuple layout: " << t.layout << "\n";
    os << "candidates: " << t.candidates.size() << "\n";
    for (std::size_t i = 0; i < t.candidates.size(); ++i)
      os << "  [" << i + 1 << "] " << tuple_text(t.candidates[i].tuple) << "\n";
    if (t.expected_match) os << "expected candidates: " << (*t.expected_match ? "match" : "MISMATCH") << "\n";

    if (!t.line.empty() && !t.candidates.empty()) {
      os << "Brauer line " << t.line << " (p = " << t.p
         << (t.unramified_asserted ? ", unramified asserted" : ", unramified NOT asserted")
         << "): " << join(t.line_characters, " - ") << "\n\n";
      const std::string hdr[4] = {"mu(1)", "mu(z" + std::to_string(t.p) + ")", "mu(z" + std::to_string(t.q) + ")",
                                  "mu(z" + std::to_string(t.order) + ")"};
      std::size_t w = 6;
      for (const auto& h : hdr) w = std::max(w, h.size());
      for (const auto& c : t.candidates)
        for (const auto& r : c.rows) {
          for (auto v : {r.m.one, r.m.zeta_p, r.m.zeta_q, r.m.zeta_pq}) w = std::max(w, std::to_string(v).size());
        }
      std::size_t nw = 9;
      for (const auto& id : t.line_characters) nw = std::max(nw, id.size());
      os << std::left << std::setw(static_cast<int>(nw)) << "character" << std::right;
      for (std::size_t i = 0; i < t.candidates.size(); ++i) {
        os << " |";
        for (const auto& h : hdr) os << " " << std::setw(static_cast<int>(w)) << h;
      }
      os << "\n";
      for (std::size_t row = 0; row < t.line_characters.size(); ++row) {
        os << std::left << std::setw(static_cast<int>(nw)) << t.line_characters[row] << std::right;
        for (const auto& c : t.candidates) {
          os << " |";
          const auto& r = c.rows[row];
          if (!r.feasible) {
            for (int k = 0; k < 4; ++k) os << " " << std::setw(static_cast<int>(w)) << "-";
            continue;
          }
          for (auto v : {r.m.one, r.m.zeta_p, r.m.zeta_q, r.m.zeta_pq}) os << " " << std::setw(static_cast<int>(w)) << v;
        }
        os << "\n";
      }
      os << "\n";
      for (std::size_t i = 0; i < t.candidates.size(); ++i) {
        const auto& c = t.candidates[i];
        os << "[" << i + 1 << "] ";
        for (const auto& r : c.rows)
          if (!r.feasible) os << r.character << " infeasible (" << r.failure << "); ";
        if (c.inequality)
          os << "inequality " << c.inequality->lhs << " <= " << c.inequality->rhs << ": "
             << (c.inequality->holds ? "holds" : "violated") << "; ";
        os << "chain: " << (c.chain_status ? to_string(*c.chain_status) : "not run");
        if (!c.chain_note.empty()) os << " (" << c.chain_note << ")";
        if (c.witness) {
          std::vector<std::string> mus;
          for (const auto& m : c.witness->mu) mus.push_back(m.to_string());
          os << " witness " << join(mus, " ");
        }
        os << "; " << (c.excluded() ? "excluded by " + c.excluded_by : std::string("NOT excluded")) << "\n";
      }
    } else if (t.line.empty() && !t.candidates.empty()) {
      os << "no Brauer line configured; candidates remain\n";
    }
    os << "conclusion: " << t.conclusion << "\n";
  }
  return os.str();
}

// ---- structured ----

std::string emit_structured(const CaseReport& report) {
  ordered_json doc;
  doc["format"] = report_format;
  doc["group"] = report.group;
  doc["provenance"] = report.provenance;
  doc["targets"] = ordered_json::array();
  for (const auto& t : report.targets) {
    ordered_json jt;
    jt["order"] = t.order;
    jt["p"] = t.p;
    jt["q"] = t.q;
    jt["characters"] = t.characters;
    jt["powers"] = ordered_json::array();
    for (const auto& s : t.powers)
      jt["powers"].push_back({{"power", s.power},
                              {"order", s.order},
                              {"characters", s.characters},
                              {"count", s.count},
                              {"bound_saturated", s.bound_saturated}});
    jt["bound"] = t.bound;
    jt["bound_saturated"] = t.bound_saturated;
    jt["tuple_layout"] = t.layout;
    jt["line"] = t.line.empty() ? ordered_json(nullptr) : ordered_json(t.line);
    jt["line_characters"] = t.line_characters;
    jt["unramified_asserted"] = t.unramified_asserted;
    jt["candidates"] = ordered_json::array();
    for (const auto& c : t.candidates) {
      ordered_json jc;
      jc["tuple"] = c.tuple;
      jc["multiplicities"] = ordered_json::array();
      for (const auto& r : c.rows) {
        ordered_json jr;
        jr["character"] = r.character;
        jr["feasible"] = r.feasible;
        if (r.feasible) {
          jr["mu_1"] = r.m.one;
          jr["mu_zp"] = r.m.zeta_p;
          jr["mu_zq"] = r.m.zeta_q;
          jr["mu_zpq"] = r.m.zeta_pq;
        } else {
          jr["failure"] = r.failure;
        }
        jc["multiplicities"].push_back(std::move(jr));
      }
      if (c.inequality)
        jc["inequality"] = {{"lhs", c.inequality->lhs}, {"rhs", c.inequality->rhs}, {"holds", c.inequality->holds}};
      else
        jc["inequality"] = nullptr;
      jc["chain"] = {{"status", c.chain_status ? ordered_json(to_string(*c.chain_status)) : ordered_json(nullptr)},
                     {"note", c.chain_note}};
      if (c.witness) {
        std::vector<std::string> mus;
        for (const auto& m : c.witness->mu) mus.push_back(m.to_string());
        jc["chain"]["witness"] = {{"choice", c.witness->choice}, {"mu", mus}};
      }
      jc["excluded_by"] = c.excluded_by.empty() ? ordered_json(nullptr) : ordered_json(c.excluded_by);
      jt["candidates"].push_back(std::move(jc));
    }
    jt["expected_match"] = t.expected_match ? ordered_json(*t.expected_match) : ordered_json(nullptr);
    jt["excluded"] = t.excluded;
    jt["conclusion"] = t.conclusion;
    doc["targets"].push_back(std::move(jt));
  }
  return doc.dump(2) + "\n";
}

CaseReport parse_report(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text, nullptr, true, true);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != report_format)
      throw InputError("report: unsupported format '" + doc.at("format").get<std::string>() + "'");
    CaseReport rep;
    rep.group = doc.at("group").get<std::string>();
    rep.provenance = doc.at("provenance").get<std::string>();
    for (const auto& jt : doc.at("targets")) {
      TargetReport t;
      t.order = jt.at("order").get<int>();
      t.p = jt.at("p").get<int>();
      t.q = jt.at("q").get<int>();
      t.characters = jt.at("characters").get<std::vector<std::string>>();
      for (const auto& js : jt.at("powers")) {
        PowerSummary s;
        s.power = js.at("power").get<std::string>();
        s.order = js.at("order").get<int>();
        s.characters = js.at("characters").get<std::vector<std::string>>();
        s.count = js.at("count").get<std::size_t>();
        s.bound_saturated = js.at("bound_saturated").get<bool>();
        t.powers.push_back(std::move(s));
      }
      t.bound = jt.at("bound").get<std::int64_t>();
      t.bound_saturated = jt.at("bound_saturated").get<bool>();
      t.layout = jt.at("tuple_layout").get<std::string>();
      if (!jt.at("line").is_null()) t.line = jt.at("line").get<std::string>();
      t.line_characters = jt.at("line_characters").get<std::vector<std::string>>();
      t.unramified_asserted = jt.at("unramified_asserted").get<bool>();
      for (const auto& jc : jt.at("candidates")) {
        CandidateReport c;
        c.tuple = jc.at("tuple").get<std::vector<std::int64_t>>();
        for (const auto& jr : jc.at("multiplicities")) {
          CharacterRow r;
          r.character = jr.at("character").get<std::string>();
          r.feasible = jr.at("feasible").get<bool>();
          if (r.feasible) {
            r.m = {jr.at("mu_1").get<std::int64_t>(), jr.at("mu_zp").get<std::int64_t>(),
                   jr.at("mu_zq").get<std::int64_t>(), jr.at("mu_zpq").get<std::int64_t>()};
          } else {
            r.failure = jr.at("failure").get<std::string>();
          }
          c.rows.push_back(std::move(r));
        }
        if (!jc.at("inequality").is_null()) {
          const auto& ji = jc.at("inequality");
          c.inequality = InequalityResult{ji.at("holds").get<bool>(), ji.at("lhs").get<std::int64_t>(),
                                          ji.at("rhs").get<std::int64_t>()};
        }
        const auto& ch = jc.at("chain");
        if (!ch.at("status").is_null()) {
          auto s = ch.at("status").get<std::string>();
          if (s == "feasible")
            c.chain_status = ChainStatus::feasible;
          else if (s == "infeasible")
            c.chain_status = ChainStatus::infeasible;
          else if (s == "skipped (size)")
            c.chain_status = ChainStatus::skipped_size;
          else
            throw InputError("report: unknown chain status '" + s + "'");
        }
        c.chain_note = ch.at("note").get<std::string>();
        if (ch.contains("witness")) {
          ChainWitness w;
          w.choice = ch["witness"].at("choice").get<std::vector<std::size_t>>();
          for (const auto& m : ch["witness"].at("mu")) w.mu.push_back(Partition::parse(m.get<std::string>()));
          c.witness = std::move(w);
        }
        if (!jc.at("excluded_by").is_null()) c.excluded_by = jc.at("excluded_by").get<std::string>();
        t.candidates.push_back(std::move(c));
      }
      if (!jt.at("expected_match").is_null()) t.expected_match = jt.at("expected_match").get<bool>();
      t.excluded = jt.at("excluded").get<bool>();
      t.conclusion = jt.at("conclusion").get<std::string>();
      rep.targets.push_back(std::move(t));
    }
    return rep;
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

}  // namespace pqcheck
