#include "pqcheck/case.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pqcheck/checked.hpp"

namespace pqcheck {

using nlohmann::json;

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out;
  for (const auto& p : problems) out += (out.empty() ? "" : "\n") + p;
  return out;
}

// Collects problems while walking the document.
class Reader {
 public:
  std::vector<std::string> problems;

  void fail(const std::string& path, const std::string& what) { problems.push_back(path + ": " + what); }

  std::optional<std::int64_t> integer(const json& v, const std::string& path) {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        fail(path, "integer out of range");
        return std::nullopt;
      }
      return v.get<std::int64_t>();
    }
    if (v.is_number_float()) {
      fail(path, "value " + v.dump() + " is not an exact integer");
    } else if (v.is_string()) {
      fail(path, "non-integral value '" + v.get<std::string>() + "'; only integral characters are supported");
    } else {
      fail(path, "expected an integer, got " + std::string(v.type_name()));
    }
    return std::nullopt;
  }

  std::optional<std::string> string(const json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    fail(path, "expected a string, got " + std::string(v.type_name()));
    return std::nullopt;
  }

  std::vector<std::string> strings(const json& v, const std::string& path) {
    std::vector<std::string> out;
    if (!v.is_array()) {
      fail(path, "expected a list of strings");
      return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
      if (auto s = string(v[i], path + "[" + std::to_string(i) + "]")) out.push_back(*s);
    return out;
  }

  const json* field(const json& obj, const char* key, const std::string& path, bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path, std::string("missing field '") + key + "'");
      return nullptr;
    }
    return &*it;
  }

  void only_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; }))
        fail(path, "unknown field '" + it.key() + "'");
    }
  }
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void read_classes(Reader& rd, const json& doc, CaseFile& cf) {
  const json* v = rd.field(doc, "classes", "classes");
  if (!v) return;
  if (!v->is_array()) return rd.fail("classes", "expected a list");
  std::set<std::string> seen;
  int identities = 0;
  for (std::size_t i = 0; i < v->size(); ++i) {
    std::string path = "classes[" + std::to_string(i) + "]";
    const json& c = (*v)[i];
    if (!c.is_object()) {
      rd.fail(path, "expected an object");
      continue;
    }
    rd.only_fields(c, {"id", "order"}, path);
    const json* id = rd.field(c, "id", path);
    const json* order = rd.field(c, "order", path);
    if (!id || !order) continue;
    auto sid = rd.string(*id, path + ".id");
    auto ord = rd.integer(*order, path + ".order");
    if (!sid || !ord) continue;
    if (*ord < 1 || *ord > std::numeric_limits<int>::max()) {
      rd.fail(path + ".order", "element order must be a positive integer");
      continue;
    }
    if (!seen.insert(*sid).second) rd.fail(path + ".id", "duplicate class '" + *sid + "'");
    if (*ord == 1) ++identities;
    cf.classes.push_back({*sid, static_cast<int>(*ord)});
  }
  if (identities != 1) rd.fail("classes", "exactly one class of element order 1 is required");
}

const ClassInfo* find_class(const CaseFile& cf, const std::string& id) {
  for (const auto& c : cf.classes)
    if (c.id == id) return &c;
  return nullptr;
}

void read_characters(Reader& rd, const json& doc, CaseFile& cf) {
  const json* v = rd.field(doc, "characters", "characters");
  if (!v) return;
  if (!v->is_array()) return rd.fail("characters", "expected a list");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < v->size(); ++i) {
    std::string path = "characters[" + std::to_string(i) + "]";
    const json& c = (*v)[i];
    if (!c.is_object()) {
      rd.fail(path, "expected an object");
      continue;
    }
    rd.only_fields(c, {"id", "kind", "characteristic", "degree", "values", "source"}, path);
    CharacterData chi;
    bool ok = true;
    if (const json* id = rd.field(c, "id", path)) {
      if (auto s = rd.string(*id, path + ".id")) {
        chi.id = *s;
        path = "character " + chi.id;
        if (!seen.insert(chi.id).second) rd.fail(path, "duplicate character id");
      } else {
        ok = false;
      }
    } else {
      ok = false;
    }
    std::string kind = "ordinary";
    if (const json* k = rd.field(c, "kind", path, false)) {
      if (auto s = rd.string(*k, path + ".kind")) kind = *s;
    }
    if (kind == "brauer") {
      chi.kind = CharacterKind::brauer;
      const json* l = rd.field(c, "characteristic", path);
      auto ell = l ? rd.integer(*l, path + ".characteristic") : std::nullopt;
      if (!ell || !is_prime(*ell)) {
        if (ell) rd.fail(path + ".characteristic", "must be a prime");
        ok = false;
      } else {
        chi.characteristic = static_cast<int>(*ell);
      }
    } else if (kind == "ordinary") {
      if (c.contains("characteristic")) rd.fail(path + ".characteristic", "only Brauer characters have a characteristic");
    } else {
      rd.fail(path + ".kind", "must be 'ordinary' or 'brauer'");
      ok = false;
    }
    if (const json* d = rd.field(c, "degree", path)) {
      auto deg = rd.integer(*d, path + ".degree");
      if (!deg || *deg < 1) {
        if (deg) rd.fail(path + ".degree", "must be positive");
        ok = false;
      } else {
        chi.degree = *deg;
      }
    } else {
      ok = false;
    }
    if (const json* s = rd.field(c, "source", path, false)) {
      if (auto str = rd.string(*s, path + ".source")) chi.source = *str;
    }
    const json* vals = rd.field(c, "values", path);
    if (!vals || !vals->is_object()) {
      if (vals) rd.fail(path + ".values", "expected an object mapping class ids to integers");
      continue;
    }
    for (auto it = vals->begin(); it != vals->end(); ++it) {
      std::string vpath = path + ".values." + it.key();
      auto val = rd.integer(it.value(), vpath);
      const ClassInfo* cls = find_class(cf, it.key());
      if (!cls) {
        rd.fail(vpath, "undeclared class '" + it.key() + "'");
        continue;
      }
      if (!val) continue;
      if (chi.kind == CharacterKind::brauer && chi.characteristic > 0 && cls->element_order % chi.characteristic == 0)
        rd.fail(vpath, "Brauer character in characteristic " + std::to_string(chi.characteristic) +
                           " has a value on a singular class");
      chi.values[it.key()] = *val;
    }
    for (const auto& cls : cf.classes) {
      if (cls.element_order != 1) continue;
      auto at1 = chi.value(cls.id);
      if (!at1)
        rd.fail(path, "no value on the identity class " + cls.id);
      else if (chi.degree > 0 && *at1 != chi.degree)
        rd.fail(path, "value " + std::to_string(*at1) + " on " + cls.id + " differs from degree " +
                          std::to_string(chi.degree));
    }
    if (ok) cf.characters.push_back(std::move(chi));
  }
}

void read_lines(Reader& rd, const json& doc, CaseFile& cf, const std::set<std::string>& char_ids) {
  const json* v = rd.field(doc, "brauer_lines", "brauer_lines", false);
  if (!v) return;
  if (!v->is_array()) return rd.fail("brauer_lines", "expected a list");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < v->size(); ++i) {
    std::string path = "brauer_lines[" + std::to_string(i) + "]";
    const json& l = (*v)[i];
    if (!l.is_object()) {
      rd.fail(path, "expected an object");
      continue;
    }
    rd.only_fields(l, {"id", "p", "characters", "unramified", "xi"}, path);
    BrauerLine line;
    bool ok = true;
    const json* id = rd.field(l, "id", path);
    if (auto s = id ? rd.string(*id, path + ".id") : std::nullopt) {
      line.id = *s;
      path = "Brauer line " + line.id;
      if (!seen.insert(line.id).second) rd.fail(path, "duplicate line id");
    } else {
      ok = false;
    }
    const json* pj = rd.field(l, "p", path);
    auto p = pj ? rd.integer(*pj, path + ".p") : std::nullopt;
    if (!p || *p < 3 || !is_prime(*p)) {
      if (p) rd.fail(path + ".p", "must be an odd prime");
      ok = false;
    } else {
      line.p = static_cast<int>(*p);
    }
    if (const json* c = rd.field(l, "characters", path)) line.characters = rd.strings(*c, path + ".characters");
    for (const auto& c : line.characters)
      if (!char_ids.count(c)) rd.fail(path, "undeclared character '" + c + "'");
    if (line.p > 0 && line.characters.size() != static_cast<std::size_t>(line.p))
      rd.fail(path, "has " + std::to_string(line.characters.size()) + " characters but p = " + std::to_string(line.p));
    if (const json* u = rd.field(l, "unramified", path)) {
      if (u->is_boolean())
        line.unramified_asserted = u->get<bool>();
      else
        rd.fail(path + ".unramified", "expected true or false");
    }
    if (const json* xi = rd.field(l, "xi", path, false)) {
      if (auto s = rd.string(*xi, path + ".xi")) line.xi = *s;
    }
    if (line.xi != "1") rd.fail(path + ".xi", "only xi = 1 is supported for computed multiplicities");
    if (ok) cf.brauer_lines.push_back(std::move(line));
  }
}

void read_targets(Reader& rd, const json& doc, CaseFile& cf, const std::set<std::string>& char_ids) {
  const json* v = rd.field(doc, "targets", "targets", false);
  if (!v) return;
  if (!v->is_array()) return rd.fail("targets", "expected a list");
  std::set<int> seen;
  for (std::size_t i = 0; i < v->size(); ++i) {
    std::string path = "targets[" + std::to_string(i) + "]";
    const json& t = (*v)[i];
    if (!t.is_object()) {
      rd.fail(path, "expected an object");
      continue;
    }
    rd.only_fields(t, {"order", "characters", "power_characters", "line", "p", "expected_candidates"}, path);
    TargetSpec spec;
    const json* oj = rd.field(t, "order", path);
    auto order = oj ? rd.integer(*oj, path + ".order") : std::nullopt;
    if (!order) continue;
    if (*order < 6 || *order > 1'000'000) {
      rd.fail(path + ".order", "unit order out of range");
      continue;
    }
    spec.order = static_cast<int>(*order);
    path = "target " + std::to_string(spec.order);
    if (!seen.insert(spec.order).second) rd.fail(path, "duplicate target");
    int p = 0;
    int q = 0;
    try {
      std::tie(p, q) = split_order(spec.order);
    } catch (const InputError& e) {
      rd.fail(path + ".order", e.what());
      continue;
    }
    if (const json* c = rd.field(t, "characters", path)) spec.characters = rd.strings(*c, path + ".characters");
    if (spec.characters.empty()) rd.fail(path + ".characters", "at least one constraint character is required");
    for (const auto& c : spec.characters)
      if (!char_ids.count(c)) rd.fail(path + ".characters", "undeclared character '" + c + "'");
    if (const json* pc = rd.field(t, "power_characters", path, false)) {
      if (!pc->is_object()) {
        rd.fail(path + ".power_characters", "expected an object keyed by prime");
      } else {
        for (auto it = pc->begin(); it != pc->end(); ++it) {
          int r = 0;
          try {
            r = std::stoi(it.key());
          } catch (...) {
          }
          if (r != p && r != q) {
            rd.fail(path + ".power_characters", "key '" + it.key() + "' is not a prime divisor of the order");
            continue;
          }
          auto ids = rd.strings(it.value(), path + ".power_characters." + it.key());
          for (const auto& c : ids)
            if (!char_ids.count(c)) rd.fail(path + ".power_characters." + it.key(), "undeclared character '" + c + "'");
          spec.power_characters[r] = ids;
        }
      }
    }
    if (const json* lj = rd.field(t, "line", path, false)) {
      if (auto s = rd.string(*lj, path + ".line")) spec.line = *s;
    }
    const BrauerLine* line = nullptr;
    if (!spec.line.empty()) {
      line = cf.line(spec.line);
      if (!line)
        rd.fail(path + ".line", "undeclared Brauer line '" + spec.line + "'");
      else if (spec.order % line->p != 0)
        rd.fail(path + ".line", "line prime " + std::to_string(line->p) + " does not divide the order");
    }
    if (const json* pj = rd.field(t, "p", path, false)) {
      if (auto pv = rd.integer(*pj, path + ".p")) {
        if (*pv != p && *pv != q)
          rd.fail(path + ".p", "must be a prime divisor of the order");
        else if (line && *pv != line->p)
          rd.fail(path + ".p", "must equal the line prime");
        else
          spec.p = static_cast<int>(*pv);
      }
    }
    if (const json* ec = rd.field(t, "expected_candidates", path, false)) {
      if (!ec->is_array()) {
        rd.fail(path + ".expected_candidates", "expected a list of tuples");
      } else {
        int eff_p = spec.p ? spec.p : (line && spec.order % line->p == 0 ? line->p : 0);
        for (std::size_t k = 0; k < ec->size(); ++k) {
          std::string cpath = path + ".expected_candidates[" + std::to_string(k) + "]";
          const json& tup = (*ec)[k];
          if (!tup.is_array()) {
            rd.fail(cpath, "expected a list of integers");
            continue;
          }
          std::vector<std::int64_t> values;
          bool good = true;
          for (std::size_t j = 0; j < tup.size(); ++j) {
            auto x = rd.integer(tup[j], cpath + "[" + std::to_string(j) + "]");
            if (!x) good = false;
            else values.push_back(*x);
          }
          if (!good) continue;
          try {
            candidate_from_tuple(cf, spec.order, eff_p, values);
          } catch (const InputError& e) {
            rd.fail(cpath, e.what());
            continue;
          }
          spec.expected_candidates.push_back(std::move(values));
        }
      }
    }
    cf.targets.push_back(std::move(spec));
  }
}

}  // namespace

CaseError::CaseError(std::vector<std::string> problems)
    : InputError(join_problems(problems)), problems_(std::move(problems)) {}

const CharacterData* CaseFile::character(const std::string& id) const {
  for (const auto& c : characters)
    if (c.id == id) return &c;
  return nullptr;
}

const BrauerLine* CaseFile::line(const std::string& id) const {
  for (const auto& l : brauer_lines)
    if (l.id == id) return &l;
  return nullptr;
}

const TargetSpec* CaseFile::target(int order) const {
  for (const auto& t : targets)
    if (t.order == order) return &t;
  return nullptr;
}

CaseFile parse_case(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    // drop the library's "[json.exception.parse_error.101] " prefix
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw CaseError({origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg});
  }
  if (!doc.is_object()) throw CaseError({origin + ": top level must be an object"});

  Reader rd;
  CaseFile cf;
  rd.only_fields(doc, {"format", "group", "provenance", "classes", "characters", "brauer_lines", "targets"}, "case");
  if (const json* f = rd.field(doc, "format", "case")) {
    if (auto s = rd.string(*f, "format"); s && *s != case_format)
      rd.fail("format", "unsupported format '" + *s + "', expected '" + case_format + "'");
  }
  if (const json* g = rd.field(doc, "group", "case")) {
    if (auto s = rd.string(*g, "group")) cf.group = *s;
  }
  if (const json* p = rd.field(doc, "provenance", "case", false)) {
    if (auto s = rd.string(*p, "provenance")) cf.provenance = *s;
  }
  read_classes(rd, doc, cf);
  read_characters(rd, doc, cf);
  std::set<std::string> char_ids;
  for (const auto& c : cf.characters) char_ids.insert(c.id);
  // ids of rejected characters still count as declared, so a bad value does
  // not cascade into "undeclared" complaints
  if (const json* v = doc.contains("characters") ? &doc["characters"] : nullptr; v && v->is_array())
    for (const auto& c : *v)
      if (c.is_object() && c.contains("id") && c["id"].is_string()) char_ids.insert(c["id"].get<std::string>());
  read_lines(rd, doc, cf, char_ids);
  read_targets(rd, doc, cf, char_ids);
  if (!rd.problems.empty()) {
    for (auto& p : rd.problems) p = origin + ": " + p;
    throw CaseError(std::move(rd.problems));
  }
  return cf;
}

CaseFile load_case(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CaseError({path + ": cannot open file"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_case(ss.str(), path);
}

}  // namespace pqcheck
