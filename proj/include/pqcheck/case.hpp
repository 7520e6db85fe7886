#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pqcheck/brauer.hpp"
#include "pqcheck/character.hpp"
#include "pqcheck/help.hpp"
#include "pqcheck/multiplicities.hpp"

namespace pqcheck {

/// Every problem found while loading a case, not just the first.
class CaseError : public InputError {
 public:
  explicit CaseError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct TargetSpec {
  int order = 0;
  std::vector<std::string> characters;
  // prime r -> characters constraining the power of order r; falls back to `characters`
  std::map<int, std::vector<std::string>> power_characters;
  std::string line;  // empty: HeLP only
  int p = 0;         // 0: the line prime, else the smaller prime
  std::vector<std::vector<std::int64_t>> expected_candidates;
};

struct CaseFile {
  std::string group;
  std::string provenance;
  std::vector<ClassInfo> classes;
  std::vector<CharacterData> characters;
  std::vector<BrauerLine> brauer_lines;
  std::vector<TargetSpec> targets;

  const CharacterData* character(const std::string& id) const;
  const BrauerLine* line(const std::string& id) const;
  const TargetSpec* target(int order) const;
};

inline constexpr const char* case_format = "pqcheck-case/1";
inline constexpr const char* report_format = "pqcheck-report/1";

/// Parses and validates a case document (JSON, comments allowed). Throws
/// CaseError listing every problem; parse errors carry line and column.
CaseFile parse_case(const std::string& text, const std::string& origin = "<input>");
CaseFile load_case(const std::string& path);

struct RunOptions {
  std::int64_t bound = 128;
  int chain_ceiling = 40;
};

struct CharacterRow {
  std::string character;
  bool feasible = true;
  MultiplicityQuadruple m;
  std::string failure;  // why the multiplicities are infeasible
};

struct CandidateReport {
  std::vector<std::int64_t> tuple;
  std::vector<CharacterRow> rows;  // one per line character
  std::optional<InequalityResult> inequality;
  std::optional<ChainStatus> chain_status;  // empty when the chain search did not run
  std::optional<ChainWitness> witness;
  std::string chain_note;
  std::string excluded_by;  // "help", "inequality", "chain" or empty
  bool excluded() const { return !excluded_by.empty(); }
};

struct PowerSummary {
  std::string power;  // e.g. "u^7"
  int order = 0;
  std::vector<std::string> characters;
  std::size_t count = 0;
  bool bound_saturated = false;
};

struct TargetReport {
  int order = 0;
  int p = 0;
  int q = 0;
  std::vector<std::string> characters;
  std::vector<PowerSummary> powers;
  std::int64_t bound = 0;
  bool bound_saturated = false;
  std::string layout;
  std::string line;
  std::vector<std::string> line_characters;
  bool unramified_asserted = false;
  std::vector<CandidateReport> candidates;
  std::optional<bool> expected_match;
  bool excluded = false;
  std::string conclusion;
};

struct CaseReport {
  std::string group;
  std::string provenance;
  std::vector<TargetReport> targets;
};

/// Readable description of the tuple order, e.g.
/// "(eps_5a(u^7), eps_5b(u^7), eps_5a(u), eps_5b(u), eps_7a(u))".
std::string tuple_layout(const CaseFile& cf, int order, int p);

/// Rebuilds a candidate from its tuple. Throws InputError on a length
/// mismatch or when a component does not sum to 1.
UnitCandidate candidate_from_tuple(const CaseFile& cf, int order, int p, const std::vector<std::int64_t>& tuple);

/// Multiplicities, inequality and chain verdict of one candidate against a line.
CandidateReport evaluate_candidate(const CaseFile& cf, const UnitCandidate& u, const BrauerLine* line,
                                   const RunOptions& opts, LrCache* cache = nullptr);

TargetReport run_target(const CaseFile& cf, int order, const RunOptions& opts = {});
CaseReport run_case(const CaseFile& cf, const RunOptions& opts = {}, std::optional<int> only_order = std::nullopt);

std::string emit_text(const CaseReport& report);
std::string emit_structured(const CaseReport& report);
/// Inverse of emit_structured.
CaseReport parse_report(const std::string& text);

}  // namespace pqcheck
