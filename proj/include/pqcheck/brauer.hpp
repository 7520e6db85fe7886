#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqcheck/partition.hpp"
#include "pqcheck/tableau.hpp"

namespace pqcheck {

/// A Brauer tree that is a line χ_1 - χ_2 - ... - χ_p.
struct BrauerLine {
  std::string id;
  int p = 0;
  std::vector<std::string> characters;
  bool unramified_asserted = false;  // input assertion, never computed
  std::string xi = "1";              // which root ξ the profile refers to
};

/// s_i = μ(ξ,u,χ_i) and r_i = μ(ξζ_p,u,χ_i) for i = 1..p (stored 0-based).
struct EigenvalueProfile {
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> r;
};

struct InequalityResult {
  bool holds = true;
  std::int64_t lhs = 0;  // r_{p-1} - r_p
  std::int64_t rhs = 0;  // s_1 - Σ_{i=1}^{p-2} (-1)^i r_i
};

/// Throws InputError if the line is not asserted unramified or the profile
/// does not have p entries of each kind.
InequalityResult theorem2_check(const EigenvalueProfile& profile, const BrauerLine& line);

/// (p^a, (p-1)^(r-a), 1^(s-a)). Throws std::invalid_argument unless 0 ≤ a ≤ min(r, s).
Partition lambda_for(int p, std::int64_t r, std::int64_t s, std::int64_t a);

enum class ChainStatus { feasible, infeasible, skipped_size };
const char* to_string(ChainStatus s);

struct ChainWitness {
  std::vector<std::size_t> choice;  // index into the option list of each λ_i; a_i for profiles
  std::vector<Partition> mu;        // μ_1 .. μ_{p-1}
};

struct ChainVerdict {
  ChainStatus status = ChainStatus::infeasible;
  std::optional<ChainWitness> witness;
  std::int64_t largest_partition = 0;
  std::string note;
};

/// Whether λ_1..λ_p can be picked from the given option lists with a chain
/// μ_1 = λ_1, μ_{p-1} = λ_p and c^{λ_i}_{μ_{i-1},μ_i} ≠ 0 for 2 ≤ i ≤ p-1.
/// Needs at least 3 option lists.
std::optional<ChainWitness> find_chain(const std::vector<std::vector<Partition>>& options, LrCache& cache);

/// The chain search over every λ_i(a_i) the profile allows. Declines with
/// skipped_size when some |λ_i| exceeds size_ceiling.
ChainVerdict chain_feasibility(const EigenvalueProfile& profile, const BrauerLine& line, int size_ceiling = 40,
                               LrCache* cache = nullptr);

struct CrossValidation {
  bool consistent = true;  // false means chain feasible but inequality violated
  bool evaluated = true;   // false when the chain search was skipped
  InequalityResult inequality;
  ChainVerdict chain;
};

CrossValidation cross_validate(const EigenvalueProfile& profile, const BrauerLine& line, int size_ceiling = 40,
                               LrCache* cache = nullptr);

struct CrossValidationSummary {
  int p = 0;
  int max_entry = 0;
  std::uint64_t profiles = 0;
  std::uint64_t searched = 0;  // profiles that reached the chain search
  std::uint64_t feasible = 0;
  std::uint64_t violated = 0;  // inequality fails
  std::uint64_t inconsistent = 0;
  std::vector<EigenvalueProfile> inconsistencies;  // first few
};

/// cross_validate on every profile with all s_i, r_i in [0, max_entry].
CrossValidationSummary cross_validate_exhaustive(int p, int max_entry, int size_ceiling = 40);

/// cross_validate on `samples` profiles drawn uniformly from the same range.
CrossValidationSummary cross_validate_sampled(int p, int max_entry, std::uint64_t samples, std::uint64_t seed,
                                              int size_ceiling = 40);

}  // namespace pqcheck
