#include "pqcheck/brauer.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "pqcheck/character.hpp"
#include "pqcheck/checked.hpp"

namespace pqcheck {

namespace {

void require_profile(const EigenvalueProfile& profile, const BrauerLine& line) {
  if (line.p < 3 || !is_prime(line.p)) throw InputError("Brauer line " + line.id + " needs an odd prime p");
  const auto p = static_cast<std::size_t>(line.p);
  if (profile.s.size() != p || profile.r.size() != p)
    throw InputError("profile for line " + line.id + " needs " + std::to_string(p) + " entries, got " +
                     std::to_string(profile.s.size()) + " and " + std::to_string(profile.r.size()));
  for (std::size_t i = 0; i < p; ++i)
    if (profile.s[i] < 0 || profile.r[i] < 0) throw InputError("negative multiplicity in profile for " + line.id);
}

class ChainSearch {
 public:
  ChainSearch(const std::vector<std::vector<Partition>>& options, LrCache& cache)
      : options_(options), cache_(cache), n_(options.size()) {}

  std::optional<ChainWitness> run() {
    for (std::size_t a1 = 0; a1 < options_[0].size(); ++a1) {
      path_.assign(1, a1);
      mu_.assign(1, options_[0][a1]);
      if (extend(2)) return ChainWitness{path_, mu_};
    }
    return std::nullopt;
  }

 private:
  // i is the 1-based index of the λ being placed; μ_{i-1} = mu_.back().
  bool extend(std::size_t i) {
    const Partition prev = mu_.back();
    if (i == n_ - 1) {
      for (std::size_t ai = 0; ai < options_[i - 1].size(); ++ai) {
        for (std::size_t ap = 0; ap < options_[n_ - 1].size(); ++ap) {
          const auto& lam = options_[i - 1][ai];
          if (!lam.contains(prev) || !cache_.nonzero(lam, prev, options_[n_ - 1][ap])) continue;
          path_.push_back(ai);
          path_.push_back(ap);
          mu_.push_back(options_[n_ - 1][ap]);
          return true;
        }
      }
      return false;
    }
    auto key = std::make_pair(i, prev);
    if (dead_.count(key)) return false;
    for (std::size_t ai = 0; ai < options_[i - 1].size(); ++ai) {
      const auto& lam = options_[i - 1][ai];
      if (!lam.contains(prev)) continue;
      for (const auto& next : cache_.contents(lam, prev)) {
        path_.push_back(ai);
        mu_.push_back(next);
        if (extend(i + 1)) return true;
        path_.pop_back();
        mu_.pop_back();
      }
    }
    dead_.insert(std::move(key));
    return false;
  }

  const std::vector<std::vector<Partition>>& options_;
  LrCache& cache_;
  std::size_t n_;
  std::vector<std::size_t> path_;
  std::vector<Partition> mu_;
  std::set<std::pair<std::size_t, Partition>> dead_;
};

}  // namespace

const char* to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::feasible:
      return "feasible";
    case ChainStatus::infeasible:
      return "infeasible";
    case ChainStatus::skipped_size:
      return "skipped (size)";
  }
  return "?";
}

InequalityResult theorem2_check(const EigenvalueProfile& profile, const BrauerLine& line) {
  if (!line.unramified_asserted) throw InputError("Brauer line " + line.id + " is not asserted unramified");
  require_profile(profile, line);
  const auto p = static_cast<std::size_t>(line.p);
  InequalityResult out;
  out.lhs = checked_sub(profile.r[p - 2], profile.r[p - 1]);
  std::int64_t rhs = profile.s[0];
  for (std::size_t i = 1; i <= p - 2; ++i) {
    // subtract (-1)^i r_i
    rhs = (i % 2 == 1) ? checked_add(rhs, profile.r[i - 1]) : checked_sub(rhs, profile.r[i - 1]);
  }
  out.rhs = rhs;
  out.holds = out.lhs <= out.rhs;
  return out;
}

Partition lambda_for(int p, std::int64_t r, std::int64_t s, std::int64_t a) {
  if (p < 2) throw std::invalid_argument("lambda_for needs p >= 2");
  if (a < 0 || a > std::min(r, s)) throw std::invalid_argument("a out of range for lambda_for");
  std::vector<int> parts;
  parts.insert(parts.end(), static_cast<std::size_t>(a), p);
  parts.insert(parts.end(), static_cast<std::size_t>(r - a), p - 1);
  parts.insert(parts.end(), static_cast<std::size_t>(s - a), 1);
  return Partition(parts);
}

std::optional<ChainWitness> find_chain(const std::vector<std::vector<Partition>>& options, LrCache& cache) {
  if (options.size() < 3) throw std::invalid_argument("a chain needs at least three partitions");
  return ChainSearch(options, cache).run();
}

ChainVerdict chain_feasibility(const EigenvalueProfile& profile, const BrauerLine& line, int size_ceiling,
                               LrCache* cache) {
  require_profile(profile, line);
  const auto p = static_cast<std::size_t>(line.p);
  ChainVerdict out;
  std::vector<std::int64_t> dims(p);
  for (std::size_t i = 0; i < p; ++i) {
    dims[i] = checked_add(checked_mul(line.p - 1, profile.r[i]), profile.s[i]);
    out.largest_partition = std::max(out.largest_partition, dims[i]);
  }
  if (out.largest_partition > size_ceiling) {
    out.status = ChainStatus::skipped_size;
    out.note = "largest partition has " + std::to_string(out.largest_partition) + " boxes, ceiling " +
               std::to_string(size_ceiling);
    return out;
  }
  // |μ_1| = d_1 and |μ_i| = d_i - |μ_{i-1}|; the last must equal d_p
  std::int64_t m = dims[0];
  for (std::size_t i = 1; i + 1 < p; ++i) {
    m = dims[i] - m;
    if (m < 0) break;
  }
  if (m != dims[p - 1]) {
    out.status = ChainStatus::infeasible;
    out.note = "dimensions do not telescope";
    return out;
  }
  std::vector<std::vector<Partition>> options(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::int64_t a = 0; a <= std::min(profile.r[i], profile.s[i]); ++a)
      options[i].push_back(lambda_for(line.p, profile.r[i], profile.s[i], a));
  LrCache local;
  auto witness = find_chain(options, cache ? *cache : local);
  out.status = witness ? ChainStatus::feasible : ChainStatus::infeasible;
  out.witness = std::move(witness);
  return out;
}

CrossValidation cross_validate(const EigenvalueProfile& profile, const BrauerLine& line, int size_ceiling,
                               LrCache* cache) {
  CrossValidation out;
  out.inequality = theorem2_check(profile, line);
  out.chain = chain_feasibility(profile, line, size_ceiling, cache);
  out.evaluated = out.chain.status != ChainStatus::skipped_size;
  out.consistent = !(out.chain.status == ChainStatus::feasible && !out.inequality.holds);
  return out;
}

namespace {

void tally(CrossValidationSummary& sum, const EigenvalueProfile& profile, const BrauerLine& line, int ceiling,
           LrCache& cache) {
  auto cv = cross_validate(profile, line, ceiling, &cache);
  ++sum.profiles;
  if (cv.evaluated && cv.chain.note.empty()) ++sum.searched;
  if (cv.chain.status == ChainStatus::feasible) ++sum.feasible;
  if (!cv.inequality.holds) ++sum.violated;
  if (!cv.consistent) {
    ++sum.inconsistent;
    if (sum.inconsistencies.size() < 10) sum.inconsistencies.push_back(profile);
  }
}

BrauerLine scratch_line(int p) {
  BrauerLine line;
  line.id = "scratch";
  line.p = p;
  line.unramified_asserted = true;
  return line;
}

}  // namespace

CrossValidationSummary cross_validate_exhaustive(int p, int max_entry, int size_ceiling) {
  if (max_entry < 0) throw std::invalid_argument("max_entry must be non-negative");
  auto line = scratch_line(p);
  CrossValidationSummary sum;
  sum.p = p;
  sum.max_entry = max_entry;
  LrCache cache;
  const auto n = static_cast<std::size_t>(p);
  EigenvalueProfile profile{std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0)};
  // odometer over (s_1, r_1, ..., s_p, r_p)
  while (true) {
    tally(sum, profile, line, size_ceiling, cache);
    std::size_t k = 0;
    for (; k < 2 * n; ++k) {
      auto& x = (k % 2 == 0) ? profile.s[k / 2] : profile.r[k / 2];
      if (++x <= max_entry) break;
      x = 0;
    }
    if (k == 2 * n) break;
  }
  return sum;
}

CrossValidationSummary cross_validate_sampled(int p, int max_entry, std::uint64_t samples, std::uint64_t seed,
                                              int size_ceiling) {
  if (max_entry < 0) throw std::invalid_argument("max_entry must be non-negative");
  auto line = scratch_line(p);
  CrossValidationSummary sum;
  sum.p = p;
  sum.max_entry = max_entry;
  LrCache cache;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, max_entry);
  const auto n = static_cast<std::size_t>(p);
  for (std::uint64_t i = 0; i < samples; ++i) {
    EigenvalueProfile profile;
    for (std::size_t j = 0; j < n; ++j) {
      profile.s.push_back(pick(rng));
      profile.r.push_back(pick(rng));
    }
    tally(sum, profile, line, size_ceiling, cache);
  }
  return sum;
}

}  // namespace pqcheck
