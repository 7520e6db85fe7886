#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqcheck/character.hpp"
#include "pqcheck/multiplicities.hpp"

namespace pqcheck {

/// No constraint character limits the search, so the box bound alone would
/// decide the answer.
class UnboundedSearch : public std::runtime_error {
 public:
  explicit UnboundedSearch(const std::string& what) : std::runtime_error(what) {}
};

struct HelpQuery {
  int unit_order = 0;
  std::vector<CharacterData> constraint_characters;
  std::vector<ClassInfo> classes;
  std::int64_t search_bound = 128;
  // For order pq: which prime plays p. 0 picks the smaller one.
  int p = 0;
  // Hard cap on the number of candidates returned.
  std::size_t max_candidates = 1'000'000;
};

struct PrimeCandidateSet {
  int r = 0;
  std::vector<PartialAugmentation> candidates;
  bool bound_saturated = false;  // the propagated box reached ±B
  std::uint64_t vectors_checked = 0;
};

/// A unit u of order pq together with its p-th and q-th powers.
struct UnitCandidate {
  int p = 0;
  int q = 0;
  PartialAugmentation pa_up;  // u^p, order q
  PartialAugmentation pa_uq;  // u^q, order p
  PartialAugmentation pa_u;

  /// Powers first, in increasing order of their order, then u. A power whose
  /// order has a single class is left out since its ε is forced to 1.
  std::vector<std::int64_t> tuple() const;
  std::string tuple_string() const;
  friend bool operator==(const UnitCandidate&, const UnitCandidate&) = default;
};

struct PqCandidateSet {
  int p = 0;
  int q = 0;
  std::vector<UnitCandidate> candidates;
  bool bound_saturated = false;
  std::uint64_t vectors_checked = 0;
};

/// Classes of the universe whose order divides n and exceeds 1, in canonical order.
std::vector<ClassInfo> support_classes(const std::vector<ClassInfo>& classes, int n);

/// Every ε on the order-r classes with Σε = 1 and |ε| ≤ B for which every
/// constraint character gives non-negative integral multiplicities.
PrimeCandidateSet enumerate_prime_order(const HelpQuery& query);

/// Every (u^p, u^q, u) with the powers drawn from the supplied sets and ε(u)
/// on classes of order p, q or pq, subject to the same multiplicity test.
/// power_q holds candidates of order q (for u^p), power_p those of order p.
PqCandidateSet enumerate_order_pq(const HelpQuery& query, const PrimeCandidateSet& power_q,
                                  const PrimeCandidateSet& power_p);

/// The two primes of a unit order, p first. Throws InputError unless the
/// order is a product of two distinct primes or preferred_p is not one of them.
std::pair<int, int> split_order(int order, int preferred_p = 0);

}  // namespace pqcheck
