#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace pqcheck {

/// Why a would-be multiplicity is not a non-negative integer. Either one
/// rules the candidate out under HeLP.
enum class Infeasibility { non_integral, negative };

const char* to_string(Infeasibility why);

/// A multiplicity computation either yields a value or an infeasibility
/// verdict. Input errors are exceptions; infeasibility is not.
template <class T>
class HelpOutcome {
 public:
  static HelpOutcome ok(T value) { return HelpOutcome(std::move(value)); }
  static HelpOutcome infeasible(Infeasibility why, std::string detail) {
    return HelpOutcome(Rejection{why, std::move(detail)});
  }

  bool feasible() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return feasible(); }

  const T& value() const {
    if (!feasible()) throw std::logic_error("infeasible multiplicity outcome has no value");
    return std::get<T>(state_);
  }
  Infeasibility reason() const { return std::get<Rejection>(state_).why; }
  const std::string& detail() const { return std::get<Rejection>(state_).detail; }

 private:
  struct Rejection {
    Infeasibility why;
    std::string detail;
  };
  explicit HelpOutcome(T value) : state_(std::move(value)) {}
  explicit HelpOutcome(Rejection r) : state_(std::move(r)) {}
  std::variant<T, Rejection> state_;
};

/// μ(1,u,χ), μ(ζ_p,u,χ), μ(ζ_q,u,χ), μ(ζ_pq,u,χ) for a unit of order pq.
struct MultiplicityQuadruple {
  std::int64_t one = 0;
  std::int64_t zeta_p = 0;
  std::int64_t zeta_q = 0;
  std::int64_t zeta_pq = 0;
  friend bool operator==(const MultiplicityQuadruple&, const MultiplicityQuadruple&) = default;
};

/// μ(1,u,χ) and μ(ζ_r,u,χ) for a unit of prime order r.
struct PrimeOrderMultiplicities {
  std::int64_t one = 0;
  std::int64_t zeta_r = 0;
  friend bool operator==(const PrimeOrderMultiplicities&, const PrimeOrderMultiplicities&) = default;
};

/// χ(1), χ(u^q), χ(u^p), χ(u) for a unit of order pq.
struct PqCharacterValues {
  std::int64_t degree = 0;
  std::int64_t at_uq = 0;
  std::int64_t at_up = 0;
  std::int64_t at_u = 0;
  friend bool operator==(const PqCharacterValues&, const PqCharacterValues&) = default;
};

/// The four numerators pq·μ(·) as affine expressions in the arguments, in
/// the order (1, ζ_p, ζ_q, ζ_pq). With d = χ(1), x = χ(u^p), y = χ(u^q),
/// z = χ(u):
///   d + (q-1)x + (p-1)y + (p-1)(q-1)z,  d + (q-1)x - y - (q-1)z,
///   d - x + (p-1)y - (p-1)z,            d - x - y + z.
std::array<std::int64_t, 4> pq_numerators(std::int64_t d, std::int64_t x, std::int64_t y, std::int64_t z,
                                          int p, int q);

/// Eigenvalue multiplicities of a unit of order pq under an integral
/// character. Throws std::invalid_argument unless p != q are primes and d >= 1;
/// ArithmeticOverflow if an intermediate leaves int64.
HelpOutcome<MultiplicityQuadruple> multiplicities_order_pq(std::int64_t d, std::int64_t x, std::int64_t y,
                                                           std::int64_t z, int p, int q);

/// μ(1) = (d + (r-1)z)/r and μ(ζ_r) = (d - z)/r for a unit of prime order r.
HelpOutcome<PrimeOrderMultiplicities> multiplicities_prime_order(std::int64_t d, std::int64_t z, int r);

/// Character values determined by a multiplicity quadruple; the inverse of
/// multiplicities_order_pq.
PqCharacterValues forward_character_values(const MultiplicityQuadruple& m, int p, int q);

}  // namespace pqcheck
