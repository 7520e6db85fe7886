#include "pqcheck/multiplicities.hpp"

#include "pqcheck/checked.hpp"

namespace pqcheck {

const char* to_string(Infeasibility why) {
  switch (why) {
    case Infeasibility::non_integral:
      return "non-integral";
    case Infeasibility::negative:
      return "negative";
  }
  return "?";
}

namespace {

void require_prime(int r, const char* name) {
  if (!is_prime(r)) throw std::invalid_argument(std::string(name) + " = " + std::to_string(r) + " is not prime");
}

// Non-integral is reported before negative: the congruence is the cheaper
// and more frequent rejection.
template <std::size_t N>
std::variant<std::array<std::int64_t, N>, std::pair<Infeasibility, std::string>> divide_all(
    const std::array<std::int64_t, N>& numerators, std::int64_t divisor, const char* const (&names)[N]) {
  std::array<std::int64_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (numerators[i] % divisor != 0)
      return std::make_pair(Infeasibility::non_integral,
                            std::string(names[i]) + " = " + std::to_string(numerators[i]) + "/" +
                                std::to_string(divisor));
    out[i] = numerators[i] / divisor;
  }
  for (std::size_t i = 0; i < N; ++i)
    if (out[i] < 0)
      return std::make_pair(Infeasibility::negative, std::string(names[i]) + " = " + std::to_string(out[i]));
  return out;
}

}  // namespace

std::array<std::int64_t, 4> pq_numerators(std::int64_t d, std::int64_t x, std::int64_t y, std::int64_t z,
                                          int p, int q) {
  const std::int64_t p1 = p - 1;
  const std::int64_t q1 = q - 1;
  return {
      checked_add(checked_add(d, checked_mul(q1, x)), checked_add(checked_mul(p1, y), checked_mul(p1 * q1, z))),
      checked_sub(checked_sub(checked_add(d, checked_mul(q1, x)), y), checked_mul(q1, z)),
      checked_sub(checked_add(checked_sub(d, x), checked_mul(p1, y)), checked_mul(p1, z)),
      checked_add(checked_sub(checked_sub(d, x), y), z),
  };
}

HelpOutcome<MultiplicityQuadruple> multiplicities_order_pq(std::int64_t d, std::int64_t x, std::int64_t y,
                                                           std::int64_t z, int p, int q) {
  require_prime(p, "p");
  require_prime(q, "q");
  if (p == q) throw std::invalid_argument("p and q must be distinct primes");
  if (d < 1) throw std::invalid_argument("character degree must be positive");
  static const char* const names[4] = {"mu(1)", "mu(zeta_p)", "mu(zeta_q)", "mu(zeta_pq)"};
  auto result = divide_all(pq_numerators(d, x, y, z, p, q), static_cast<std::int64_t>(p) * q, names);
  if (auto* bad = std::get_if<std::pair<Infeasibility, std::string>>(&result))
    return HelpOutcome<MultiplicityQuadruple>::infeasible(bad->first, bad->second);
  const auto& m = std::get<0>(result);
  return HelpOutcome<MultiplicityQuadruple>::ok({m[0], m[1], m[2], m[3]});
}

HelpOutcome<PrimeOrderMultiplicities> multiplicities_prime_order(std::int64_t d, std::int64_t z, int r) {
  require_prime(r, "r");
  if (d < 1) throw std::invalid_argument("character degree must be positive");
  static const char* const names[2] = {"mu(1)", "mu(zeta_r)"};
  std::array<std::int64_t, 2> numerators{checked_add(d, checked_mul(r - 1, z)), checked_sub(d, z)};
  auto result = divide_all(numerators, r, names);
  if (auto* bad = std::get_if<std::pair<Infeasibility, std::string>>(&result))
    return HelpOutcome<PrimeOrderMultiplicities>::infeasible(bad->first, bad->second);
  const auto& m = std::get<0>(result);
  return HelpOutcome<PrimeOrderMultiplicities>::ok({m[0], m[1]});
}

PqCharacterValues forward_character_values(const MultiplicityQuadruple& m, int p, int q) {
  const std::int64_t p1 = p - 1;
  const std::int64_t q1 = q - 1;
  PqCharacterValues v;
  v.degree = checked_add(checked_add(m.one, checked_mul(p1, m.zeta_p)),
                         checked_add(checked_mul(q1, m.zeta_q), checked_mul(p1 * q1, m.zeta_pq)));
  v.at_uq = checked_sub(checked_add(checked_sub(m.one, m.zeta_p), checked_mul(q1, m.zeta_q)),
                        checked_mul(q1, m.zeta_pq));
  v.at_up = checked_sub(checked_sub(checked_add(m.one, checked_mul(p1, m.zeta_p)), m.zeta_q),
                        checked_mul(p1, m.zeta_pq));
  v.at_u = checked_add(checked_sub(checked_sub(m.one, m.zeta_p), m.zeta_q), m.zeta_pq);
  return v;
}

}  // namespace pqcheck
