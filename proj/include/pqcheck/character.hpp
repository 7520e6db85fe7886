#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqcheck {

struct ClassInfo {
  std::string id;
  int element_order = 1;
};

/// Classes sorted by element order, then label. This is the column order
/// used for partial augmentation tuples.
std::vector<ClassInfo> canonical_class_order(std::vector<ClassInfo> classes);

enum class CharacterKind { ordinary, brauer };

/// An integral-valued ordinary character, or an ℓ-modular Brauer character
/// given on ℓ-regular classes only.
struct CharacterData {
  std::string id;
  std::int64_t degree = 0;
  std::map<std::string, std::int64_t> values;
  CharacterKind kind = CharacterKind::ordinary;
  int characteristic = 0;  // ℓ for Brauer characters, 0 otherwise
  std::string source;

  std::optional<std::int64_t> value(const std::string& class_id) const;
};

/// Raised for malformed or inconsistent input data, as opposed to a HeLP
/// constraint that merely rules a candidate out.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Partial augmentations ε_x(u) of a unit of the given order, one entry per
/// class listed in `classes`.
struct PartialAugmentation {
  int unit_order = 1;
  std::vector<std::string> classes;
  std::vector<std::int64_t> eps;

  std::int64_t sum() const;
  std::optional<std::int64_t> at(const std::string& class_id) const;
  friend bool operator==(const PartialAugmentation&, const PartialAugmentation&) = default;
};

/// Problems with a partial augmentation relative to a class universe:
/// Σε must be 1 and ε may only be non-zero on classes of order > 1 dividing
/// the unit order. Empty when the vector is admissible.
std::vector<std::string> validate_partial_augmentation(const PartialAugmentation& pa,
                                                       const std::vector<ClassInfo>& classes);

/// χ(u) = Σ_x ε_x(u) χ(x). Throws InputError when a needed class value is
/// missing or when a Brauer characteristic divides the unit order.
std::int64_t chi_of_unit(const CharacterData& chi, const PartialAugmentation& pa);

}  // namespace pqcheck
