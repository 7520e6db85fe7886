#include "pqcheck/character.hpp"

#include <algorithm>
#include <numeric>

#include "pqcheck/checked.hpp"

namespace pqcheck {

std::vector<ClassInfo> canonical_class_order(std::vector<ClassInfo> classes) {
  std::stable_sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    return a.id < b.id;
  });
  return classes;
}

std::optional<std::int64_t> CharacterData::value(const std::string& class_id) const {
  auto it = values.find(class_id);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

std::int64_t PartialAugmentation::sum() const {
  std::int64_t s = 0;
  for (auto e : eps) s = checked_add(s, e);
  return s;
}

std::optional<std::int64_t> PartialAugmentation::at(const std::string& class_id) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == class_id) return eps[i];
  return std::nullopt;
}

std::vector<std::string> validate_partial_augmentation(const PartialAugmentation& pa,
                                                       const std::vector<ClassInfo>& classes) {
  std::vector<std::string> problems;
  if (pa.classes.size() != pa.eps.size()) {
    problems.push_back("partial augmentation has " + std::to_string(pa.classes.size()) + " classes but " +
                       std::to_string(pa.eps.size()) + " values");
    return problems;
  }
  if (pa.unit_order < 1) problems.push_back("unit order must be positive");
  for (std::size_t i = 0; i < pa.classes.size(); ++i) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const ClassInfo& c) { return c.id == pa.classes[i]; });
    if (it == classes.end()) {
      problems.push_back("unknown class '" + pa.classes[i] + "'");
      continue;
    }
    if (pa.eps[i] == 0) continue;
    if (it->element_order == 1)
      problems.push_back("non-zero partial augmentation at the identity class " + it->id);
    else if (pa.unit_order % it->element_order != 0)
      problems.push_back("non-zero partial augmentation at " + it->id + " of order " +
                         std::to_string(it->element_order) + ", which does not divide " +
                         std::to_string(pa.unit_order));
  }
  if (pa.sum() != 1)
    problems.push_back("partial augmentations sum to " + std::to_string(pa.sum()) + ", expected 1");
  return problems;
}

std::int64_t chi_of_unit(const CharacterData& chi, const PartialAugmentation& pa) {
  if (chi.kind == CharacterKind::brauer && chi.characteristic > 0 &&
      pa.unit_order % chi.characteristic == 0)
    throw InputError("Brauer character " + chi.id + " in characteristic " +
                     std::to_string(chi.characteristic) + " cannot evaluate a unit of order " +
                     std::to_string(pa.unit_order));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < pa.classes.size(); ++i) {
    if (pa.eps[i] == 0) continue;
    auto v = chi.value(pa.classes[i]);
    if (!v) throw InputError("character " + chi.id + " has no value on class " + pa.classes[i]);
    total = checked_add(total, checked_mul(pa.eps[i], *v));
  }
  return total;
}

}  // namespace pqcheck
