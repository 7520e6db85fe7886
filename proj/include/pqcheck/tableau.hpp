#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pqcheck/partition.hpp"

namespace pqcheck {

/// Thrown when an enumeration would produce more results than its ceiling.
class EnumerationLimit : public std::length_error {
 public:
  explicit EnumerationLimit(const std::string& what) : std::length_error(what) {}
};

/// Rows weakly increase left to right, columns strictly increase downwards.
bool is_semistandard(const SkewTableau& t);

/// Rows top to bottom, each row read right to left.
std::vector<int> reading_word(const SkewTableau& t);

/// Every prefix has at least as many i as i+1, for all letters i.
bool is_lattice_word(std::span<const int> word);
bool satisfies_lattice_property(const SkewTableau& t);

/// Letter multiplicities of a lattice tableau. Throws std::invalid_argument
/// if the tableau fails the lattice property.
Partition content(const SkewTableau& t);

/// Boxes of a shape in reading order, with the neighbours that the
/// semistandard conditions refer to. Neighbour indices point to earlier
/// boxes in the same order, or -1.
struct ReadingOrder {
  struct Box {
    int row;
    int col;
    int right;  // box immediately to the right
    int above;  // box immediately above
  };
  std::vector<Box> boxes;

  explicit ReadingOrder(const SkewShape& shape);
  SkewTableau to_tableau(const SkewShape& shape, std::span<const int> letters) const;
};

/// Depth-first enumeration of every semistandard filling with the lattice
/// property. With a content, only fillings of exactly that content are
/// visited. The visitor receives letters in reading order together with the
/// letter counts (index 0 unused) and returns false to stop early.
/// Returns the number of fillings visited.
using FillingVisitor = std::function<bool(std::span<const int> letters, std::span<const int> counts)>;
std::size_t for_each_lattice_filling(const SkewShape& shape, const Partition* content,
                                     const FillingVisitor& visit);

/// All semistandard lattice fillings of shape with the given content, sorted
/// row-major lexicographically. Throws std::invalid_argument if the box
/// count differs from |content|, EnumerationLimit past max_results.
std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& content,
                                               std::size_t max_results = 1'000'000);

/// c^outer_{inner,content}. Zero whenever inner is not contained in outer
/// or the sizes do not add up.
std::int64_t lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content);

/// Every content with a non-zero coefficient, in decreasing lexicographic order.
std::vector<Partition> lr_nonzero_contents(const Partition& outer, const Partition& inner);

/// Memo table for lr_nonzero_contents. Not thread-safe; give each worker its own.
class LrCache {
 public:
  const std::vector<Partition>& contents(const Partition& outer, const Partition& inner);
  bool nonzero(const Partition& outer, const Partition& inner, const Partition& content);
  std::size_t size() const { return contents_.size(); }

 private:
  std::map<std::pair<Partition, Partition>, std::vector<Partition>> contents_;
};

}  // namespace pqcheck
