#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pqcheck {

/// An integer partition, stored as its positive parts in weakly decreasing
/// order. Trailing zeros are dropped on construction, so (2,1) and (2,1,0)
/// are the same value; indexing past the last part yields 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "3,2,1". The empty string, "0" and "()" all denote the empty partition.
  static Partition parse(std::string_view text);

  /// All partitions of n, largest first in lexicographic order.
  static std::vector<Partition> all_of(int n);
  /// All partitions of n with at most max_part in every part.
  static std::vector<Partition> all_of(int n, int max_part);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// true iff other[i] <= (*this)[i] for every row.
  bool contains(const Partition& other) const;
  Partition conjugate() const;

  /// "(3,2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// The skew diagram outer/inner. Row i holds the columns [inner[i], outer[i]).
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  int row_start(int row) const { return inner_[static_cast<std::size_t>(row)]; }
  int row_end(int row) const { return outer_[static_cast<std::size_t>(row)]; }
  int row_length(int row) const { return row_end(row) - row_start(row); }
  int columns() const { return outer_[0]; }
  int box_count() const { return outer_.size() - inner_.size(); }
  bool has_box(int row, int col) const;

  std::string to_string() const;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// A filling of a skew shape with positive integer letters, stored row by
/// row from left to right.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// Throws std::invalid_argument if a row has the wrong number of entries
  /// or holds a non-positive letter.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Letter in the box at absolute column col of row; the box must exist.
  int at(int row, int col) const;

  std::string to_string() const;
  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace pqcheck
