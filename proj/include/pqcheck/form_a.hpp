#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqcheck/partition.hpp"

namespace pqcheck {

/// Body/tail/head split of a skew diagram with p columns whose columns
/// 2..p-1 all end in row m. Rows and columns are counted from 1.
struct FormADecomposition {
  int p = 0;
  int m = 0;
  int body_boxes = 0;
  int tail_height = 0;
  int head_height = 0;
  /// Entry k-1 is the number of body boxes in column k, for k = 1..p-1.
  std::vector<int> body_column_heights;
};

/// Returns the decomposition, or nullopt when the shape is not of form A
/// with respect to p columns. Throws std::invalid_argument for p < 2.
///
/// When no column among 2..p-1 holds a box, m is the largest row index
/// compatible with the right-neighbour characterisation: for p = 2 the
/// whole first column is body, for p >= 3 the first column is all tail.
std::optional<FormADecomposition> classify_form_a(const SkewShape& shape, int p);

/// Number of letters occurring at least i times in the reading word.
int gamma(const SkewTableau& t, int i);
int gamma(std::span<const int> counts, int i);

struct BoundsViolation {
  std::string statement;  // "lemma-appears-at-least", "lemma-at-most-h", "prop-lower", "prop-upper"
  SkewTableau tableau;
  std::string detail;
};

struct FormABoundsReport {
  int p = 0;
  int max_boxes = 0;
  std::size_t shapes_enumerated = 0;
  std::size_t form_a_shapes = 0;
  std::size_t tableaux_checked = 0;
  std::size_t assertions_checked = 0;
  std::vector<BoundsViolation> counterexamples;  // at most the first 20 are kept
  std::size_t counterexample_count = 0;
};

/// Exhaustively checks, on every form A skew shape with at most max_boxes
/// boxes and at most p columns and on every semistandard lattice filling:
///  - a body box in column k with entry e has e at least p-k times in w(b);
///  - for k <= p-2, e <= h where the right neighbour is the h-th box of column k+1;
///  - gamma_{p-k} >= h_k and, for k >= 2, gamma_{p-k+2} <= h_k, with h_k the
///    body height of column k.
/// Throws EnumerationLimit once more than tableau_ceiling fillings are visited.
FormABoundsReport verify_form_a_bounds(int p, int max_boxes, std::size_t tableau_ceiling = 200'000'000);

/// Every skew shape with between 1 and max_boxes boxes, at most max_columns
/// columns, non-empty first and last rows and no two consecutive empty rows.
std::vector<SkewShape> enumerate_skew_shapes(int max_boxes, int max_columns);

}  // namespace pqcheck
