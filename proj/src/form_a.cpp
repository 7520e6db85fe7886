#include "pqcheck/form_a.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pqcheck/tableau.hpp"

namespace pqcheck {

namespace {

struct ColumnSpan {
  int top = 0;     // 1-based, 0 when empty
  int bottom = 0;  // 1-based, 0 when empty
  bool empty() const { return top == 0; }
  int height() const { return empty() ? 0 : bottom - top + 1; }
};

std::vector<ColumnSpan> column_spans(const SkewShape& shape, int columns) {
  std::vector<ColumnSpan> spans(static_cast<std::size_t>(columns));
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = shape.row_start(r); c < shape.row_end(r) && c < columns; ++c) {
      auto& s = spans[static_cast<std::size_t>(c)];
      if (s.empty()) s.top = r + 1;
      s.bottom = r + 1;
    }
  }
  return spans;
}

}  // namespace

std::optional<FormADecomposition> classify_form_a(const SkewShape& shape, int p) {
  if (p < 2) throw std::invalid_argument("form A needs p >= 2 columns");
  if (shape.columns() > p) return std::nullopt;
  auto spans = column_spans(shape, p);

  // Occupied middle columns must run through column p-1 and share their
  // last row; empty middle columns can only precede them.
  int m = -1;
  for (int k = 2; k <= p - 1; ++k) {
    const auto& s = spans[static_cast<std::size_t>(k - 1)];
    if (s.empty()) {
      if (m >= 0) return std::nullopt;
      continue;
    }
    if (m >= 0 && s.bottom != m) return std::nullopt;
    m = s.bottom;
  }
  const auto& first = spans[0];
  if (m < 0) {
    // no middle column holds a box
    if (p == 2)
      m = first.empty() ? 0 : first.bottom;
    else
      m = first.empty() ? 0 : first.top - 1;
  }

  FormADecomposition d;
  d.p = p;
  d.m = m;
  d.body_column_heights.assign(static_cast<std::size_t>(p - 1), 0);
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = shape.row_start(r); c < shape.row_end(r); ++c) {
      int row = r + 1;
      int col = c + 1;
      if (col == p) {
        ++d.head_height;
      } else if (row <= m) {
        ++d.body_boxes;
        ++d.body_column_heights[static_cast<std::size_t>(col - 1)];
      } else if (col == 1) {
        ++d.tail_height;
      } else {
        return std::nullopt;  // middle box below row m; excluded above
      }
    }
  }
  return d;
}

int gamma(std::span<const int> counts, int i) {
  return static_cast<int>(std::count_if(counts.begin(), counts.end(), [i](int c) { return c > 0 && c >= i; }));
}

int gamma(const SkewTableau& t, int i) {
  std::map<int, int> counts;
  for (int letter : reading_word(t)) ++counts[letter];
  int n = 0;
  for (const auto& [letter, count] : counts)
    if (count >= i) ++n;
  return n;
}

std::vector<SkewShape> enumerate_skew_shapes(int max_boxes, int max_columns) {
  std::vector<SkewShape> out;
  if (max_boxes <= 0 || max_columns <= 0) return out;
  std::vector<int> outer;
  std::vector<int> inner;
  auto rec = [&](auto&& self, int used, bool last_empty) -> void {
    int prev_outer = outer.empty() ? max_columns : outer.back();
    int prev_inner = outer.empty() ? max_columns : inner.back();
    for (int o = 1; o <= prev_outer; ++o) {
      for (int i = 0; i <= std::min(prev_inner, o); ++i) {
        int boxes = o - i;
        if (boxes == 0 && (outer.empty() || last_empty)) continue;
        if (used + boxes > max_boxes) continue;
        outer.push_back(o);
        inner.push_back(i);
        if (boxes > 0) out.emplace_back(Partition(outer), Partition(inner));
        if (used + boxes < max_boxes) self(self, used + boxes, boxes == 0);
        outer.pop_back();
        inner.pop_back();
      }
    }
  };
  rec(rec, 0, false);
  return out;
}

FormABoundsReport verify_form_a_bounds(int p, int max_boxes, std::size_t tableau_ceiling) {
  if (p < 3) throw std::invalid_argument("verify_form_a_bounds needs p >= 3");
  if (max_boxes < 0) throw std::invalid_argument("max_boxes must be non-negative");
  FormABoundsReport report;
  report.p = p;
  report.max_boxes = max_boxes;

  auto record = [&](const char* statement, const SkewShape& shape, const ReadingOrder& order,
                    std::span<const int> letters, std::string detail) {
    ++report.counterexample_count;
    if (report.counterexamples.size() < 20)
      report.counterexamples.push_back({statement, order.to_tableau(shape, letters), std::move(detail)});
  };

  for (const auto& shape : enumerate_skew_shapes(max_boxes, p)) {
    ++report.shapes_enumerated;
    auto form = classify_form_a(shape, p);
    if (!form) continue;
    ++report.form_a_shapes;

    ReadingOrder order(shape);
    auto spans = column_spans(shape, p);
    struct BoxRule {
      bool body = false;
      int column = 0;         // 1-based
      int right_position = 0; // h for the at-most-h lemma, 0 if not applicable
    };
    std::vector<BoxRule> rules(order.boxes.size());
    for (std::size_t k = 0; k < order.boxes.size(); ++k) {
      const auto& b = order.boxes[k];
      auto& rule = rules[k];
      rule.column = b.col + 1;
      rule.body = rule.column <= p - 1 && b.row + 1 <= form->m;
      if (rule.body && rule.column <= p - 2)
        rule.right_position = b.row + 1 - spans[static_cast<std::size_t>(rule.column)].top + 1;
    }

    std::vector<int> prefix(static_cast<std::size_t>(shape.box_count()) + 2, 0);
    for_each_lattice_filling(shape, nullptr, [&](std::span<const int> letters, std::span<const int> counts) {
      if (++report.tableaux_checked > tableau_ceiling)
        throw EnumerationLimit("form A verification exceeded " + std::to_string(tableau_ceiling) + " tableaux");
      std::fill(prefix.begin(), prefix.end(), 0);
      for (std::size_t k = 0; k < letters.size(); ++k) {
        int e = letters[k];
        ++prefix[static_cast<std::size_t>(e)];
        const auto& rule = rules[k];
        if (!rule.body) continue;
        ++report.assertions_checked;
        if (prefix[static_cast<std::size_t>(e)] < p - rule.column) {
          std::ostringstream os;
          os << "letter " << e << " appears " << prefix[static_cast<std::size_t>(e)]
             << " times up to its box in column " << rule.column;
          record("lemma-appears-at-least", shape, order, letters, os.str());
        }
        if (rule.right_position > 0) {
          ++report.assertions_checked;
          if (e > rule.right_position) {
            std::ostringstream os;
            os << "entry " << e << " in column " << rule.column << " exceeds h = " << rule.right_position;
            record("lemma-at-most-h", shape, order, letters, os.str());
          }
        }
      }
      for (int k = 1; k <= p - 1; ++k) {
        int h = form->body_column_heights[static_cast<std::size_t>(k - 1)];
        ++report.assertions_checked;
        if (gamma(counts, p - k) < h) {
          std::ostringstream os;
          os << "gamma_" << p - k << " = " << gamma(counts, p - k) << " < h = " << h << " (k = " << k << ")";
          record("prop-lower", shape, order, letters, os.str());
        }
        if (k >= 2) {
          ++report.assertions_checked;
          if (gamma(counts, p - k + 2) > h) {
            std::ostringstream os;
            os << "gamma_" << p - k + 2 << " = " << gamma(counts, p - k + 2) << " > h = " << h << " (k = " << k << ")";
            record("prop-upper", shape, order, letters, os.str());
          }
        }
      }
      return true;
    });
  }
  return report;
}

}  // namespace pqcheck
