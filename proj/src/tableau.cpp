#include "pqcheck/tableau.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace pqcheck {

bool is_semistandard(const SkewTableau& t) {
  const auto& shape = t.shape();
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = shape.row_start(r); c < shape.row_end(r); ++c) {
      int v = t.at(r, c);
      if (shape.has_box(r, c + 1) && t.at(r, c + 1) < v) return false;
      if (shape.has_box(r + 1, c) && t.at(r + 1, c) <= v) return false;
    }
  }
  return true;
}

std::vector<int> reading_word(const SkewTableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows()) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool is_lattice_word(std::span<const int> word) {
  std::vector<int> counts(2, 0);
  for (int letter : word) {
    if (letter <= 0) return false;
    if (static_cast<std::size_t>(letter) + 1 > counts.size()) counts.resize(static_cast<std::size_t>(letter) + 1, 0);
    ++counts[static_cast<std::size_t>(letter)];
    if (letter > 1 && counts[static_cast<std::size_t>(letter)] > counts[static_cast<std::size_t>(letter - 1)])
      return false;
  }
  return true;
}

bool satisfies_lattice_property(const SkewTableau& t) {
  auto word = reading_word(t);
  return is_lattice_word(word);
}

Partition content(const SkewTableau& t) {
  auto word = reading_word(t);
  if (!is_lattice_word(word))
    throw std::invalid_argument("content is only a partition for lattice tableaux");
  std::vector<int> counts;
  for (int letter : word) {
    if (static_cast<std::size_t>(letter) > counts.size()) counts.resize(static_cast<std::size_t>(letter), 0);
    ++counts[static_cast<std::size_t>(letter - 1)];
  }
  return Partition(std::move(counts));
}

ReadingOrder::ReadingOrder(const SkewShape& shape) {
  // position of each box in reading order, looked up by (row, col)
  std::vector<std::vector<int>> index(static_cast<std::size_t>(shape.rows()));
  for (int r = 0; r < shape.rows(); ++r) {
    auto& row_index = index[static_cast<std::size_t>(r)];
    row_index.assign(static_cast<std::size_t>(shape.row_end(r)), -1);
    for (int c = shape.row_end(r) - 1; c >= shape.row_start(r); --c) {
      Box b{r, c, -1, -1};
      if (shape.has_box(r, c + 1)) b.right = row_index[static_cast<std::size_t>(c + 1)];
      if (shape.has_box(r - 1, c)) b.above = index[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
      row_index[static_cast<std::size_t>(c)] = static_cast<int>(boxes.size());
      boxes.push_back(b);
    }
  }
}

SkewTableau ReadingOrder::to_tableau(const SkewShape& shape, std::span<const int> letters) const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int r = 0; r < shape.rows(); ++r) rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(shape.row_length(r)));
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const auto& b = boxes[k];
    rows[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col - shape.row_start(b.row))] = letters[k];
  }
  return SkewTableau(shape, std::move(rows));
}

namespace {

class FillingSearch {
 public:
  FillingSearch(const SkewShape& shape, const Partition* content, const FillingVisitor& visit)
      : order_(shape), content_(content), visit_(visit) {
    letters_.assign(order_.boxes.size(), 0);
    std::size_t letter_cap = order_.boxes.size() + 2;
    counts_.assign(letter_cap, 0);
    if (content_) {
      target_.assign(letter_cap, 0);
      for (int i = 0; i < content_->length(); ++i)
        target_[static_cast<std::size_t>(i + 1)] = (*content_)[static_cast<std::size_t>(i)];
    }
  }

  std::size_t run() {
    descend(0, 0);
    return visited_;
  }

 private:
  // returns false once the visitor asked to stop
  bool descend(std::size_t k, int max_letter) {
    if (k == order_.boxes.size()) {
      ++visited_;
      return visit_(letters_, counts_);
    }
    const auto& box = order_.boxes[k];
    int lo = box.above >= 0 ? letters_[static_cast<std::size_t>(box.above)] + 1 : 1;
    int hi = max_letter + 1;
    if (box.right >= 0) hi = std::min(hi, letters_[static_cast<std::size_t>(box.right)]);
    if (content_) hi = std::min(hi, content_->length());
    for (int v = lo; v <= hi; ++v) {
      auto uv = static_cast<std::size_t>(v);
      if (v > 1 && counts_[uv - 1] <= counts_[uv]) continue;
      if (content_ && counts_[uv] >= target_[uv]) continue;
      letters_[k] = v;
      ++counts_[uv];
      bool keep_going = descend(k + 1, std::max(max_letter, v));
      --counts_[uv];
      if (!keep_going) return false;
    }
    return true;
  }

  ReadingOrder order_;
  const Partition* content_;
  const FillingVisitor& visit_;
  std::vector<int> letters_;
  std::vector<int> counts_;
  std::vector<int> target_;
  std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_lattice_filling(const SkewShape& shape, const Partition* content,
                                     const FillingVisitor& visit) {
  if (content && content->size() != shape.box_count()) return 0;
  return FillingSearch(shape, content, visit).run();
}

std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& content,
                                               std::size_t max_results) {
  if (content.size() != shape.box_count())
    throw std::invalid_argument("shape " + shape.to_string() + " has " +
                                std::to_string(shape.box_count()) + " boxes but content " +
                                content.to_string() + " has size " + std::to_string(content.size()));
  ReadingOrder order(shape);
  std::vector<SkewTableau> out;
  for_each_lattice_filling(shape, &content, [&](std::span<const int> letters, std::span<const int>) {
    if (out.size() == max_results)
      throw EnumerationLimit("more than " + std::to_string(max_results) + " LR tableaux");
    out.push_back(order.to_tableau(shape, letters));
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const SkewTableau& a, const SkewTableau& b) { return a.rows() < b.rows(); });
  return out;
}

std::int64_t lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content) {
  if (!outer.contains(inner)) return 0;
  if (outer.size() != inner.size() + content.size()) return 0;
  SkewShape shape(outer, inner);
  return static_cast<std::int64_t>(
      for_each_lattice_filling(shape, &content, [](std::span<const int>, std::span<const int>) { return true; }));
}

std::vector<Partition> lr_nonzero_contents(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return {};
  SkewShape shape(outer, inner);
  std::set<std::vector<int>> seen;
  for_each_lattice_filling(shape, nullptr, [&](std::span<const int>, std::span<const int> counts) {
    std::vector<int> parts;
    for (std::size_t i = 1; i < counts.size() && counts[i] > 0; ++i) parts.push_back(counts[i]);
    seen.insert(std::move(parts));
    return true;
  });
  std::vector<Partition> out;
  out.reserve(seen.size());
  for (auto it = seen.rbegin(); it != seen.rend(); ++it) out.emplace_back(*it);
  return out;
}

const std::vector<Partition>& LrCache::contents(const Partition& outer, const Partition& inner) {
  auto key = std::make_pair(outer, inner);
  auto it = contents_.find(key);
  if (it == contents_.end()) it = contents_.emplace(std::move(key), lr_nonzero_contents(outer, inner)).first;
  return it->second;
}

bool LrCache::nonzero(const Partition& outer, const Partition& inner, const Partition& content) {
  if (outer.size() != inner.size() + content.size()) return false;
  const auto& all = contents(outer, inner);
  // stored in decreasing order
  return std::binary_search(all.begin(), all.end(), content, std::greater<>{});
}

}  // namespace pqcheck
