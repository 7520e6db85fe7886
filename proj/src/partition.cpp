#include "pqcheck/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pqcheck {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '['))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
      throw std::invalid_argument("cannot parse partition part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> Partition::all_of(int n) { return all_of(n, n); }

std::vector<Partition> Partition::all_of(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  // parts generated largest-first, so output is lexicographically decreasing
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return {};
  for (int col = 0; col < parts_.front(); ++col) {
    int height = 0;
    while (height < length() && parts_[static_cast<std::size_t>(height)] > col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner partition " + inner_.to_string() +
                                " is not contained in " + outer_.to_string());
}

bool SkewShape::has_box(int row, int col) const {
  if (row < 0 || row >= rows()) return false;
  return col >= row_start(row) && col < row_end(row);
}

std::string SkewShape::to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  while (static_cast<int>(rows_.size()) < shape_.rows()) rows_.emplace_back();
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("tableau has more rows than its shape");
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != shape_.row_length(r))
      throw std::invalid_argument("tableau row " + std::to_string(r + 1) + " has " +
                                  std::to_string(row.size()) + " entries, shape needs " +
                                  std::to_string(shape_.row_length(r)));
    for (int letter : row)
      if (letter <= 0) throw std::invalid_argument("tableau letters must be positive");
  }
}

int SkewTableau::at(int row, int col) const {
  if (!shape_.has_box(row, col)) throw std::out_of_range("no box at that position");
  return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - shape_.row_start(row))];
}

std::string SkewTableau::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < shape_.rows(); ++r) {
    if (r) os << " / ";
    for (int c = 0; c < shape_.row_start(r); ++c) os << ". ";
    for (int v : rows_[static_cast<std::size_t>(r)]) os << v << ' ';
  }
  return os.str();
}

}  // namespace pqcheck
