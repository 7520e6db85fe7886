#include "pqcheck/help.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pqcheck/checked.hpp"
#include "pqcheck/tableau.hpp"

namespace pqcheck {

namespace {

using i128 = __int128;

// Admissible values of χ(u) for one character: lo ≤ z ≤ hi and z ≡ residue
// (mod modulus), endpoints already moved onto the residue class.
struct ZWindow {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
};

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

ZWindow make_window(std::int64_t lo, std::int64_t hi, std::int64_t modulus, std::int64_t residue) {
  ZWindow w;
  w.modulus = modulus;
  w.residue = mod_floor(residue, modulus);
  w.lo = lo + mod_floor(w.residue - lo, modulus);
  w.hi = hi - mod_floor(hi - w.residue, modulus);
  return w;
}

ZWindow prime_window(std::int64_t d, int r) {
  return make_window(ceil_div(-d, r - 1), d, r, d);
}

ZWindow pq_window(std::int64_t d, std::int64_t x, std::int64_t y, int p, int q) {
  const std::int64_t p1 = p - 1;
  const std::int64_t q1 = q - 1;
  std::int64_t lo = std::max(ceil_div(-checked_add(d, checked_add(checked_mul(q1, x), checked_mul(p1, y))), p1 * q1),
                             -checked_sub(checked_sub(d, x), y));
  std::int64_t hi = std::min(floor_div(checked_sub(checked_add(d, checked_mul(q1, x)), y), q1),
                             floor_div(checked_add(checked_sub(d, x), checked_mul(p1, y)), p1));
  return make_window(lo, hi, static_cast<std::int64_t>(p) * q, checked_sub(checked_add(x, y), d));
}

struct Row {
  std::vector<std::int64_t> a;
  i128 lo;
  i128 hi;
};

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Box search over ε with Σε = 1. The last coordinate is eliminated; the
// others are bound-tightened against every row and then scanned depth first.
class BoxSearch {
 public:
  using Leaf = std::function<void(const std::vector<std::int64_t>& eps)>;

  BoxSearch(std::size_t k, const std::vector<std::vector<std::int64_t>>& values, const std::vector<ZWindow>& windows,
            std::int64_t bound)
      : k_(k), bound_(bound) {
    const std::size_t free = k_ == 0 ? 0 : k_ - 1;
    for (std::size_t c = 0; c < values.size(); ++c) {
      Row row;
      row.a.resize(free);
      std::int64_t last = values[c][k_ - 1];
      for (std::size_t i = 0; i < free; ++i) row.a[i] = checked_sub(values[c][i], last);
      row.lo = static_cast<i128>(windows[c].lo) - last;
      row.hi = static_cast<i128>(windows[c].hi) - last;
      rows_.push_back(std::move(row));
    }
    Row sum;
    sum.a.assign(free, 1);
    sum.lo = 1 - static_cast<i128>(bound);
    sum.hi = 1 + static_cast<i128>(bound);
    rows_.push_back(std::move(sum));
    lo_.assign(free, -bound);
    hi_.assign(free, bound);
  }

  bool saturated() const { return saturated_; }
  std::uint64_t checked() const { return checked_; }

  void run(const Leaf& leaf) {
    if (k_ == 0) return;
    if (!propagate()) return;
    const std::size_t free = k_ - 1;
    for (std::size_t i = 0; i < free; ++i)
      if (lo_[i] == -bound_ || hi_[i] == bound_) saturated_ = true;
    i128 smin = 0;
    i128 smax = 0;
    for (std::size_t i = 0; i < free; ++i) {
      smin += lo_[i];
      smax += hi_[i];
    }
    if (free > 0 && (smin <= rows_.back().lo || smax >= rows_.back().hi)) saturated_ = true;
    if (free == 0 && bound_ <= 1) saturated_ = true;

    // suffix extremes of each row over the coordinates not yet fixed
    suf_min_.assign(rows_.size(), std::vector<i128>(free + 1, 0));
    suf_max_.assign(rows_.size(), std::vector<i128>(free + 1, 0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = free; i-- > 0;) {
        i128 x = static_cast<i128>(rows_[r].a[i]) * lo_[i];
        i128 y = static_cast<i128>(rows_[r].a[i]) * hi_[i];
        suf_min_[r][i] = suf_min_[r][i + 1] + std::min(x, y);
        suf_max_[r][i] = suf_max_[r][i + 1] + std::max(x, y);
      }
    }
    eps_.assign(k_, 0);
    partial_.assign(rows_.size(), 0);
    descend(0, leaf);
  }

 private:
  bool propagate() {
    const std::size_t free = k_ - 1;
    for (int iter = 0; iter < 10000; ++iter) {
      bool changed = false;
      for (const auto& row : rows_) {
        i128 mn = 0;
        i128 mx = 0;
        for (std::size_t i = 0; i < free; ++i) {
          i128 x = static_cast<i128>(row.a[i]) * lo_[i];
          i128 y = static_cast<i128>(row.a[i]) * hi_[i];
          mn += std::min(x, y);
          mx += std::max(x, y);
        }
        if (mn > row.hi || mx < row.lo) return false;
        for (std::size_t j = 0; j < free; ++j) {
          i128 a = row.a[j];
          if (a == 0) continue;
          i128 x = a * lo_[j];
          i128 y = a * hi_[j];
          i128 rest_min = mn - std::min(x, y);
          i128 rest_max = mx - std::max(x, y);
          i128 t_lo = row.lo - rest_max;  // bounds on a·f_j
          i128 t_hi = row.hi - rest_min;
          i128 nlo, nhi;
          if (a > 0) {
            nlo = ceil_div128(t_lo, a);
            nhi = floor_div128(t_hi, a);
          } else {
            nlo = ceil_div128(t_hi, a);
            nhi = floor_div128(t_lo, a);
          }
          if (nlo > lo_[j]) {
            lo_[j] = static_cast<std::int64_t>(nlo);
            changed = true;
          }
          if (nhi < hi_[j]) {
            hi_[j] = static_cast<std::int64_t>(nhi);
            changed = true;
          }
          if (lo_[j] > hi_[j]) return false;
          if (changed) {
            // refresh the row extremes before moving on
            mn = 0;
            mx = 0;
            for (std::size_t i = 0; i < free; ++i) {
              i128 u = static_cast<i128>(row.a[i]) * lo_[i];
              i128 v = static_cast<i128>(row.a[i]) * hi_[i];
              mn += std::min(u, v);
              mx += std::max(u, v);
            }
          }
        }
      }
      if (!changed) return true;
    }
    return true;
  }

  void descend(std::size_t i, const Leaf& leaf) {
    const std::size_t free = k_ - 1;
    if (i == free) {
      i128 s = 0;
      for (std::size_t j = 0; j < free; ++j) s += eps_[j];
      eps_[free] = static_cast<std::int64_t>(1 - s);
      ++checked_;
      leaf(eps_);
      return;
    }
    for (std::int64_t f = lo_[i]; f <= hi_[i]; ++f) {
      bool ok = true;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        i128 s = partial_[r] + static_cast<i128>(rows_[r].a[i]) * f;
        if (s + suf_min_[r][i + 1] > rows_[r].hi || s + suf_max_[r][i + 1] < rows_[r].lo) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] += static_cast<i128>(rows_[r].a[i]) * f;
      eps_[i] = f;
      descend(i + 1, leaf);
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] -= static_cast<i128>(rows_[r].a[i]) * f;
    }
  }

  std::size_t k_;
  std::int64_t bound_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> lo_;
  std::vector<std::int64_t> hi_;
  std::vector<std::vector<i128>> suf_min_;
  std::vector<std::vector<i128>> suf_max_;
  std::vector<std::int64_t> eps_;
  std::vector<i128> partial_;
  bool saturated_ = false;
  std::uint64_t checked_ = 0;
};

// Values of each character on the given classes; gathers every problem first.
std::vector<std::vector<std::int64_t>> value_matrix(const HelpQuery& query, const std::vector<ClassInfo>& support) {
  std::vector<std::string> problems;
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& chi : query.constraint_characters) {
    if (chi.kind == CharacterKind::brauer && chi.characteristic > 0 && query.unit_order % chi.characteristic == 0)
      problems.push_back("Brauer character " + chi.id + " in characteristic " + std::to_string(chi.characteristic) +
                         " cannot be used for units of order " + std::to_string(query.unit_order));
    if (chi.degree < 1) problems.push_back("character " + chi.id + " has non-positive degree");
    std::vector<std::int64_t> row;
    for (const auto& c : support) {
      auto v = chi.value(c.id);
      if (!v) {
        problems.push_back("character " + chi.id + " has no value on class " + c.id);
        row.push_back(0);
      } else {
        row.push_back(*v);
      }
    }
    out.push_back(std::move(row));
  }
  if (!problems.empty()) {
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
    throw InputError(msg);
  }
  return out;
}

std::vector<std::string> ids_of(const std::vector<ClassInfo>& classes) {
  std::vector<std::string> ids;
  for (const auto& c : classes) ids.push_back(c.id);
  return ids;
}

void require_bound(const HelpQuery& query) {
  if (query.search_bound < 1) throw InputError("search bound must be positive");
}

std::int64_t dot(const std::vector<std::int64_t>& values, const std::vector<std::int64_t>& eps) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) s = checked_add(s, checked_mul(values[i], eps[i]));
  return s;
}

}  // namespace

std::vector<std::int64_t> UnitCandidate::tuple() const {
  std::vector<std::int64_t> out;
  const PartialAugmentation* first = p < q ? &pa_uq : &pa_up;
  const PartialAugmentation* second = p < q ? &pa_up : &pa_uq;
  for (const auto* pa : {first, second})
    if (pa->classes.size() > 1) out.insert(out.end(), pa->eps.begin(), pa->eps.end());
  out.insert(out.end(), pa_u.eps.begin(), pa_u.eps.end());
  return out;
}

std::string UnitCandidate::tuple_string() const {
  std::ostringstream os;
  os << "(";
  auto t = tuple();
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
  os << ")";
  return os.str();
}

std::vector<ClassInfo> support_classes(const std::vector<ClassInfo>& classes, int n) {
  std::vector<ClassInfo> out;
  for (const auto& c : classes)
    if (c.element_order > 1 && n % c.element_order == 0) out.push_back(c);
  return canonical_class_order(std::move(out));
}

std::pair<int, int> split_order(int order, int preferred_p) {
  std::vector<int> primes;
  int n = order;
  for (int f = 2; n > 1 && f <= n; ++f) {
    if (n % f != 0) continue;
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e > 1) throw InputError("unit order " + std::to_string(order) + " is not squarefree");
    primes.push_back(f);
  }
  if (primes.size() != 2) throw InputError("unit order " + std::to_string(order) + " is not a product of two primes");
  if (preferred_p == 0 || preferred_p == primes[0]) return {primes[0], primes[1]};
  if (preferred_p == primes[1]) return {primes[1], primes[0]};
  throw InputError(std::to_string(preferred_p) + " does not divide " + std::to_string(order));
}

PrimeCandidateSet enumerate_prime_order(const HelpQuery& query) {
  require_bound(query);
  const int r = query.unit_order;
  if (!is_prime(r)) throw InputError("unit order " + std::to_string(r) + " is not prime");
  auto support = support_classes(query.classes, r);
  if (support.empty()) throw InputError("no class of order " + std::to_string(r));
  if (query.constraint_characters.empty() && support.size() > 1)
    throw UnboundedSearch("no constraint characters for order " + std::to_string(r) + " with " +
                          std::to_string(support.size()) + " classes");
  auto values = value_matrix(query, support);
  std::vector<ZWindow> windows;
  for (const auto& chi : query.constraint_characters) windows.push_back(prime_window(chi.degree, r));

  PrimeCandidateSet out;
  out.r = r;
  const auto ids = ids_of(support);
  BoxSearch search(support.size(), values, windows, query.search_bound);
  search.run([&](const std::vector<std::int64_t>& eps) {
    for (std::size_t c = 0; c < query.constraint_characters.size(); ++c) {
      if (!multiplicities_prime_order(query.constraint_characters[c].degree, dot(values[c], eps), r)) return;
    }
    if (out.candidates.size() >= query.max_candidates)
      throw EnumerationLimit("more than " + std::to_string(query.max_candidates) + " candidates of order " +
                             std::to_string(r));
    out.candidates.push_back({r, ids, eps});
  });
  out.bound_saturated = search.saturated();
  out.vectors_checked = search.checked();
  return out;
}

PqCandidateSet enumerate_order_pq(const HelpQuery& query, const PrimeCandidateSet& power_q,
                                  const PrimeCandidateSet& power_p) {
  require_bound(query);
  auto [p, q] = split_order(query.unit_order, query.p);
  if (power_q.r != q || power_p.r != p)
    throw InputError("power candidate sets must have orders " + std::to_string(q) + " and " + std::to_string(p));
  auto support = support_classes(query.classes, query.unit_order);
  if (query.constraint_characters.empty())
    throw UnboundedSearch("no constraint characters for order " + std::to_string(query.unit_order));
  auto values = value_matrix(query, support);

  const auto& chars = query.constraint_characters;
  PqCandidateSet out;
  out.p = p;
  out.q = q;
  const auto ids = ids_of(support);
  for (const auto& up : power_q.candidates) {
    for (const auto& uq : power_p.candidates) {
      std::vector<std::int64_t> xs;
      std::vector<std::int64_t> ys;
      std::vector<ZWindow> windows;
      bool any_empty = false;
      for (const auto& chi : chars) {
        xs.push_back(chi_of_unit(chi, up));
        ys.push_back(chi_of_unit(chi, uq));
        windows.push_back(pq_window(chi.degree, xs.back(), ys.back(), p, q));
        if (windows.back().lo > windows.back().hi) any_empty = true;
      }
      if (any_empty) continue;
      BoxSearch search(support.size(), values, windows, query.search_bound);
      search.run([&](const std::vector<std::int64_t>& eps) {
        for (std::size_t c = 0; c < chars.size(); ++c)
          if (!multiplicities_order_pq(chars[c].degree, xs[c], ys[c], dot(values[c], eps), p, q)) return;
        if (out.candidates.size() >= query.max_candidates)
          throw EnumerationLimit("more than " + std::to_string(query.max_candidates) + " candidates of order " +
                                 std::to_string(query.unit_order));
        UnitCandidate cand;
        cand.p = p;
        cand.q = q;
        cand.pa_up = up;
        cand.pa_uq = uq;
        cand.pa_u = {query.unit_order, ids, eps};
        out.candidates.push_back(std::move(cand));
      });
      out.bound_saturated = out.bound_saturated || search.saturated();
      out.vectors_checked += search.checked();
    }
  }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](const UnitCandidate& a, const UnitCandidate& b) { return a.tuple() < b.tuple(); });
  return out;
}

}  // namespace pqcheck
