#ifndef BDUAL_TENSORSPACE_HPP
#define BDUAL_TENSORSPACE_HPP

// Tensor-space combinatorics.
//
// The single-factor alphabet of size n (n even) is the set of half-integers
//   { -(n-1)/2, ..., -1/2, 1/2, ..., (n-1)/2 }.
// We store every entry DOUBLED as an odd integer in { -(n-1), ..., n-1 }, so
// all arithmetic stays integral. A basis vector of the m-fold tensor power is
// an m-tuple f = (f(1), ..., f(m)) of doubled entries; tuples are ordered
// ascending-lexicographically and ranked by mixed radix, digit(d) = (d+n-1)/2.
//
// For a "enhanced" space with parameter r the alphabet has n = 2r+4 letters:
// the 2r+2 inner letters |d| <= 2r+1 plus the two boundary letters
// d = +-(2r+3). A tuple decomposes into positions I (inner letters),
// J (letter -(2r+3)) and the rest (letter +(2r+3)); the level is #I.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdual/ratfunc.hpp"

namespace bdual {

using IndexTuple = std::vector<int>;  // doubled entries, positions 0-based

inline int64_t checked_pow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (int64_t(1) << 56) / base)
      throw SizeGuardError("checked_pow: overflow");
    r *= base;
  }
  return r;
}

inline int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Default ceiling on the total basis size; override with BDUAL_MAX_DIM.
inline int64_t default_dim_cap() {
  if (const char* env = std::getenv("BDUAL_MAX_DIM")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

class TensorBasis {
 public:
  // Alphabet size n (even, >= 2), m tensor factors.
  TensorBasis(int n, int m, int64_t dim_cap = default_dim_cap())
      : n_(n), m_(m) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("TensorBasis: n must be even and >= 2");
    if (m < 1) throw std::invalid_argument("TensorBasis: m must be >= 1");
    dim_ = checked_pow(n, m);
    if (dim_ > dim_cap)
      throw SizeGuardError("TensorBasis: dimension " + std::to_string(dim_) +
                           " exceeds cap " + std::to_string(dim_cap));
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int64_t dim() const { return dim_; }

  // Doubled alphabet values in ascending order.
  std::vector<int> alphabet() const {
    std::vector<int> a;
    for (int d = -(n_ - 1); d <= n_ - 1; d += 2) a.push_back(d);
    return a;
  }

  bool valid_entry(int d) const {
    return d % 2 != 0 && d >= -(n_ - 1) && d <= n_ - 1;
  }
  bool valid_tuple(const IndexTuple& f) const {
    if (static_cast<int>(f.size()) != m_) return false;
    for (int d : f)
      if (!valid_entry(d)) return false;
    return true;
  }

  int64_t rank(const IndexTuple& f) const {
    if (!valid_tuple(f))
      throw std::invalid_argument("TensorBasis::rank: invalid tuple");
    int64_t r = 0;
    for (int d : f) r = r * n_ + (d + n_ - 1) / 2;
    return r;
  }

  IndexTuple unrank(int64_t r) const {
    if (r < 0 || r >= dim_)
      throw std::out_of_range("TensorBasis::unrank: rank out of range");
    IndexTuple f(m_);
    for (int k = m_ - 1; k >= 0; --k) {
      f[k] = static_cast<int>(2 * (r % n_) - (n_ - 1));
      r /= n_;
    }
    return f;
  }

 private:
  int n_;
  int m_;
  int64_t dim_;
};

// Position decomposition of an enhanced tuple (positions reported 1-based).
struct TupleClass {
  std::vector<int> I;  // positions carrying inner letters
  std::vector<int> J;  // positions carrying the letter -(2r+3)
  int level = 0;       // #I
};

inline TupleClass classify_enhanced(const IndexTuple& f, int r) {
  const int boundary = 2 * r + 3;
  TupleClass tc;
  for (size_t k = 0; k < f.size(); ++k) {
    int d = f[k];
    if (std::abs(d) <= 2 * r + 1) {
      tc.I.push_back(static_cast<int>(k) + 1);
    } else if (d == -boundary) {
      tc.J.push_back(static_cast<int>(k) + 1);
    } else if (d != boundary) {
      throw std::invalid_argument("classify_enhanced: entry outside alphabet");
    }
  }
  tc.level = static_cast<int>(tc.I.size());
  return tc;
}

// Dimension of the level-l component of the enhanced space:
//   C(m,l) * (2r+2)^l * 2^(m-l).
inline int64_t level_dim(int r, int m, int l) {
  if (l < 0 || l > m) return 0;
  return binomial(m, l) * checked_pow(2 * r + 2, l) * checked_pow(2, m - l);
}

// Weight of a tuple over alphabet size n: component i (1-based, i <= n/2)
// counts positions k with |f(k)| = 2i-1.
inline std::vector<int> weight_of(const IndexTuple& f, int n) {
  std::vector<int> wt(n / 2, 0);
  for (int d : f) {
    int i = (std::abs(d) + 1) / 2;
    if (i < 1 || i > n / 2)
      throw std::invalid_argument("weight_of: entry outside alphabet");
    ++wt[i - 1];
  }
  return wt;
}

// All compositions of m into `parts` nonnegative parts, ascending lex order.
inline std::vector<std::vector<int>> compositions(int parts, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == parts - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (parts > 0) rec(0, m);
  return out;
}

// ---------------------------------------------------------------------------
// Sparse vectors keyed by basis tuples, and column-sparse linear operators.
// ---------------------------------------------------------------------------
struct SparseVec {
  std::map<IndexTuple, RatFunc> c;

  bool is_zero() const { return c.empty(); }

  void add(const IndexTuple& f, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto it = c.find(f);
    if (it == c.end()) {
      c.emplace(f, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  void add_scaled(const SparseVec& v, const RatFunc& s) {
    if (s.is_zero()) return;
    for (const auto& [f, x] : v.c) add(f, x * s);
  }
  SparseVec scaled(const RatFunc& s) const {
    SparseVec r;
    r.add_scaled(*this, s);
    return r;
  }
  static SparseVec unit(const IndexTuple& f) {
    SparseVec v;
    v.c.emplace(f, RatFunc(1));
    return v;
  }
  bool operator==(const SparseVec& o) const { return c == o.c; }
};

// A linear endomorphism of the tensor space, stored column-major:
// cols[j] maps row rank -> coefficient of basis vector row in the image of
// basis vector j.
class LinOp {
 public:
  LinOp() : dim_(0) {}
  explicit LinOp(int64_t dim) : dim_(dim), cols_(static_cast<size_t>(dim)) {}

  static LinOp identity(int64_t dim) {
    LinOp a(dim);
    for (int64_t j = 0; j < dim; ++j) a.cols_[j][j] = RatFunc(1);
    return a;
  }

  // Materialize an operator from a rule sending each basis tuple to a vector.
  static LinOp from_action(const TensorBasis& basis,
                           const std::function<SparseVec(const IndexTuple&)>& fn) {
    LinOp a(basis.dim());
    for (int64_t j = 0; j < basis.dim(); ++j) {
      SparseVec img = fn(basis.unrank(j));
      auto& col = a.cols_[j];
      for (const auto& [f, x] : img.c) col[basis.rank(f)] = x;
    }
    return a;
  }

  int64_t dim() const { return dim_; }
  const std::map<int64_t, RatFunc>& col(int64_t j) const { return cols_[j]; }
  std::map<int64_t, RatFunc>& col_mutable(int64_t j) { return cols_[j]; }

  void set(int64_t row, int64_t colj, const RatFunc& x) {
    if (x.is_zero())
      cols_[colj].erase(row);
    else
      cols_[colj][row] = x;
  }
  RatFunc get(int64_t row, int64_t colj) const {
    auto it = cols_[colj].find(row);
    return it == cols_[colj].end() ? RatFunc() : it->second;
  }

  bool is_zero() const {
    for (const auto& c : cols_)
      if (!c.empty()) return false;
    return true;
  }

  // Apply to a rank-indexed column vector.
  std::map<int64_t, RatFunc> apply(const std::map<int64_t, RatFunc>& v) const {
    std::map<int64_t, RatFunc> out;
    for (const auto& [j, x] : v) {
      for (const auto& [i, a] : cols_[j]) {
        auto it = out.find(i);
        if (it == out.end()) {
          RatFunc t = a * x;
          if (!t.is_zero()) out.emplace(i, std::move(t));
        } else {
          it->second += a * x;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    return out;
  }

  LinOp operator*(const LinOp& o) const {  // composition: (this ∘ o)
    check_dim(o);
    LinOp r(dim_);
    for (int64_t j = 0; j < dim_; ++j) r.cols_[j] = apply(o.cols_[j]);
    return r;
  }
  LinOp operator+(const LinOp& o) const {
    check_dim(o);
    LinOp r = *this;
    for (int64_t j = 0; j < dim_; ++j) {
      for (const auto& [i, x] : o.cols_[j]) {
        auto it = r.cols_[j].find(i);
        if (it == r.cols_[j].end()) {
          r.cols_[j].emplace(i, x);
        } else {
          it->second += x;
          if (it->second.is_zero()) r.cols_[j].erase(it);
        }
      }
    }
    return r;
  }
  LinOp operator-(const LinOp& o) const { return *this + o.scaled(RatFunc(-1)); }
  LinOp scaled(const RatFunc& s) const {
    LinOp r(dim_);
    if (s.is_zero()) return r;
    for (int64_t j = 0; j < dim_; ++j)
      for (const auto& [i, x] : cols_[j]) r.cols_[j][i] = x * s;
    return r;
  }
  bool operator==(const LinOp& o) const {
    return dim_ == o.dim_ && cols_ == o.cols_;
  }
  bool operator!=(const LinOp& o) const { return !(*this == o); }

  // Row/col/value triples sorted by (row, col); the canonical dump order.
  std::vector<std::tuple<int64_t, int64_t, RatFunc>> triples() const {
    std::vector<std::tuple<int64_t, int64_t, RatFunc>> t;
    for (int64_t j = 0; j < dim_; ++j)
      for (const auto& [i, x] : cols_[j]) t.emplace_back(i, j, x);
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) {
                return std::get<0>(a) != std::get<0>(b)
                           ? std::get<0>(a) < std::get<0>(b)
                           : std::get<1>(a) < std::get<1>(b);
              });
    return t;
  }

  // Textual matrix dump: header "dim N basisOrder lex", then one line
  // "row col <ratfunc>" per nonzero entry, sorted by (row, col).
  void dump(std::ostream& os) const {
    os << "dim " << dim_ << " basisOrder lex\n";
    for (const auto& [i, j, x] : triples())
      os << i << " " << j << " " << x.str() << "\n";
  }

 private:
  void check_dim(const LinOp& o) const {
    if (dim_ != o.dim_)
      throw std::invalid_argument("LinOp: dimension mismatch");
  }
  int64_t dim_;
  std::vector<std::map<int64_t, RatFunc>> cols_;
};

inline LinOp commutator(const LinOp& a, const LinOp& b) {
  return a * b - b * a;
}

}  // namespace bdual

#endif  // BDUAL_TENSORSPACE_HPP
