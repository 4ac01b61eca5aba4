#ifndef BDUAL_HECKEB_HPP
#define BDUAL_HECKEB_HPP

// The hyperoctahedral group W(B_m) in window notation, its Hecke algebra
// H(B_m) over Q(q), and the right action of H(B_m) on tensor space.
//
// Conventions.
//   * Generators are s_0, s_1, ..., s_{m-1}. Right multiplication by s_i
//     (i >= 1) swaps window entries i, i+1; by s_0 negates entry 1.
//   * The algebra acts on the RIGHT of tensor space; the map sending a word
//     to the composed operator is therefore an anti-homomorphism:
//     op(g_1 g_2 ... g_k) = op(g_k) o ... o op(g_1).
//   * Generators H_i satisfy (H_i - q^{-1})(H_i + q) = 0, so
//     H_i^{-1} = H_i + (q - q^{-1}).
//
// Action of H_i on a basis vector M_f (positions 1-based):
//   i >= 1, f(i) = f(i+1):  M_f H_i = q^{-1} M_f
//   i >= 1, f(i) < f(i+1):  M_f H_i = M_{f s_i}
//   i >= 1, f(i) > f(i+1):  M_f H_i = M_{f s_i} + (q^{-1} - q) M_f
//   i == 0, f(1) > 0:       M_f H_0 = M_{f s_0}
//   i == 0, f(1) < 0:       M_f H_0 = M_{f s_0} + (q^{-1} - q) M_f
// where f s_i swaps entries i, i+1 and f s_0 negates entry 1.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdual/checks.hpp"
#include "bdual/ratfunc.hpp"
#include "bdual/tensorspace.hpp"

namespace bdual {

// ---------------------------------------------------------------------------
// Signed permutations (window notation).
// ---------------------------------------------------------------------------
class SignedPerm {
 public:
  explicit SignedPerm(std::vector<int> window) : w_(std::move(window)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(w_.size()) || seen[a - 1])
        throw std::invalid_argument("SignedPerm: invalid window");
      seen[a - 1] = true;
    }
  }

  static SignedPerm identity(int m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
  }

  // Generator s_i as a group element (s_0 negates 1, s_i swaps i, i+1).
  static SignedPerm s(int m, int i) {
    SignedPerm g = identity(m);
    if (i == 0) {
      g.w_[0] = -1;
    } else if (i >= 1 && i < m) {
      std::swap(g.w_[i - 1], g.w_[i]);
    } else {
      throw std::invalid_argument("SignedPerm::s: generator index out of range");
    }
    return g;
  }

  int m() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based

  bool is_identity() const {
    for (int i = 0; i < m(); ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }

  // Composition with v applied first: (u*v)(k) = u(v(k)), extended by
  // u(-k) = -u(k). Right multiplication by a generator is *this * s.
  SignedPerm operator*(const SignedPerm& v) const {
    if (m() != v.m()) throw std::invalid_argument("SignedPerm: size mismatch");
    std::vector<int> w(m());
    for (int k = 1; k <= m(); ++k) {
      int t = v(k);
      w[k - 1] = t > 0 ? w_[t - 1] : -w_[-t - 1];
    }
    return SignedPerm(std::move(w));
  }

  bool operator==(const SignedPerm& o) const { return w_ == o.w_; }
  bool operator!=(const SignedPerm& o) const { return w_ != o.w_; }
  bool operator<(const SignedPerm& o) const { return w_ < o.w_; }

  // Right descent test: s_0 iff w(1) < 0, s_i iff w(i) > w(i+1).
  bool has_descent(int i) const {
    if (i == 0) return w_[0] < 0;
    return w_[i - 1] > w_[i];
  }
  std::vector<int> right_descents() const {
    std::vector<int> d;
    for (int i = 0; i < m(); ++i)
      if (has_descent(i)) d.push_back(i);
    return d;
  }

  // Coxeter length: inversions + negative entries + negative sum pairs,
  //   l(w) = #{i<j : w(i)>w(j)} + #{i : w(i)<0} + #{i<j : w(i)+w(j)<0}.
  int length() const {
    int inv = 0, neg = 0, nsp = 0;
    for (int i = 0; i < m(); ++i) {
      if (w_[i] < 0) ++neg;
      for (int j = i + 1; j < m(); ++j) {
        if (w_[i] > w_[j]) ++inv;
        if (w_[i] + w_[j] < 0) ++nsp;
      }
    }
    return inv + neg + nsp;
  }

  // One reduced word (letters in algebra order, left to right): repeatedly
  // strip the smallest right descent, then reverse the collected letters.
  std::vector<int> reduced_word() const {
    SignedPerm w = *this;
    std::vector<int> collected;
    while (!w.is_identity()) {
      auto d = w.right_descents();
      // A non-identity element always has a right descent.
      int i = d.front();
      w = w * s(m(), i);
      collected.push_back(i);
    }
    std::reverse(collected.begin(), collected.end());
    return collected;
  }

  std::string str() const {
    std::string out = "(";
    for (int i = 0; i < m(); ++i) {
      if (i) out += ",";
      out += std::to_string(w_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<int> w_;
};

// All 2^m * m! signed permutations, deterministic order.
inline std::vector<SignedPerm> all_signed_perms(int m) {
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPerm> out;
  std::sort(base.begin(), base.end());
  do {
    for (int signs = 0; signs < (1 << m); ++signs) {
      std::vector<int> w = base;
      for (int i = 0; i < m; ++i)
        if (signs & (1 << i)) w[i] = -w[i];
      out.emplace_back(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Every reduced word of w, via recursion on right descents.
inline std::vector<std::vector<int>> all_reduced_words(const SignedPerm& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i : w.right_descents()) {
    SignedPerm shorter = w * SignedPerm::s(w.m(), i);
    for (auto word : all_reduced_words(shorter)) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  return out;
}

// Elements of the Young subgroup S_{lambda_1} x S_{lambda_2} x ... inside the
// type-A part of W(B_m): permutations preserving the consecutive blocks cut
// out by the composition lambda (parts may be zero), with no sign changes.
inline std::vector<SignedPerm> young_subgroup(const std::vector<int>& lambda) {
  int m = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<int> block_of(m);
  {
    int pos = 0, blk = 0;
    for (int part : lambda) {
      if (part < 0) throw std::invalid_argument("young_subgroup: negative part");
      for (int t = 0; t < part; ++t) block_of[pos++] = blk;
      ++blk;
    }
  }
  std::vector<SignedPerm> out;
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  do {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (block_of[w[i] - 1] != block_of[i]) ok = false;
    if (ok) out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------------------
// The right action on tensor space.
// ---------------------------------------------------------------------------

// Image of the basis vector M_f under one generator H_i (or its inverse).
inline SparseVec act_hecke_letter(const IndexTuple& f, int i,
                                  bool inverse = false) {
  const int m = static_cast<int>(f.size());
  if (i < 0 || i >= m)
    throw std::invalid_argument("act_hecke_letter: generator index out of range");
  SparseVec out;
  if (i == 0) {
    IndexTuple g = f;
    g[0] = -g[0];
    out.add(g, RatFunc(1));
    if (f[0] < 0) out.add(f, RatFunc::qinv_minus_q());
  } else {
    if (f[i - 1] == f[i]) {
      out.add(f, RatFunc::q(-1));
    } else {
      IndexTuple g = f;
      std::swap(g[i - 1], g[i]);
      out.add(g, RatFunc(1));
      if (f[i - 1] > f[i]) out.add(f, RatFunc::qinv_minus_q());
    }
  }
  if (inverse) out.add(f, RatFunc::q(1) - RatFunc::q(-1));
  return out;
}

// Image of M_f under a word in the H_i^{+-1}, letters in algebra order.
struct BLetter {
  int i;       // generator index
  int e = +1;  // +1 for H_i, -1 for H_i^{-1}
};
using BWord = std::vector<BLetter>;

inline SparseVec act_hecke_word(const IndexTuple& f, const BWord& word) {
  SparseVec cur = SparseVec::unit(f);
  for (const BLetter& letter : word) {
    SparseVec next;
    for (const auto& [g, x] : cur.c)
      next.add_scaled(act_hecke_letter(g, letter.i, letter.e < 0), x);
    cur = next;
  }
  return cur;
}

// The generator images as matrices on a fixed basis.
struct HeckeFamily {
  TensorBasis basis;
  std::vector<LinOp> H;     // H[i] = image of H_i, i = 0..m-1
  std::vector<LinOp> Hinv;  // images of H_i^{-1}
};

inline HeckeFamily build_hecke_family(const TensorBasis& basis) {
  HeckeFamily fam{basis, {}, {}};
  for (int i = 0; i < basis.m(); ++i) {
    fam.H.push_back(LinOp::from_action(basis, [i](const IndexTuple& f) {
      return act_hecke_letter(f, i, false);
    }));
    fam.Hinv.push_back(LinOp::from_action(basis, [i](const IndexTuple& f) {
      return act_hecke_letter(f, i, true);
    }));
  }
  return fam;
}

// Operator image of the word g_1 ... g_k: since the action is on the right,
// this is op(g_k) o ... o op(g_1).
inline LinOp op_of_word(const HeckeFamily& fam, const BWord& word) {
  LinOp acc = LinOp::identity(fam.basis.dim());
  for (const BLetter& letter : word) {
    const LinOp& g = letter.e < 0 ? fam.Hinv[letter.i] : fam.H[letter.i];
    acc = g * acc;
  }
  return acc;
}

// Operator image of the basis element H_w (well-defined by Matsumoto).
inline LinOp op_of_element(const HeckeFamily& fam, const SignedPerm& w) {
  BWord word;
  for (int i : w.reduced_word()) word.push_back({i, +1});
  return op_of_word(fam, word);
}

// The ascending all-positive weight tuple: lambda_i copies of the doubled
// letter 2i-1, e.g. lambda = (1,2) -> (1, 3, 3) [entries 1/2, 3/2, 3/2].
inline IndexTuple m_lambda_tuple(const std::vector<int>& lambda, int n) {
  IndexTuple f;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (2 * static_cast<int>(i) + 1 > n - 1)
      throw std::invalid_argument("m_lambda_tuple: too many parts for alphabet");
    for (int t = 0; t < lambda[i]; ++t) f.push_back(2 * static_cast<int>(i) + 1);
  }
  return f;
}

// x_lambda = sum of H_w over the Young subgroup attached to lambda.
inline LinOp x_lambda_op(const HeckeFamily& fam, const std::vector<int>& lambda) {
  LinOp acc(fam.basis.dim());
  for (const SignedPerm& w : young_subgroup(lambda))
    acc = acc + op_of_element(fam, w);
  return acc;
}

// ---------------------------------------------------------------------------
// Relation verification.
// ---------------------------------------------------------------------------

// Verifies, on the given matrices, every defining relation of H(B_m):
// quadratic, inverses, commuting pairs, the 3-letter braid relations
// (1 <= i <= m-2), the 4-letter braid relation at 0, and (for m <= 3)
// Matsumoto invariance of H_w over all reduced words.
inline std::vector<CheckItem> check_hecke_relations(const HeckeFamily& fam,
                                                    const std::string& prefix = "heckeB") {
  std::vector<CheckItem> out;
  const int m = fam.basis.m();
  const int64_t dim = fam.basis.dim();
  const LinOp id = LinOp::identity(dim);
  const RatFunc qinv = RatFunc::q(-1);
  const RatFunc qq = RatFunc::q(1);

  auto nm = [&](const std::string& tail) { return prefix + "." + tail; };

  for (int i = 0; i < m; ++i) {
    const LinOp& A = fam.H[i];
    LinOp quad = (A - id.scaled(qinv)) * (A + id.scaled(qq));
    out.push_back(CheckItem::require(quad.is_zero(),
                                     nm("quadratic.H" + std::to_string(i)),
                                     "(H_i - q^-1)(H_i + q) = 0"));
    out.push_back(CheckItem::require(
        fam.Hinv[i] * A == id && A * fam.Hinv[i] == id,
        nm("inverse.H" + std::to_string(i)),
        "H_i H_i^-1 = H_i^-1 H_i = 1"));
  }
  for (int i = 1; i + 1 <= m - 1; ++i) {
    const LinOp& A = fam.H[i];
    const LinOp& B = fam.H[i + 1];
    out.push_back(CheckItem::require(
        A * B * A == B * A * B,
        nm("braid3.H" + std::to_string(i) + "H" + std::to_string(i + 1)),
        "H_i H_{i+1} H_i = H_{i+1} H_i H_{i+1}"));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) {
      out.push_back(CheckItem::require(
          fam.H[i] * fam.H[j] == fam.H[j] * fam.H[i],
          nm("commute.H" + std::to_string(i) + "H" + std::to_string(j)),
          "H_i H_j = H_j H_i for |i-j| > 1"));
    }
  if (m >= 2) {
    const LinOp& A = fam.H[0];
    const LinOp& B = fam.H[1];
    out.push_back(CheckItem::require(A * B * A * B == B * A * B * A,
                                     nm("braid4.H0H1"),
                                     "H_0 H_1 H_0 H_1 = H_1 H_0 H_1 H_0"));
  }
  if (m <= 3) {
    bool ok = true;
    std::string witness;
    for (const SignedPerm& w : all_signed_perms(m)) {
      auto words = all_reduced_words(w);
      LinOp ref = op_of_element(fam, w);
      for (const auto& word : words) {
        BWord bw;
        for (int i : word) bw.push_back({i, +1});
        if (op_of_word(fam, bw) != ref) {
          ok = false;
          witness = "element " + w.str();
          break;
        }
      }
      if (!ok) break;
    }
    out.push_back(CheckItem::require(
        ok, nm("matsumoto"),
        ok ? "H_w independent of reduced word, all elements" : witness));
  } else {
    out.push_back(CheckItem::skip(nm("matsumoto"), "enumerated only for m <= 3"));
  }
  return out;
}

}  // namespace bdual

#endif  // BDUAL_HECKEB_HPP
