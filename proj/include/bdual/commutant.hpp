#ifndef BDUAL_COMMUTANT_HPP
#define BDUAL_COMMUTANT_HPP

// Exact linear algebra for subalgebra closures and centralizers, over either
// Q(q) (exact mode) or Q at a sampled rational point (eval mode), plus the
// verification routines built on top:
//
//   * pairwise commutation of the two actions,
//   * double-centralizer checks with an evaluation sandwich certificate,
//   * nondegeneracy of the trace form on the duplex image,
//   * permutation-module orbit dimensions and the level gradation.
//
// Sandwich certificate. Specializing q to a rational point can only DROP the
// rank of a spanning family (closure) and only RAISE the solution dimension
// of a linear condition (centralizer). When the two sides commute exactly,
//   closure_eval <= closure_exact <= centralizer_exact <= centralizer_eval,
// so observing closure_eval == centralizer_eval at a point proves the exact
// equality closure_exact == centralizer_exact.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bdual/checks.hpp"
#include "bdual/duplex.hpp"
#include "bdual/heckeb.hpp"
#include "bdual/iquantum.hpp"
#include "bdual/ratfunc.hpp"
#include "bdual/tensorspace.hpp"

namespace bdual {

inline std::string value_str(const BigRat& v) { return v.str(); }
inline std::string value_str(const RatFunc& v) { return v.str(); }

// Ceiling on flattened operator-space dimension (N^2) for commutant work;
// override with BDUAL_MAX_COMMUTANT.
inline int64_t default_commutant_cap() {
  if (const char* env = std::getenv("BDUAL_MAX_COMMUTANT")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 5000;
}

// ---------------------------------------------------------------------------
// Sparse rows and incremental Gaussian elimination over a field F
// (F = RatFunc or BigRat; both provide +,-,*,/ and is_zero()).
// ---------------------------------------------------------------------------
template <typename F>
using SparseRow = std::vector<std::pair<int64_t, F>>;  // sorted by index

template <typename F>
SparseRow<F> row_axpy(const SparseRow<F>& a, const F& c, const SparseRow<F>& b) {
  // a + c*b, merged.
  SparseRow<F> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      F v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      F v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename F>
class Rref {
 public:
  // Gaussian reduction by leading index; inserts the reduced row (normalized
  // to leading coefficient 1) when nonzero. Returns true when the row was
  // independent of the current span.
  bool insert(SparseRow<F> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    F inv = F(1) / v.front().second;
    for (auto& [idx, val] : v) {
      (void)idx;
      val = val * inv;
    }
    int64_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  // Eliminate the leading index repeatedly while a pivot row exists for it.
  SparseRow<F> reduce(SparseRow<F> v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) break;
      F c = F(0) - v.front().second;
      v = row_axpy(v, c, it->second);
    }
    return v;
  }

  size_t dim() const { return rows_.size(); }

 private:
  std::map<int64_t, SparseRow<F>> rows_;  // pivot index -> row
};

// Kernel of the linear map  c  |->  sum_t c_t * vecs[t]  (vectors living in
// coordinates 0..coord_dim-1). Returns kernel basis elements as sparse rows
// over the index t. Elimination with an identity augmentation: a row whose
// coordinate part cancels completely yields a kernel element; augmentation
// indices sit above coord_dim, so they never become pivots and are carried
// through every reduction.
template <typename F>
std::vector<SparseRow<F>> kernel_coefficients(
    const std::vector<SparseRow<F>>& vecs, int64_t coord_dim) {
  Rref<F> rref;
  std::vector<SparseRow<F>> kernel;
  for (size_t t = 0; t < vecs.size(); ++t) {
    SparseRow<F> row = vecs[t];
    row.emplace_back(coord_dim + static_cast<int64_t>(t), F(1));
    row = rref.reduce(std::move(row));
    if (row.empty() || row.front().first >= coord_dim) {
      SparseRow<F> coeffs;
      for (const auto& [idx, val] : row)
        coeffs.emplace_back(idx - coord_dim, val);
      kernel.push_back(std::move(coeffs));
    } else {
      rref.insert(std::move(row));
    }
  }
  return kernel;
}

// ---------------------------------------------------------------------------
// Operator matrices over F (column-sparse), flattenable to rows of length N^2.
// ---------------------------------------------------------------------------
template <typename F>
struct OpMat {
  int64_t n = 0;
  std::vector<std::map<int64_t, F>> cols;

  OpMat() = default;
  explicit OpMat(int64_t dim) : n(dim), cols(static_cast<size_t>(dim)) {}

  static OpMat identity(int64_t dim) {
    OpMat a(dim);
    for (int64_t j = 0; j < dim; ++j) a.cols[static_cast<size_t>(j)][j] = F(1);
    return a;
  }

  bool is_zero() const {
    for (const auto& c : cols)
      if (!c.empty()) return false;
    return true;
  }

  bool is_diagonal() const {
    for (int64_t j = 0; j < n; ++j)
      for (const auto& [i, v] : cols[static_cast<size_t>(j)]) {
        (void)v;
        if (i != j) return false;
      }
    return true;
  }

  OpMat operator*(const OpMat& o) const {  // this applied after o
    OpMat r(n);
    for (int64_t j = 0; j < n; ++j) {
      auto& dst = r.cols[static_cast<size_t>(j)];
      for (const auto& [k, x] : o.cols[static_cast<size_t>(j)]) {
        for (const auto& [i, a] : cols[static_cast<size_t>(k)]) {
          auto it = dst.find(i);
          if (it == dst.end()) {
            F v = a * x;
            if (!v.is_zero()) dst.emplace(i, std::move(v));
          } else {
            it->second += a * x;
            if (it->second.is_zero()) dst.erase(it);
          }
        }
      }
    }
    return r;
  }

  OpMat operator-(const OpMat& o) const {
    OpMat r = *this;
    r.add_scaled(o, F(0) - F(1));
    return r;
  }

  void add_scaled(const OpMat& o, const F& c) {
    for (int64_t j = 0; j < n; ++j)
      for (const auto& [i, x] : o.cols[static_cast<size_t>(j)]) {
        auto& dst = cols[static_cast<size_t>(j)];
        auto it = dst.find(i);
        if (it == dst.end()) {
          F v = c * x;
          if (!v.is_zero()) dst.emplace(i, std::move(v));
        } else {
          it->second += c * x;
          if (it->second.is_zero()) dst.erase(it);
        }
      }
  }

  SparseRow<F> flatten() const {  // index = row*n + col
    std::map<int64_t, F> tmp;
    for (int64_t j = 0; j < n; ++j)
      for (const auto& [i, x] : cols[static_cast<size_t>(j)])
        tmp.emplace(i * n + j, x);
    return SparseRow<F>(tmp.begin(), tmp.end());
  }

  F trace_with(const OpMat& o) const {  // tr(this * o)
    F acc(0);
    for (int64_t j = 0; j < n; ++j)
      for (const auto& [k, x] : o.cols[static_cast<size_t>(j)]) {
        const auto& ck = cols[static_cast<size_t>(k)];
        auto it = ck.find(j);
        if (it != ck.end()) acc += it->second * x;
      }
    return acc;
  }
};

inline OpMat<RatFunc> to_exact(const LinOp& a) {
  OpMat<RatFunc> r(a.dim());
  for (int64_t j = 0; j < a.dim(); ++j)
    r.cols[static_cast<size_t>(j)] = a.col(j);
  return r;
}

// Evaluate every entry at q = pt; throws PoleError if any entry has a pole.
inline OpMat<BigRat> to_eval(const LinOp& a, const BigRat& pt) {
  OpMat<BigRat> r(a.dim());
  for (int64_t j = 0; j < a.dim(); ++j)
    for (const auto& [i, x] : a.col(j)) {
      BigRat v = x.eval(pt);
      if (!v.is_zero()) r.cols[static_cast<size_t>(j)].emplace(i, v);
    }
  return r;
}

// Rank of the flattened family.
template <typename F>
int64_t span_dimension(const std::vector<OpMat<F>>& ops) {
  Rref<F> rref;
  for (const auto& a : ops) rref.insert(a.flatten());
  return static_cast<int64_t>(rref.dim());
}

// ---------------------------------------------------------------------------
// Unital algebra closure: span of all words in the generators. The worklist
// keeps only independent elements; once it drains, the span is stable under
// left and right multiplication by every generator, hence is the algebra.
// ---------------------------------------------------------------------------
template <typename F>
struct ClosureOutcome {
  bool completed = false;
  std::vector<OpMat<F>> basis;
};

template <typename F>
ClosureOutcome<F> algebra_closure(const std::vector<OpMat<F>>& gens,
                                  int64_t max_dim) {
  ClosureOutcome<F> out;
  if (gens.empty()) return out;
  const int64_t n = gens[0].n;
  Rref<F> rref;
  std::vector<OpMat<F>> basis;
  std::vector<size_t> queue;
  auto try_add = [&](OpMat<F> a) {
    if (rref.insert(a.flatten())) {
      basis.push_back(std::move(a));
      queue.push_back(basis.size() - 1);
    }
  };
  try_add(OpMat<F>::identity(n));
  for (const auto& g : gens) try_add(g);
  while (!queue.empty()) {
    if (static_cast<int64_t>(basis.size()) > max_dim) return out;  // capped
    size_t idx = queue.back();
    queue.pop_back();
    OpMat<F> b = basis[idx];  // copy: basis may grow during the loop
    for (const auto& g : gens) {
      try_add(g * b);
      try_add(b * g);
    }
  }
  out.completed = true;
  out.basis = std::move(basis);
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer of a generator set, via matrix-unit seeding and per-generator
// Sylvester restriction.
//
// Diagonal generators are handled first: a matrix unit E_ij commutes with
// every diagonal generator iff positions i and j carry identical joint
// eigenvalues, so the centralizer of the diagonal part is spanned by the
// units within joint-eigenvalue classes. Each remaining generator g then
// cuts the current space W down to the kernel of w |-> g w - w g; the cut
// preserves membership in every previously imposed kernel, so one pass over
// the generators suffices.
// ---------------------------------------------------------------------------
template <typename F>
std::vector<OpMat<F>> centralizer_basis(const std::vector<OpMat<F>>& gens,
                                        int64_t unit_cap) {
  if (gens.empty())
    throw std::invalid_argument("centralizer_basis: no generators");
  const int64_t n = gens[0].n;

  std::vector<const OpMat<F>*> diag, rest;
  for (const auto& g : gens) (g.is_diagonal() ? diag : rest).push_back(&g);

  // Joint eigenvalue signature of each position under the diagonal part.
  std::map<std::string, std::vector<int64_t>> classes;
  for (int64_t j = 0; j < n; ++j) {
    std::string sig;
    for (const auto* g : diag) {
      const auto& cj = g->cols[static_cast<size_t>(j)];
      auto it = cj.find(j);
      sig += (it == cj.end() ? std::string("0") : value_str(it->second));
      sig += "|";
    }
    classes[sig].push_back(j);
  }
  int64_t seed_count = 0;
  for (const auto& [sig, members] : classes) {
    (void)sig;
    seed_count += static_cast<int64_t>(members.size()) *
                  static_cast<int64_t>(members.size());
  }
  if (seed_count > unit_cap)
    throw SizeGuardError("centralizer seed of " + std::to_string(seed_count) +
                         " matrix units exceeds cap " +
                         std::to_string(unit_cap));

  std::vector<OpMat<F>> W;
  W.reserve(static_cast<size_t>(seed_count));
  for (const auto& [sig, members] : classes) {
    (void)sig;
    for (int64_t i : members)
      for (int64_t j : members) {
        OpMat<F> unit(n);
        unit.cols[static_cast<size_t>(j)][i] = F(1);
        W.push_back(std::move(unit));
      }
  }

  for (const auto* g : rest) {
    std::vector<SparseRow<F>> constraints;
    constraints.reserve(W.size());
    for (const auto& w : W)
      constraints.push_back(((*g) * w - w * (*g)).flatten());
    std::vector<SparseRow<F>> kernel = kernel_coefficients(constraints, n * n);
    std::vector<OpMat<F>> next;
    next.reserve(kernel.size());
    for (const auto& coeffs : kernel) {
      OpMat<F> combo(n);
      for (const auto& [t, c] : coeffs)
        combo.add_scaled(W[static_cast<size_t>(t)], c);
      next.push_back(std::move(combo));
    }
    W = std::move(next);
    if (W.empty()) break;
  }
  return W;
}

// ---------------------------------------------------------------------------
// Evaluation points: random rationals a/b with |a|,b <= 1000, avoiding q = 0
// and q = +-1.
// ---------------------------------------------------------------------------
inline BigRat sample_eval_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  while (true) {
    long a = num(rng), b = den(rng);
    if (a == 0) continue;            // q = 0 is a pole of q^{-1}
    if (a == b || a == -b) continue; // q = +-1 degenerates the quadratic
    return BigRat(a, b);
  }
}

// ---------------------------------------------------------------------------
// Generator inventories for the two sides of each duality.
// ---------------------------------------------------------------------------
struct NamedLinOp {
  std::string name;
  LinOp op;
};

// Duplex generators: the braid-group images plus every x operator.
inline std::vector<NamedLinOp> duplex_generator_ops(const DuplexFamily& fam) {
  std::vector<NamedLinOp> out;
  int m = fam.hecke.basis.m();
  for (int i = 0; i < m; ++i)
    out.push_back(
        {"T" + std::to_string(i), fam.hecke.H[static_cast<size_t>(i)]});
  for (int l = 0; l < static_cast<int>(fam.xop.size()); ++l)
    for (const auto& [window, op] : fam.xop[static_cast<size_t>(l)]) {
      std::string nm = "x" + std::to_string(l) + "(";
      for (size_t k = 0; k < window.size(); ++k) {
        if (k) nm += ",";
        nm += std::to_string(window[k]);
      }
      nm += ")";
      out.push_back({nm, op});
    }
  return out;
}

inline std::vector<NamedLinOp> hecke_generator_ops(const HeckeFamily& fam) {
  std::vector<NamedLinOp> out;
  int m = fam.basis.m();
  for (int i = 0; i < m; ++i)
    out.push_back({"H" + std::to_string(i), fam.H[static_cast<size_t>(i)]});
  return out;
}

inline int64_t enhanced_dim_checked(int r, int m, int64_t flat_cap) {
  // Returns the enhanced space dimension if its square fits under flat_cap,
  // otherwise -1.
  int64_t dim = 1;
  for (int k = 0; k < m; ++k) {
    if (dim > flat_cap) return -1;
    dim *= 2 * r + 4;
  }
  if (dim > flat_cap || dim * dim > flat_cap) return -1;
  return dim;
}

// ---------------------------------------------------------------------------
// Pairwise commutation between the quantum-group side and the Hecke-type
// side. side == "levi": Levi generators against the duplex generators.
// side == "full": full generator set against the braid-group images alone.
// ---------------------------------------------------------------------------
inline std::vector<CheckItem> check_commutation(int r, int m,
                                                const std::string& side,
                                                int64_t dim_cap) {
  std::vector<CheckItem> items;
  std::string prefix = "commute." + side;
  int64_t dim = 1;
  bool too_big = false;
  for (int k = 0; k < m; ++k) {
    if (dim > dim_cap / (2 * r + 4)) {
      too_big = true;
      break;
    }
    dim *= 2 * r + 4;
  }
  if (too_big || dim > dim_cap) {
    items.push_back(CheckItem::skip(prefix, "space dimension exceeds cap " +
                                                std::to_string(dim_cap)));
    return items;
  }

  TensorBasis basis(2 * r + 4, m, dim_cap);
  std::vector<NamedOp> qgens = side == "full" ? full_iota_generators(basis, r)
                                              : levi_generators(basis, r);

  std::vector<NamedLinOp> hgens;
  if (side == "full") {
    HeckeFamily hecke = build_hecke_family(basis);
    hgens = hecke_generator_ops(hecke);
  } else {
    DuplexFamily fam = build_duplex_family(r, m, dim_cap);
    hgens = duplex_generator_ops(fam);
  }

  LinOp zero(basis.dim());
  for (const auto& qg : qgens)
    for (const auto& hg : hgens) {
      LinOp c = commutator(qg.op, hg.op);
      std::string name = prefix + "." + qg.name + ".vs." + hg.name;
      if (c == zero)
        items.push_back(CheckItem::pass(name));
      else
        items.push_back(CheckItem::fail(name, "nonzero commutator"));
    }
  return items;
}

// ---------------------------------------------------------------------------
// Double-centralizer verification.
// ---------------------------------------------------------------------------
struct DualityReport {
  std::string side;  // "levi" or "full"
  std::string mode;  // "exact" or "eval"
  // Certified dimensions of the two paired statements:
  //   closure(quantum side) == centralizer(Hecke-type side)
  //   closure(Hecke-type side) == centralizer(quantum side)
  int64_t quantum_closure_dim = -1;
  int64_t hecke_closure_dim = -1;
  std::vector<std::string> points_used;  // eval mode only
  std::vector<CheckItem> items;
};

namespace detail_commutant {

struct FourDims {
  int64_t quantum_closure = -1, hecke_closure = -1;
  int64_t quantum_centralizer = -1, hecke_centralizer = -1;
  bool closure_capped = false;
};

template <typename F>
FourDims duality_dims(const std::vector<OpMat<F>>& qgens,
                      const std::vector<OpMat<F>>& hgens, int64_t unit_cap) {
  FourDims d;
  const int64_t n = qgens.at(0).n;
  int64_t closure_cap = n * n;
  auto qc = algebra_closure(qgens, closure_cap);
  auto hc = algebra_closure(hgens, closure_cap);
  d.closure_capped = !qc.completed || !hc.completed;
  if (d.closure_capped) return d;
  d.quantum_closure = static_cast<int64_t>(qc.basis.size());
  d.hecke_closure = static_cast<int64_t>(hc.basis.size());
  // centralizer(hecke side generators) should match closure(quantum) et vice
  // versa.
  d.quantum_centralizer =
      static_cast<int64_t>(centralizer_basis(hgens, unit_cap).size());
  d.hecke_centralizer =
      static_cast<int64_t>(centralizer_basis(qgens, unit_cap).size());
  return d;
}

}  // namespace detail_commutant

// Verifies closure(quantum) == centralizer(Hecke-type) and vice versa.
//
// Exact mode computes all four spaces over Q(q). Eval mode establishes exact
// pairwise commutation over Q(q) (giving the exact inclusions closure <=
// centralizer), then certifies dimension equality via the sandwich argument
// at sampled rational points; two agreeing points are required.
inline DualityReport double_centralizer_check(int r, int m,
                                              const std::string& side,
                                              const std::string& mode,
                                              uint64_t seed, int64_t unit_cap) {
  DualityReport rep;
  rep.side = side;
  rep.mode = mode;
  std::string prefix = "duality." + side + "." + mode;

  int64_t dim = enhanced_dim_checked(r, m, unit_cap);
  if (dim < 0) {
    rep.items.push_back(CheckItem::skip(
        prefix,
        "flattened operator space exceeds cap " + std::to_string(unit_cap)));
    return rep;
  }

  TensorBasis basis(2 * r + 4, m, unit_cap);
  std::vector<NamedOp> qnamed = side == "full" ? full_iota_generators(basis, r)
                                               : levi_generators(basis, r);
  std::vector<NamedLinOp> hnamed;
  if (side == "full") {
    HeckeFamily hecke = build_hecke_family(basis);
    hnamed = hecke_generator_ops(hecke);
  } else {
    DuplexFamily fam = build_duplex_family(r, m, unit_cap);
    hnamed = duplex_generator_ops(fam);
  }

  // Exact pairwise commutation: yields closure <= centralizer over Q(q).
  bool commute_ok = true;
  LinOp zero(basis.dim());
  for (const auto& qg : qnamed) {
    for (const auto& hg : hnamed) {
      if (!(commutator(qg.op, hg.op) == zero)) {
        commute_ok = false;
        rep.items.push_back(CheckItem::fail(
            prefix + ".inclusion",
            "nonzero commutator [" + qg.name + ", " + hg.name + "]"));
        break;
      }
    }
    if (!commute_ok) break;
  }
  if (commute_ok) rep.items.push_back(CheckItem::pass(prefix + ".inclusion"));

  if (mode == "exact") {
    std::vector<OpMat<RatFunc>> qgens, hgens;
    for (const auto& g : qnamed) qgens.push_back(to_exact(g.op));
    for (const auto& g : hnamed) hgens.push_back(to_exact(g.op));
    auto d = detail_commutant::duality_dims(qgens, hgens, unit_cap);
    if (d.closure_capped) {
      rep.items.push_back(
          CheckItem::fail(prefix, "closure did not stabilize under the cap"));
      return rep;
    }
    rep.quantum_closure_dim = d.quantum_closure;
    rep.hecke_closure_dim = d.hecke_closure;
    std::string detail =
        "closure(quantum)=" + std::to_string(d.quantum_closure) +
        " centralizer(hecke-side)=" + std::to_string(d.quantum_centralizer) +
        " closure(hecke-side)=" + std::to_string(d.hecke_closure) +
        " centralizer(quantum)=" + std::to_string(d.hecke_centralizer);
    bool ok1 = d.quantum_closure == d.quantum_centralizer;
    bool ok2 = d.hecke_closure == d.hecke_centralizer;
    rep.items.push_back(
        CheckItem::require(
        ok1 && commute_ok, prefix + ".quantum_side",
        detail));
    rep.items.push_back(
        CheckItem::require(
        ok2 && commute_ok, prefix + ".hecke_side",
        detail));
    return rep;
  }

  // Eval mode.
  std::mt19937_64 rng(seed);
  const int wanted_agreeing = 2;
  const int max_attempts = 24;
  std::vector<std::pair<std::string, detail_commutant::FourDims>> good;
  for (int attempt = 0; attempt < max_attempts &&
                        static_cast<int>(good.size()) < wanted_agreeing;
       ++attempt) {
    BigRat pt = sample_eval_point(rng);
    try {
      std::vector<OpMat<BigRat>> qgens, hgens;
      for (const auto& g : qnamed) qgens.push_back(to_eval(g.op, pt));
      for (const auto& g : hnamed) hgens.push_back(to_eval(g.op, pt));
      auto d = detail_commutant::duality_dims(qgens, hgens, unit_cap);
      if (d.closure_capped) continue;
      // Sandwich: equality at the point, together with the exact inclusion,
      // certifies the exact equality.
      if (d.quantum_closure != d.quantum_centralizer ||
          d.hecke_closure != d.hecke_centralizer)
        continue;  // degenerate point; resample
      if (!good.empty()) {
        const auto& prev = good.back().second;
        if (prev.quantum_closure != d.quantum_closure ||
            prev.hecke_closure != d.hecke_closure)
          continue;
      }
      good.emplace_back(pt.str(), d);
    } catch (const PoleError&) {
      continue;
    }
  }
  if (static_cast<int>(good.size()) < wanted_agreeing) {
    rep.items.push_back(CheckItem::fail(
        prefix + ".sandwich",
        "no two sampled points yielded agreeing closure == centralizer"));
    return rep;
  }
  const auto& d = good.front().second;
  rep.quantum_closure_dim = d.quantum_closure;
  rep.hecke_closure_dim = d.hecke_closure;
  std::string pts;
  for (const auto& [p, dd] : good) {
    (void)dd;
    if (!pts.empty()) pts += ", ";
    pts += "q=" + p;
    rep.points_used.push_back(p);
  }
  std::string detail =
      "closure(quantum)=" + std::to_string(d.quantum_closure) +
      " closure(hecke-side)=" + std::to_string(d.hecke_closure) +
      " == centralizers at points " + pts +
      "; with exact commutation this pins the exact dimensions";
  rep.items.push_back(
      CheckItem::require(
        commute_ok, prefix + ".quantum_side",
        detail));
  rep.items.push_back(
      CheckItem::require(
        commute_ok, prefix + ".hecke_side",
        detail));
  return rep;
}

// ---------------------------------------------------------------------------
// Trace form on the duplex image: semisimplicity witness.
// ---------------------------------------------------------------------------
struct SemisimpleReport {
  int64_t algebra_dim = -1;
  int64_t gram_rank = -1;
  std::vector<CheckItem> items;
};

inline SemisimpleReport semisimplicity_check(int r, int m, int64_t unit_cap) {
  SemisimpleReport rep;
  std::string prefix = "semisimple";
  int64_t dim = enhanced_dim_checked(r, m, unit_cap);
  if (dim < 0) {
    rep.items.push_back(
        CheckItem::skip(prefix, "flattened operator space exceeds cap " +
                                    std::to_string(unit_cap)));
    return rep;
  }

  DuplexFamily fam = build_duplex_family(r, m, unit_cap);
  std::vector<OpMat<RatFunc>> gens;
  for (const auto& g : duplex_generator_ops(fam))
    gens.push_back(to_exact(g.op));
  auto closure = algebra_closure(gens, dim * dim);
  if (!closure.completed) {
    rep.items.push_back(CheckItem::fail(prefix, "closure did not stabilize"));
    return rep;
  }
  rep.algebra_dim = static_cast<int64_t>(closure.basis.size());

  // Gram matrix of the trace form on the closure basis; nondegenerate iff
  // full rank.
  Rref<RatFunc> rref;
  const size_t k = closure.basis.size();
  for (size_t a = 0; a < k; ++a) {
    SparseRow<RatFunc> row;
    for (size_t b = 0; b < k; ++b) {
      RatFunc t = closure.basis[a].trace_with(closure.basis[b]);
      if (!t.is_zero()) row.emplace_back(static_cast<int64_t>(b), t);
    }
    rref.insert(std::move(row));
  }
  rep.gram_rank = static_cast<int64_t>(rref.dim());
  rep.items.push_back(CheckItem::require(
        rep.gram_rank == rep.algebra_dim, prefix + ".trace_form",
        "algebra dim " + std::to_string(rep.algebra_dim) + ", trace Gram rank " +
          std::to_string(rep.gram_rank)));
  return rep;
}

// ---------------------------------------------------------------------------
// Permutation modules inside the plain tensor space (even ambient alphabet
// n): for each weight, the cyclic module generated by the ascending
// all-positive basis vector must fill the full weight space, whose dimension
// is multinomial(m; lambda) * 2^m.
// ---------------------------------------------------------------------------
struct SchurReport {
  std::vector<std::string> weights;
  std::vector<int64_t> orbit_dims;
  std::vector<int64_t> expected_dims;
  std::vector<CheckItem> items;
};

inline SchurReport permutation_module_check(int n, int m, int64_t dim_cap) {
  SchurReport rep;
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "permutation_module_check: ambient n must be even");
  TensorBasis basis(n, m, dim_cap);

  auto weight_key = [](const std::vector<int>& lam) {
    std::string s = "(";
    for (size_t i = 0; i < lam.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(lam[i]);
    }
    return s + ")";
  };

  for (const auto& lam : compositions(n / 2, m)) {
    IndexTuple seed = m_lambda_tuple(lam, n);
    int64_t expected = 1;
    {
      int rem = m;
      for (int part : lam) {
        expected *= binomial(rem, part);
        rem -= part;
      }
      for (int k = 0; k < m; ++k) expected *= 2;
    }

    Rref<RatFunc> rref;
    std::vector<SparseVec> vecs;
    std::vector<size_t> queue;
    bool inside_weight_space = true;
    auto flat = [&](const SparseVec& v) {
      SparseRow<RatFunc> row;
      for (const auto& [tup, c] : v.c) row.emplace_back(basis.rank(tup), c);
      return row;
    };
    auto try_add = [&](SparseVec v) {
      for (const auto& [tup, c] : v.c) {
        (void)c;
        if (weight_of(tup, n) != lam) inside_weight_space = false;
      }
      if (rref.insert(flat(v))) {
        vecs.push_back(std::move(v));
        queue.push_back(vecs.size() - 1);
      }
    };
    try_add(SparseVec::unit(seed));
    while (!queue.empty()) {
      size_t idx = queue.back();
      queue.pop_back();
      SparseVec v = vecs[idx];  // copy: vecs may grow during the loop
      for (int i = 0; i < m; ++i) {
        SparseVec img;
        for (const auto& [tup, c] : v.c)
          img.add_scaled(act_hecke_letter(tup, i, false), c);
        try_add(std::move(img));
      }
    }

    int64_t got = static_cast<int64_t>(rref.dim());
    rep.weights.push_back(weight_key(lam));
    rep.orbit_dims.push_back(got);
    rep.expected_dims.push_back(expected);
    rep.items.push_back(CheckItem::require(
        got == expected && inside_weight_space, "schur.orbit." + weight_key(lam),
        "orbit dim " + std::to_string(got) + ", weight-space dim " +
            std::to_string(expected) +
            (inside_weight_space ? "" : ", orbit left the weight space")));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Level gradation of the duplex centralizer: every operator commuting with
// the duplex image must preserve each level component.
// ---------------------------------------------------------------------------
inline std::vector<CheckItem> gradation_check(int r, int m, int64_t unit_cap) {
  std::vector<CheckItem> items;
  std::string prefix = "gradation";
  int64_t dim = enhanced_dim_checked(r, m, unit_cap);
  if (dim < 0) {
    items.push_back(
        CheckItem::skip(prefix, "flattened operator space exceeds cap " +
                                    std::to_string(unit_cap)));
    return items;
  }

  DuplexFamily fam = build_duplex_family(r, m, unit_cap);
  const TensorBasis& basis = fam.hecke.basis;
  std::vector<OpMat<RatFunc>> gens;
  for (const auto& g : duplex_generator_ops(fam))
    gens.push_back(to_exact(g.op));
  std::vector<OpMat<RatFunc>> cent = centralizer_basis(gens, unit_cap);

  std::vector<int> level_of(static_cast<size_t>(basis.dim()));
  for (int64_t j = 0; j < basis.dim(); ++j)
    level_of[static_cast<size_t>(j)] =
        classify_enhanced(basis.unrank(j), r).level;

  bool graded = true;
  std::string witness;
  for (size_t t = 0; t < cent.size() && graded; ++t)
    for (int64_t j = 0; j < basis.dim() && graded; ++j)
      for (const auto& [i, v] : cent[t].cols[static_cast<size_t>(j)]) {
        (void)v;
        if (level_of[static_cast<size_t>(i)] !=
            level_of[static_cast<size_t>(j)]) {
          graded = false;
          witness = "centralizer element " + std::to_string(t) +
                    " maps level " +
                    std::to_string(level_of[static_cast<size_t>(j)]) +
                    " into level " +
                    std::to_string(level_of[static_cast<size_t>(i)]);
          break;
        }
      }
  items.push_back(CheckItem::require(
        graded, prefix + ".level_blocks",
        graded ? "centralizer dim " + std::to_string(cent.size()) +
                   ", all elements preserve every level"
             : witness));
  return items;
}

}  // namespace bdual

#endif  // BDUAL_COMMUTANT_HPP
