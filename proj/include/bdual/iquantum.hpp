#ifndef BDUAL_IQUANTUM_HPP
#define BDUAL_IQUANTUM_HPP

// Left action of the quantum group of sl_n (n = 2r+4) and its coideal
// subalgebras on the enhanced tensor space.
//
// Simple roots are indexed by the 2r+3 integers i in {-(r+1), ..., r+1}.
// On a single factor (basis eta_d, d the doubled entry):
//   E_i: eta_{i+1/2} -> eta_{i-1/2}   (doubled: 2i+1 -> 2i-1), else 0
//   F_i: eta_{i-1/2} -> eta_{i+1/2}   (doubled: 2i-1 -> 2i+1), else 0
//   K_i: diagonal with eigenvalue q on eta_{i-1/2}, q^{-1} on eta_{i+1/2}, 1 else.
// On m factors the iterated coproduct gives
//   K_i  |-> K_i x ... x K_i
//   E_i  |-> sum_j 1^(j-1) x E_i x (K_i^{-1})^(m-j)
//   F_i  |-> sum_j K_i^(j-1) x F_i x 1^(m-j).
//
// Coideal generators (left action throughout, op(ab) = op(a) o op(b)):
//   B_i = E_i + F_{-i} K_i^{-1}  (i != 0),
//   B_0 = E_0 + q F_0 K_0^{-1} + K_0^{-1},
//   k_i = K_i K_{-i}^{-1}   (so k_0 = 1 and k_{-i} = k_i^{-1}).
// The Levi-type set uses B_0, B_i for 1 <= |i| <= r and all k_i^{+-1} for
// 1 <= |i| <= r+1; the full set adds B_{+-(r+1)}.

#include <cstdlib>
#include <string>
#include <vector>

#include "bdual/checks.hpp"
#include "bdual/ratfunc.hpp"
#include "bdual/tensorspace.hpp"

namespace bdual {

// K_i eigenvalue on the single-factor basis vector with doubled entry d.
inline RatFunc k_eigen(int i, int d) {
  if (d == 2 * i - 1) return RatFunc::q(1);
  if (d == 2 * i + 1) return RatFunc::q(-1);
  return RatFunc(1);
}

inline void require_root_index(int i, int n, const char* who) {
  // Need both 2i-1 and 2i+1 inside the alphabet {-(n-1), ..., n-1}.
  if (2 * i + 1 > n - 1 || 2 * i - 1 < -(n - 1))
    throw std::invalid_argument(std::string(who) +
                                ": root index out of range for alphabet");
}

inline SparseVec act_E(const IndexTuple& f, int i, int n) {
  require_root_index(i, n, "act_E");
  SparseVec out;
  const int m = static_cast<int>(f.size());
  for (int j = 0; j < m; ++j) {
    if (f[j] != 2 * i + 1) continue;
    RatFunc coeff(1);
    for (int t = j + 1; t < m; ++t) coeff *= k_eigen(i, f[t]).inv();
    IndexTuple g = f;
    g[j] = 2 * i - 1;
    out.add(g, coeff);
  }
  return out;
}

inline SparseVec act_F(const IndexTuple& f, int i, int n) {
  require_root_index(i, n, "act_F");
  SparseVec out;
  const int m = static_cast<int>(f.size());
  for (int j = 0; j < m; ++j) {
    if (f[j] != 2 * i - 1) continue;
    RatFunc coeff(1);
    for (int t = 0; t < j; ++t) coeff *= k_eigen(i, f[t]);
    IndexTuple g = f;
    g[j] = 2 * i + 1;
    out.add(g, coeff);
  }
  return out;
}

inline SparseVec act_K(const IndexTuple& f, int i, int n, int exp = +1) {
  require_root_index(i, n, "act_K");
  RatFunc coeff(1);
  for (int d : f) coeff *= k_eigen(i, d);
  if (exp < 0) coeff = coeff.inv();
  SparseVec out;
  out.add(f, coeff);
  return out;
}

inline LinOp op_E(const TensorBasis& b, int i) {
  return LinOp::from_action(
      b, [&b, i](const IndexTuple& f) { return act_E(f, i, b.n()); });
}
inline LinOp op_F(const TensorBasis& b, int i) {
  return LinOp::from_action(
      b, [&b, i](const IndexTuple& f) { return act_F(f, i, b.n()); });
}
inline LinOp op_K(const TensorBasis& b, int i, int exp = +1) {
  return LinOp::from_action(
      b, [&b, i, exp](const IndexTuple& f) { return act_K(f, i, b.n(), exp); });
}

// B_i = E_i + F_{-i} K_i^{-1} for i != 0; left action, so composition order
// matches the product order.
inline LinOp op_B(const TensorBasis& b, int i) {
  if (i == 0) {
    // B_0 = E_0 + q F_0 K_0^{-1} + K_0^{-1}.
    LinOp k0inv = op_K(b, 0, -1);
    return op_E(b, 0) + (op_F(b, 0) * k0inv).scaled(RatFunc::q(1)) + k0inv;
  }
  return op_E(b, i) + op_F(b, -i) * op_K(b, i, -1);
}

// k_i = K_i K_{-i}^{-1}; in particular k_0 = id and k_{-i} = k_i^{-1}.
inline LinOp op_k(const TensorBasis& b, int i, int exp = +1) {
  LinOp k = op_K(b, i, +1) * op_K(b, -i, -1);
  if (exp < 0) k = op_K(b, -i, +1) * op_K(b, i, -1);
  return k;
}

struct NamedOp {
  std::string name;
  LinOp op;
};

// The Levi-type generating set (3 + 4r B's and k's pattern; at r = 1 this is
// 11 operators: B0, B+-1, and k_{+-1}^{+-1}, k_{+-2}^{+-1}).
inline std::vector<NamedOp> levi_generators(const TensorBasis& b, int r) {
  std::vector<NamedOp> out;
  out.push_back({"B0", op_B(b, 0)});
  for (int i = 1; i <= r; ++i) {
    out.push_back({"B" + std::to_string(i), op_B(b, i)});
    out.push_back({"B" + std::to_string(-i), op_B(b, -i)});
  }
  for (int i = 1; i <= r + 1; ++i) {
    out.push_back({"k" + std::to_string(i), op_k(b, i, +1)});
    out.push_back({"k" + std::to_string(i) + "^-1", op_k(b, i, -1)});
    out.push_back({"k" + std::to_string(-i), op_k(b, -i, +1)});
    out.push_back({"k" + std::to_string(-i) + "^-1", op_k(b, -i, -1)});
  }
  return out;
}

// The full coideal generating set: Levi plus the boundary B_{+-(r+1)}.
inline std::vector<NamedOp> full_iota_generators(const TensorBasis& b, int r) {
  std::vector<NamedOp> out = levi_generators(b, r);
  out.push_back({"B" + std::to_string(r + 1), op_B(b, r + 1)});
  out.push_back({"B" + std::to_string(-(r + 1)), op_B(b, -(r + 1))});
  return out;
}

// X = k_{r+1}^{r+1} k_r^r ... k_1: diagonal, eigenvalue q on inner letters
// and q^{-(r+1)} on the two boundary letters.
inline LinOp element_X(const TensorBasis& b, int r) {
  LinOp x = LinOp::identity(b.dim());
  for (int i = 1; i <= r + 1; ++i) {
    LinOp ki = op_k(b, i, +1);
    for (int t = 0; t < i; ++t) x = x * ki;
  }
  return x;
}

// Level eigenvalue of X on the m-fold space: F(l) = q^{l(r+2) - m(r+1)}.
inline RatFunc level_scalar(int r, int m, int l) {
  return RatFunc::q(static_cast<long>(l) * (r + 2) -
                    static_cast<long>(m) * (r + 1));
}

// Lagrange projector onto the level-l summand:
//   G_l = prod_{k in {0..m}\{l}} (X - F(k)) / (F(l) - F(k)).
inline LinOp projector_G(const TensorBasis& b, int r, int l) {
  const int m = b.m();
  LinOp x = element_X(b, r);
  LinOp id = LinOp::identity(b.dim());
  LinOp num = id;
  RatFunc den(1);
  for (int k = 0; k <= m; ++k) {
    if (k == l) continue;
    num = num * (x - id.scaled(level_scalar(r, m, k)));
    den *= level_scalar(r, m, l) - level_scalar(r, m, k);
  }
  return num.scaled(den.inv());
}

// ---------------------------------------------------------------------------
// Verification: quantum group relations on the coproduct images, the k-table,
// X / F(l) / G_l laws, level preservation, and small-space restriction
// compatibility of the Levi generators.
// ---------------------------------------------------------------------------
inline std::vector<CheckItem> check_qaction(int r, int m,
                                            int64_t dim_cap = default_dim_cap()) {
  std::vector<CheckItem> out;
  const int n = 2 * r + 4;
  int64_t dim_guard = checked_pow(n, m);
  if (dim_guard > dim_cap) {
    out.push_back(CheckItem::skip(
        "qaction", "dimension " + std::to_string(dim_guard) + " exceeds cap"));
    return out;
  }
  TensorBasis b(n, m, dim_cap);
  const int imax = r + 1;
  const LinOp id = LinOp::identity(b.dim());
  const RatFunc qdiff = RatFunc::q(1) - RatFunc::q(-1);

  std::map<int, LinOp> E, F, K, Kinv;
  for (int i = -imax; i <= imax; ++i) {
    E.emplace(i, op_E(b, i));
    F.emplace(i, op_F(b, i));
    K.emplace(i, op_K(b, i, +1));
    Kinv.emplace(i, op_K(b, i, -1));
  }
  auto cartan = [](int i, int j) {
    if (i == j) return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
  };
  auto istr = [](int i) { return std::to_string(i); };

  for (int i = -imax; i <= imax; ++i) {
    out.push_back(CheckItem::require(
        K.at(i) * Kinv.at(i) == id && Kinv.at(i) * K.at(i) == id,
        "qgroup.Kinv.i" + istr(i), "K_i K_i^-1 = 1"));
    for (int j = i; j <= imax; ++j)
      out.push_back(CheckItem::require(
          K.at(i) * K.at(j) == K.at(j) * K.at(i),
          "qgroup.KK.i" + istr(i) + ".j" + istr(j), "K_i K_j = K_j K_i"));
  }
  for (int i = -imax; i <= imax; ++i)
    for (int j = -imax; j <= imax; ++j) {
      int c = cartan(i, j);
      out.push_back(CheckItem::require(
          K.at(i) * E.at(j) * Kinv.at(i) == E.at(j).scaled(RatFunc::q(c)),
          "qgroup.KEK.i" + istr(i) + ".j" + istr(j),
          "K_i E_j K_i^-1 = q^{c_ij} E_j"));
      out.push_back(CheckItem::require(
          K.at(i) * F.at(j) * Kinv.at(i) == F.at(j).scaled(RatFunc::q(-c)),
          "qgroup.KFK.i" + istr(i) + ".j" + istr(j),
          "K_i F_j K_i^-1 = q^{-c_ij} F_j"));
      LinOp lhs = E.at(i) * F.at(j) - F.at(j) * E.at(i);
      LinOp rhs = i == j ? (K.at(i) - Kinv.at(i)).scaled(qdiff.inv())
                         : LinOp(b.dim());
      out.push_back(CheckItem::require(
          lhs == rhs, "qgroup.EF.i" + istr(i) + ".j" + istr(j),
          "[E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1)"));
      if (c == -1) {
        const RatFunc q1 = RatFunc::q(1) + RatFunc::q(-1);
        LinOp se = E.at(i) * E.at(i) * E.at(j) -
                   (E.at(i) * E.at(j) * E.at(i)).scaled(q1) +
                   E.at(j) * E.at(i) * E.at(i);
        LinOp sf = F.at(i) * F.at(i) * F.at(j) -
                   (F.at(i) * F.at(j) * F.at(i)).scaled(q1) +
                   F.at(j) * F.at(i) * F.at(i);
        out.push_back(CheckItem::require(se.is_zero() && sf.is_zero(),
                                         "qgroup.serre.i" + istr(i) + ".j" + istr(j),
                                         "degree-3 Serre relation"));
      } else if (c == 0 && i != j) {
        out.push_back(CheckItem::require(
            E.at(i) * E.at(j) == E.at(j) * E.at(i) &&
                F.at(i) * F.at(j) == F.at(j) * F.at(i),
            "qgroup.commute.i" + istr(i) + ".j" + istr(j),
            "distant E's and F's commute"));
      }
    }

  // k_i against the explicit eigenvalue table (i >= 1): q on +-(i-1/2),
  // q^{-1} on +-(i+1/2), 1 elsewhere; and k_0 = 1, k_{-i} = k_i^{-1}.
  out.push_back(CheckItem::require(op_k(b, 0) == id, "iota.k0_identity",
                                   "k_0 = K_0 K_0^{-1} = 1"));
  for (int i = 1; i <= imax; ++i) {
    LinOp table = LinOp::from_action(b, [&](const IndexTuple& f) {
      RatFunc c(1);
      for (int d : f) {
        if (std::abs(d) == 2 * i - 1)
          c *= RatFunc::q(1);
        else if (std::abs(d) == 2 * i + 1)
          c *= RatFunc::q(-1);
      }
      return SparseVec::unit(f).scaled(c);
    });
    out.push_back(CheckItem::require(op_k(b, i) == table,
                                     "iota.kTable.i" + istr(i),
                                     "k_i matches its eigenvalue table"));
    out.push_back(CheckItem::require(
        op_k(b, -i) == op_k(b, i, -1) && op_k(b, i) * op_k(b, i, -1) == id,
        "iota.kNeg.i" + istr(i), "k_{-i} = k_i^{-1}"));
  }

  // X is diagonal with eigenvalue F(l) on every level-l basis vector.
  {
    LinOp x = element_X(b, r);
    bool ok = true;
    std::string witness;
    for (int64_t j = 0; j < b.dim() && ok; ++j) {
      IndexTuple f = b.unrank(j);
      int l = classify_enhanced(f, r).level;
      auto colj = x.col(j);
      if (colj.size() != 1 || colj.begin()->first != j ||
          colj.begin()->second != level_scalar(r, m, l)) {
        ok = false;
        witness = "wrong X eigenvalue at basis rank " + std::to_string(j);
      }
    }
    out.push_back(CheckItem::require(ok, "iota.Xeigen",
                                     ok ? "X = F(level) pointwise" : witness));
  }

  // Lagrange projectors: orthogonal idempotent resolution of identity that
  // picks out the level components.
  {
    std::vector<LinOp> G;
    for (int l = 0; l <= m; ++l) G.push_back(projector_G(b, r, l));
    LinOp sum(b.dim());
    for (const auto& g : G) sum = sum + g;
    out.push_back(
        CheckItem::require(sum == id, "iota.Gsum", "sum_l G_l = id"));
    bool orth = true;
    for (int l = 0; l <= m && orth; ++l)
      for (int k = 0; k <= m && orth; ++k) {
        LinOp prod = G[l] * G[k];
        if (l == k ? (prod != G[l]) : !prod.is_zero()) orth = false;
      }
    out.push_back(CheckItem::require(orth, "iota.Gorth",
                                     "G_l G_k = delta_lk G_l"));
    bool restr = true;
    for (int l = 0; l <= m && restr; ++l)
      for (int64_t j = 0; j < b.dim() && restr; ++j) {
        int lev = classify_enhanced(b.unrank(j), r).level;
        auto colj = G[l].col(j);
        if (lev == l) {
          if (colj.size() != 1 || colj.begin()->first != j ||
              !colj.begin()->second.is_one())
            restr = false;
        } else if (!colj.empty()) {
          restr = false;
        }
      }
    out.push_back(CheckItem::require(
        restr, "iota.Grestrict", "G_l = id on level l, 0 on other levels"));
  }

  // Levi generators preserve every level component.
  for (const NamedOp& g : levi_generators(b, r)) {
    bool ok = true;
    for (int64_t j = 0; j < b.dim() && ok; ++j) {
      int lev = classify_enhanced(b.unrank(j), r).level;
      for (const auto& [row, val] : g.op.col(j)) {
        (void)val;
        if (classify_enhanced(b.unrank(row), r).level != lev) {
          ok = false;
          break;
        }
      }
    }
    out.push_back(CheckItem::require(ok, "iota.levelPreserve." + g.name,
                                     "generator preserves each level"));
  }

  // Restriction compatibility: on the distinguished level-l component the
  // inner generators (|i| <= r, plus B_0 and k_i) act exactly as on an
  // independently built l-factor inner tensor space, the boundary tail being
  // transparent.
  for (int l = 1; l <= m; ++l) {
    bool ok = true;
    std::string witness;
    TensorBasis small(2 * r + 2, l, dim_cap);
    std::vector<std::pair<std::string, int>> gens;  // (kind+index)
    gens.push_back({"B", 0});
    for (int i = 1; i <= r; ++i) {
      gens.push_back({"B", i});
      gens.push_back({"B", -i});
      gens.push_back({"k", i});
      gens.push_back({"k", -i});
    }
    for (const auto& [kind, i] : gens) {
      LinOp big = kind == "B" ? op_B(b, i) : op_k(b, i);
      LinOp sml = kind == "B" ? op_B(small, i) : op_k(small, i);
      // Enumerate the component and compare columns factor-by-factor.
      for (int64_t js = 0; js < small.dim() && ok; ++js) {
        IndexTuple head = small.unrank(js);
        IndexTuple whole = head;
        whole.resize(m, 2 * r + 3);
        SparseVec bigimg;
        for (const auto& [row, val] : big.col(b.rank(whole)))
          bigimg.add(b.unrank(row), val);
        SparseVec smallimg;
        for (const auto& [row, val] : sml.col(js)) {
          IndexTuple g = small.unrank(row);
          g.resize(m, 2 * r + 3);
          smallimg.add(g, val);
        }
        if (!(bigimg == smallimg)) {
          ok = false;
          witness = kind + std::to_string(i) + " differs at level " +
                    std::to_string(l);
        }
      }
      if (!ok) break;
    }
    out.push_back(CheckItem::require(
        ok, "iota.restrict.l" + std::to_string(l),
        ok ? "inner generators restrict to the l-factor action" : witness));
  }
  return out;
}

}  // namespace bdual

#endif  // BDUAL_IQUANTUM_HPP
