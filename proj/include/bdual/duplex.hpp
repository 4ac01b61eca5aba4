#ifndef BDUAL_DUPLEX_HPP
#define BDUAL_DUPLEX_HPP

// The duplex algebra D_m: generated by invertible T_0..T_{m-1} (satisfying
// the type-B Hecke relations) together with one copy of a type-A Hecke basis
// x_sigma^{(l)} for each symmetric group S_l, 0 <= l <= m. Its defining
// relations and its right representation Xi on the enhanced tensor space:
//
//   Xi(T_i)              = the Hecke generator action H_i,
//   Xi(x_sigma^{(l)})    = (project onto the component with inner letters at
//                           positions 1..l and boundary letter +(2r+3)
//                           elsewhere) followed by the type-A Hecke word of
//                           sigma acting on the first l tensor factors,
//
// extended as an anti-homomorphism: Xi(ab) = Xi(b) Xi(a).
//
// Relations among the x generators, for s_i a simple transposition of S_l:
//   x_sigma x_{s_i} = x_{sigma s_i}                     if length goes up,
//                   = x_{sigma s_i} + (q^{-1}-q) x_sigma if length goes down,
//   (mirror image for left multiplication), and x_sigma^{(l)} x_gamma^{(k)} = 0
//   whenever l != k. Mixed relations: T_i x_sigma^{(l)} = x_{s_i}^{(l)} x_sigma^{(l)}
//   and x_sigma^{(l)} T_i = x_sigma^{(l)} x_{s_i}^{(l)} for 0 < i < l, while
//   T_i x_sigma^{(l)} = q^{-1} x_sigma^{(l)} = x_sigma^{(l)} T_i for i > l.
//   The products T_l x^{(l)} and x^{(l)} T_l are unconstrained.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bdual/checks.hpp"
#include "bdual/heckeb.hpp"
#include "bdual/ratfunc.hpp"
#include "bdual/tensorspace.hpp"

namespace bdual {

// All permutations of {1..l} as positive-window SignedPerms, lex order.
inline std::vector<SignedPerm> all_perms(int l) {
  std::vector<int> w(l);
  for (int i = 0; i < l; ++i) w[i] = i + 1;
  std::vector<SignedPerm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Membership in the distinguished level-l component: inner letters at
// positions 1..l, boundary letter +(2r+3) at positions l+1..m.
inline bool in_level_component(const IndexTuple& f, int r, int l) {
  const int m = static_cast<int>(f.size());
  if (l < 0 || l > m) return false;
  for (int k = 0; k < l; ++k)
    if (std::abs(f[k]) > 2 * r + 1) return false;
  for (int k = l; k < m; ++k)
    if (f[k] != 2 * r + 3) return false;
  return true;
}

// Basis tuples of the component with inner letters at positions I (1-based),
// the letter -(2r+3) at positions J, and +(2r+3) elsewhere.
inline std::vector<IndexTuple> component_tuples(const std::vector<int>& I,
                                                const std::vector<int>& J,
                                                int r, int m) {
  std::vector<bool> inI(m + 1, false), inJ(m + 1, false);
  for (int i : I) inI[i] = true;
  for (int j : J) inJ[j] = true;
  std::vector<int> inner;
  for (int d = -(2 * r + 1); d <= 2 * r + 1; d += 2) inner.push_back(d);
  std::vector<IndexTuple> out;
  IndexTuple f(m);
  std::function<void(int)> rec = [&](int k) {
    if (k == m) {
      out.push_back(f);
      return;
    }
    if (inI[k + 1]) {
      for (int d : inner) {
        f[k] = d;
        rec(k + 1);
      }
    } else {
      f[k] = inJ[k + 1] ? -(2 * r + 3) : (2 * r + 3);
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// Image of M_f under x_sigma^{(l)}: zero off the distinguished component,
// otherwise the type-A Hecke word of sigma applied to the first l factors.
inline SparseVec act_x_sigma(const IndexTuple& f, const SignedPerm& sigma,
                             int r) {
  const int l = sigma.m();
  if (!in_level_component(f, r, l)) return SparseVec{};
  BWord word;
  for (int i : sigma.reduced_word()) word.push_back({i, +1});
  return act_hecke_word(f, word);
}

struct DuplexFamily {
  int r;
  HeckeFamily hecke;  // T_i act exactly as the Hecke generators
  // xop[l] maps the window of sigma in S_l to the operator for x_sigma^{(l)}.
  std::vector<std::map<std::vector<int>, LinOp>> xop;

  const LinOp& x(const SignedPerm& sigma) const {
    return xop[sigma.m()].at(sigma.window());
  }
};

inline DuplexFamily build_duplex_family(int r, int m,
                                        int64_t dim_cap = default_dim_cap()) {
  TensorBasis basis(2 * r + 4, m, dim_cap);
  DuplexFamily fam{r, build_hecke_family(basis), {}};
  fam.xop.resize(m + 1);
  for (int l = 0; l <= m; ++l) {
    for (const SignedPerm& sigma : all_perms(l)) {
      fam.xop[l].emplace(sigma.window(),
                         LinOp::from_action(basis, [&](const IndexTuple& f) {
                           return act_x_sigma(f, sigma, r);
                         }));
    }
  }
  return fam;
}

// ---------------------------------------------------------------------------
// The transport word omega_{I,J}: a product of T_i^{+-1} mapping the (I, J)
// component bijectively (basis vector to basis vector) onto the distinguished
// level-l component. Letters are produced in application order, which is the
// same as algebra order for a right action.
//
// Construction. First clear J, smallest position j first: the moves
// T_{j-1}^{-1}, ..., T_1^{-1} walk the letter -(2r+3) to position 1 (every
// neighbour pair is descending, so each inverse acts as a clean swap), then
// T_0^{-1} flips it to +(2r+3) (clean since the entry is negative). Then sort
// I down to {1..l}: with rho the smallest gap and i the smallest I-element
// above it, T_{i-1}^{-1}, ..., T_rho^{-1} walk the inner letter at i left to
// position rho, each step a clean descending swap.
// ---------------------------------------------------------------------------
inline BWord omega_word(std::vector<int> I, std::vector<int> J, int m) {
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  {
    std::set<int> seen;
    for (int v : I) seen.insert(v);
    for (int v : J) {
      if (seen.count(v))
        throw std::invalid_argument("omega_word: I and J must be disjoint");
      seen.insert(v);
    }
    for (int v : seen)
      if (v < 1 || v > m)
        throw std::invalid_argument("omega_word: positions must lie in 1..m");
  }
  BWord w;
  while (!J.empty()) {
    int j = J.front();
    J.erase(J.begin());
    for (int t = j - 1; t >= 1; --t) w.push_back({t, -1});
    w.push_back({0, -1});
    for (int& i : I)
      if (i < j) ++i;  // entries left of j shift one step right
  }
  const int l = static_cast<int>(I.size());
  while (true) {
    bool sorted_down = true;
    for (int k = 0; k < l; ++k)
      if (I[k] != k + 1) sorted_down = false;
    if (sorted_down) break;
    int rho = 1;
    {
      std::set<int> s(I.begin(), I.end());
      while (s.count(rho)) ++rho;
    }
    int i = 0;
    for (int v : I)
      if (v > rho) {
        i = v;
        break;
      }
    for (int t = i - 1; t >= rho; --t) w.push_back({t, -1});
    for (int& v : I)
      if (v == i) v = rho;
    std::sort(I.begin(), I.end());
  }
  return w;
}

// Verify that the given word transports the (I, J) component cleanly and
// bijectively onto the distinguished level-l component.
inline CheckItem check_omega_pair(const std::vector<int>& I,
                                  const std::vector<int>& J, const BWord& word,
                                  int r, int m, const std::string& name) {
  const int l = static_cast<int>(I.size());
  std::vector<int> lbar(l);
  for (int k = 0; k < l; ++k) lbar[k] = k + 1;

  std::set<IndexTuple> target;
  for (const IndexTuple& f : component_tuples(lbar, {}, r, m)) target.insert(f);

  std::set<IndexTuple> hit;
  for (const IndexTuple& f : component_tuples(I, J, r, m)) {
    SparseVec img = act_hecke_word(f, word);
    if (img.c.size() != 1)
      return CheckItem::fail(name, "image of basis vector is not a single "
                                   "basis vector; source rank tuple size " +
                                       std::to_string(img.c.size()));
    const auto& [g, coeff] = *img.c.begin();
    if (!coeff.is_one())
      return CheckItem::fail(name, "image coefficient is " + coeff.str());
    if (!target.count(g))
      return CheckItem::fail(name, "image lands outside the target component");
    if (!hit.insert(g).second)
      return CheckItem::fail(name, "two basis vectors map to the same image");
  }
  if (hit != target)
    return CheckItem::fail(name, "image does not exhaust the target component");
  return CheckItem::pass(name, "clean bijection, rank " +
                                   std::to_string(hit.size()));
}

// All disjoint pairs (I, J) of subsets of {1..m}.
inline std::vector<CheckItem> check_omega(int r, int m,
                                          int64_t dim_cap = default_dim_cap()) {
  std::vector<CheckItem> out;
  int64_t dim = checked_pow(2 * r + 4, m);
  if (dim > dim_cap) {
    out.push_back(CheckItem::skip(
        "duplex.omega", "dimension " + std::to_string(dim) + " exceeds cap"));
    return out;
  }
  auto set_str = [](const std::vector<int>& s) {
    std::string t = "{";
    for (size_t k = 0; k < s.size(); ++k)
      t += (k ? "," : "") + std::to_string(s[k]);
    return t + "}";
  };
  for (int mi = 0; mi < (1 << m); ++mi) {
    std::vector<int> I;
    for (int k = 0; k < m; ++k)
      if (mi & (1 << k)) I.push_back(k + 1);
    int rest = ((1 << m) - 1) & ~mi;
    for (int mj = rest;; mj = (mj - 1) & rest) {
      std::vector<int> J;
      for (int k = 0; k < m; ++k)
        if (mj & (1 << k)) J.push_back(k + 1);
      std::string name = "duplex.omega.I" + set_str(I) + ".J" + set_str(J);
      out.push_back(check_omega_pair(I, J, omega_word(I, J, m), r, m, name));
      if (mj == 0) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Defining relations of the duplex algebra, verified on the operator images.
// Because Xi is an anti-homomorphism, the product a*b in the algebra is
// checked as the composition Xi(b) followed-by... i.e. Xi(a) applied first:
// op(a*b) = Xi(b) o Xi(a).
// ---------------------------------------------------------------------------
inline std::vector<CheckItem> check_duplex_relations(const DuplexFamily& fam) {
  std::vector<CheckItem> out = check_hecke_relations(fam.hecke, "duplex.T");
  const TensorBasis& basis = fam.hecke.basis;
  const int m = basis.m();
  const int r = fam.r;
  const RatFunc qinv = RatFunc::q(-1);
  const RatFunc corr = RatFunc::qinv_minus_q();

  auto opmul = [](const LinOp& a, const LinOp& b) { return b * a; };  // a then b

  auto sig_str = [](const SignedPerm& s) { return s.str(); };

  for (int l = 0; l <= m; ++l) {
    const auto perms = all_perms(l);
    // x-products within one level (both multiplication sides).
    for (const SignedPerm& sigma : perms) {
      for (int i = 1; i <= l - 1; ++i) {
        SignedPerm si = SignedPerm::s(l, i);
        const std::string tag =
            ".l" + std::to_string(l) + ".s" + sig_str(sigma) + ".i" + std::to_string(i);
        {
          SignedPerm prod = sigma * si;  // sigma s_i
          LinOp lhs = opmul(fam.x(sigma), fam.x(si));
          LinOp rhs = fam.x(prod);
          if (prod.length() == sigma.length() - 1)
            rhs = rhs + fam.x(sigma).scaled(corr);
          out.push_back(CheckItem::require(lhs == rhs, "duplex.xRight" + tag,
                                           "x_sigma x_{s_i} product law"));
        }
        {
          SignedPerm prod = si * sigma;  // s_i sigma
          LinOp lhs = opmul(fam.x(si), fam.x(sigma));
          LinOp rhs = fam.x(prod);
          if (prod.length() == sigma.length() - 1)
            rhs = rhs + fam.x(sigma).scaled(corr);
          out.push_back(CheckItem::require(lhs == rhs, "duplex.xLeft" + tag,
                                           "x_{s_i} x_sigma product law"));
        }
      }
    }
    // Mixed T/x relations.
    for (const SignedPerm& sigma : perms) {
      const std::string base =
          ".l" + std::to_string(l) + ".s" + sig_str(sigma);
      for (int i = 1; i < l; ++i) {
        SignedPerm si = SignedPerm::s(l, i);
        out.push_back(CheckItem::require(
            opmul(fam.hecke.H[i], fam.x(sigma)) == opmul(fam.x(si), fam.x(sigma)),
            "duplex.Tx" + base + ".i" + std::to_string(i),
            "T_i x_sigma = x_{s_i} x_sigma for 0 < i < l"));
        out.push_back(CheckItem::require(
            opmul(fam.x(sigma), fam.hecke.H[i]) == opmul(fam.x(sigma), fam.x(si)),
            "duplex.xT" + base + ".i" + std::to_string(i),
            "x_sigma T_i = x_sigma x_{s_i} for 0 < i < l"));
      }
      for (int i = l + 1; i <= m - 1; ++i) {
        LinOp scaled = fam.x(sigma).scaled(qinv);
        out.push_back(CheckItem::require(
            opmul(fam.hecke.H[i], fam.x(sigma)) == scaled &&
                opmul(fam.x(sigma), fam.hecke.H[i]) == scaled,
            "duplex.Tx.q" + base + ".i" + std::to_string(i),
            "T_i x_sigma = q^{-1} x_sigma = x_sigma T_i for i > l"));
      }
    }
    if (l <= m - 1)
      out.push_back(CheckItem::skip(
          "duplex.boundary.l" + std::to_string(l),
          "products T_l x^{(l)} and x^{(l)} T_l are unconstrained by the "
          "definition; nothing to verify"));
    // Embedding of the level-l type-B structure: on the distinguished
    // component, x_sigma^{(l)} T_0 acts as the word (sigma, then H_0) of the
    // small Hecke algebra on l factors, tensored with identity. The right
    // side is computed on an independently built l-factor basis.
    if (l >= 1) {
      for (const SignedPerm& sigma : perms) {
        BWord small_word;
        for (int i : sigma.reduced_word()) small_word.push_back({i, +1});
        small_word.push_back({0, +1});
        bool ok = true;
        std::string witness;
        std::vector<int> lbar(l);
        for (int k = 0; k < l; ++k) lbar[k] = k + 1;
        for (const IndexTuple& f : component_tuples(lbar, {}, r, m)) {
          // Full-space route: x_sigma then T_0.
          SparseVec lhs;
          for (const auto& [g, c] : act_x_sigma(f, sigma, r).c)
            lhs.add_scaled(act_hecke_letter(g, 0), c);
          // Small-space route on the first l factors.
          IndexTuple head(f.begin(), f.begin() + l);
          SparseVec rhs;
          for (const auto& [g, c] : act_hecke_word(head, small_word).c) {
            IndexTuple whole = g;
            whole.insert(whole.end(), f.begin() + l, f.end());
            rhs.add(whole, c);
          }
          if (!(lhs == rhs)) {
            ok = false;
            witness = "mismatch on a level-" + std::to_string(l) + " tuple";
            break;
          }
        }
        out.push_back(CheckItem::require(
            ok, "duplex.embedT0" + (".l" + std::to_string(l)) + ".s" + sig_str(sigma),
            ok ? "x_sigma T_0 matches the l-factor Hecke word on the "
                 "distinguished component"
               : witness));
      }
    }
  }
  // Cross-level products vanish.
  for (int l = 0; l <= m; ++l)
    for (int k = 0; k <= m; ++k) {
      if (l == k) continue;
      bool ok = true;
      std::string witness;
      for (const auto& [ws, opS] : fam.xop[l]) {
        for (const auto& [wg, opG] : fam.xop[k]) {
          if (!(opG * opS).is_zero() || !(opS * opG).is_zero()) {
            ok = false;
            witness = "nonzero product at levels " + std::to_string(l) + "," +
                      std::to_string(k);
            break;
          }
        }
        if (!ok) break;
      }
      out.push_back(CheckItem::require(
          ok,
          "duplex.xZero.l" + std::to_string(l) + ".k" + std::to_string(k),
          ok ? "x^{(l)} x^{(k)} = 0 for l != k" : witness));
    }
  return out;
}

}  // namespace bdual

#endif  // BDUAL_DUPLEX_HPP
