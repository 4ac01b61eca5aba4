// Tensor-space layer: alphabet/ranking conventions, level decomposition,
// weights, compositions, and the sparse operator algebra.

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "bdual/tensorspace.hpp"

using bdual::IndexTuple;
using bdual::LinOp;
using bdual::RatFunc;
using bdual::SparseVec;
using bdual::TensorBasis;

TEST_CASE("alphabet and ranking", "[tensorspace]") {
  // Enhanced space at r = 1: alphabet size 6, doubled values -5..5 odd.
  TensorBasis b1(6, 1);
  CHECK(b1.dim() == 6);
  CHECK(b1.alphabet() == std::vector<int>{-5, -3, -1, 1, 3, 5});
  CHECK(b1.rank({-5}) == 0);
  CHECK(b1.rank({5}) == 5);
  CHECK(b1.unrank(2) == IndexTuple{-1});

  TensorBasis b2(6, 2);
  CHECK(b2.dim() == 36);
  CHECK(b2.rank({-5, -5}) == 0);
  CHECK(b2.rank({-5, -3}) == 1);
  CHECK(b2.rank({5, 5}) == 35);
  // Ascending lex order: first position is most significant.
  CHECK(b2.rank({-3, -5}) == 6);
  for (int64_t r = 0; r < b2.dim(); ++r) CHECK(b2.rank(b2.unrank(r)) == r);

  TensorBasis inner(4, 2);
  CHECK(inner.dim() == 16);
  CHECK(inner.alphabet() == std::vector<int>{-3, -1, 1, 3});

  CHECK_FALSE(b2.valid_tuple({0, 1}));   // even entry
  CHECK_FALSE(b2.valid_tuple({7, 1}));   // out of range
  CHECK_FALSE(b2.valid_tuple({1}));      // wrong arity
  CHECK_THROWS_AS(b2.rank({9, 9}), std::invalid_argument);
}

TEST_CASE("dimension cap guard", "[tensorspace]") {
  CHECK_THROWS_AS(TensorBasis(6, 9, 10000), bdual::SizeGuardError);
  CHECK_NOTHROW(TensorBasis(6, 5, 10000));  // 7776 <= 10000
  CHECK_NOTHROW(TensorBasis(6, 9, int64_t(1) << 40));
}

TEST_CASE("tuple classification into (I, J) and level", "[tensorspace]") {
  // r = 1: inner letters |d| <= 3, boundary letters +-5.
  auto tc = bdual::classify_enhanced({-5, -1}, 1);
  CHECK(tc.I == std::vector<int>{2});
  CHECK(tc.J == std::vector<int>{1});
  CHECK(tc.level == 1);

  auto tc2 = bdual::classify_enhanced({3, 1}, 1);
  CHECK(tc2.I == std::vector<int>{1, 2});
  CHECK(tc2.J.empty());
  CHECK(tc2.level == 2);

  auto tc3 = bdual::classify_enhanced({5, -5, 5}, 1);
  CHECK(tc3.I.empty());
  CHECK(tc3.J == std::vector<int>{2});
  CHECK(tc3.level == 0);

  CHECK_THROWS_AS(bdual::classify_enhanced({7, 1}, 1), std::invalid_argument);
}

TEST_CASE("level dimensions partition the enhanced space", "[tensorspace]") {
  // r = 1, m = 2: levels 0,1,2 have dims 4, 16, 16; total 36.
  CHECK(bdual::level_dim(1, 2, 0) == 4);
  CHECK(bdual::level_dim(1, 2, 1) == 16);
  CHECK(bdual::level_dim(1, 2, 2) == 16);

  for (int r : {1, 2}) {
    for (int m : {1, 2, 3}) {
      TensorBasis b(2 * r + 4, m);
      std::vector<int64_t> counts(m + 1, 0);
      for (int64_t k = 0; k < b.dim(); ++k)
        ++counts[bdual::classify_enhanced(b.unrank(k), r).level];
      int64_t total = 0;
      for (int l = 0; l <= m; ++l) {
        CHECK(counts[l] == bdual::level_dim(r, m, l));
        total += counts[l];
      }
      CHECK(total == b.dim());
    }
  }
}

TEST_CASE("weights and compositions", "[tensorspace]") {
  CHECK(bdual::weight_of({5, -5}, 6) == std::vector<int>{0, 0, 2});
  CHECK(bdual::weight_of({1, -1, 3}, 4) == std::vector<int>{2, 1});
  CHECK(bdual::compositions(2, 2) ==
        std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  // #compositions of m into p parts = C(m+p-1, p-1).
  CHECK(static_cast<int64_t>(bdual::compositions(3, 4).size()) ==
        bdual::binomial(6, 2));
  CHECK(bdual::binomial(4, 2) == 6);
  CHECK(bdual::binomial(6, 0) == 1);
}

TEST_CASE("sparse vectors", "[tensorspace]") {
  SparseVec v = SparseVec::unit({1, -1});
  v.add({1, -1}, RatFunc(-1));
  CHECK(v.is_zero());
  v.add({3, 3}, RatFunc::q(2));
  v.add_scaled(SparseVec::unit({3, 3}), RatFunc(1));
  CHECK(v.c.at({3, 3}) == RatFunc::q(2) + RatFunc(1));
}

TEST_CASE("operator algebra", "[tensorspace]") {
  TensorBasis b(4, 1);  // 4-dimensional toy space
  // S shifts the alphabet cyclically and scales by q.
  LinOp s = LinOp::from_action(b, [&](const IndexTuple& f) {
    int d = f[0];
    int nxt = d == 3 ? -3 : d + 2;
    return SparseVec::unit({nxt}).scaled(RatFunc::q(1));
  });
  LinOp id = LinOp::identity(b.dim());
  CHECK(s * id == s);
  CHECK(id * s == s);
  CHECK(bdual::commutator(s, s * s).is_zero());
  // S^4 = q^4 * id.
  CHECK(s * s * s * s == id.scaled(RatFunc::q(4)));
  CHECK((s - s).is_zero());

  LinOp diag = LinOp::from_action(b, [&](const IndexTuple& f) {
    return SparseVec::unit(f).scaled(f[0] > 0 ? RatFunc::q(1) : RatFunc(1));
  });
  CHECK_FALSE(bdual::commutator(s, diag).is_zero());
}

TEST_CASE("matrix dump format", "[tensorspace]") {
  TensorBasis b(2, 1);
  LinOp a = LinOp::from_action(b, [&](const IndexTuple& f) {
    SparseVec v;
    if (f[0] == -1) {
      v.add({1}, RatFunc::q(1) - RatFunc::q(-1));
    } else {
      v.add({-1}, RatFunc(1));
      v.add({1}, RatFunc(2));
    }
    return v;
  });
  std::ostringstream os;
  a.dump(os);
  CHECK(os.str() ==
        "dim 2 basisOrder lex\n"
        "0 1 ( 1 ) / ( 1 )\n"
        "1 0 ( -1 + 1*q^2 ) / ( 1*q )\n"
        "1 1 ( 2 ) / ( 1 )\n");
}
