// Quantum-group layer: frozen single-factor and coproduct examples, the
// coideal generators, level projectors, and the full relation suite.

#include <catch2/catch_amalgamated.hpp>

#include "bdual/iquantum.hpp"

using bdual::IndexTuple;
using bdual::LinOp;
using bdual::RatFunc;
using bdual::SparseVec;
using bdual::TensorBasis;

TEST_CASE("single-factor actions", "[iquantum]") {
  // r = 1, one factor: alphabet -5..5 doubled.
  const int n = 6;

  // E_1: eta_{3/2} -> eta_{1/2}.
  SparseVec e = bdual::act_E({3}, 1, n);
  REQUIRE(e.c.size() == 1);
  CHECK(e.c.at({1}).is_one());
  CHECK(bdual::act_E({1}, 1, n).is_zero());

  // F_1: eta_{1/2} -> eta_{3/2}.
  SparseVec f = bdual::act_F({1}, 1, n);
  REQUIRE(f.c.size() == 1);
  CHECK(f.c.at({3}).is_one());

  // K_1 eigenvalues: q on eta_{1/2}, q^-1 on eta_{3/2}, 1 on eta_{5/2}.
  CHECK(bdual::act_K({1}, 1, n).c.at({1}) == RatFunc::q(1));
  CHECK(bdual::act_K({3}, 1, n).c.at({3}) == RatFunc::q(-1));
  CHECK(bdual::act_K({5}, 1, n).c.at({5}).is_one());
  CHECK(bdual::act_K({3}, 1, n, -1).c.at({3}) == RatFunc::q(1));

  // Boundary root index r+1 = 2 touches the enhanced letters.
  CHECK(bdual::act_E({5}, 2, n).c.at({3}).is_one());
  CHECK_THROWS_AS(bdual::act_E({1}, 3, n), std::invalid_argument);
}

TEST_CASE("coproduct actions on two factors", "[iquantum]") {
  const int n = 6;
  // Delta^2(E_1)(eta_{3/2} (x) eta_{3/2}) = q eta_{1/2} (x) eta_{3/2}
  //                                        +   eta_{3/2} (x) eta_{1/2}.
  SparseVec v = bdual::act_E({3, 3}, 1, n);
  REQUIRE(v.c.size() == 2);
  CHECK(v.c.at({1, 3}) == RatFunc::q(1));
  CHECK(v.c.at({3, 1}).is_one());

  // Delta^2(F_1)(eta_{1/2} (x) eta_{1/2}) = eta_{3/2} (x) eta_{1/2}
  //                                        + q eta_{1/2} (x) eta_{3/2}.
  SparseVec w = bdual::act_F({1, 1}, 1, n);
  REQUIRE(w.c.size() == 2);
  CHECK(w.c.at({3, 1}).is_one());
  CHECK(w.c.at({1, 3}) == RatFunc::q(1));

  // Delta^2(K_1) is multiplicative over factors.
  CHECK(bdual::act_K({1, 3}, 1, n).c.at({1, 3}).is_one());  // q * q^-1
  CHECK(bdual::act_K({1, 1}, 1, n).c.at({1, 1}) == RatFunc::q(2));
}

TEST_CASE("coideal generators on one factor", "[iquantum]") {
  TensorBasis b(6, 1);

  // B_1 eta_{3/2} = eta_{1/2}.
  LinOp b1 = bdual::op_B(b, 1);
  auto col = b1.col(b.rank({3}));
  REQUIRE(col.size() == 1);
  CHECK(col.begin()->first == b.rank({1}));
  CHECK(col.begin()->second.is_one());

  // B_0 eta_{1/2} = eta_{-1/2} + q eta_{1/2}.
  LinOp b0 = bdual::op_B(b, 0);
  auto col0 = b0.col(b.rank({1}));
  REQUIRE(col0.size() == 2);
  CHECK(col0.at(b.rank({-1})).is_one());
  CHECK(col0.at(b.rank({1})) == RatFunc::q(1));

  // k_1 table: q on +-1/2, q^-1 on +-3/2, 1 on +-5/2.
  LinOp k1 = bdual::op_k(b, 1);
  CHECK(k1.get(b.rank({1}), b.rank({1})) == RatFunc::q(1));
  CHECK(k1.get(b.rank({-1}), b.rank({-1})) == RatFunc::q(1));
  CHECK(k1.get(b.rank({3}), b.rank({3})) == RatFunc::q(-1));
  CHECK(k1.get(b.rank({-3}), b.rank({-3})) == RatFunc::q(-1));
  CHECK(k1.get(b.rank({5}), b.rank({5})).is_one());
}

TEST_CASE("generator set sizes", "[iquantum]") {
  TensorBasis b(6, 2);
  CHECK(bdual::levi_generators(b, 1).size() == 11);
  CHECK(bdual::full_iota_generators(b, 1).size() == 13);
  TensorBasis b2(8, 2);
  CHECK(bdual::levi_generators(b2, 2).size() == 17);
  CHECK(bdual::full_iota_generators(b2, 2).size() == 19);
}

TEST_CASE("X element and level scalars", "[iquantum]") {
  // r = 1, m = 2: F(l) = q^{3l-4}.
  CHECK(bdual::level_scalar(1, 2, 0) == RatFunc::q(-4));
  CHECK(bdual::level_scalar(1, 2, 1) == RatFunc::q(-1));
  CHECK(bdual::level_scalar(1, 2, 2) == RatFunc::q(2));

  TensorBasis b(6, 2);
  LinOp x = bdual::element_X(b, 1);
  CHECK(x.get(b.rank({5, 5}), b.rank({5, 5})) == RatFunc::q(-4));   // level 0
  CHECK(x.get(b.rank({1, -5}), b.rank({1, -5})) == RatFunc::q(-1)); // level 1
  CHECK(x.get(b.rank({1, 3}), b.rank({1, 3})) == RatFunc::q(2));    // level 2
}

TEST_CASE("level projectors", "[iquantum]") {
  TensorBasis b(6, 2);
  LinOp g1 = bdual::projector_G(b, 1, 1);
  CHECK(g1 * g1 == g1);
  CHECK(g1.get(b.rank({1, -5}), b.rank({1, -5})).is_one());
  CHECK(g1.get(b.rank({5, 5}), b.rank({5, 5})).is_zero());
  CHECK(g1.get(b.rank({1, 3}), b.rank({1, 3})).is_zero());
}

TEST_CASE("full verification suite passes", "[iquantum]") {
  for (auto [r, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
    auto items = bdual::check_qaction(r, m);
    CHECK(bdual::all_passed(items));
    CHECK(bdual::count_status(items, "skipped") == 0);
  }
}

TEST_CASE("oversized request is skipped, not failed", "[iquantum]") {
  auto items = bdual::check_qaction(1, 9, 10000);
  REQUIRE(items.size() == 1);
  CHECK(items[0].status == "skipped");
}
