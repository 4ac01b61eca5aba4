// Hyperoctahedral group combinatorics and the Hecke-algebra action:
// frozen single-letter images, word/length laws, defining relations,
// and a mutated-action negative control.

#include <catch2/catch_amalgamated.hpp>

#include "bdual/heckeb.hpp"

using bdual::act_hecke_letter;
using bdual::act_hecke_word;
using bdual::BWord;
using bdual::HeckeFamily;
using bdual::IndexTuple;
using bdual::LinOp;
using bdual::RatFunc;
using bdual::SignedPerm;
using bdual::SparseVec;
using bdual::TensorBasis;

TEST_CASE("signed permutation window algebra", "[heckeb]") {
  SignedPerm e = SignedPerm::identity(2);
  SignedPerm s0 = SignedPerm::s(2, 0);
  SignedPerm s1 = SignedPerm::s(2, 1);
  CHECK(s0.window() == std::vector<int>{-1, 2});
  CHECK(s1.window() == std::vector<int>{2, 1});
  CHECK((s1 * s0).window() == std::vector<int>{-2, 1});
  CHECK((s0 * s1).window() == std::vector<int>{2, -1});
  CHECK((s0 * s0) == e);
  CHECK_THROWS_AS(SignedPerm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm({0, 2}), std::invalid_argument);

  CHECK(bdual::all_signed_perms(2).size() == 8);
  CHECK(bdual::all_signed_perms(3).size() == 48);
}

TEST_CASE("descents, length, reduced words", "[heckeb]") {
  // Longest element of B_2.
  SignedPerm w0({-1, -2});
  CHECK(w0.length() == 4);
  CHECK(w0.reduced_word() == std::vector<int>{1, 0, 1, 0});
  CHECK(bdual::all_reduced_words(w0).size() == 2);

  SignedPerm u({-2, 1});
  CHECK(u.length() == 2);
  CHECK(u.reduced_word() == std::vector<int>{1, 0});
  // Rebuild u from its reduced word (letters in algebra order).
  SignedPerm acc = SignedPerm::identity(2);
  for (int i : u.reduced_word()) acc = acc * SignedPerm::s(2, i);
  CHECK(acc == u);

  // Length and reduced words agree across all of W(B_3).
  for (const SignedPerm& w : bdual::all_signed_perms(3)) {
    CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
    for (const auto& word : bdual::all_reduced_words(w)) {
      CHECK(static_cast<int>(word.size()) == w.length());
      SignedPerm p = SignedPerm::identity(3);
      for (int i : word) p = p * SignedPerm::s(3, i);
      CHECK(p == w);
    }
  }
}

TEST_CASE("Young subgroups and weight tuples", "[heckeb]") {
  CHECK(bdual::young_subgroup({1, 1}).size() == 1);
  CHECK(bdual::young_subgroup({2}).size() == 2);
  CHECK(bdual::young_subgroup({2, 1}).size() == 2);
  CHECK(bdual::young_subgroup({0, 3}).size() == 6);
  CHECK(bdual::m_lambda_tuple({1, 2}, 6) == IndexTuple{1, 3, 3});
  CHECK(bdual::m_lambda_tuple({0, 2}, 4) == IndexTuple{3, 3});
  CHECK_THROWS_AS(bdual::m_lambda_tuple({1, 1, 1}, 4), std::invalid_argument);
}

TEST_CASE("single-letter action", "[heckeb]") {
  const RatFunc one(1);
  const RatFunc qmq = RatFunc::q(-1) - RatFunc::q(1);

  SECTION("equal neighbours scale by q^-1") {
    SparseVec v = act_hecke_letter({1, 1}, 1);
    REQUIRE(v.c.size() == 1);
    CHECK(v.c.at({1, 1}) == RatFunc::q(-1));
  }
  SECTION("ascending neighbours swap cleanly") {
    SparseVec v = act_hecke_letter({1, 3}, 1);
    REQUIRE(v.c.size() == 1);
    CHECK(v.c.at({3, 1}) == one);
  }
  SECTION("descending neighbours swap with correction") {
    SparseVec v = act_hecke_letter({3, 1}, 1);
    REQUIRE(v.c.size() == 2);
    CHECK(v.c.at({1, 3}) == one);
    CHECK(v.c.at({3, 1}) == qmq);
  }
  SECTION("H_0 on positive first entry negates cleanly") {
    SparseVec v = act_hecke_letter({1, 3}, 0);
    REQUIRE(v.c.size() == 1);
    CHECK(v.c.at({-1, 3}) == one);
  }
  SECTION("H_0 on negative first entry negates with correction") {
    SparseVec v = act_hecke_letter({-5, 5}, 0);
    REQUIRE(v.c.size() == 2);
    CHECK(v.c.at({5, 5}) == one);
    CHECK(v.c.at({-5, 5}) == qmq);
  }
  SECTION("inverse letter adds (q - q^-1) id") {
    SparseVec v = act_hecke_letter({1, 3}, 1, /*inverse=*/true);
    REQUIRE(v.c.size() == 2);
    CHECK(v.c.at({3, 1}) == one);
    CHECK(v.c.at({1, 3}) == RatFunc::q(1) - RatFunc::q(-1));
  }
}

TEST_CASE("words act left-to-right; operators compose reversed", "[heckeb]") {
  TensorBasis basis(6, 2);
  HeckeFamily fam = bdual::build_hecke_family(basis);
  BWord word = {{0, +1}, {1, +1}};  // the element H_0 H_1

  // Vector route: apply H_0 then H_1.
  SparseVec direct = act_hecke_word({1, 3}, word);
  // Operator route: op(H_0 H_1) = op(H_1) o op(H_0).
  LinOp viaops = bdual::op_of_word(fam, word);
  SparseVec expect;
  for (const auto& [row, x] : viaops.col(basis.rank({1, 3})))
    expect.add(basis.unrank(row), x);
  CHECK(direct == expect);

  // Frozen value: M_{(1/2,3/2)} H_0 H_1 = M_{(3/2,-1/2)}.
  REQUIRE(direct.c.size() == 1);
  CHECK(direct.c.at({3, -1}) == RatFunc(1));
}

TEST_CASE("defining relations hold on tensor space", "[heckeb]") {
  for (auto [r, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    TensorBasis basis(2 * r + 4, m);
    HeckeFamily fam = bdual::build_hecke_family(basis);
    auto items = bdual::check_hecke_relations(fam);
    CHECK(bdual::all_passed(items));
    CHECK(bdual::count_status(items, "failed") == 0);
    // Matsumoto runs (not skipped) for these sizes.
    for (const auto& it : items)
      if (it.name == "heckeB.matsumoto") CHECK(it.status == "passed");
  }
}

TEST_CASE("x_lambda operators", "[heckeb]") {
  TensorBasis basis(6, 2);
  HeckeFamily fam = bdual::build_hecke_family(basis);

  // lambda = (1,1): trivial subgroup, x = id.
  CHECK(bdual::x_lambda_op(fam, {1, 1}) == LinOp::identity(basis.dim()));

  // lambda = (2): x = 1 + H_1.
  LinOp x2 = bdual::x_lambda_op(fam, {2});
  CHECK(x2 == LinOp::identity(basis.dim()) + fam.H[1]);
  // On M_{(1/2,1/2)} it acts by 1 + q^{-1}.
  CHECK(x2.get(basis.rank({1, 1}), basis.rank({1, 1})) ==
        RatFunc(1) + RatFunc::q(-1));
  // On M_{(1/2,3/2)} it produces M_{(1/2,3/2)} + M_{(3/2,1/2)}.
  CHECK(x2.get(basis.rank({3, 1}), basis.rank({1, 3})) == RatFunc(1));
  CHECK(x2.get(basis.rank({1, 3}), basis.rank({1, 3})) == RatFunc(1));
}

TEST_CASE("mutated action fails the relation suite", "[heckeb]") {
  TensorBasis basis(6, 2);
  HeckeFamily fam = bdual::build_hecke_family(basis);
  // Drop the correction term of H_0 on negative first entries.
  fam.H[0] = LinOp::from_action(basis, [](const IndexTuple& f) {
    IndexTuple g = f;
    g[0] = -g[0];
    return SparseVec::unit(g);
  });
  auto items = bdual::check_hecke_relations(fam);
  CHECK_FALSE(bdual::all_passed(items));
  bool quad_h0_failed = false;
  for (const auto& it : items)
    if (it.name == "heckeB.quadratic.H0" && it.status == "failed")
      quad_h0_failed = true;
  CHECK(quad_h0_failed);
}
