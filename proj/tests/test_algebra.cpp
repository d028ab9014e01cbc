#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wdec/algebra.hpp"
#include "wdec/error.hpp"
#include "wdec/radical.hpp"

using namespace wdec;
using namespace wtest;

TEST_SUITE("algebra") {

TEST_CASE("products in the PT2 algebra") {
  Algebra a = pt2_algebra();
  auto e = [&](std::size_t i) { return unit_vec(9, i - 1); };
  CHECK(multiply(a, e(6), e(7)) == e(6));
  CHECK(multiply(a, e(7), e(8)) == e(8));
  CHECK(multiply(a, e(3) + e(5), Vec(9)) == Vec(9));
  for (std::size_t i = 1; i <= 9; ++i)
    for (std::size_t j = 1; j <= 9; ++j)
      CHECK(multiply(a, e(i), e(j)) == e(static_cast<std::size_t>(pt2_table[i - 1][j - 1])));
}

TEST_CASE("left multiplication matrices") {
  Algebra a = pt2_algebra();
  MatrixQ l1 = left_mult_matrix(a, unit_vec(9, 0));
  for (std::size_t j = 0; j < 9; ++j) CHECK(l1.col(j) == unit_vec(9, 0));
  CHECK(left_mult_matrix(a, unit_vec(9, 6)) == MatrixQ::identity(9));
  for (std::size_t i = 0; i < 9; ++i) {
    MatrixQ l = left_mult_matrix(a, unit_vec(9, i));
    for (std::size_t j = 0; j < 9; ++j)
      CHECK(l.col(j) == unit_vec(9, static_cast<std::size_t>(pt2_table[i][j] - 1)));
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Vec x(9), y(9);
    for (auto& c : x) c = static_cast<long>(rng() % 7) - 3;
    for (auto& c : y) c = static_cast<long>(rng() % 7) - 3;
    CHECK(left_mult_matrix(a, multiply(a, x, y)) == left_mult_matrix(a, x) * left_mult_matrix(a, y));
    CHECK(multiply(a, x, y) == oracle_multiply(a, x, y));
  }
}

TEST_CASE("identity detection and adjunction") {
  Algebra a = pt2_algebra();
  auto one = find_identity(a);
  REQUIRE(one);
  CHECK(*one == unit_vec(9, 6));

  Algebra nil(1);  // b * b = 0
  CHECK_FALSE(find_identity(nil));
  Algebra u = adjoin_identity(nil);
  CHECK(u.dim() == 2);
  REQUIRE(u.one());
  CHECK(is_identity(u, *u.one()));
  CHECK(multiply(u, unit_vec(2, 0), unit_vec(2, 0)) == Vec(2));

  Algebra empty(0);
  Algebra q1 = adjoin_identity(empty);
  CHECK(q1.dim() == 1);
  CHECK(multiply(q1, unit_vec(1, 0), unit_vec(1, 0)) == unit_vec(1, 0));

  // identity that is a combination of basis vectors
  Algebra m2 = matrix_unit_algebra(2);
  Algebra bare = m2;
  bare.set_one(std::nullopt);
  auto found = find_identity(bare);
  REQUIRE(found);
  CHECK(*found == vi({1, 0, 0, 1}));
}

TEST_CASE("associativity checks") {
  CHECK_FALSE(find_associativity_violation(pt2_algebra()));
  Algebra bad(2);  // a1 a1 = a2, a1 a2 = a1, a2 a1 = a2
  bad.add_constant(0, 0, 1, 1);
  bad.add_constant(0, 1, 0, 1);
  bad.add_constant(1, 0, 1, 1);
  auto w = find_associativity_violation(bad, {AssocMode::exhaustive});
  REQUIRE(w);
  auto [i, j, k] = *w;
  Vec ei = unit_vec(2, i), ej = unit_vec(2, j), ek = unit_vec(2, k);
  CHECK(multiply(bad, multiply(bad, ei, ej), ek) != multiply(bad, ei, multiply(bad, ej, ek)));
}

TEST_CASE("subspace closures in the PT2 quotient") {
  Algebra a = pt2_algebra();
  RadicalData rad = radical_basis(a);
  const Algebra& q = rad.quotient.algebra;
  REQUIRE(q.dim() == 7);
  Vec beta = vi({0, 1, 0, 0, 0, 0, -1});
  CHECK(subspace_closure(q, {beta}, ClosureMode::left_ideal) == pt2_left_ideal);
  std::vector<std::size_t> dims;
  for (const auto& g : pt2_simple_ideal) dims.push_back(subspace_closure(q, {g}, ClosureMode::left_ideal).size());
  CHECK(dims == std::vector<std::size_t>{4, 2, 2, 2});
  CHECK(subspace_closure(q, {*q.one()}, ClosureMode::two_sided).size() == 7);
  dims.clear();
  for (const auto& e : pt2_idempotents) dims.push_back(subspace_closure(q, {e}, ClosureMode::two_sided).size());
  CHECK(dims == std::vector<std::size_t>{1, 1, 1, 4});
  for (auto mode : {ClosureMode::left_ideal, ClosureMode::right_ideal, ClosureMode::two_sided, ClosureMode::subalgebra}) {
    auto c = subspace_closure(q, {beta}, mode);
    CHECK(subspace_closure(q, c, mode) == c);
  }
}

TEST_CASE("quotient of PT2 by its radical") {
  Algebra a = pt2_algebra();
  Quotient qt = quotient_by_ideal(a, pt2_radical_canonical, IdealCheck::exhaustive);
  CHECK(qt.algebra.dim() == 7);
  CHECK(qt.ideal.rows == pt2_radical_reduced);
  CHECK(qt.ideal.leading == std::vector<std::size_t>{0, 1});
  CHECK(qt.ideal.complement == std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8});
  // a1 = a4 + a5 - a9 and a2 = -a3 + a4 + a5 + a6 - a9 modulo R
  CHECK(qt.project(unit_vec(9, 0)) == qt.project(vi({0, 0, 0, 1, 1, 0, 0, 0, -1})));
  CHECK(qt.project(unit_vec(9, 1)) == qt.project(vi({0, 0, -1, 1, 1, 1, 0, 0, -1})));
  CHECK(qt.project(unit_vec(9, 0)) == vi({0, 1, 1, 0, 0, 0, -1}));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      Vec x = unit_vec(9, i), y = unit_vec(9, j);
      CHECK(qt.project(multiply(a, x, y)) == multiply(qt.algebra, qt.project(x), qt.project(y)));
    }
}

TEST_CASE("quotient by the zero ideal and by a nilpotent ideal") {
  Algebra a = pt2_algebra();
  Quotient same = quotient_by_ideal(a, {});
  CHECK(same.algebra.dim() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(same.project(unit_vec(9, i)) == unit_vec(9, i));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) CHECK(same.algebra.product(i, j).idx == a.product(i, j).idx);

  Algebra dual = truncated_polynomial_algebra({0, 0, 1});  // Q[x]/(x^2)
  Quotient k = quotient_by_ideal(dual, {vi({0, 1})}, IdealCheck::exhaustive);
  CHECK(k.algebra.dim() == 1);
  CHECK(multiply(k.algebra, vi({1}), vi({1})) == vi({1}));
}

TEST_CASE("ideal check") {
  Algebra a = pt2_algebra();
  CHECK_NOTHROW(check_two_sided_ideal(a, {unit_vec(9, 0)}, IdealCheck::exhaustive));
  try {
    quotient_by_ideal(a, {unit_vec(9, 6)}, IdealCheck::exhaustive);
    FAIL("span of the identity accepted as an ideal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_an_ideal);
  }
}

TEST_CASE("projection is multiplicative on random quotients") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(seed);
    Algebra a = symmetric_group_algebra(3);
    Vec g(6);
    g[rng() % 6] = 1;
    g[rng() % 6] -= 1;
    if (is_zero(g)) g[0] = 1;
    auto ideal = subspace_closure(a, {g}, ClosureMode::two_sided);
    Quotient qt = quotient_by_ideal(a, ideal, IdealCheck::exhaustive);
    CHECK(qt.algebra.dim() == 6 - ideal.size());
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        Vec x = unit_vec(6, i), y = unit_vec(6, j);
        CHECK(qt.project(multiply(a, x, y)) == multiply(qt.algebra, qt.project(x), qt.project(y)));
      }
  }
}

}
