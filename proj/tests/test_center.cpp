#include <doctest.h>

#include "support.hpp"
#include "wdec/center.hpp"
#include "wdec/radical.hpp"

using namespace wdec;
using namespace wtest;

namespace {

Algebra pt2_quotient() { return radical_basis(pt2_algebra()).quotient.algebra; }

}  // namespace

TEST_SUITE("center") {

TEST_CASE("center of the PT2 quotient") {
  Algebra q = pt2_quotient();
  RcfResult r = rcf(commutator_matrix(q));
  REQUIRE(r.rank() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.form.row(i) == mi({pt2_center_rcf[i]}).row(0));
  CHECK(center_basis(q) == pt2_center);
  for (const auto& z : pt2_center)
    for (std::size_t j = 0; j < 7; ++j) {
      Vec b = unit_vec(7, j);
      CHECK(multiply(q, z, b) == multiply(q, b, z));
    }
}

TEST_CASE("center structure constants of the PT2 quotient") {
  Algebra q = pt2_quotient();
  Algebra f = center_structure(q, pt2_center);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(multiply(f, unit_vec(4, i), unit_vec(4, j)) == pt2_center_product(i, j));
      CHECK(f.product(i, j).idx == f.product(j, i).idx);
    }
  CHECK(multiply(f, unit_vec(4, 3), unit_vec(4, 3)) == vi({0, 0, 0, -1}));
  CHECK(multiply(f, unit_vec(4, 2), unit_vec(4, 2)) == vi({-1, 1, 0, -1}));
  CenterData c = compute_center(q);
  REQUIRE(c.identity);
  CHECK(*c.identity == vi({0, 1, 0, 0}));
  CHECK_FALSE(find_associativity_violation(c.structure, {AssocMode::exhaustive}));
}

TEST_CASE("center of commutative and simple algebras") {
  Algebra comm = truncated_polynomial_algebra({-2, 0, 1});
  CHECK(center_basis(comm).size() == 2);
  Algebra m2 = matrix_unit_algebra(2);
  auto z = center_basis(m2);
  REQUIRE(z.size() == 1);
  CHECK(oracle_same_span(z, {vi({1, 0, 0, 1})}));
  Algebra one = center_structure(m2, {vi({1, 0, 0, 1})});
  CHECK(multiply(one, vi({1}), vi({1})) == vi({1}));
}

TEST_CASE("center of S3 and of larger quotients") {
  Algebra s3 = symmetric_group_algebra(3);
  auto z = center_basis(s3);
  CHECK(z.size() == 3);  // conjugacy classes
  for (auto f : {Family::pt, Family::ft})
    for (std::size_t n = 2; n <= 3; ++n) {
      Algebra a = table_algebra(table_of(generate(f, n)));
      Algebra q = radical_basis(a).quotient.algebra;
      auto zb = center_basis(q);
      Dense stacked;
      for (std::size_t j = 0; j < q.dim(); ++j) {
        // commutator rows of b_j, compared with a direct nullspace computation
        Dense lj = oracle_left_matrix(q, unit_vec(q.dim(), j));
        for (std::size_t k = 0; k < q.dim(); ++k) {
          std::vector<Rational> row(q.dim());
          for (std::size_t i = 0; i < q.dim(); ++i) {
            Vec bi = unit_vec(q.dim(), i);
            row[i] = multiply(q, bi, unit_vec(q.dim(), j))[k] - lj[k][i];
          }
          stacked.push_back(row);
        }
      }
      CHECK(zb.size() + oracle_rank(stacked) == q.dim());
      for (const auto& v : zb)
        for (std::size_t j = 0; j < q.dim(); ++j)
          CHECK(multiply(q, v, unit_vec(q.dim(), j)) == multiply(q, unit_vec(q.dim(), j), v));
    }
}

}
