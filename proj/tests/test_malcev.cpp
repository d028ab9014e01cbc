#include <doctest.h>

#include "support.hpp"
#include "wdec/error.hpp"
#include "wdec/malcev.hpp"
#include "wdec/pipeline.hpp"
#include "wdec/radical.hpp"

using namespace wdec;
using namespace wtest;

namespace {

// Quotient coordinates placed on the complement columns of the radical.
Vec embed(const RadicalData& r, const Vec& w) {
  Vec out(r.quotient.algebra.dim() + r.dim());
  const auto& cols = r.quotient.ideal.complement;
  for (std::size_t k = 0; k < cols.size(); ++k) out[cols[k]] = w[k];
  return out;
}

std::vector<std::size_t> unit_sizes_of(const Decomposition& d) {
  std::vector<std::size_t> sizes;
  for (const auto& c : d.components) sizes.push_back(c.q);
  return sizes;
}

Decomposition pt2_with(const Rational& al, const Rational& be) {
  PipelineOptions opt;
  opt.lift_params = {{"x4_2", al}, {"x5_2", be}};
  return decompose_table(pt2_mult_table(), opt);
}

Algebra unit_target() {
  Algebra t(1);
  t.add_constant(0, 0, 0, 1);
  return t;
}

}  // namespace

TEST_SUITE("malcev") {

TEST_CASE("radical power chains") {
  Algebra pt2 = pt2_algebra();
  auto chain = radical_power_chain(pt2, pt2_radical_reduced);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0] == pt2_radical_reduced);
  CHECK(radical_power_chain(symmetric_group_algebra(3), {}).empty());
  Algebra cube = truncated_polynomial_algebra({0, 0, 0, 1});  // Q[x]/(x^3)
  auto c = radical_power_chain(cube, {vi({0, 1, 0}), vi({0, 0, 1})});
  REQUIRE(c.size() == 2);
  CHECK(c[0].size() == 2);
  CHECK(c[1] == std::vector<Vec>{vi({0, 0, 1})});
}

TEST_CASE("lifted basis of PT2 with alpha = 1, beta = 0") {
  Decomposition d = pt2_with(1, 0);
  REQUIRE(d.complete());
  REQUIRE(d.lift);
  CHECK(d.lift->params_free == 2);
  CHECK(d.lift->param_names == std::vector<std::string>{"x4_2", "x5_2"});
  CHECK(d.lift->stages == 1);
  REQUIRE(d.lift->basis.size() == 7);
  auto rows = d.lift->basis;
  rows.insert(rows.end(), pt2_radical_reduced.begin(), pt2_radical_reduced.end());
  CHECK(rows == pt2_wedderburn_basis);
}

TEST_CASE("gamma family of PT2") {
  for (auto [al, be] : std::vector<std::pair<Rational, Rational>>{{0, 0}, {1, 0}, {0, 1}, {Rational(-3, 2), 2}}) {
    Decomposition d = pt2_with(al, be);
    REQUIRE(d.lift);
    auto gamma = pt2_gamma(al, be);
    for (std::size_t i = 0; i < 7; ++i) CHECK(d.lift->basis[i] - embed(*d.radical, d.unit_basis[i]) == gamma[i]);
    CHECK_FALSE(check_lift(d.algebra, *d.radical, d.unit_basis, *d.unit_structure, d.lift->basis));
  }
  CHECK(pt2_gamma(0, 0)[2] == vi({1, 0, 0, -1, -1, 0, 0, 0, 1}));
}

TEST_CASE("both solvers give the same family") {
  for (std::size_t n = 2; n <= 3; ++n) {
    PipelineOptions opt;
    opt.lift = false;
    Decomposition d = decompose_table(table_of(generate(Family::pt, n)), opt);
    REQUIRE(d.complete());
    Algebra target = block_structure(d.radical->quotient.algebra,
                                     [&] {
                                       std::vector<std::vector<Vec>> b;
                                       for (const auto& c : d.components) b.push_back(c.units);
                                       return b;
                                     }(),
                                     unit_sizes_of(d));
    LiftedBasis lin = lift_general(d.algebra, *d.radical, d.unit_basis, target);
    LiftedBasis units = lift_general(d.algebra, *d.radical, d.unit_basis, target, {}, unit_sizes_of(d));
    CHECK(lin.basis == units.basis);
    CHECK(lin.param_names == units.param_names);
    CHECK(lin.params_free == units.params_free);
    CHECK_FALSE(check_lift(d.algebra, *d.radical, d.unit_basis, target, units.basis));
  }
}

TEST_CASE("square-zero problem of PT2 solved directly") {
  Decomposition d = pt2_with(0, 0);
  REQUIRE(d.lift);
  LiftingProblem p;
  p.algebra = &d.algebra;
  for (const auto& w : d.unit_basis) p.beta.push_back(embed(*d.radical, w));
  p.zeta = d.radical->canonical_basis;
  p.zeta = span_basis(p.zeta, 9);
  p.target = &*d.unit_structure;
  CHECK(expected_parameter_count(p) == 2);
  LiftFamily lin = solve_square_zero_linear(p);
  p.unit_sizes = {1, 1, 1, 2};
  LiftFamily units = solve_square_zero_units(p);
  CHECK(lin.particular == units.particular);
  CHECK(lin.free_columns == units.free_columns);
  CHECK(lin.params() == 2);
  auto lifted = apply_lift(p, lin.particular);
  CHECK_FALSE(check_lift(d.algebra, *d.radical, d.unit_basis, *d.unit_structure, lifted));
}

TEST_CASE("zero radical lifts to itself") {
  Algebra a = symmetric_group_algebra(3);
  Decomposition d = decompose(a, std::nullopt);
  REQUIRE(d.lift);
  CHECK(d.lift->stages == 0);
  CHECK(d.lift->params_free == 0);
  CHECK(d.lift->basis == d.unit_basis);
}

TEST_CASE("truncated polynomial ring lifts in two stages") {
  Algebra cube = truncated_polynomial_algebra({0, 0, 0, 1});
  RadicalData r = radical_basis(cube);
  REQUIRE(r.dim() == 2);
  Algebra target = unit_target();
  LiftedBasis l = lift_general(cube, r, {vi({1})}, target);
  CHECK(l.stages == 2);
  CHECK(l.basis == std::vector<Vec>{vi({1, 0, 0})});
  CHECK(l.params_free == 0);
  CHECK_FALSE(check_lift(cube, r, {vi({1})}, target, l.basis));
}

TEST_CASE("lifted PT3 quotient is a complementary subalgebra") {
  Decomposition d = decompose_table(table_of(generate(Family::pt, 3)));
  REQUIRE(d.complete());
  REQUIRE(d.lift);
  CHECK(d.lift->basis.size() == 34);
  CHECK(subspace_closure(d.algebra, d.lift->basis, ClosureMode::subalgebra).size() == 34);
  auto all = d.lift->basis;
  for (const auto& z : d.radical->canonical_basis) all.push_back(z);
  CHECK(rank(MatrixQ::from_rows(all, 64)) == 64);
}

TEST_CASE("unknown lifting parameters are rejected") {
  Decomposition d = pt2_with(0, 0);
  try {
    lift_general(d.algebra, *d.radical, d.unit_basis, *d.unit_structure, {{"x9_9", 1}});
    FAIL("unknown parameter accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::input);
  }
}

}
