#include <doctest.h>

#include <stdexcept>

#include "glasner/experiments.hpp"
#include "glasner/search.hpp"
#include "test_util.hpp"

using namespace glasner;
using namespace glasner::testutil;

namespace {

TorusPointSet circle_grid(int q) {
  std::vector<TorusPoint> pts;
  for (int j = 0; j < q; ++j) pts.push_back(TorusPoint::exact({mpq_class(j, q)}));
  return TorusPointSet::of(std::move(pts));
}

}  // namespace

TEST_CASE("scalar search: already-dense set found at n = 1") {
  SearchBudget b;
  auto out = find_scalar_dilation(circle_grid(101), 0.02, b);
  REQUIRE(out.found);
  CHECK(out.scalar_dilator[0] == 1);
  CHECK(out.scanned == 1);
  CHECK(out.verdict.status == Density::Dense);
}

TEST_CASE("scalar search: two-point sweep succeeds within n = 500") {
  SearchBudget b;
  b.n_max = 500;
  auto out = find_scalar_dilation(qset({{"0"}, {"1/1000"}}), 0.3, b);
  REQUIRE(out.found);
  CHECK(out.scalar_dilator[0] <= 500);
  // soundness: independent re-verification of the winning image
  auto image = apply_scalar(out.scalar_dilator[0], qset({{"0"}, {"1/1000"}}));
  CHECK(is_eps_dense(image, 0.3).status == Density::Dense);
}

TEST_CASE("scalar search: fixed point never succeeds") {
  SearchBudget b;
  b.n_max = 2000;
  auto out = find_scalar_dilation(qset({{"0"}}), 0.3, b);
  CHECK_FALSE(out.found);
  CHECK(out.scanned == 2000);
}

TEST_CASE("scalar search budget monotonicity") {
  SearchBudget small, large;
  small.n_max = 500;
  large.n_max = 1000;
  auto Y = qset({{"0"}, {"1/1000"}});
  auto a = find_scalar_dilation(Y, 0.3, small);
  auto b = find_scalar_dilation(Y, 0.3, large);
  REQUIRE(a.found);
  REQUIRE(b.found);
  CHECK(a.scalar_dilator[0] == b.scalar_dilator[0]);
}

TEST_CASE("polynomial search: constant identity on a sparse set fails") {
  auto A = PolyMatrix::constant(IntMat::identity(1));
  SearchBudget b;
  b.n_max = 50;
  auto out = find_poly_dilation(qset({{"0"}, {"1/2"}}), A, 0.2, b);
  CHECK_FALSE(out.found);
  CHECK(out.scanned == 50);
}

TEST_CASE("polynomial search: diag(x, x^2) on a generic grid subset") {
  IntMat c0(2, 2), c1(2, 2), c2(2, 2);
  c1(0, 0) = 1;
  c2(1, 1) = 1;
  auto A = PolyMatrix::from_int_coeffs({c0, c1, c2});
  auto Y = random_grid_subset(2, 60, 99991, 12);
  SearchBudget b;
  b.n_max = 100000;
  auto out = find_poly_dilation(Y, A, 0.25, b);
  REQUIRE(out.found);
  CHECK(is_eps_dense(apply_matrix(out.matrix_dilator, Y), 0.25).status == Density::Dense);
}

TEST_CASE("product search: slice through a fiber is rejected") {
  auto Y = qset({{"1/3", "1/2"}, {"2/3", "1/2"}});
  SearchBudget b;
  CHECK_THROWS_AS(find_product_dilation(Y, 1, 1, 0.2, b), std::invalid_argument);
}

TEST_CASE("product search: injective projections succeed on a generic set") {
  // (j/101, j^2/101) for j = 1..40: both coordinate projections injective
  std::vector<TorusPoint> pts;
  for (int j = 1; j <= 40; ++j)
    pts.push_back(TorusPoint::exact({mpq_class(j, 101), mpq_class(j * j % 101, 101)}));
  auto Y = TorusPointSet::of(std::move(pts));
  SearchBudget b;
  b.n_max = 100000;
  auto out = find_product_dilation(Y, 1, 1, 0.25, b);
  REQUIRE(out.found);
  REQUIRE(out.scalar_dilator.size() == 2);
  CHECK(out.verdict.status == Density::Dense);
}

TEST_CASE("group search: dense set found at the identity") {
  auto S = sl2_elementary_generators();
  std::vector<TorusPoint> pts;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      pts.push_back(TorusPoint::exact({mpq_class(i, 7), mpq_class(j, 7)}));
  auto Y = TorusPointSet::of(std::move(pts));
  SearchBudget b;
  auto out = find_group_dilation(Y, S, 0.2, b);
  REQUIRE(out.found);
  CHECK(out.word.empty());
  CHECK(out.matrix_dilator == IntMat::identity(2));
  CHECK(out.scanned == 1);
}

TEST_CASE("group search: two points can never be 0.3-dense on the 2-torus") {
  auto S = sl2_elementary_generators();
  auto Y = qset({{"0", "0"}, {"1/2", "0"}});
  SearchBudget b;
  b.ball_radius = 5;
  auto out = find_group_dilation(Y, S, 0.3, b);
  CHECK_FALSE(out.found);
}

TEST_CASE("group search on random rational sets with large prime denominators") {
  auto S = sl2_elementary_generators();
  auto Y = random_grid_subset(2, 40, 2003, 3);
  SearchBudget b;
  b.ball_radius = 8;
  auto out = find_group_dilation(Y, S, 0.3, b);
  REQUIRE(out.found);
  // soundness + word reproduces the dilator
  IntMat prod = IntMat::identity(2);
  for (int g : out.word) prod = S.generators[g] * prod;
  CHECK(prod == out.matrix_dilator);
  CHECK(is_eps_dense(apply_matrix(out.matrix_dilator, Y), 0.3).status == Density::Dense);
}

TEST_CASE("search outcomes are deterministic") {
  auto Y = random_grid_subset(1, 25, 1009, 8);
  SearchBudget b;
  b.n_max = 10000;
  auto a1 = find_scalar_dilation(Y, 0.15, b);
  auto a2 = find_scalar_dilation(Y, 0.15, b);
  CHECK(a1.found == a2.found);
  CHECK(a1.scanned == a2.scanned);
  CHECK(a1.dilator == a2.dilator);
}
