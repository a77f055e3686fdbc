#include <doctest.h>

#include <random>
#include <stdexcept>

#include "glasner/cayley.hpp"
#include "glasner/experiments.hpp"

using namespace glasner;

namespace {

IntMat int_mat_pow(const IntMat& u, long n) {
  IntMat acc = IntMat::identity(u.rows()), base = u;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

// exact inverse of a matrix with determinant +-1, via rational elimination
IntMat unimodular_inverse(const IntMat& u) {
  int d = u.rows();
  QMat aug(d, 2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug(i, j) = mpq_class(u(i, j));
    aug(i, d + i) = 1;
  }
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (aug(piv, col) == 0) ++piv;
    if (piv != col)
      for (int j = 0; j < 2 * d; ++j) std::swap(aug(piv, j), aug(col, j));
    mpq_class p = aug(col, col);
    for (int j = 0; j < 2 * d; ++j) aug(col, j) /= p;
    for (int i = 0; i < d; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      mpq_class f = aug(i, col);
      for (int j = 0; j < 2 * d; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  IntMat inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      REQUIRE(aug(i, d + j).get_den() == 1);
      inv(i, j) = aug(i, d + j).get_num();
    }
  return inv;
}

}  // namespace

TEST_CASE("unipotency detection") {
  CHECK(is_unipotent(IntMat{{1, 1}, {0, 1}}));
  CHECK(is_unipotent(IntMat::identity(3)));
  CHECK_FALSE(is_unipotent(IntMat{{2, 0}, {0, 1}}));
  CHECK_FALSE(is_unipotent(IntMat{{0, -1}, {1, 0}}));
}

TEST_CASE("presentation flags") {
  auto S = sl2_elementary_generators();
  CHECK(S.dim == 2);
  CHECK(S.all_unipotent());
  CHECK(S.determinants[0] == 1);
  CHECK(S.determinants[1] == 1);
}

TEST_CASE("cayley ball sizes") {
  auto SI = SemigroupPresentation::of({IntMat::identity(2)});
  CHECK(cayley_ball(SI, 5).elements.size() == 1);

  auto Sc = SemigroupPresentation::of({IntMat{{1, 1}, {0, 1}}});
  auto bc = cayley_ball(Sc, 3);
  CHECK(bc.elements.size() == 4);  // I, u, u^2, u^3

  auto S = sl2_elementary_generators();
  auto b2 = cayley_ball(S, 2);
  CHECK(b2.elements.size() == 7);  // I, 2 generators, 4 distinct products
  CHECK(b2.elements[0] == IntMat::identity(2));
  CHECK(b2.word_length[0] == 0);

  // nesting: ball n inside ball n+1
  auto b3 = cayley_ball(S, 3);
  for (const auto& g : b2.elements) {
    bool found = false;
    for (const auto& h : b3.elements) found = found || g == h;
    CHECK(found);
  }
}

TEST_CASE("cayley ball budget error") {
  auto S = sl2_elementary_generators();
  CHECK_THROWS_AS(cayley_ball(S, 40, 100), std::length_error);
}

TEST_CASE("cayley ball words reproduce their elements") {
  auto S = sl2_elementary_generators();
  auto b = cayley_ball(S, 4);
  for (size_t i = 0; i < b.elements.size(); ++i) {
    IntMat prod = IntMat::identity(2);
    for (int g : b.words[i]) prod = S.generators[g] * prod;
    CHECK(prod == b.elements[i]);
    CHECK(static_cast<int>(b.words[i].size()) == b.word_length[i]);
  }
}

TEST_CASE("affine span trace: elementary generators reach full dimension") {
  auto S = sl2_elementary_generators();
  auto t = affine_span_trace(S, {mpq_class(1), mpq_class(0)}, 4);
  CHECK(t.final_dim == 2);
  CHECK(t.stabilization_radius <= 2);
  CHECK(t.dims[0] == 0);
  for (size_t i = 1; i < t.dims.size(); ++i) CHECK(t.dims[i] >= t.dims[i - 1]);
}

TEST_CASE("affine span trace: identity semigroup stabilizes at zero") {
  auto SI = SemigroupPresentation::of({IntMat::identity(2)});
  auto t = affine_span_trace(SI, {mpq_class(1), mpq_class(1)}, 4);
  CHECK(t.final_dim == 0);
  CHECK(t.stabilization_radius == 0);
}

TEST_CASE("affine span trace: single upper generator stabilizes at dim 1") {
  auto S = SemigroupPresentation::of({IntMat{{1, 1}, {0, 1}}});
  auto t = affine_span_trace(S, {mpq_class(0), mpq_class(1)}, 6);
  CHECK(t.final_dim == 1);
  REQUIRE(t.basis.size() == 1);
  // W = span{(1,0)}
  CHECK(t.basis[0][1] == 0);
  CHECK(t.basis[0][0] != 0);
}

TEST_CASE("affine span trace rejects a = 0") {
  auto S = sl2_elementary_generators();
  CHECK_THROWS_AS(affine_span_trace(S, {mpq_class(0), mpq_class(0)}, 4), std::invalid_argument);
}

TEST_CASE("group hypothesis checker") {
  auto S = sl2_elementary_generators();
  std::vector<QVec> good{{mpq_class(0), mpq_class(0)}, {mpq_class(1, 3), mpq_class(1, 5)}};
  CHECK(check_group_hypothesis(S, good).ok);

  // single upper generator fixes the horizontal direction
  auto Su = SemigroupPresentation::of({IntMat{{1, 1}, {0, 1}}});
  std::vector<QVec> bad{{mpq_class(0), mpq_class(0)}, {mpq_class(1, 2), mpq_class(0)}};
  auto r = check_group_hypothesis(Su, bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.bad_pair.has_value());

  std::vector<QVec> single{{mpq_class(1, 3), mpq_class(2, 3)}};
  CHECK(check_group_hypothesis(S, single).ok);
}

TEST_CASE("proof identity u(ga - a) = (uga - a) - (ua - a)") {
  auto S = sl2_elementary_generators();
  auto ball = cayley_ball(S, 4);
  QVec a{mpq_class(2, 7), mpq_class(3, 5)};
  for (const auto& g : ball.elements)
    for (const auto& u : S.generators) {
      QVec ga = g.apply(a), ua = u.apply(a), uga = u.apply(ga);
      for (int i = 0; i < 2; ++i) {
        mpq_class lhs = u.apply(QVec{ga[0] - a[0], ga[1] - a[1]})[i];
        mpq_class rhs = (uga[i] - a[i]) - (ua[i] - a[i]);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("unipotent power polynomials") {
  auto UI = unipotent_power_poly(IntMat::identity(2));
  CHECK(UI.degree() == 0);
  CHECK(UI.eval_int(5) == IntMat::identity(2));

  auto U = unipotent_power_poly(IntMat{{1, 1}, {0, 1}});
  CHECK(U.degree() == 1);
  CHECK(U.coeff(1)(0, 1) == 1);
  CHECK(U.eval_int(7) == IntMat{{1, 7}, {0, 1}});

  IntMat u3{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  auto U3 = unipotent_power_poly(u3);
  // (1,3) entry is x(x+1)/2
  CHECK(U3.coeff(1)(0, 2) == mpq_class(1, 2));
  CHECK(U3.coeff(2)(0, 2) == mpq_class(1, 2));
  for (long n = 0; n <= 6; ++n) CHECK(U3.eval_int(n) == int_mat_pow(u3, n));
  // integer-valued at negative exponents too
  IntMat inv = unimodular_inverse(u3);
  for (long n = 1; n <= 3; ++n)
    CHECK(U3.eval_int(mpz_class(-n)) == int_mat_pow(inv, n));

  CHECK_THROWS_AS(unipotent_power_poly(IntMat{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("substitution exponent codes") {
  std::set<std::vector<unsigned>> e1{{0, 0}, {1, 0}, {0, 1}};
  CHECK(substitution_exponent(e1) == 2);
  std::set<std::vector<unsigned>> e2{{2, 1}, {0, 3}};
  CHECK(substitution_exponent(e2) == 4);
  CHECK_THROWS_AS(substitution_exponent({}), std::invalid_argument);
}

TEST_CASE("group polynomialization matches explicit products") {
  auto S = sl2_elementary_generators();
  auto r = group_to_polynomial(S);
  CHECK(r.N == 4);
  CHECK(r.R >= 2);

  for (long n0 = 1; n0 <= 3; ++n0) {
    // explicit product u_1^{n0} u_2^{n0^R} u_1^{n0^{R^2}} u_2^{n0^{R^3}}
    IntMat prod = IntMat::identity(2);
    mpz_class expnt = n0;
    for (int i = 0; i < r.N; ++i) {
      const IntMat& u = S.generators[i % 2];
      mpz_class e = expnt;
      IntMat up = IntMat::identity(2), base = u;
      while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) up = up * base;
        base = base * base;
        e >>= 1;
      }
      prod = prod * up;
      mpz_pow_ui(expnt.get_mpz_t(), mpz_class(n0).get_mpz_t(),
                 static_cast<unsigned long>(std::pow(double(r.R), i + 1)));
    }
    CHECK(r.A.eval_int(n0) == prod);
  }
}
