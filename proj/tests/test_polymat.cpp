#include <doctest.h>

#include <random>
#include <stdexcept>

#include "glasner/polymat.hpp"

using namespace glasner;

namespace {

// A(x) = diag(x, x^2)
PolyMatrix diag_x_x2() {
  IntMat c0(2, 2), c1(2, 2), c2(2, 2);
  c1(0, 0) = 1;
  c2(1, 1) = 1;
  return PolyMatrix::from_int_coeffs({c0, c1, c2});
}

// brute-force killer search: nonzero integer v with ||v||inf <= 10 and
// v.C_j a = 0 for all j >= 1
bool has_killer_v(const PolyMatrix& A, const QVec& a) {
  for (int v0 = -10; v0 <= 10; ++v0)
    for (int v1 = -10; v1 <= 10; ++v1) {
      if (v0 == 0 && v1 == 0) continue;
      bool kills = true;
      for (int j = 1; j <= A.degree(); ++j) {
        QVec ca = A.coeff(j).apply(a);
        if (mpq_class(v0) * ca[0] + mpq_class(v1) * ca[1] != 0) kills = false;
      }
      if (kills) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("polynomial matrix evaluation") {
  auto A = diag_x_x2();
  IntMat g = A.eval_int(3);
  CHECK(g == IntMat{{3, 0}, {0, 9}});

  IntMat c{{5, -1}, {2, 7}};
  auto C = PolyMatrix::constant(c);
  CHECK(C.eval_int(12345) == c);

  // [[x,1],[0,x]] at n=2
  IntMat b0{{0, 1}, {0, 0}};
  auto B = PolyMatrix::from_int_coeffs({b0, IntMat::identity(2)});
  CHECK(B.eval_int(2) == IntMat{{2, 1}, {0, 2}});
}

TEST_CASE("freq_map rows") {
  auto A = diag_x_x2();
  auto f = freq_map(A, {1, 0});
  REQUIRE(f.rows.rows() == 2);
  CHECK(f.rows(0, 0) == 1);
  CHECK(f.rows(0, 1) == 0);
  CHECK(f.rows(1, 0) == 0);
  CHECK(f.rows(1, 1) == 0);

  auto C = PolyMatrix::constant(IntMat{{3, 1}, {0, 2}});
  CHECK(freq_map(C, {1, 1}).rows.rows() == 0);

  IntMat b0{{0, 1}, {0, 0}};
  auto B = PolyMatrix::from_int_coeffs({b0, IntMat::identity(2)});
  auto fb = freq_map(B, {0, 1});
  REQUIRE(fb.rows.rows() == 1);
  CHECK(fb.rows(0, 0) == 0);
  CHECK(fb.rows(0, 1) == 1);

  CHECK_THROWS_AS(freq_map(A, {0, 0}), std::invalid_argument);
}

TEST_CASE("freq_map linearity and eval compatibility") {
  auto A = diag_x_x2();
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> z(-9, 9), d(1, 9);
  for (int t = 0; t < 50; ++t) {
    QVec u{mpq_class(z(rng), d(rng)), mpq_class(z(rng), d(rng))};
    QVec v{mpq_class(z(rng), d(rng)), mpq_class(z(rng), d(rng))};
    for (auto& c : u) c.canonicalize();
    for (auto& c : v) c.canonicalize();
    std::vector<long> m{z(rng), z(rng)};
    if (m[0] == 0 && m[1] == 0) m[0] = 1;
    auto fm = freq_map(A, m);

    // linearity
    QVec uv(2);
    for (int i = 0; i < 2; ++i) uv[i] = u[i] + v[i];
    QVec l = fm.rows.apply(uv), lu = fm.rows.apply(u), lv = fm.rows.apply(v);
    for (int j = 0; j < 2; ++j) CHECK(l[j] == lu[j] + lv[j]);

    // m.(A(n) - A(0))u == sum_j (row_j . u) n^j
    mpz_class n = z(rng);
    QMat An = A.eval(mpq_class(n)), A0 = A.eval(0);
    mpq_class lhs = 0;
    for (int i = 0; i < 2; ++i) {
      QVec col = An.apply(u), col0 = A0.apply(u);
      lhs += mpq_class(m[i]) * (col[i] - col0[i]);
    }
    mpq_class rhs = 0, pw = n;
    for (int j = 0; j < 2; ++j) {
      rhs += lu[j] * pw;
      pw *= n;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("nondegenerate-pair check examples") {
  auto A = diag_x_x2();
  CHECK(check_nondegenerate_pair(A, {mpq_class(1, 2), mpq_class(1, 3)}));

  // A(x) = diag(x, x): v = (1,1) kills a = (1/2, -1/2)
  auto Ad = PolyMatrix::from_int_coeffs({IntMat(2, 2), IntMat::identity(2)});
  CHECK_FALSE(check_nondegenerate_pair(Ad, {mpq_class(1, 2), mpq_class(-1, 2)}));

  // constant A: C_j a = 0 for all j >= 1
  auto C = PolyMatrix::constant(IntMat{{1, 2}, {3, 4}});
  CHECK_FALSE(check_nondegenerate_pair(C, {mpq_class(1), mpq_class(1)}));

  CHECK_THROWS_AS(check_nondegenerate_pair(A, {mpq_class(0), mpq_class(0)}),
                  std::invalid_argument);
}

TEST_CASE("nondegenerate-pair check agrees with brute-force killer search") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> z(-3, 3), d(1, 4);
  for (int t = 0; t < 80; ++t) {
    std::vector<IntMat> cs(3, IntMat(2, 2));
    for (int j = 1; j <= 2; ++j)
      for (int i = 0; i < 2; ++i)
        for (int l = 0; l < 2; ++l) cs[j](i, l) = z(rng);
    PolyMatrix A(2, {QMat(cs[0]), QMat(cs[1]), QMat(cs[2])});
    QVec a{mpq_class(z(rng), d(rng)), mpq_class(z(rng), d(rng))};
    for (auto& c : a) c.canonicalize();
    if (a[0] == 0 && a[1] == 0) continue;
    if (A.degree() < 1) continue;
    if (check_nondegenerate_pair(A, a)) {
      CHECK_FALSE(has_killer_v(A, a));
    } else {
      // rank deficiency in dimension 2: the vectors C_j a span at most a
      // line, so an exact cross-product vector kills every row
      QVec span{0, 0};
      for (int j = 1; j <= A.degree(); ++j) {
        QVec ca = A.coeff(j).apply(a);
        if (ca[0] != 0 || ca[1] != 0) span = ca;
      }
      QVec v{-span[1], span[0]};
      if (v[0] == 0 && v[1] == 0) v = {1, 0};  // all C_j a vanish, anything kills
      for (int j = 1; j <= A.degree(); ++j) {
        QVec ca = A.coeff(j).apply(a);
        CHECK(v[0] * ca[0] + v[1] * ca[1] == 0);
      }
    }
  }
}

TEST_CASE("float-mode pair check") {
  auto A = diag_x_x2();
  auto good = check_nondegenerate_pair_float(A, {0.5, 1.0 / 3});
  CHECK(good.ok);
  CHECK(good.confident);
  auto Ad = PolyMatrix::from_int_coeffs({IntMat(2, 2), IntMat::identity(2)});
  auto bad = check_nondegenerate_pair_float(Ad, {0.5, -0.5});
  CHECK_FALSE(bad.ok);
}

TEST_CASE("set hypothesis check") {
  auto A = diag_x_x2();
  std::vector<QVec> good{{mpq_class(1, 7), mpq_class(2, 7)}, {mpq_class(3, 7), mpq_class(6, 7)}};
  auto r = check_set_hypothesis(A, good);
  CHECK(r.ok);

  // two points on a horizontal line: difference has zero second coordinate
  std::vector<QVec> flat{{mpq_class(1, 7), mpq_class(2, 7)}, {mpq_class(3, 7), mpq_class(2, 7)}};
  auto rf = check_set_hypothesis(A, flat);
  CHECK_FALSE(rf.ok);
  REQUIRE(rf.bad_pair.has_value());
  CHECK(rf.bad_pair->first == 0);
  CHECK(rf.bad_pair->second == 1);

  std::vector<QVec> single{{mpq_class(1, 3), mpq_class(1, 5)}};
  CHECK(check_set_hypothesis(A, single).ok);

  std::vector<QVec> dup{{mpq_class(1, 3), mpq_class(1, 5)}, {mpq_class(1, 3), mpq_class(1, 5)}};
  CHECK_THROWS_AS(check_set_hypothesis(A, dup), std::invalid_argument);
}

TEST_CASE("degree is kept tight") {
  IntMat z(2, 2);
  auto A = PolyMatrix::from_int_coeffs({IntMat::identity(2), z, z});
  CHECK(A.degree() == 0);
}
