#include <doctest.h>

#include <random>
#include <stdexcept>

#include "glasner/intlinalg.hpp"

using namespace glasner;

namespace {

IntMat random_mat(std::mt19937_64& rng, int r, int c, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  IntMat A(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A(i, j) = u(rng);
  return A;
}

void check_snf_invariants(const IntMat& T0, const SnfFactorization& f) {
  CHECK(abs(f.L.det()) == 1);
  CHECK(abs(f.Rp.det()) == 1);
  CHECK(f.L * f.D * f.Rp == T0);
  for (int i = 0; i < f.D.rows(); ++i)
    for (int j = 0; j < f.D.cols(); ++j)
      if (i != j) CHECK(f.D(i, j) == 0);
  for (size_t i = 0; i < f.divisors.size(); ++i) {
    CHECK(f.divisors[i] >= 0);
    CHECK((f.divisors[i] != 0) == (static_cast<int>(i) < f.k));
    if (i + 1 < f.divisors.size() && f.divisors[i + 1] != 0)
      CHECK(f.divisors[i + 1] % f.divisors[i] == 0);
  }
}

}  // namespace

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
  IntMat T0{{2, 0}, {0, 3}};
  auto f = smith_normal_form(T0);
  check_snf_invariants(T0, f);
  REQUIRE(f.k == 2);
  CHECK(f.divisors[0] == 1);
  CHECK(f.divisors[1] == 6);
}

TEST_CASE("snf of identity and zero") {
  IntMat I = IntMat::identity(3);
  auto fi = smith_normal_form(I);
  check_snf_invariants(I, fi);
  CHECK(fi.k == 3);
  for (int i = 0; i < 3; ++i) CHECK(fi.divisors[i] == 1);

  IntMat Z(2, 2);
  auto fz = smith_normal_form(Z);
  check_snf_invariants(Z, fz);
  CHECK(fz.k == 0);
}

TEST_CASE("snf fuzz: reconstruction, unimodularity, divisor chain") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 100; ++t) {
    IntMat T0 = random_mat(rng, dim(rng), dim(rng), 20);
    check_snf_invariants(T0, smith_normal_form(T0));
  }
}

TEST_CASE("gcd bound factorization examples") {
  auto f1 = gcd_bound_factorize(IntMat{{2, 0}, {0, 3}});
  CHECK(f1.Q == 6);
  CHECK(f1.dprime == 2);
  CHECK(f1.T * f1.R == IntMat{{2, 0}, {0, 3}});

  auto f2 = gcd_bound_factorize(IntMat::identity(2));
  CHECK(f2.Q == 1);
  CHECK(f2.dprime == 2);

  auto f3 = gcd_bound_factorize(IntMat{{2, 4}});
  CHECK(f3.Q == 2);
  CHECK(f3.dprime == 1);
  CHECK(f3.T * f3.R == IntMat{{2, 4}});

  CHECK_THROWS_AS(gcd_bound_factorize(IntMat(2, 3)), std::domain_error);
}

TEST_CASE("gcd bound example: diag(2,3), w=(1,1), q=5") {
  auto f = gcd_bound_factorize(IntMat{{2, 0}, {0, 3}});
  ZVec w{1, 1};
  CHECK(gcd_with(f.T.apply(w), 5) <= f.Q);
}

TEST_CASE("factor ranks: T injective, R surjective") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int t = 0; t < 60; ++t) {
    IntMat T0 = random_mat(rng, dim(rng), dim(rng), 15);
    if (T0.is_zero()) continue;
    auto f = gcd_bound_factorize(T0);
    CHECK(f.T * f.R == T0);
    CHECK(QMat(f.T).rank() == f.dprime);
    auto fr = smith_normal_form(f.R);  // surjective iff all divisors are 1
    REQUIRE(fr.k == f.dprime);
    for (int i = 0; i < fr.k; ++i) CHECK(fr.divisors[i] == 1);
  }
}

TEST_CASE("gcd bound fuzz on random matrices") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int t = 0; t < 50; ++t) {
    IntMat T0 = random_mat(rng, 3, 3, 20);
    if (T0.is_zero()) continue;
    CHECK(gcd_bound_fuzz(gcd_bound_factorize(T0), 100, 1000, rng()));
  }
}
