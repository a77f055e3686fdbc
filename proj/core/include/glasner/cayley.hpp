#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "glasner/matrix.hpp"
#include "glasner/polymat.hpp"

namespace glasner {

bool is_unipotent(const IntMat& u);

struct SemigroupPresentation {
  int dim = 0;
  std::vector<IntMat> generators;
  std::vector<bool> unipotent;   // (u - I)^d == 0, computed exactly
  ZVec determinants;

  static SemigroupPresentation of(std::vector<IntMat> gens);
  bool all_unipotent() const;
};

// Ball of radius n in the Cayley graph of the semigroup (no inverses),
// deduplicated by exact matrix equality, in BFS/generator-index order.
struct CayleyBall {
  int radius = 0;
  std::vector<IntMat> elements;       // identity first
  std::vector<int> word_length;      // per element
  std::vector<std::vector<int>> words;  // generator indices, canonical witness word
};

CayleyBall cayley_ball(const SemigroupPresentation& S, int n, long long budget = 1'000'000);

// Subspaces W_n = span{ga - a : g in ball of radius n}, tracked until they
// stabilize; dim W is nondecreasing and stabilizes within d steps.
struct AffineSpanTrace {
  std::vector<int> dims;       // dim W_n for n = 0..n_max
  int stabilization_radius = 0;  // first n with W_n = W_{n+1}
  int final_dim = 0;
  std::vector<QVec> basis;     // basis of the stabilized W (the proper
                               // invariant subspace direction when final_dim < d)
};

AffineSpanTrace affine_span_trace(const SemigroupPresentation& S, const QVec& a, int n_max,
                                  long long budget = 1'000'000);

struct GroupHypothesisResult {
  bool ok = true;
  std::optional<std::pair<int, int>> bad_pair;
};

// For each pair difference a, requires the affine span to reach full
// dimension within radius d (no G-invariant proper affine subspace
// contains the difference).
GroupHypothesisResult check_group_hypothesis(const SemigroupPresentation& S,
                                           const std::vector<QVec>& lifts);

// U(x) with U(n) = u^n for all integers n; entries are integer-valued
// polynomials with rational coefficients (degree < d).
PolyMatrix unipotent_power_poly(const IntMat& u);

// Least R = 1 + max exponent entry; the base-R code e -> sum e_i R^{i-1}
// is injective on the exponent set (asserted).
int substitution_exponent(const std::set<std::vector<unsigned>>& exponents);

struct PolynomializeResult {
  PolyMatrix A;     // univariate A(x) = Q(x, x^R, ..., x^{R^{N-1}})
  int R = 0;
  int N = 0;        // number of factors, d * #generators
  size_t terms = 0; // multivariate monomials before substitution
};

// Symbolic product of u_1^{n_1} ... u_N^{n_N} with cyclic generator
// ordering, collapsed to one variable by n_i -> x^{R^{i-1}}.
PolynomializeResult group_to_polynomial(const SemigroupPresentation& S,
                                        size_t term_budget = 200'000,
                                        long long degree_budget = 100'000);

}  // namespace glasner
