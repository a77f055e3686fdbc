#pragma once

#include <string>
#include <vector>

#include "glasner/cayley.hpp"
#include "glasner/polymat.hpp"
#include "glasner/torus.hpp"

namespace glasner {

struct SearchBudget {
  long long n_max = 100'000;       // scalar / polynomial scans
  int ball_radius = 8;             // group searches
  long long element_budget = 1'000'000;
  long long time_budget_ms = 0;    // 0 = unlimited
  int max_refinements = 6;         // density-check refinement depth per candidate
};

struct SearchOutcome {
  bool found = false;
  std::string dilator;        // printable description of the winning element
  ZVec scalar_dilator;        // n, or (n, m) for product searches
  IntMat matrix_dilator;      // group / polynomial searches
  std::vector<int> word;      // generator indices, group searches
  DensityVerdict verdict;     // verdict for the winning image
  long long scanned = 0;
};

// Scans n = 1..n_max for the first n with nY certified eps-dense.
SearchOutcome find_scalar_dilation(const TorusPointSet& Y, double eps, const SearchBudget& budget);

// Scans n = 1..n_max for the first n with A(n)Y certified eps-dense.
SearchOutcome find_poly_dilation(const TorusPointSet& Y, const PolyMatrix& A, double eps,
                                 const SearchBudget& budget);

// Scalar dilation per factor of T^{d1} x T^{d2}; pairs (n, m) enumerated in
// increasing max(n, m), then lexicographically. Requires both projections
// of Y to be injective (the canonical obstruction otherwise).
SearchOutcome find_product_dilation(const TorusPointSet& Y, int d1, int d2, double eps,
                                    const SearchBudget& budget);

// Lazy BFS over the Cayley ball, identity first; first certified hit in
// canonical (word length, generator index) order wins.
SearchOutcome find_group_dilation(const TorusPointSet& Y, const SemigroupPresentation& S,
                                  double eps, const SearchBudget& budget);

}  // namespace glasner
