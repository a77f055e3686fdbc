#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glasner/cayley.hpp"
#include "glasner/search.hpp"
#include "glasner/torus.hpp"
#include "glasner/walk.hpp"

namespace glasner {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Standard SL2 elementary generators [[1,1],[0,1]] and [[1,0],[1,1]].
SemigroupPresentation sl2_elementary_generators();

// --- seeded random input builders -----------------------------------------

// k exact rational points of T^d with denominators in [den_min, den_max].
TorusPointSet random_rational_set(int d, int k, long den_min, long den_max, uint64_t seed);

// k float points of T^d, all at torus norm > eps (rejection sampled).
std::vector<TorusPoint> random_points_off_origin(int d, int k, double eps, uint64_t seed);

// k distinct points on the (1/p)-grid of T^d, p prime.
TorusPointSet random_grid_subset(int d, int k, long p, uint64_t seed);

// Full (1/q0)-grid of T^d (q0^d points).
TorusPointSet full_grid(int d, long q0);

// Random d x d unipotent integer matrix: a conjugated upper-unitriangular
// matrix with small entries.
IntMat random_unipotent(int d, uint64_t seed);

// --- named experiments ------------------------------------------------------

struct PairBoundFuzzReport {
  int trials = 0;
  int violations = 0;
  double min_margin = 0;  // min over trials of rhs - lhs
};
PairBoundFuzzReport run_pair_bound_fuzz(int trials, uint64_t seed);

struct CertificateFuzzReport {
  int applicable = 0;
  int violations = 0;
};
CertificateFuzzReport run_certificate_fuzz(int instances, uint64_t seed);

struct TrialRow {
  uint64_t trial_seed = 0;
  bool success = false;
  long long scanned = 0;
  std::string dilator;
};

struct SuccessRateReport {
  std::vector<TrialRow> rows;
  double success_rate = 0;
};

// Scalar dilation search on random rational 1-d sets.
SuccessRateReport run_glasner1d(double eps, int k, int trials, long long n_max, uint64_t seed);

// Polynomial dilation (x, x^2) on T^2 sets with injective projections.
SuccessRateReport run_poly_product(double eps, int k, int trials, long long n_max, uint64_t seed);

struct GroupPipelineReport {
  bool poly_consistent = false;  // A(n0) matches the substituted product, n0 = 1..3
  int poly_degree = 0;
  int R = 0;
  SuccessRateReport search;
};

// Unipotent pipeline: polynomialization consistency plus Cayley-ball search.
GroupPipelineReport run_group_pipeline(double eps, int k, int trials, int ball_radius,
                                       long long element_budget, uint64_t seed);

struct WalkDecayRow {
  long q = 0;
  double plateau = 0;
};

struct WalkDecayReport {
  std::vector<WalkDecayRow> rows;  // ordered by q
  bool monotone = false;           // nonincreasing within the stated slack
  double slack = 0.05;
};

WalkDecayReport run_walk_decay(const std::vector<long>& qs, int n_max, uint64_t seed);

struct HqScalingRow {
  std::string family;
  int d = 0;
  int k = 0;
  double sum = 0;
};

struct HqScalingReport {
  std::vector<HqScalingRow> rows;
  struct Slope {
    std::string family;
    int d = 0;
    double slope = 0;
    double bound = 0;  // 2 - r/(d+1) + 0.3
  };
  std::vector<Slope> slopes;
  bool ok = false;
};

HqScalingReport run_hq_scaling(const std::vector<int>& ks, double r, uint64_t seed);

}  // namespace glasner
