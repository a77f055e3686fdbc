#pragma once

#include <cstdint>
#include <vector>

#include "glasner/expsum.hpp"
#include "glasner/matrix.hpp"
#include "glasner/torus.hpp"

namespace glasner {

// Finitely supported probability measure on integer matrices, exact weights.
struct WalkMeasure {
  std::vector<IntMat> support;
  std::vector<mpq_class> weights;

  static WalkMeasure uniform(std::vector<IntMat> mats);
  void validate() const;  // weights positive and summing to exactly 1
  int dim() const { return support.empty() ? 0 : support.front().rows(); }
};

enum class WalkMethod { ExactDist, MonteCarlo };

struct FourierEstimate {
  int n = 0;
  std::vector<long> a;
  cdouble value{0, 0};
  WalkMethod method = WalkMethod::ExactDist;
  double se = 0;  // standard error, Monte Carlo only
};

// Fourier coefficient of mu^{*n} * delta_x at frequency a.
//
// The exact method pushes the distribution of the walk forward through the
// state space in exact rational arithmetic; for rational x all mass stays
// in (1/q)Z^d / Z^d so the state count is bounded by q^d (budgeted). This
// evaluates the same sum as full enumeration of length-n words, with words
// reaching a common point merged.
FourierEstimate fourier_coeff(const WalkMeasure& mu, const TorusPoint& x,
                              const std::vector<long>& a, int n, WalkMethod method,
                              long samples = 100'000, uint64_t seed = 1,
                              long long state_budget = 1'000'000);

struct DecayRow {
  int n = 0;
  double modulus = 0;
  double se = 0;
};

// |Fourier coefficient| as a function of the step count, exact pushforward.
std::vector<DecayRow> decay_profile(const WalkMeasure& mu, const TorusPoint& x,
                                    const std::vector<long>& a, int n_max,
                                    long long state_budget = 1'000'000);

// Plateau value: mean modulus over the last quarter of a decay profile.
double decay_plateau(const std::vector<DecayRow>& profile);

}  // namespace glasner
