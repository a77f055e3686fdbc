#include "glasner/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "glasner/expsum.hpp"
#include "glasner/polymat.hpp"

namespace glasner {

SemigroupPresentation sl2_elementary_generators() {
  return SemigroupPresentation::of({IntMat{{1, 1}, {0, 1}}, IntMat{{1, 0}, {1, 1}}});
}

TorusPointSet random_rational_set(int d, int k, long den_min, long den_max, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> den_dist(den_min, den_max);
  std::set<std::vector<double>> seen;
  std::vector<TorusPoint> pts;
  while (static_cast<int>(pts.size()) < k) {
    QVec v;
    for (int j = 0; j < d; ++j) {
      long den = den_dist(rng);
      long num = static_cast<long>(rng() % static_cast<uint64_t>(den));
      v.emplace_back(num, den);
      v.back().canonicalize();
    }
    TorusPoint p = TorusPoint::exact(std::move(v));
    if (seen.insert(p.lift()).second) pts.push_back(std::move(p));
  }
  return TorusPointSet::of(std::move(pts));
}

std::vector<TorusPoint> random_points_off_origin(int d, int k, double eps, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<TorusPoint> pts;
  while (static_cast<int>(pts.size()) < k) {
    std::vector<double> v(d);
    for (auto& c : v) c = unif(rng);
    TorusPoint p = TorusPoint::approx(std::move(v));
    if (torus_norm(p) > eps) pts.push_back(std::move(p));
  }
  return pts;
}

TorusPointSet random_grid_subset(int d, int k, long p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::vector<double>> seen;
  std::vector<TorusPoint> pts;
  while (static_cast<int>(pts.size()) < k) {
    QVec v;
    for (int j = 0; j < d; ++j) {
      v.emplace_back(static_cast<long>(rng() % static_cast<uint64_t>(p)), p);
      v.back().canonicalize();
    }
    TorusPoint pt = TorusPoint::exact(std::move(v));
    if (seen.insert(pt.lift()).second) pts.push_back(std::move(pt));
  }
  return TorusPointSet::of(std::move(pts));
}

TorusPointSet full_grid(int d, long q0) {
  std::vector<TorusPoint> pts;
  std::vector<long> idx(d, 0);
  while (true) {
    QVec v;
    for (int j = 0; j < d; ++j) {
      v.emplace_back(idx[j], q0);
      v.back().canonicalize();
    }
    pts.push_back(TorusPoint::exact(std::move(v)));
    int j = d - 1;
    while (j >= 0 && idx[j] == q0 - 1) idx[j--] = 0;
    if (j < 0) break;
    ++idx[j];
  }
  return TorusPointSet::of(std::move(pts));
}

IntMat random_unipotent(int d, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-2, 2);

  IntMat upper = IntMat::identity(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) upper(i, j) = small(rng);

  // Conjugate by a random product of elementary (unimodular) operations.
  IntMat V = IntMat::identity(d);
  IntMat Vinv = IntMat::identity(d);
  for (int t = 0; t < 2 * d; ++t) {
    int i = static_cast<int>(rng() % static_cast<uint64_t>(d));
    int j = static_cast<int>(rng() % static_cast<uint64_t>(d));
    if (i == j) continue;
    long c = small(rng);
    IntMat E = IntMat::identity(d), Einv = IntMat::identity(d);
    E(i, j) = c;
    Einv(i, j) = -c;
    V = V * E;
    Vinv = Einv * Vinv;
  }
  return V * upper * Vinv;
}

PairBoundFuzzReport run_pair_bound_fuzz(int trials, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int dims[] = {1, 2, 3};
  const double epss[] = {0.05, 0.1, 0.2};
  PairBoundFuzzReport report;
  report.trials = trials;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    int d = dims[rng() % 3];
    double eps = epss[rng() % 3];
    int k = 1 + static_cast<int>(rng() % 200);
    auto u = random_points_off_origin(d, k, eps, rng());
    PairBoundCheck c = pair_correlation_bound(u, eps, /*early_exit=*/true);
    if (!c.verified) ++report.violations;
    report.min_margin = std::min(report.min_margin, c.rhs - c.lhs);
  }
  return report;
}

CertificateFuzzReport run_certificate_fuzz(int instances, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> eps_dist(0.15, 0.35);
  std::uniform_int_distribution<long> entry(-3, 3);
  CertificateFuzzReport report;
  int attempts = 0;
  while (report.applicable < instances) {
    if (++attempts > 50 * instances)
      throw std::runtime_error("run_certificate_fuzz: could not realize enough NOT_DENSE instances");
    int d = 1 + static_cast<int>(rng() % 2);
    double eps = eps_dist(rng);
    int k = 2 + static_cast<int>(rng() % 7);
    std::vector<TorusPoint> pts;
    std::set<std::vector<double>> seen;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    while (static_cast<int>(pts.size()) < k) {
      std::vector<double> v(d);
      for (auto& c : v) c = unif(rng);
      TorusPoint p = TorusPoint::approx(std::move(v));
      if (seen.insert(p.lift()).second) pts.push_back(std::move(p));
    }
    IntMat g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = entry(rng);
    auto cert = non_density_certificate(TorusPointSet::of(std::move(pts)), g, eps,
                                              /*max_refinements=*/6, /*early_exit=*/true);
    if (!cert.applicable) continue;
    ++report.applicable;
    if (cert.raw_lhs > cert.raw_rhs + 1e-9) ++report.violations;
  }
  return report;
}

SuccessRateReport run_glasner1d(double eps, int k, int trials, long long n_max, uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuccessRateReport report;
  int successes = 0;
  for (int t = 0; t < trials; ++t) {
    uint64_t trial_seed = rng();
    TorusPointSet Y = random_rational_set(1, k, 1'000, 1'000'000, trial_seed);
    SearchBudget budget;
    budget.n_max = n_max;
    SearchOutcome o = find_scalar_dilation(Y, eps, budget);
    report.rows.push_back({trial_seed, o.found, o.scanned, o.dilator});
    if (o.found) ++successes;
  }
  report.success_rate = static_cast<double>(successes) / trials;
  return report;
}

namespace {

// Exact T^2 set with distinct first and second coordinates (injective
// projections), all over a common prime denominator.
TorusPointSet injective_projection_set(int k, long p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<long> used1, used2;
  std::vector<TorusPoint> pts;
  while (static_cast<int>(pts.size()) < k) {
    long a = static_cast<long>(rng() % static_cast<uint64_t>(p));
    long b = static_cast<long>(rng() % static_cast<uint64_t>(p));
    if (!used1.insert(a).second || !used2.insert(b).second) continue;
    QVec v;
    v.emplace_back(a, p);
    v.emplace_back(b, p);
    for (auto& c : v) c.canonicalize();
    pts.push_back(TorusPoint::exact(std::move(v)));
  }
  return TorusPointSet::of(std::move(pts));
}

}  // namespace

SuccessRateReport run_poly_product(double eps, int k, int trials, long long n_max, uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolyMatrix A = PolyMatrix::from_int_coeffs({
      IntMat{{0, 0}, {0, 0}},  // constant
      IntMat{{1, 0}, {0, 0}},  // x
      IntMat{{0, 0}, {0, 1}},  // x^2
  });
  SuccessRateReport report;
  int successes = 0;
  for (int t = 0; t < trials; ++t) {
    uint64_t trial_seed = rng();
    TorusPointSet Y = injective_projection_set(k, 99991, trial_seed);
    std::vector<QVec> lifts;
    for (const auto& pt : Y.points) lifts.push_back(pt.exact_coords());
    if (!check_set_hypothesis(A, lifts).ok)
      throw std::logic_error("run_poly_product: constructed set fails the pair condition");
    SearchBudget budget;
    budget.n_max = n_max;
    SearchOutcome o = find_poly_dilation(Y, A, eps, budget);
    report.rows.push_back({trial_seed, o.found, o.scanned, o.dilator});
    if (o.found) ++successes;
  }
  report.success_rate = static_cast<double>(successes) / trials;
  return report;
}

namespace {

IntMat int_mat_pow(const IntMat& g, const mpz_class& e) {
  IntMat acc = IntMat::identity(g.rows());
  IntMat base = g;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

mpz_class mpz_pow(long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

}  // namespace

GroupPipelineReport run_group_pipeline(double eps, int k, int trials, int ball_radius,
                                       long long element_budget, uint64_t seed) {
  SemigroupPresentation S = sl2_elementary_generators();
  GroupPipelineReport report;

  PolynomializeResult poly = group_to_polynomial(S);
  report.poly_degree = poly.A.degree();
  report.R = poly.R;
  report.poly_consistent = true;
  for (long n0 = 1; n0 <= 3; ++n0) {
    IntMat expected = IntMat::identity(S.dim);
    for (int i = 0; i < poly.N; ++i) {
      mpz_class exponent;
      mpz_class n0z(n0);
      mpz_pow_ui(exponent.get_mpz_t(), n0z.get_mpz_t(),
                 mpz_pow(poly.R, static_cast<unsigned long>(i)).get_ui());
      expected = expected * int_mat_pow(S.generators[i % S.generators.size()], exponent);
    }
    if (poly.A.eval_int(n0) != expected) report.poly_consistent = false;
  }

  std::mt19937_64 rng(seed);
  int successes = 0;
  for (int t = 0; t < trials; ++t) {
    uint64_t trial_seed = rng();
    TorusPointSet Y = [&] {
      const long primes[] = {1009, 2003, 4001, 8009};
      std::mt19937_64 trng(trial_seed);
      while (true) {
        long p = primes[trng() % 4];
        TorusPointSet cand = random_grid_subset(2, k, p, trng());
        std::vector<QVec> lifts;
        for (const auto& pt : cand.points) lifts.push_back(pt.exact_coords());
        if (check_group_hypothesis(S, lifts).ok) return cand;
      }
    }();
    SearchBudget budget;
    budget.ball_radius = ball_radius;
    budget.element_budget = element_budget;
    SearchOutcome o = find_group_dilation(Y, S, eps, budget);
    report.search.rows.push_back({trial_seed, o.found, o.scanned, o.dilator});
    if (o.found) ++successes;
  }
  report.search.success_rate = static_cast<double>(successes) / trials;
  return report;
}

WalkDecayReport run_walk_decay(const std::vector<long>& qs, int n_max, uint64_t seed) {
  (void)seed;  // the exact pushforward is deterministic; seed kept for report parity
  SemigroupPresentation S = sl2_elementary_generators();
  WalkMeasure mu = WalkMeasure::uniform(S.generators);
  std::vector<long> a = {1, 0};

  WalkDecayReport report;
  for (long q : qs) {
    QVec v;
    v.emplace_back(q == 1 ? 0 : 1, q);
    v.emplace_back(q == 1 ? 0 : 1, q);
    for (auto& c : v) c.canonicalize();
    TorusPoint x = TorusPoint::exact(std::move(v));
    auto profile = decay_profile(mu, x, a, n_max);
    report.rows.push_back({q, decay_plateau(profile)});
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const WalkDecayRow& l, const WalkDecayRow& r) { return l.q < r.q; });
  report.monotone = true;
  for (size_t i = 1; i < report.rows.size(); ++i)
    if (report.rows[i].plateau > report.rows[i - 1].plateau + report.slack)
      report.monotone = false;
  return report;
}

namespace {

double fit_slope(const std::vector<std::pair<double, double>>& log_points) {
  double n = static_cast<double>(log_points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : log_points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

long prime_above(long n) {
  auto is_prime = [](long v) {
    if (v < 2) return false;
    for (long p = 2; p * p <= v; ++p)
      if (v % p == 0) return false;
    return true;
  };
  long v = n + 1;
  while (!is_prime(v)) ++v;
  return v;
}

}  // namespace

HqScalingReport run_hq_scaling(const std::vector<int>& ks, double r, uint64_t seed) {
  std::mt19937_64 rng(seed);
  HqScalingReport report;

  struct Family {
    std::string name;
    int d;
    TorusPointSet (*make)(int k, std::mt19937_64& rng);
  };
  auto make_d1_grid = [](int k, std::mt19937_64&) { return full_grid(1, k); };
  auto make_d1_random = [](int k, std::mt19937_64& rng) {
    return random_grid_subset(1, k, prime_above(static_cast<long>(k) * k), rng());
  };
  auto make_d2_grid = [](int k, std::mt19937_64&) {
    long s = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(k))));
    return full_grid(2, s);
  };
  auto make_d2_random = [](int k, std::mt19937_64& rng) {
    return random_grid_subset(2, k, prime_above(static_cast<long>(k) * k), rng());
  };
  const Family families[] = {
      {"d1_grid", 1, +make_d1_grid},
      {"d1_random", 1, +make_d1_random},
      {"d2_grid", 2, +make_d2_grid},
      {"d2_random", 2, +make_d2_random},
  };

  report.ok = true;
  for (const auto& fam : families) {
    std::vector<std::pair<double, double>> logs;
    for (int k : ks) {
      TorusPointSet Y = fam.make(k, rng);
      HqSum s = hq_sum_scaling(Y, r);
      report.rows.push_back({fam.name, fam.d, Y.size(), s.sum});
      logs.emplace_back(std::log(static_cast<double>(Y.size())), std::log(s.sum));
    }
    double bound = 2.0 - r / (fam.d + 1) + 0.3;
    double slope = fit_slope(logs);
    report.slopes.push_back({fam.name, fam.d, slope, bound});
    if (slope > bound) report.ok = false;
  }
  return report;
}

}  // namespace glasner
