#include "glasner/expsum.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace glasner {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr long long kCompleteSumBudget = 1'000'000;
}  // namespace

cdouble unit_phase(double t) { return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)}; }

cdouble unit_phase(const mpq_class& t) { return unit_phase(mod1(t).get_d()); }

long long FreqBox::size() const {
  long long s = 1;
  for (int j = 0; j < dim; ++j) s *= 2 * M + 1;
  return s - 1;
}

void FreqBox::for_each(const std::function<bool(const std::vector<long>&)>& fn) const {
  std::vector<long> m(dim, -M);
  while (true) {
    bool zero = true;
    for (long c : m)
      if (c != 0) { zero = false; break; }
    if (!zero && !fn(m)) return;
    int j = dim - 1;
    while (j >= 0 && m[j] == M) m[j--] = -M;
    if (j < 0) return;
    ++m[j];
  }
}

long freq_window(int d, double eps) { return static_cast<long>(std::ceil(d / eps)); }

namespace {

// Flat [0,1) lifts of a point list.
std::vector<double> flat_lifts(const std::vector<TorusPoint>& pts, int d) {
  std::vector<double> out(pts.size() * d);
  for (size_t i = 0; i < pts.size(); ++i) {
    auto l = pts[i].lift();
    std::copy(l.begin(), l.end(), out.begin() + i * d);
  }
  return out;
}

cdouble inner_sum(const std::vector<long>& m, const std::vector<double>& lifts, int k, int d) {
  cdouble s = 0;
  for (int i = 0; i < k; ++i) {
    double dot = 0;
    for (int j = 0; j < d; ++j) dot += static_cast<double>(m[j]) * lifts[static_cast<size_t>(i) * d + j];
    s += unit_phase(dot);
  }
  return s;
}

}  // namespace

PairBoundCheck pair_correlation_bound(const std::vector<TorusPoint>& u, double eps, bool early_exit) {
  if (u.empty()) throw std::invalid_argument("pair_correlation_bound: empty point list");
  if (!(eps > 0 && eps < 0.5)) throw std::invalid_argument("pair_correlation_bound: eps out of (0, 1/2)");
  const int d = u.front().dim();
  for (const auto& p : u)
    if (!(torus_norm(p) > eps))
      throw std::invalid_argument("pair_correlation_bound: |u_i| > eps violated");

  const int k = static_cast<int>(u.size());
  PairBoundCheck out;
  out.lhs = k / 3.0;
  FreqBox box{d, freq_window(d, eps)};
  auto lifts = flat_lifts(u, d);
  box.for_each([&](const std::vector<long>& m) {
    out.rhs += std::abs(inner_sum(m, lifts, k, d));
    ++out.terms;
    if (early_exit && out.rhs >= out.lhs) return false;
    return true;
  });
  out.verified = out.lhs <= out.rhs + 1e-9;
  return out;
}

NonDensityCertificate non_density_certificate(const TorusPointSet& Y, const IntMat& g,
                                              double eps, int max_refinements,
                                              bool early_exit) {
  NonDensityCertificate out;
  TorusPointSet image = apply_matrix(g, Y);
  out.verdict = is_eps_dense(image, eps, max_refinements);
  if (out.verdict.status != Density::NotDense) return out;
  out.applicable = true;

  const int d = image.dim;
  const int k = image.size();
  out.raw_lhs = static_cast<double>(k) * k / 9.0;
  FreqBox box{d, freq_window(d, eps)};
  const double nbox = static_cast<double>(box.size());
  auto lifts = flat_lifts(image.points, d);
  const auto alpha = out.verdict.witness->lift();

  double square_sum = 0;
  box.for_each([&](const std::vector<long>& m) {
    cdouble s = 0;
    double ma = 0;
    for (int j = 0; j < d; ++j) ma += static_cast<double>(m[j]) * alpha[j];
    for (int i = 0; i < k; ++i) {
      double dot = 0;
      for (int j = 0; j < d; ++j) dot += static_cast<double>(m[j]) * lifts[static_cast<size_t>(i) * d + j];
      s += unit_phase(ma - dot);
    }
    square_sum += std::norm(s);
    if (early_exit && nbox * square_sum >= out.raw_lhs) return false;
    return true;
  });
  out.raw_rhs = nbox * square_sum;

  // Constant-free pair form: the witness cancels in the differences, so
  // sum_m sum_{i,j} e(m.g(x_i - x_j)) = sum_m |sum_i e(m.g x_i)|^2.
  if (!early_exit) {
    double pair = 0;
    box.for_each([&](const std::vector<long>& m) {
      pair += std::norm(inner_sum(m, lifts, k, d));
      return true;
    });
    out.pair_sum = pair;
  } else {
    out.pair_sum = square_sum;
  }
  return out;
}

TorsionHistogram torsion_histogram(const TorusPointSet& Y) {
  if (Y.mode != Mode::Exact) throw std::invalid_argument("torsion_histogram: Exact mode required");
  TorsionHistogram h;
  h.k = Y.size();
  for (int i = 0; i < h.k; ++i)
    for (int j = 0; j < h.k; ++j) {
      if (i == j) continue;
      mpz_class q = 1;
      for (int c = 0; c < Y.dim; ++c) {
        mpq_class diff = mod1(Y.points[i].exact_coords()[c] - Y.points[j].exact_coords()[c]);
        q = lcm(q, diff.get_den());
      }
      ++h.counts[q];
    }
  return h;
}

HqSum hq_sum_scaling(const TorusPointSet& Y, double r) {
  if (!(r > 0)) throw std::invalid_argument("hq_sum_scaling: r > 0 required");
  TorsionHistogram h = torsion_histogram(Y);
  HqSum out;
  out.k = h.k;
  for (const auto& [q, hq] : h.counts)
    out.sum += static_cast<double>(hq) * std::pow(q.get_d(), -r);
  return out;
}

cdouble complete_rational_sum(const CompleteSumSpec& spec) {
  const long long q = spec.modulus;
  if (q < 1) throw std::invalid_argument("complete_rational_sum: q >= 1 required");
  if (q > kCompleteSumBudget) throw std::overflow_error("complete_rational_sum: modulus budget exceeded");
  if (spec.coefficients.empty()) throw std::invalid_argument("complete_rational_sum: need r >= 1 coefficients");

  // Coefficients reduced mod q so Horner products stay within int64.
  std::vector<long long> b;
  b.reserve(spec.coefficients.size());
  for (const auto& c : spec.coefficients) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mpz_class(static_cast<long>(q)).get_mpz_t());
    b.push_back(r.get_si());
  }
  cdouble s = 0;
  for (long long n = 1; n <= q; ++n) {
    long long nm = n % q;
    long long acc = 0;  // P(n) mod q via Horner on b_r..b_1, then one extra factor n
    for (auto it = b.rbegin(); it != b.rend(); ++it) acc = (acc * nm + *it) % q;
    acc = acc * nm % q;
    s += unit_phase(spec.phase_offset + static_cast<double>(acc) / static_cast<double>(q));
  }
  return s / static_cast<double>(q);
}

std::vector<HuaRow> hua_decay_check(int D, const std::vector<long long>& q_list, int trials,
                                    uint64_t seed) {
  if (D < 1) throw std::invalid_argument("hua_decay_check: D >= 1 required");
  std::mt19937_64 rng(seed);
  std::vector<HuaRow> table;
  table.reserve(q_list.size());
  for (long long q : q_list) {
    HuaRow row;
    row.q = q;
    for (int t = 0; t < trials; ++t) {
      std::vector<mpz_class> b(D);
      mpz_class g;
      do {
        g = static_cast<long>(q);
        for (int j = 0; j < D; ++j) {
          b[j] = static_cast<long>(rng() % static_cast<uint64_t>(q));
          g = gcd(g, b[j]);
        }
      } while (g != 1);
      row.max_abs = std::max(row.max_abs, std::abs(complete_rational_sum({q, b, 0.0})));
    }
    row.scaled = row.max_abs * std::pow(static_cast<double>(q), 1.0 / D - 0.05);
    table.push_back(row);
  }
  return table;
}

cdouble weyl_average(const std::vector<double>& coeffs, long long N) {
  if (N < 1) throw std::invalid_argument("weyl_average: N >= 1 required");
  cdouble s = 0;
  for (long long n = 1; n <= N; ++n) {
    long double phase = 0;
    long double np = 1;
    for (double c : coeffs) {
      np *= static_cast<long double>(n);
      phase += std::fmod(static_cast<long double>(c) * np, 1.0L);
    }
    s += unit_phase(static_cast<double>(std::fmod(phase, 1.0L)));
  }
  return s / static_cast<double>(N);
}

}  // namespace glasner
