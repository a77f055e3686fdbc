#include "glasner/walk.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace glasner {

WalkMeasure WalkMeasure::uniform(std::vector<IntMat> mats) {
  WalkMeasure mu;
  mu.weights.assign(mats.size(), mpq_class(1, static_cast<unsigned long>(mats.size())));
  mu.support = std::move(mats);
  mu.validate();
  return mu;
}

void WalkMeasure::validate() const {
  if (support.empty() || support.size() != weights.size())
    throw std::invalid_argument("WalkMeasure: support/weight size mismatch");
  mpq_class total = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw std::invalid_argument("WalkMeasure: weights must be positive");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("WalkMeasure: weights must sum to exactly 1");
  for (const auto& g : support)
    if (g.rows() != dim() || g.cols() != dim())
      throw std::invalid_argument("WalkMeasure: matrix shape mismatch");
}

namespace {

std::string point_key(const QVec& v) {
  std::ostringstream ss;
  for (const auto& c : v) ss << c.get_num().get_str() << '/' << c.get_den().get_str() << ';';
  return ss.str();
}

struct ExactDist {
  std::vector<QVec> points;
  std::vector<mpq_class> mass;
  std::unordered_map<std::string, size_t> index;

  void add(QVec p, const mpq_class& w) {
    std::string k = point_key(p);
    auto it = index.find(k);
    if (it == index.end()) {
      index.emplace(std::move(k), points.size());
      points.push_back(std::move(p));
      mass.push_back(w);
    } else {
      mass[it->second] += w;
    }
  }
};

ExactDist step(const ExactDist& cur, const WalkMeasure& mu, long long state_budget) {
  ExactDist next;
  for (size_t s = 0; s < cur.points.size(); ++s)
    for (size_t g = 0; g < mu.support.size(); ++g) {
      QVec y = mu.support[g].apply(cur.points[s]);
      for (auto& c : y) c = mod1(c);
      next.add(std::move(y), cur.mass[s] * mu.weights[g]);
      if (static_cast<long long>(next.points.size()) > state_budget)
        throw std::length_error("walk: state budget exceeded");
    }
  return next;
}

cdouble dist_fourier(const ExactDist& d, const std::vector<long>& a) {
  cdouble v = 0;
  mpq_class total = 0;
  for (size_t s = 0; s < d.points.size(); ++s) {
    mpq_class dot = 0;
    for (size_t j = 0; j < a.size(); ++j) dot += mpq_class(a[j]) * d.points[s][j];
    v += d.mass[s].get_d() * unit_phase(dot);
    total += d.mass[s];
  }
  if (total != 1) throw std::logic_error("walk: probability mass leaked");
  return v;
}

void require_freq(const std::vector<long>& a, int d) {
  if (static_cast<int>(a.size()) != d) throw std::invalid_argument("walk: frequency dim mismatch");
  bool zero = true;
  for (long c : a)
    if (c != 0) zero = false;
  if (zero) throw std::invalid_argument("walk: frequency a must be nonzero");
}

}  // namespace

FourierEstimate fourier_coeff(const WalkMeasure& mu, const TorusPoint& x,
                              const std::vector<long>& a, int n, WalkMethod method,
                              long samples, uint64_t seed, long long state_budget) {
  mu.validate();
  require_freq(a, mu.dim());
  if (n < 0) throw std::invalid_argument("fourier_coeff: n >= 0 required");
  if (x.dim() != mu.dim()) throw std::invalid_argument("fourier_coeff: point dim mismatch");

  FourierEstimate out;
  out.n = n;
  out.a = a;
  out.method = method;

  if (method == WalkMethod::ExactDist) {
    if (x.mode() != Mode::Exact)
      throw std::invalid_argument("fourier_coeff: exact method needs an Exact-mode point");
    ExactDist d;
    d.add(x.exact_coords(), 1);
    for (int t = 0; t < n; ++t) d = step(d, mu, state_budget);
    out.value = dist_fourier(d, a);
    return out;
  }

  // Monte Carlo over sampled words, exact point arithmetic along each path.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> cum;
  double c = 0;
  for (const auto& w : mu.weights) cum.push_back(c += w.get_d());
  cum.back() = 1.0;

  double sum_re = 0, sum_im = 0, sq_re = 0, sq_im = 0;
  for (long s = 0; s < samples; ++s) {
    cdouble z;
    if (x.mode() == Mode::Exact) {
      QVec y = x.exact_coords();
      for (int t = 0; t < n; ++t) {
        double u = unif(rng);
        size_t g = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
        y = mu.support[g].apply(y);
        for (auto& coord : y) coord = mod1(coord);
      }
      mpq_class dot = 0;
      for (size_t j = 0; j < a.size(); ++j) dot += mpq_class(a[j]) * y[j];
      z = unit_phase(dot);
    } else {
      std::vector<double> y = x.float_coords();
      for (int t = 0; t < n; ++t) {
        double u = unif(rng);
        size_t g = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
        std::vector<double> ny(y.size(), 0.0);
        for (size_t i = 0; i < y.size(); ++i)
          for (size_t j = 0; j < y.size(); ++j) ny[i] += mu.support[g](i, j).get_d() * y[j];
        for (auto& coord : ny) coord -= std::floor(coord);
        y = std::move(ny);
      }
      double dot = 0;
      for (size_t j = 0; j < a.size(); ++j) dot += static_cast<double>(a[j]) * y[j];
      z = unit_phase(dot);
    }
    sum_re += z.real();
    sum_im += z.imag();
    sq_re += z.real() * z.real();
    sq_im += z.imag() * z.imag();
  }
  double S = static_cast<double>(samples);
  out.value = {sum_re / S, sum_im / S};
  if (samples > 1) {
    double var_re = std::max(0.0, (sq_re - S * std::norm(out.value.real())) / (S - 1));
    double var_im = std::max(0.0, (sq_im - S * std::norm(out.value.imag())) / (S - 1));
    out.se = std::sqrt((var_re + var_im) / S);
  }
  return out;
}

std::vector<DecayRow> decay_profile(const WalkMeasure& mu, const TorusPoint& x,
                                    const std::vector<long>& a, int n_max,
                                    long long state_budget) {
  mu.validate();
  require_freq(a, mu.dim());
  if (x.mode() != Mode::Exact)
    throw std::invalid_argument("decay_profile: rational (Exact-mode) point required");

  std::vector<DecayRow> rows;
  ExactDist d;
  d.add(x.exact_coords(), 1);
  rows.push_back({0, std::abs(dist_fourier(d, a)), 0});
  for (int n = 1; n <= n_max; ++n) {
    d = step(d, mu, state_budget);
    rows.push_back({n, std::abs(dist_fourier(d, a)), 0});
  }
  return rows;
}

double decay_plateau(const std::vector<DecayRow>& profile) {
  if (profile.empty()) throw std::invalid_argument("decay_plateau: empty profile");
  size_t from = profile.size() - std::max<size_t>(1, profile.size() / 4);
  double s = 0;
  for (size_t i = from; i < profile.size(); ++i) s += profile[i].modulus;
  return s / static_cast<double>(profile.size() - from);
}

}  // namespace glasner
