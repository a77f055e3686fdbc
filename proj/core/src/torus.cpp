#include "glasner/torus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace glasner {

namespace {

double wrap01(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;  // guard against rounding at the seam
  return r;
}

double coord_dist(double a, double b) {
  double d = std::fabs(a - b);
  return std::min(d, 1.0 - d);
}

std::atomic<int> g_thread_cap{-1};

}  // namespace

void set_thread_cap(int n) { g_thread_cap.store(n); }

int thread_cap() {
  int v = g_thread_cap.load();
  if (v < 0) {
    int from_env = 0;
    if (const char* e = std::getenv("GLASNER_LAB_THREADS")) from_env = std::atoi(e);
    v = from_env > 0 ? from_env : 0;
    g_thread_cap.store(v);
  }
  if (v == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }
  return v;
}

TorusPoint TorusPoint::exact(QVec coords) {
  TorusPoint p;
  p.mode_ = Mode::Exact;
  p.exact_.reserve(coords.size());
  for (auto& c : coords) p.exact_.push_back(mod1(c));
  return p;
}

TorusPoint TorusPoint::approx(std::vector<double> coords) {
  TorusPoint p;
  p.mode_ = Mode::Float;
  p.flt_.reserve(coords.size());
  for (double c : coords) p.flt_.push_back(wrap01(c));
  return p;
}

int TorusPoint::dim() const {
  return mode_ == Mode::Exact ? static_cast<int>(exact_.size()) : static_cast<int>(flt_.size());
}

std::vector<double> TorusPoint::lift() const {
  if (mode_ == Mode::Float) return flt_;
  std::vector<double> r;
  r.reserve(exact_.size());
  for (const auto& c : exact_) r.push_back(c.get_d());
  return r;
}

bool TorusPoint::operator==(const TorusPoint& o) const {
  return mode_ == o.mode_ && exact_ == o.exact_ && flt_ == o.flt_;
}

TorusPointSet TorusPointSet::of(std::vector<TorusPoint> pts) {
  TorusPointSet s;
  if (!pts.empty()) {
    s.dim = pts.front().dim();
    s.mode = pts.front().mode();
  }
  s.points = std::move(pts);
  s.validate();
  return s;
}

void TorusPointSet::validate() const {
  std::set<std::vector<double>> seen;
  for (const auto& p : points) {
    if (p.dim() != dim || p.mode() != mode)
      throw std::invalid_argument("TorusPointSet: mixed dims or modes");
    if (!seen.insert(p.lift()).second)
      throw std::invalid_argument("TorusPointSet: duplicate point");
  }
}

mpq_class torus_dist_exact(const TorusPoint& u, const TorusPoint& v) {
  if (u.mode() != Mode::Exact || v.mode() != Mode::Exact)
    throw std::invalid_argument("torus_dist_exact: Exact mode required");
  if (u.dim() != v.dim()) throw std::invalid_argument("torus_dist_exact: dim mismatch");
  mpq_class best = 0;
  for (int i = 0; i < u.dim(); ++i) {
    mpq_class d = abs(centered_mod1(u.exact_coords()[i] - v.exact_coords()[i]));
    if (d > best) best = d;
  }
  return best;
}

double torus_dist(const TorusPoint& u, const TorusPoint& v) {
  if (u.mode() != v.mode()) throw std::invalid_argument("torus_dist: mode mismatch");
  if (u.dim() != v.dim()) throw std::invalid_argument("torus_dist: dim mismatch");
  if (u.mode() == Mode::Exact) return torus_dist_exact(u, v).get_d();
  double best = 0;
  for (int i = 0; i < u.dim(); ++i)
    best = std::max(best, coord_dist(u.float_coords()[i], v.float_coords()[i]));
  return best;
}

double torus_norm(const TorusPoint& u) {
  double best = 0;
  auto l = u.lift();
  for (double c : l) best = std::max(best, std::min(c, 1.0 - c));
  return best;
}

mpq_class torus_norm_exact(const TorusPoint& u) {
  if (u.mode() != Mode::Exact) throw std::invalid_argument("torus_norm_exact: Exact mode required");
  mpq_class best = 0;
  for (const auto& c : u.exact_coords()) {
    mpq_class d = abs(centered_mod1(c));
    if (d > best) best = d;
  }
  return best;
}

namespace {

struct GridScan {
  double max_min_dist = 0.0;
  long long first_far_index = -1;  // first center (canonical order) beyond eps + h
  double far_dist = 0.0;
};

// Scans grid centers [(i+1/2)/G]^d against the flat lift table.
GridScan scan_range(long long lo, long long hi, int d, long long G, double far_cut,
                    const std::vector<double>& lifts, int k) {
  GridScan out;
  std::vector<long long> idx(d);
  std::vector<double> center(d);
  for (long long t = lo; t < hi; ++t) {
    long long rem = t;
    for (int j = d - 1; j >= 0; --j) {
      idx[j] = rem % G;
      rem /= G;
    }
    for (int j = 0; j < d; ++j) center[j] = (idx[j] + 0.5) / static_cast<double>(G);
    double mind = 1.0;
    for (int p = 0; p < k; ++p) {
      double dist = 0;
      const double* y = &lifts[static_cast<size_t>(p) * d];
      for (int j = 0; j < d; ++j) {
        double c = std::fabs(center[j] - y[j]);
        c = std::min(c, 1.0 - c);
        if (c > dist) dist = c;
      }
      if (dist < mind) mind = dist;
      if (mind == 0) break;
    }
    if (mind > out.max_min_dist) out.max_min_dist = mind;
    if (out.first_far_index < 0 && mind > far_cut) {
      out.first_far_index = t;
      out.far_dist = mind;
    }
  }
  return out;
}

}  // namespace

DensityVerdict is_eps_dense(const TorusPointSet& Y, double eps, int max_refinements) {
  if (Y.points.empty()) throw std::invalid_argument("is_eps_dense: empty set");
  if (!(eps > 0 && eps < 0.5)) throw std::invalid_argument("is_eps_dense: eps out of (0, 1/2)");
  const int d = Y.dim;
  const int k = Y.size();
  std::vector<double> lifts(static_cast<size_t>(k) * d);
  for (int p = 0; p < k; ++p) {
    auto l = Y.points[p].lift();
    std::copy(l.begin(), l.end(), lifts.begin() + static_cast<size_t>(p) * d);
  }

  double delta = eps / 2;
  DensityVerdict verdict;
  for (int ref = 0; ref <= max_refinements; ++ref, delta /= 2) {
    long long G = static_cast<long long>(std::ceil(1.0 / delta));
    double h = 0.5 / static_cast<double>(G);  // every torus point within h of a center
    long long total = 1;
    for (int j = 0; j < d; ++j) total *= G;

    int workers = std::min<long long>(thread_cap(), std::max<long long>(1, total / 4096));
    std::vector<GridScan> parts(workers);
    if (workers <= 1) {
      parts[0] = scan_range(0, total, d, G, eps + h, lifts, k);
    } else {
      std::vector<std::thread> pool;
      long long chunk = (total + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        long long lo = w * chunk, hi = std::min(total, lo + chunk);
        pool.emplace_back([&, w, lo, hi] { parts[w] = scan_range(lo, hi, d, G, eps + h, lifts, k); });
      }
      for (auto& t : pool) t.join();
    }

    double max_min = 0;
    long long far_index = -1;
    for (const auto& p : parts) {
      max_min = std::max(max_min, p.max_min_dist);
      if (far_index < 0 && p.first_far_index >= 0) far_index = p.first_far_index;
    }

    verdict.resolution = 1.0 / static_cast<double>(G);
    if (far_index >= 0) {
      // Certificate: the ball of radius eps around this center misses Y.
      std::vector<double> center(d);
      long long rem = far_index;
      for (int j = d - 1; j >= 0; --j) {
        center[j] = 0;
        center[j] = (rem % G + 0.5) / static_cast<double>(G);
        rem /= G;
      }
      verdict.status = Density::NotDense;
      verdict.witness = TorusPoint::approx(center);
      return verdict;
    }
    if (max_min <= eps - h) {
      // Certificate: every torus point is within h of a center, hence within eps of Y.
      verdict.status = Density::Dense;
      return verdict;
    }
  }
  verdict.status = Density::Undecided;
  return verdict;
}

mpz_class min_torsion_order(const TorusPoint& x) {
  if (x.mode() != Mode::Exact)
    throw std::invalid_argument("min_torsion_order: torsion undecidable in Float mode");
  mpz_class q = 1;
  for (const auto& c : x.exact_coords()) q = lcm(q, c.get_den());
  return q;
}

TorusPointSet apply_matrix(const IntMat& g, const TorusPointSet& Y) {
  if (g.cols() != Y.dim) throw std::invalid_argument("apply_matrix: dim mismatch");
  TorusPointSet out;
  out.dim = g.rows();
  out.mode = Y.mode;
  out.points.reserve(Y.points.size());
  for (const auto& p : Y.points) {
    if (Y.mode == Mode::Exact) {
      out.points.push_back(TorusPoint::exact(g.apply(p.exact_coords())));
    } else {
      std::vector<double> v(g.rows(), 0.0);
      for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) v[i] += g(i, j).get_d() * p.float_coords()[j];
      out.points.push_back(TorusPoint::approx(std::move(v)));
    }
  }
  return out;
}

TorusPointSet apply_scalar(const mpz_class& n, const TorusPointSet& Y) {
  TorusPointSet out;
  out.dim = Y.dim;
  out.mode = Y.mode;
  out.points.reserve(Y.points.size());
  for (const auto& p : Y.points) {
    if (Y.mode == Mode::Exact) {
      QVec v = p.exact_coords();
      for (auto& c : v) c *= mpq_class(n);
      out.points.push_back(TorusPoint::exact(std::move(v)));
    } else {
      std::vector<double> v = p.float_coords();
      double nd = n.get_d();
      for (auto& c : v) c *= nd;
      out.points.push_back(TorusPoint::approx(std::move(v)));
    }
  }
  return out;
}

}  // namespace glasner
