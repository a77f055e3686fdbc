#include "glasner/search.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace glasner {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool enabled;
  explicit Deadline(long long ms)
      : end(Clock::now() + std::chrono::milliseconds(ms)), enabled(ms > 0) {}
  bool expired() const { return enabled && Clock::now() > end; }
};

}  // namespace

SearchOutcome find_scalar_dilation(const TorusPointSet& Y, double eps, const SearchBudget& budget) {
  if (Y.points.empty()) throw std::invalid_argument("find_scalar_dilation: empty set");
  SearchOutcome out;
  Deadline deadline(budget.time_budget_ms);
  for (long long n = 1; n <= budget.n_max; ++n) {
    ++out.scanned;
    DensityVerdict v =
        is_eps_dense(apply_scalar(mpz_class(static_cast<long>(n)), Y), eps, budget.max_refinements);
    if (v.status == Density::Dense) {
      out.found = true;
      out.scalar_dilator = {mpz_class(static_cast<long>(n))};
      out.dilator = "n=" + std::to_string(n);
      out.verdict = v;
      return out;
    }
    if (deadline.expired()) break;
  }
  return out;
}

SearchOutcome find_poly_dilation(const TorusPointSet& Y, const PolyMatrix& A, double eps,
                                 const SearchBudget& budget) {
  if (A.dim() != Y.dim) throw std::invalid_argument("find_poly_dilation: dim mismatch");
  SearchOutcome out;
  Deadline deadline(budget.time_budget_ms);
  for (long long n = 1; n <= budget.n_max; ++n) {
    ++out.scanned;
    IntMat g = A.eval_int(mpz_class(static_cast<long>(n)));
    DensityVerdict v = is_eps_dense(apply_matrix(g, Y), eps, budget.max_refinements);
    if (v.status == Density::Dense) {
      out.found = true;
      out.scalar_dilator = {mpz_class(static_cast<long>(n))};
      out.matrix_dilator = g;
      out.dilator = "n=" + std::to_string(n);
      out.verdict = v;
      return out;
    }
    if (deadline.expired()) break;
  }
  return out;
}

namespace {

TorusPointSet product_dilate(const TorusPointSet& Y, int d1, long long n, long long m) {
  TorusPointSet out;
  out.dim = Y.dim;
  out.mode = Y.mode;
  out.points.reserve(Y.points.size());
  for (const auto& p : Y.points) {
    if (Y.mode == Mode::Exact) {
      QVec v = p.exact_coords();
      for (int j = 0; j < Y.dim; ++j) v[j] *= mpq_class(static_cast<long>(j < d1 ? n : m));
      out.points.push_back(TorusPoint::exact(std::move(v)));
    } else {
      std::vector<double> v = p.float_coords();
      for (int j = 0; j < Y.dim; ++j) v[j] *= static_cast<double>(j < d1 ? n : m);
      out.points.push_back(TorusPoint::approx(std::move(v)));
    }
  }
  return out;
}

}  // namespace

SearchOutcome find_product_dilation(const TorusPointSet& Y, int d1, int d2, double eps,
                                    const SearchBudget& budget) {
  if (d1 + d2 != Y.dim) throw std::invalid_argument("find_product_dilation: factor dims must sum to dim");
  // Precondition: both projections injective on Y; a slice through a
  // horizontal or vertical fiber can never have a dense image.
  auto proj = [&](const TorusPoint& p, int from, int to) {
    std::vector<double> l = p.lift();
    return std::vector<double>(l.begin() + from, l.begin() + to);
  };
  std::set<std::vector<double>> p1, p2;
  for (const auto& p : Y.points) {
    if (!p1.insert(proj(p, 0, d1)).second || !p2.insert(proj(p, d1, d1 + d2)).second)
      throw std::invalid_argument("find_product_dilation: projections not injective on Y");
  }

  SearchOutcome out;
  Deadline deadline(budget.time_budget_ms);
  for (long long shell = 1;; ++shell) {
    for (long long n = 1; n <= shell; ++n)
      for (long long m = 1; m <= shell; ++m) {
        if (std::max(n, m) != shell) continue;  // new pairs only
        if (out.scanned >= budget.n_max) return out;
        ++out.scanned;
        DensityVerdict v = is_eps_dense(product_dilate(Y, d1, n, m), eps, budget.max_refinements);
        if (v.status == Density::Dense) {
          out.found = true;
          out.scalar_dilator = {mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(m))};
          out.dilator = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
          out.verdict = v;
          return out;
        }
        if (deadline.expired()) return out;
      }
  }
}

SearchOutcome find_group_dilation(const TorusPointSet& Y, const SemigroupPresentation& S,
                                  double eps, const SearchBudget& budget) {
  if (S.dim != Y.dim) throw std::invalid_argument("find_group_dilation: dim mismatch");
  SearchOutcome out;
  Deadline deadline(budget.time_budget_ms);

  std::unordered_set<std::string> seen;
  std::vector<IntMat> frontier{IntMat::identity(S.dim)};
  std::vector<std::vector<int>> words{{}};
  seen.insert(frontier.front().key());
  long long elements = 1;

  for (int r = 0; r <= budget.ball_radius; ++r) {
    for (size_t e = 0; e < frontier.size(); ++e) {
      ++out.scanned;
      DensityVerdict v = is_eps_dense(apply_matrix(frontier[e], Y), eps, budget.max_refinements);
      if (v.status == Density::Dense) {
        out.found = true;
        out.matrix_dilator = frontier[e];
        out.word = words[e];
        std::ostringstream ss;
        ss << "word=[";
        for (size_t i = 0; i < words[e].size(); ++i) ss << (i ? "," : "") << words[e][i];
        ss << "]";
        out.dilator = ss.str();
        out.verdict = v;
        return out;
      }
      if (deadline.expired()) return out;
    }
    if (r == budget.ball_radius) break;
    std::vector<IntMat> next;
    std::vector<std::vector<int>> next_words;
    for (size_t e = 0; e < frontier.size(); ++e)
      for (size_t g = 0; g < S.generators.size(); ++g) {
        IntMat prod = S.generators[g] * frontier[e];
        if (!seen.insert(prod.key()).second) continue;
        if (++elements > budget.element_budget) return out;  // budget exhausted, found=false
        std::vector<int> w = words[e];
        w.push_back(static_cast<int>(g));
        next.push_back(std::move(prod));
        next_words.push_back(std::move(w));
      }
    frontier = std::move(next);
    words = std::move(next_words);
    if (frontier.empty()) break;
  }
  return out;
}

}  // namespace glasner
