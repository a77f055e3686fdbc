#include "glasner/cayley.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

namespace glasner {

bool is_unipotent(const IntMat& u) {
  if (u.rows() != u.cols()) return false;
  IntMat n = u - IntMat::identity(u.rows());
  IntMat p = n;
  for (int i = 1; i < u.rows(); ++i) {
    if (p.is_zero()) return true;
    p = p * n;
  }
  return p.is_zero();
}

SemigroupPresentation SemigroupPresentation::of(std::vector<IntMat> gens) {
  if (gens.empty()) throw std::invalid_argument("SemigroupPresentation: no generators");
  SemigroupPresentation s;
  s.dim = gens.front().rows();
  for (const auto& g : gens) {
    if (g.rows() != s.dim || g.cols() != s.dim)
      throw std::invalid_argument("SemigroupPresentation: generator shape mismatch");
    s.unipotent.push_back(is_unipotent(g));
    s.determinants.push_back(g.det());
  }
  s.generators = std::move(gens);
  return s;
}

bool SemigroupPresentation::all_unipotent() const {
  for (bool u : unipotent)
    if (!u) return false;
  return true;
}

CayleyBall cayley_ball(const SemigroupPresentation& S, int n, long long budget) {
  if (n < 0) throw std::invalid_argument("cayley_ball: radius >= 0 required");
  CayleyBall ball;
  ball.radius = n;
  std::unordered_set<std::string> seen;

  IntMat id = IntMat::identity(S.dim);
  ball.elements.push_back(id);
  ball.word_length.push_back(0);
  ball.words.emplace_back();
  seen.insert(id.key());

  size_t level_begin = 0;
  for (int r = 1; r <= n; ++r) {
    size_t level_end = ball.elements.size();
    for (size_t e = level_begin; e < level_end; ++e)
      for (size_t g = 0; g < S.generators.size(); ++g) {
        IntMat prod = S.generators[g] * ball.elements[e];
        if (!seen.insert(prod.key()).second) continue;
        if (static_cast<long long>(ball.elements.size()) >= budget)
          throw std::length_error("cayley_ball: element budget exceeded");
        std::vector<int> word = ball.words[e];
        word.push_back(static_cast<int>(g));
        ball.elements.push_back(std::move(prod));
        ball.word_length.push_back(r);
        ball.words.push_back(std::move(word));
      }
    level_begin = level_end;
    if (level_begin == ball.elements.size()) break;  // ball saturated
  }
  return ball;
}

AffineSpanTrace affine_span_trace(const SemigroupPresentation& S, const QVec& a, int n_max,
                                  long long budget) {
  if (static_cast<int>(a.size()) != S.dim) throw std::invalid_argument("affine_span_trace: dim mismatch");
  bool zero = true;
  for (const auto& c : a)
    if (c != 0) zero = false;
  if (zero) throw std::invalid_argument("affine_span_trace: a must be nonzero");

  AffineSpanTrace out;
  RowSpace W(S.dim);
  out.dims.push_back(0);  // W_0 = {0}: the ball of radius 0 is {identity}

  std::unordered_set<std::string> seen;
  std::vector<IntMat> frontier{IntMat::identity(S.dim)};
  seen.insert(frontier.front().key());
  long long count = 1;

  int stabilized_at = -1;
  for (int r = 1; r <= n_max; ++r) {
    std::vector<IntMat> next;
    for (const auto& e : frontier)
      for (const auto& g : S.generators) {
        IntMat prod = g * e;
        if (!seen.insert(prod.key()).second) continue;
        if (++count > budget) throw std::length_error("affine_span_trace: element budget exceeded");
        QVec delta = prod.apply(a);
        for (int i = 0; i < S.dim; ++i) delta[i] -= a[i];
        W.insert(std::move(delta));
        next.push_back(std::move(prod));
      }
    out.dims.push_back(W.dim());
    if (stabilized_at < 0 && out.dims[r] == out.dims[r - 1]) stabilized_at = r - 1;
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  // A saturated ball stabilizes at its last recorded radius.
  if (stabilized_at < 0) stabilized_at = static_cast<int>(out.dims.size()) - 1;
  out.stabilization_radius = stabilized_at;
  out.final_dim = W.dim();
  out.basis = W.basis();
  return out;
}

GroupHypothesisResult check_group_hypothesis(const SemigroupPresentation& S,
                                           const std::vector<QVec>& lifts) {
  GroupHypothesisResult out;
  const int n = static_cast<int>(lifts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec a(lifts[i].size());
      bool zero = true;
      for (size_t c = 0; c < a.size(); ++c) {
        a[c] = lifts[i][c] - lifts[j][c];
        if (a[c] != 0) zero = false;
      }
      if (zero) throw std::invalid_argument("check_group_hypothesis: duplicate lifts");
      AffineSpanTrace trace = affine_span_trace(S, a, S.dim);
      if (trace.final_dim < S.dim) {
        out.ok = false;
        out.bad_pair = {i, j};
        return out;
      }
    }
  return out;
}

PolyMatrix unipotent_power_poly(const IntMat& u) {
  if (!is_unipotent(u)) throw std::invalid_argument("unipotent_power_poly: input is not unipotent");
  const int d = u.rows();
  // u^n = sum_{j<d} binom(n, j) (u - I)^j; binom(n, j) expanded in the
  // monomial basis via the falling factorial n(n-1)...(n-j+1)/j!.
  IntMat nil = u - IntMat::identity(d);
  std::vector<QMat> coeffs(d, QMat(d, d));

  IntMat nil_pow = IntMat::identity(d);
  std::vector<mpq_class> falling{1};  // coefficients of the degree-j falling factorial
  mpz_class factorial = 1;
  for (int j = 0; j < d; ++j) {
    if (j > 0) {
      // falling <- falling * (n - (j-1)); factorial <- j!
      std::vector<mpq_class> next(falling.size() + 1, 0);
      for (size_t s = 0; s < falling.size(); ++s) {
        next[s + 1] += falling[s];
        next[s] -= falling[s] * (j - 1);
      }
      falling = std::move(next);
      factorial *= j;
      nil_pow = nil_pow * nil;
    }
    if (nil_pow.is_zero()) break;
    mpq_class inv_fact(1, factorial);
    for (size_t s = 0; s < falling.size(); ++s) {
      mpq_class c = falling[s] * inv_fact;
      if (c == 0) continue;
      for (int r = 0; r < d; ++r)
        for (int col = 0; col < d; ++col) coeffs[s](r, col) += c * mpq_class(nil_pow(r, col));
    }
  }
  return PolyMatrix(d, std::move(coeffs));
}

int substitution_exponent(const std::set<std::vector<unsigned>>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("substitution_exponent: empty exponent set");
  unsigned max_entry = 0;
  for (const auto& e : exponents)
    for (unsigned x : e) max_entry = std::max(max_entry, x);
  int R = static_cast<int>(max_entry) + 1;

  std::set<mpz_class> codes;
  for (const auto& e : exponents) {
    mpz_class code = 0, base = 1;
    for (unsigned x : e) {
      code += mpz_class(x) * base;
      base *= R;
    }
    if (!codes.insert(code).second)
      throw std::logic_error("substitution_exponent: base-R encoding not injective");
  }
  return R;
}

PolynomializeResult group_to_polynomial(const SemigroupPresentation& S, size_t term_budget,
                                        long long degree_budget) {
  if (!S.all_unipotent())
    throw std::invalid_argument("group_to_polynomial: all generators must be unipotent");
  const int d = S.dim;
  const int m = static_cast<int>(S.generators.size());
  const int N = d * m;

  std::vector<PolyMatrix> powers;
  powers.reserve(m);
  for (const auto& g : S.generators) powers.push_back(unipotent_power_poly(g));

  // Multivariate product as exponent-vector -> coefficient matrix.
  std::map<std::vector<unsigned>, QMat> acc;
  acc.emplace(std::vector<unsigned>(N, 0), QMat::identity(d));
  for (int i = 0; i < N; ++i) {
    const PolyMatrix& P = powers[i % m];
    std::map<std::vector<unsigned>, QMat> next;
    for (const auto& [e, C] : acc)
      for (int j = 0; j <= P.degree(); ++j) {
        if (P.coeff(j).is_zero()) continue;
        std::vector<unsigned> e2 = e;
        e2[i] = static_cast<unsigned>(j);
        QMat prod = C * P.coeff(j);
        auto it = next.find(e2);
        if (it == next.end())
          next.emplace(std::move(e2), std::move(prod));
        else
          it->second = it->second + prod;
        if (next.size() > term_budget)
          throw std::length_error("group_to_polynomial: term budget exceeded");
      }
    acc = std::move(next);
  }

  std::set<std::vector<unsigned>> exponents;
  for (const auto& [e, C] : acc) exponents.insert(e);
  int R = substitution_exponent(exponents);

  // Substitute n_i -> x^{R^{i-1}}: exponent vector e codes to degree
  // sum e_i R^{i-1}.
  long long max_code = 0;
  std::map<long long, QMat> univariate;
  for (const auto& [e, C] : acc) {
    long long code = 0, base = 1;
    for (unsigned x : e) {
      code += static_cast<long long>(x) * base;
      base *= R;
      if (code > degree_budget) throw std::length_error("group_to_polynomial: degree budget exceeded");
    }
    max_code = std::max(max_code, code);
    auto it = univariate.find(code);
    if (it == univariate.end())
      univariate.emplace(code, C);
    else
      it->second = it->second + C;
  }

  std::vector<QMat> coeffs(static_cast<size_t>(max_code) + 1, QMat(d, d));
  for (auto& [code, C] : univariate) coeffs[static_cast<size_t>(code)] = std::move(C);

  PolynomializeResult out;
  out.A = PolyMatrix(d, std::move(coeffs));
  out.R = R;
  out.N = N;
  out.terms = acc.size();
  return out;
}

}  // namespace glasner
