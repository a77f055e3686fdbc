#include "glasner/io.hpp"

#include <fstream>
#include <stdexcept>

namespace glasner {

json to_json(const TorusPointSet& Y) {
  json pts = json::array();
  for (const auto& p : Y.points) {
    json coords = json::array();
    if (Y.mode == Mode::Exact) {
      for (const auto& c : p.exact_coords())
        coords.push_back({c.get_num().get_str(), c.get_den().get_str()});
    } else {
      for (double c : p.float_coords()) coords.push_back(c);
    }
    pts.push_back(coords);
  }
  return {{"dim", Y.dim}, {"mode", Y.mode == Mode::Exact ? "exact" : "float"}, {"points", pts}};
}

TorusPointSet point_set_from_json(const json& j) {
  TorusPointSet Y;
  Y.dim = j.at("dim").get<int>();
  std::string mode = j.at("mode").get<std::string>();
  if (mode != "exact" && mode != "float") throw std::invalid_argument("point set: bad mode " + mode);
  Y.mode = mode == "exact" ? Mode::Exact : Mode::Float;
  for (const auto& coords : j.at("points")) {
    if (static_cast<int>(coords.size()) != Y.dim)
      throw std::invalid_argument("point set: coordinate count != dim");
    if (Y.mode == Mode::Exact) {
      QVec v;
      // num/den entries may be JSON integers or arbitrary-precision strings
      auto as_mpz = [](const json& e) {
        if (e.is_string()) return mpz_class(e.get<std::string>());
        return mpz_class(static_cast<long>(e.get<long long>()));
      };
      for (const auto& c : coords) {
        mpz_class num = as_mpz(c.at(0));
        mpz_class den = as_mpz(c.at(1));
        if (den == 0) throw std::invalid_argument("point set: zero denominator");
        v.emplace_back(num, den);
        v.back().canonicalize();
      }
      Y.points.push_back(TorusPoint::exact(std::move(v)));
    } else {
      std::vector<double> v;
      for (const auto& c : coords) v.push_back(c.get<double>());
      Y.points.push_back(TorusPoint::approx(std::move(v)));
    }
  }
  Y.validate();
  return Y;
}

json to_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMat int_mat_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols) throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) m(i, c) = mpz_class(j.at(i).at(c).get<std::string>());
  }
  return m;
}

json to_json(const PolyMatrix& A) {
  json coeffs = json::array();
  for (int deg = 0; deg <= A.degree(); ++deg) {
    json rows = json::array();
    for (int i = 0; i < A.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < A.dim(); ++j) row.push_back(to_string(A.coeff(deg)(i, j)));
      rows.push_back(row);
    }
    coeffs.push_back(rows);
  }
  return {{"dim", A.dim()}, {"degree", A.degree()}, {"coeffs", coeffs}};
}

PolyMatrix poly_matrix_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<QMat> coeffs;
  for (const auto& cj : j.at("coeffs")) {
    QMat c(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int col = 0; col < dim; ++col) c(i, col) = parse_rational(cj.at(i).at(col).get<std::string>());
    coeffs.push_back(std::move(c));
  }
  return PolyMatrix(dim, std::move(coeffs));
}

json to_json(const SemigroupPresentation& S) {
  json gens = json::array();
  for (const auto& g : S.generators) gens.push_back(to_json(g));
  bool assume_unipotent = S.all_unipotent();
  return {{"dim", S.dim}, {"generators", gens}, {"assume_unipotent", assume_unipotent}};
}

SemigroupPresentation presentation_from_json(const json& j) {
  std::vector<IntMat> gens;
  for (const auto& g : j.at("generators")) gens.push_back(int_mat_from_json(g));
  SemigroupPresentation S = SemigroupPresentation::of(std::move(gens));
  if (j.value("assume_unipotent", false) && !S.all_unipotent())
    throw std::invalid_argument("presentation: assume_unipotent but a generator is not unipotent");
  if (S.dim != j.at("dim").get<int>()) throw std::invalid_argument("presentation: dim mismatch");
  return S;
}

json to_json(const WalkMeasure& mu) {
  json mats = json::array(), weights = json::array();
  for (const auto& g : mu.support) mats.push_back(to_json(g));
  for (const auto& w : mu.weights) weights.push_back(to_string(w));
  return {{"dim", mu.dim()}, {"matrices", mats}, {"weights", weights}};
}

WalkMeasure measure_from_json(const json& j) {
  WalkMeasure mu;
  for (const auto& g : j.at("matrices")) mu.support.push_back(int_mat_from_json(g));
  for (const auto& w : j.at("weights")) mu.weights.push_back(parse_rational(w.get<std::string>()));
  mu.validate();
  return mu;
}

json to_json(const DensityVerdict& v) {
  json out = {{"resolution", v.resolution}};
  switch (v.status) {
    case Density::Dense: out["status"] = "DENSE"; break;
    case Density::NotDense: out["status"] = "NOT_DENSE"; break;
    case Density::Undecided: out["status"] = "UNDECIDED"; break;
  }
  if (v.witness) out["witness"] = v.witness->lift();
  return out;
}

json to_json(const SearchOutcome& o) {
  json out = {{"found", o.found}, {"scanned", o.scanned}, {"verdict_resolution", o.verdict.resolution}};
  if (o.found) {
    out["dilator"] = o.dilator;
    if (!o.scalar_dilator.empty()) {
      json v = json::array();
      for (const auto& n : o.scalar_dilator) v.push_back(n.get_str());
      out["dilator_values"] = v;
    }
    if (o.matrix_dilator.rows() > 0) out["dilator_matrix"] = to_json(o.matrix_dilator);
    if (!o.word.empty()) out["dilator_word"] = o.word;
  }
  return out;
}

json to_json(const SnfFactorization& f) {
  json divisors = json::array();
  for (const auto& d : f.divisors) divisors.push_back(d.get_str());
  return {{"L", to_json(f.L)}, {"D", to_json(f.D)}, {"Rp", to_json(f.Rp)},
          {"divisors", divisors}, {"k", f.k}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace glasner
