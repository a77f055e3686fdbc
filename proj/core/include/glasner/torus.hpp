#pragma once

#include <optional>
#include <vector>

#include "glasner/matrix.hpp"
#include "glasner/rational.hpp"

namespace glasner {

enum class Mode { Exact, Float };

// A point of the d-torus, either as reduced rationals in [0,1) or doubles.
class TorusPoint {
 public:
  static TorusPoint exact(QVec coords);
  static TorusPoint approx(std::vector<double> coords);

  Mode mode() const { return mode_; }
  int dim() const;

  const QVec& exact_coords() const { return exact_; }
  const std::vector<double>& float_coords() const { return flt_; }

  // Double lift in [0,1)^d regardless of mode.
  std::vector<double> lift() const;

  bool operator==(const TorusPoint& o) const;

 private:
  Mode mode_ = Mode::Float;
  QVec exact_;
  std::vector<double> flt_;
};

struct TorusPointSet {
  int dim = 0;
  Mode mode = Mode::Float;
  std::vector<TorusPoint> points;

  static TorusPointSet of(std::vector<TorusPoint> pts);
  // Throws if points repeat or dims/modes disagree.
  void validate() const;
  int size() const { return static_cast<int>(points.size()); }
};

enum class Density { Dense, NotDense, Undecided };

struct DensityVerdict {
  Density status = Density::Undecided;
  std::optional<TorusPoint> witness;  // empty-ball center for NotDense
  double resolution = 0.0;            // grid mesh at the final refinement
};

// L-infinity torus distance, exact (Exact mode only).
mpq_class torus_dist_exact(const TorusPoint& u, const TorusPoint& v);

// L-infinity torus distance as a double (either mode; modes must match).
double torus_dist(const TorusPoint& u, const TorusPoint& v);

// Distance from u to the origin, |u| in the usual notation.
double torus_norm(const TorusPoint& u);
mpq_class torus_norm_exact(const TorusPoint& u);

// Certified epsilon-density check by grid covering with refinement.
// Dense / NotDense verdicts carry a covering-argument certificate;
// Undecided means the threshold was not separated at the final mesh.
DensityVerdict is_eps_dense(const TorusPointSet& Y, double eps, int max_refinements = 10);

// Least positive q with q*x = 0 on the torus (Exact mode only).
mpz_class min_torsion_order(const TorusPoint& x);

// Image of Y under an integer matrix, reduced mod 1 (mode preserved).
TorusPointSet apply_matrix(const IntMat& g, const TorusPointSet& Y);
// Scalar dilation n*Y.
TorusPointSet apply_scalar(const mpz_class& n, const TorusPointSet& Y);

// Worker cap for internally parallel scans. 0 = hardware default.
// Falls back to env GLASNER_LAB_THREADS when unset.
void set_thread_cap(int n);
int thread_cap();

}  // namespace glasner
