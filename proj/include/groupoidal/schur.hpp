#ifndef GROUPOIDAL_SCHUR_HPP
#define GROUPOIDAL_SCHUR_HPP

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "groupoidal/algebra.hpp"

namespace gpd {

struct SchurProblem {
  Eigen::MatrixXcd m;
  double tol = 1e-6;
  uint64_t seed = 0;  // drives the randomized certificate starts
};

// Witness for an upper bound on the Schur multiplier norm: columns of `a`
// and `b` factor the matrix as M_ij = <a_i, b_j> up to `residual`, and
// max_i ||a_i|| * max_j ||b_j|| <= value + tol.
struct SchurCertificate {
  Eigen::MatrixXcd a;  // (m+n) x m, column i is a_i
  Eigen::MatrixXcd b;  // (m+n) x n, column j is b_j
  double value = 0.0;
  double residual = 0.0;

  double factor_product() const;
  double reconstruction_residual(const Eigen::MatrixXcd& m) const;
};

// Frobenius-nearest PSD matrix: eigenvalue clipping at 0. Throws NotHermitian
// when the input is not Hermitian within 1e-10 * scale.
Eigen::MatrixXcd psd_project(const Eigen::MatrixXcd& a);

// Schur multiplier norm by bisection over the block-PSD feasibility problem
// "exists PSD [[P, M], [M^, Q]] with diag(P) <= t, diag(Q) <= t", each probe
// solved by Dykstra alternating projections (cap 50000, stall 1e-12).
// |value - true norm| <= tol.
std::pair<double, SchurCertificate> schur_norm(const SchurProblem& p);

// Heuristic lower bound on ||T||_cb for a linear map on C_c(G) given in the
// delta basis: max over random matrix amplifications A (contractions, sizes
// up to min(|G|, 6)) of ||(T (x) id)(A)||. Monotone in trials; deterministic
// for a fixed seed.
double amplification_norm_lower(const Groupoid& g, const UnitWeight& w,
                                const Eigen::MatrixXcd& dense_map, int trials,
                                uint64_t seed = 0);

}  // namespace gpd

#endif
