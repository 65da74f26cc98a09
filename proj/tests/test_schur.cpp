#include "doctest.h"
#include "factorization_oracle.hpp"
#include "support.hpp"

#include "groupoidal/algebra.hpp"
#include "groupoidal/schur.hpp"

using namespace gpd;

TEST_CASE("psd projection") {
  Eigen::MatrixXcd psd(2, 2);
  psd << 2.0, 1.0, 1.0, 2.0;
  CHECK((psd_project(psd) - psd).norm() < 1e-12);

  Eigen::MatrixXcd neg = -Eigen::MatrixXcd::Identity(3, 3);
  CHECK(psd_project(neg).norm() < 1e-12);

  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(2, 2);
  mixed(0, 0) = 1.0;
  mixed(1, 1) = -2.0;
  Eigen::MatrixXcd clipped = psd_project(mixed);
  CHECK(std::abs(clipped(0, 0) - cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(clipped(1, 1)) < 1e-12);

  // Idempotent and Frobenius-minimizing direction check on a random input.
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd h(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h(i, j) = cplx(gauss(rng), gauss(rng));
  h = ((h + h.adjoint()) / 2.0).eval();
  Eigen::MatrixXcd p = psd_project(h);
  CHECK((psd_project(p) - p).norm() < 1e-10);

  Eigen::MatrixXcd nonherm(2, 2);
  nonherm << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(psd_project(nonherm), NotHermitian);
}

TEST_CASE("schur norm anchors") {
  SchurProblem p;
  p.tol = 1e-6;

  p.m = Eigen::MatrixXcd::Identity(2, 2);
  auto [v_id, c_id] = schur_norm(p);
  CHECK(v_id == doctest::Approx(1.0).epsilon(2e-6));
  CHECK(c_id.reconstruction_residual(p.m) < 1e-6);
  CHECK(c_id.factor_product() <= v_id + p.tol);

  p.m = Eigen::MatrixXcd::Ones(3, 3);
  auto [v_ones, c_ones] = schur_norm(p);
  CHECK(v_ones == doctest::Approx(1.0).epsilon(2e-6));
  CHECK(c_ones.reconstruction_residual(p.m) < 1e-6);

  // Hadamard pattern: the norm is sqrt(2) (rows factor against the standard
  // basis; the operator-norm lower bound 2/sqrt(2) matches).
  p.m.resize(2, 2);
  p.m << 1.0, 1.0, 1.0, -1.0;
  auto [v_had, c_had] = schur_norm(p);
  CHECK(v_had == doctest::Approx(std::sqrt(2.0)).epsilon(2e-6));
  CHECK(c_had.reconstruction_residual(p.m) < 1e-6);
  CHECK(c_had.factor_product() <= v_had + p.tol);

  const double oracle = gpdtest::schur_norm_bruteforce(p.m);
  CHECK(std::abs(v_had - oracle) < 1e-4);

  p.m = Eigen::MatrixXcd::Zero(2, 3);
  CHECK(schur_norm(p).first == 0.0);
}

TEST_CASE("schur norm against the brute-force oracle") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SchurProblem p;
  p.tol = 1e-6;
  for (int trial = 0; trial < 8; ++trial) {
    const int rows = 3 + (trial % 3);
    const int cols = 3 + ((trial + 1) % 3);
    p.m.resize(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) p.m(i, j) = cplx(gauss(rng), gauss(rng));
    auto [value, cert] = schur_norm(p);
    CHECK(cert.reconstruction_residual(p.m) <= 1e-6);
    CHECK(cert.factor_product() <= value + p.tol);
    const double oracle = gpdtest::schur_norm_bruteforce(p.m);
    CHECK(std::abs(value - oracle) < 1e-3);
  }
}

TEST_CASE("schur norm properties") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SchurProblem p;
  p.tol = 1e-6;
  p.m.resize(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p.m(i, j) = cplx(gauss(rng), gauss(rng));

  const double whole = schur_norm(p).first;

  // Monotone under passing to submatrices.
  SchurProblem sub;
  sub.tol = 1e-6;
  sub.m = p.m.topLeftCorner(3, 3);
  CHECK(schur_norm(sub).first <= whole + 2e-6);

  // Homogeneous under scaling.
  SchurProblem scaled;
  scaled.tol = 1e-6;
  scaled.m = cplx(0.0, -2.0) * p.m;
  CHECK(schur_norm(scaled).first == doctest::Approx(2.0 * whole).epsilon(4e-6));

  // Max entry is a lower bound, Frobenius an upper bound.
  CHECK(whole >= p.m.cwiseAbs().maxCoeff() - 2e-6);
  CHECK(whole <= p.m.norm() + 2e-6);
}

TEST_CASE("amplification lower bound") {
  Groupoid p2 = pair_groupoid(2);
  UnitWeight w = full_support_uniform(p2);
  const int n = p2.size();

  Eigen::MatrixXcd identity_map = Eigen::MatrixXcd::Identity(n, n);
  CHECK(amplification_norm_lower(p2, w, identity_map, 8) >= 1.0 - 1e-6);
  CHECK(amplification_norm_lower(p2, w, identity_map, 8) <= 1.0 + 1e-9);

  Eigen::MatrixXcd zero_map = Eigen::MatrixXcd::Zero(n, n);
  CHECK(amplification_norm_lower(p2, w, zero_map, 4) == 0.0);

  // Monotone in trials (the random stream is a prefix).
  Groupoid z3 = from_group(gpdtest::z_table(3));
  UnitWeight wz = full_support_uniform(z3);
  Eigen::MatrixXcd some = Eigen::MatrixXcd::Identity(3, 3);
  some(1, 1) = 0.25;
  const double l4 = amplification_norm_lower(z3, wz, some, 4);
  const double l12 = amplification_norm_lower(z3, wz, some, 12);
  CHECK(l12 >= l4);
  CHECK(l12 <= 1.0 + 1e-9);
}
