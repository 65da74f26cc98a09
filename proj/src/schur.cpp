#include "groupoidal/schur.hpp"

#include <cmath>
#include <random>

namespace gpd {

namespace {

constexpr long kIterCap = 50000;
constexpr double kStall = 1e-12;

// Projection onto {X hermitian : upper-right block = M, Re(diag) <= t}.
// Entrywise, so it is the Frobenius-nearest point.
void project_affine(Eigen::MatrixXcd& x, const Eigen::MatrixXcd& m, double t) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  x.block(0, rows, rows, cols) = m;
  x.block(rows, 0, cols, rows) = m.adjoint();
  for (int i = 0; i < rows + cols; ++i)
    x(i, i) = std::min(x(i, i).real(), t);
}

// Split a PSD iterate into candidate factor frames and tighten the a-side to
// interpolate M exactly. The product max||a_i|| max||b_j|| is a certified
// upper bound on the Schur norm whenever the interpolation residual is tiny.
struct Extraction {
  Eigen::MatrixXcd a, b;
  double product = 1e300;
  double residual = 1e300;
};

// Adam descent on the exactly-feasible objective J(B) = smax||a_i||^2 *
// smax||b_j||^2 with a_i eliminated as the minimum-norm interpolant; used to
// tighten the certificate after bisection. Monotone by construction at the
// exit (the best exact product seen is kept).
void descent_polish(const Eigen::MatrixXcd& m, Eigen::MatrixXcd& a, Eigen::MatrixXcd& b,
                    double& product, double& residual) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int d = static_cast<int>(b.rows());
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());

  // Exact evaluation preceded by a short alternating minimum-norm polish;
  // each half-sweep is monotone in the factor product.
  auto exact_eval = [&](Eigen::MatrixXcd& bb, Eigen::MatrixXcd& aa, double& res) {
    for (int sweep = 0; sweep < 8; ++sweep) {
      auto asv = bb.adjoint().completeOrthogonalDecomposition();
      for (int i = 0; i < rows; ++i)
        aa.col(i) = asv.solve(Eigen::VectorXcd(m.row(i).adjoint()));
      auto bsv = aa.adjoint().completeOrthogonalDecomposition();
      for (int j = 0; j < cols; ++j) bb.col(j) = bsv.solve(Eigen::VectorXcd(m.col(j)));
    }
    auto solver = bb.adjoint().completeOrthogonalDecomposition();
    double max_a = 0.0;
    for (int i = 0; i < rows; ++i) {
      aa.col(i) = solver.solve(Eigen::VectorXcd(m.row(i).adjoint()));
      max_a = std::max(max_a, aa.col(i).norm());
    }
    double max_b = 0.0;
    for (int j = 0; j < cols; ++j) max_b = std::max(max_b, bb.col(j).norm());
    res = (aa.adjoint() * bb - m).cwiseAbs().maxCoeff();
    return max_a * max_b;
  };

  double res0 = 0.0;
  double best = exact_eval(b, a, res0);
  Eigen::MatrixXcd best_a = a, best_b = b;
  if (res0 > 1e-8 * scale) best = 1e300;

  Eigen::MatrixXcd mom = Eigen::MatrixXcd::Zero(d, cols), vel = mom, cur_b = b;
  const double ridge = 1e-12 * scale * scale;
  const int steps = 700;
  for (int step = 1; step <= steps; ++step) {
    // Exponential sharpening keeps early steps exploratory and drives the
    // smoothed max to within ~1e-3 of the true max by the end.
    const double p = 6.0 * std::pow(420.0 / 6.0, static_cast<double>(step) / steps);
    Eigen::MatrixXcd gram = cur_b.adjoint() * cur_b +
                            ridge * Eigen::MatrixXcd::Identity(cols, cols);
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(gram);
    Eigen::VectorXd sa(rows), sb(cols);
    std::vector<Eigen::VectorXcd> u(rows);
    for (int i = 0; i < rows; ++i) {
      u[i] = ldlt.solve(m.row(i).adjoint());
      sa[i] = std::real(m.row(i).adjoint().dot(u[i]));
    }
    for (int j = 0; j < cols; ++j) sb[j] = cur_b.col(j).squaredNorm();

    auto smax = [&](const Eigen::VectorXd& s, Eigen::VectorXd& w) {
      const double top = s.maxCoeff();
      w = ((s.array() - top) * p).exp();
      const double z = w.sum();
      w /= z;
      return top + std::log(z) / p;
    };
    Eigen::VectorXd wa, wb;
    const double fa = smax(sa, wa), fb = smax(sb, wb);

    Eigen::MatrixXcd inner = Eigen::MatrixXcd::Zero(cols, cols);
    for (int i = 0; i < rows; ++i) inner += wa[i] * (u[i] * u[i].adjoint());
    Eigen::MatrixXcd grad = -fb * (cur_b * inner);
    for (int j = 0; j < cols; ++j) grad.col(j) += 2.0 * fa * wb[j] * cur_b.col(j);

    const double lr = 0.03 / (1.0 + 3.0 * step / steps);
    mom = 0.9 * mom + 0.1 * grad;
    vel = 0.999 * vel + 0.001 * grad.cwiseAbs2();
    const double c1 = 1.0 - std::pow(0.9, step), c2 = 1.0 - std::pow(0.999, step);
    cur_b -= lr * (mom / c1).cwiseQuotient(
                      ((vel / c2).cwiseSqrt().array() + 1e-9).matrix().cast<cplx>());

    if (step % 50 == 0 || step == steps) {
      Eigen::MatrixXcd trial_a(d, rows), trial_b = cur_b;
      double res = 0.0;
      const double val = exact_eval(trial_b, trial_a, res);
      if (res < 1e-8 * scale && val < best) {
        best = val;
        best_a = trial_a;
        best_b = trial_b;
      }
    }
  }
  if (best < 1e299) {
    a = best_a;
    b = best_b;
    product = best;
    residual = (a.adjoint() * b - m).cwiseAbs().maxCoeff();
  }
}

Extraction extract_certificate(const Eigen::MatrixXcd& psd_point,
                               const Eigen::MatrixXcd& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(psd_point);
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd root = lam.asDiagonal() * es.eigenvectors().adjoint();

  Extraction out;
  out.b = root.rightCols(cols);
  out.a.resize(rows + cols, rows);
  auto solver = out.b.adjoint().completeOrthogonalDecomposition();
  for (int i = 0; i < rows; ++i) {
    Eigen::VectorXcd rhs = m.row(i).adjoint();
    out.a.col(i) = solver.solve(rhs);
  }
  double max_a = 0.0, max_b = 0.0, res = 0.0;
  for (int i = 0; i < rows; ++i) max_a = std::max(max_a, out.a.col(i).norm());
  for (int j = 0; j < cols; ++j) max_b = std::max(max_b, out.b.col(j).norm());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      res = std::max(res, std::abs(out.a.col(i).dot(out.b.col(j)) - m(i, j)));
  out.product = max_a * max_b;
  out.residual = res;
  return out;
}

struct ProbeResult {
  bool feasible = false;
  Eigen::MatrixXcd psd_point;
};

// One Dykstra run for the feasibility problem at level t. Exits early when
// the iterate certifies feasibility through an exact factorization with
// product <= t + slack, or when the gap between the two sets stops decaying
// geometrically (infeasible at the probe's resolution).
ProbeResult probe(const Eigen::MatrixXcd& m, double t, double eps, double slack) {
  const int n = static_cast<int>(m.rows() + m.cols());
  Eigen::MatrixXcd x(n, n);
  x.setZero();
  x.topLeftCorner(m.rows(), m.rows()) =
      t * Eigen::MatrixXcd::Identity(m.rows(), m.rows());
  x.bottomRightCorner(m.cols(), m.cols()) =
      t * Eigen::MatrixXcd::Identity(m.cols(), m.cols());
  project_affine(x, m, t);

  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd y(n, n), xprev(n, n);

  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  double window_gap = 1e300;
  constexpr long kWindow = 2400;

  for (long k = 0; k < kIterCap; ++k) {
    xprev = x;
    y = psd_project(x + p);
    p = x + p - y;
    x = y + q;
    project_affine(x, m, t);
    q = y + q - x;

    const double gap = (y - x).norm();
    if (gap < eps) return {true, y};

    if (k % 32 == 31) {
      Extraction ext = extract_certificate(y, m);
      if (ext.residual < 1e-9 * scale && ext.product <= t + slack)
        return {true, y};
    }

    if ((x - xprev).norm() < kStall) return {gap < 10.0 * eps, y};
    if (k % kWindow == kWindow - 1) {
      // Demand geometric decay per window; otherwise the gap has stabilized
      // at its limit, which is the distance between the two sets. Past the
      // deadline the probe classifies by the current gap; the certificate
      // polish downstream absorbs a conservative call.
      if (gap > 0.85 * window_gap || k >= 6000) return {gap < 10.0 * eps, y};
      window_gap = gap;
    }
  }
  throw NoConvergence(kIterCap, "Dykstra feasibility probe at t = " + std::to_string(t));
}

}  // namespace

Eigen::MatrixXcd psd_project(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw NotHermitian("matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw NotHermitian("deviation above 1e-10");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(((a + a.adjoint()) / 2.0).eval());
  Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
}

double SchurCertificate::factor_product() const {
  double ma = 0.0, mb = 0.0;
  for (int i = 0; i < a.cols(); ++i) ma = std::max(ma, a.col(i).norm());
  for (int j = 0; j < b.cols(); ++j) mb = std::max(mb, b.col(j).norm());
  return ma * mb;
}

double SchurCertificate::reconstruction_residual(const Eigen::MatrixXcd& m) const {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(a.col(i).dot(b.col(j)) - m(i, j)));
  return worst;
}

std::pair<double, SchurCertificate> schur_norm(const SchurProblem& p) {
  if (p.tol < 1e-9) throw UsageError("schur_norm tolerance must be >= 1e-9");
  const Eigen::MatrixXcd& m = p.m;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (!m.allFinite()) throw UsageError("matrix entries must be finite");

  SchurCertificate cert;
  cert.a = Eigen::MatrixXcd::Zero(rows + cols, rows);
  cert.b = Eigen::MatrixXcd::Zero(rows + cols, cols);
  if (rows == 0 || cols == 0) return {0.0, cert};

  double lo = m.cwiseAbs().maxCoeff();
  if (lo == 0.0) return {0.0, cert};
  double hi = std::min(spectral_norm(m) * std::sqrt(static_cast<double>(std::min(rows, cols))),
                       m.norm());
  hi = std::max(hi, lo);

  // Seed the bracket with descent-polished factorizations from a handful of
  // deterministic and seeded-random frames; the best product is a certified
  // upper bound that usually lands within tolerance of the norm already.
  Extraction ext;
  {
    const int d = rows + cols;
    std::mt19937_64 start_rng(p.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Eigen::MatrixXcd> bstarts;
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(d, cols);
    basis.topRows(cols) = Eigen::MatrixXcd::Identity(cols, cols);
    bstarts.push_back(basis);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    Eigen::MatrixXcd svd_b = Eigen::MatrixXcd::Zero(d, cols);
    for (int k = 0; k < svd.singularValues().size(); ++k)
      svd_b.row(k) = std::sqrt(svd.singularValues()[k]) * svd.matrixV().col(k).adjoint();
    bstarts.push_back(svd_b);
    for (int r = 0; r < 2; ++r) {
      Eigen::MatrixXcd rb(d, cols);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < cols; ++j) rb(i, j) = cplx(gauss(start_rng), gauss(start_rng));
      bstarts.push_back(rb);
    }
    for (auto& b0 : bstarts) {
      Eigen::MatrixXcd a0 = Eigen::MatrixXcd::Zero(d, rows);
      double prod = 1e300, res = 1e300;
      descent_polish(m, a0, b0, prod, res);
      if (prod < ext.product) {
        ext.a = a0;
        ext.b = b0;
        ext.product = prod;
        ext.residual = res;
      }
    }
    // Basin hops around the best frame.
    for (int hop = 0; hop < 5; ++hop) {
      Eigen::MatrixXcd b0 = ext.b;
      const double amp = 0.2 / (1 + hop);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < cols; ++j)
          b0(i, j) += amp * cplx(gauss(start_rng), gauss(start_rng));
      Eigen::MatrixXcd a0 = Eigen::MatrixXcd::Zero(d, rows);
      double prod = 1e300, res = 1e300;
      descent_polish(m, a0, b0, prod, res);
      if (prod < ext.product) {
        ext.a = a0;
        ext.b = b0;
        ext.product = prod;
        ext.residual = res;
      }
    }
    if (ext.product < hi) hi = std::max(lo, ext.product);
  }

  const double eps = std::max(1e-10, 0.02 * p.tol) * std::max(1.0, lo);
  const double min_slack = 0.1 * p.tol * std::max(1.0, lo);
  // Probe resolution follows the bracket: coarse early probes exit quickly,
  // the final ones certify at the requested tolerance.
  auto slack_for = [&](double width) { return std::max(min_slack, 0.05 * width); };

  // The upper end of the bracket is feasible in exact arithmetic; widen a
  // little if the probe disagrees numerically.
  ProbeResult top = probe(m, hi, eps, slack_for(hi - lo));
  for (int tries = 0; !top.feasible && tries < 4; ++tries) {
    hi *= 1.25;
    top = probe(m, hi, eps, slack_for(hi - lo));
  }
  if (!top.feasible) throw NoConvergence(kIterCap, "upper bracket infeasible");

  while (hi - lo > 0.45 * p.tol) {
    const double mid = 0.5 * (lo + hi);
    ProbeResult r = probe(m, mid, eps, slack_for(hi - lo));
    if (r.feasible) {
      hi = mid;
      top = std::move(r);
    } else {
      lo = mid;
    }
  }
  double value = 0.5 * (lo + hi);

  // Tighten from the bisection's feasible endpoint as well; whichever route
  // produced the better certified product caps the reported value.
  Extraction from_probe = extract_certificate(top.psd_point, m);
  descent_polish(m, from_probe.a, from_probe.b, from_probe.product, from_probe.residual);
  if (from_probe.product < ext.product) ext = std::move(from_probe);
  value = std::min(value, ext.product);

  cert.a = ext.a;
  cert.b = ext.b;
  cert.value = value;
  cert.residual = ext.residual;
  return {value, cert};
}

double amplification_norm_lower(const Groupoid& g, const UnitWeight& w,
                                const Eigen::MatrixXcd& dense_map, int trials,
                                uint64_t seed) {
  if (trials < 1) throw UsageError("trials must be >= 1");
  const int n = g.size();
  if (n == 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int max_k = std::min(n, 6);

  auto block_norm = [&](const std::vector<GroupoidFunction>& entries, int k) {
    std::vector<BlockOperator> ops;
    ops.reserve(entries.size());
    for (const auto& f : entries) ops.push_back(regular_rep(g, w, f));
    double best = 0.0;
    for (int bi = 0; bi < static_cast<int>(w.support().size()); ++bi) {
      const int fs = static_cast<int>(ops.front().block(bi).rows());
      Eigen::MatrixXcd big(k * fs, k * fs);
      for (int pq = 0; pq < k * k; ++pq)
        big.block((pq / k) * fs, (pq % k) * fs, fs, fs) = ops[pq].block(bi);
      best = std::max(best, spectral_norm(big));
    }
    return best;
  };

  double lower = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int k = 1 + (t % max_k);
    std::vector<GroupoidFunction> entries(k * k, GroupoidFunction(n));
    for (auto& f : entries)
      for (int e = 0; e < n; ++e) f[e] = cplx(gauss(rng), gauss(rng));
    const double norm_in = block_norm(entries, k);
    if (norm_in < 1e-14) continue;
    std::vector<GroupoidFunction> image(k * k, GroupoidFunction(n));
    for (int pq = 0; pq < k * k; ++pq)
      image[pq] = GroupoidFunction((dense_map * entries[pq].values() / norm_in).eval());
    lower = std::max(lower, block_norm(image, k));
  }
  return lower;
}

}  // namespace gpd
