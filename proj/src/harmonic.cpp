#include "groupoidal/harmonic.hpp"

#include <cmath>

namespace gpd {

namespace {
constexpr double kPsdTol = 1e-10;
constexpr double kRankTol = 1e-10;
}  // namespace

void BundleRep::validate(const Groupoid& g, double tol) const {
  for (int x : g.units()) {
    const auto& m = maps[x];
    if (m.rows() != dims[x] || m.cols() != dims[x])
      throw AxiomViolation("bundle-unit-dims", g.id(x));
    if ((m - Eigen::MatrixXcd::Identity(dims[x], dims[x])).norm() > tol)
      throw AxiomViolation("bundle-unit-identity", g.id(x));
  }
  for (int e = 0; e < g.size(); ++e) {
    const auto& m = maps[e];
    if (m.rows() != dims[g.rng(e)] || m.cols() != dims[g.src(e)])
      throw AxiomViolation("bundle-dims", g.id(e));
    if (m.cols() > 0) {
      Eigen::MatrixXcd gram = m.adjoint() * m;
      if ((gram - Eigen::MatrixXcd::Identity(m.cols(), m.cols())).norm() > tol)
        throw AxiomViolation("bundle-unitary", g.id(e));
    }
    if ((maps[g.inv(e)] - m.adjoint()).norm() > tol)
      throw AxiomViolation("bundle-inverse", g.id(e));
  }
  for (int b = 0; b < g.size(); ++b)
    for (int c = 0; c < g.size(); ++c) {
      if (g.src(b) != g.rng(c)) continue;
      if ((maps[b] * maps[c] - maps[g.comp(b, c)]).norm() > tol)
        throw AxiomViolation("bundle-multiplicative", g.id(b) + ", " + g.id(c));
    }
}

Section Section::constant_ones(const Groupoid& g, const BundleRep& rep) {
  Section s;
  s.vec.resize(g.size());
  for (int x : g.units()) s.vec[x] = Eigen::VectorXcd::Ones(rep.dims[x]);
  return s;
}

double Section::sup_norm() const {
  double best = 0.0;
  for (const auto& v : vec)
    if (v.size() > 0) best = std::max(best, v.norm());
  return best;
}

BundleRep trivial_bundle(const Groupoid& g) {
  BundleRep rep;
  rep.dims.assign(g.size(), 0);
  for (int x : g.units()) rep.dims[x] = 1;
  rep.maps.assign(g.size(), Eigen::MatrixXcd::Ones(1, 1));
  return rep;
}

BundleRep left_regular_bundle(const Groupoid& g) {
  BundleRep rep;
  rep.dims.assign(g.size(), 0);
  for (int x : g.units()) rep.dims[x] = static_cast<int>(g.fiber_r(x).size());
  rep.maps.resize(g.size());
  // Position of an element inside fiber_r(rng(e)).
  std::vector<int> pos(g.size(), -1);
  for (int x : g.units()) {
    const auto& fr = g.fiber_r(x);
    for (size_t i = 0; i < fr.size(); ++i) pos[fr[i]] = static_cast<int>(i);
  }
  for (int e = 0; e < g.size(); ++e) {
    const int rows = rep.dims[g.rng(e)], cols = rep.dims[g.src(e)];
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    for (int beta : g.fiber_r(g.src(e))) m(pos[g.comp(e, beta)], pos[beta]) = 1.0;
    rep.maps[e] = std::move(m);
  }
  return rep;
}

Eigen::MatrixXcd fiber_gram(const Groupoid& g, const GroupoidFunction& phi, int x) {
  const auto& fiber = g.fiber_d(x);
  Eigen::MatrixXcd m(fiber.size(), fiber.size());
  for (size_t i = 0; i < fiber.size(); ++i)
    for (size_t j = 0; j < fiber.size(); ++j)
      m(i, j) = phi[g.comp(fiber[i], g.inv(fiber[j]))];
  return m;
}

PosdefWitness is_positive_definite(const Groupoid& g, const GroupoidFunction& phi) {
  PosdefWitness w;
  w.positive = true;
  for (int x : g.units()) {
    Eigen::MatrixXcd gram = fiber_gram(g, phi, x);
    if (gram.rows() == 0) continue;
    const double herm_dev = (gram - gram.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        ((gram + gram.adjoint()) / 2.0).eval());
    const double lo = es.eigenvalues().minCoeff();
    if (herm_dev > kPsdTol || lo < -kPsdTol) {
      w.positive = false;
      w.unit = x;
      w.min_eigenvalue = lo;
      int idx = 0;
      es.eigenvalues().minCoeff(&idx);
      w.eigenvector = es.eigenvectors().col(idx);
      return w;
    }
    w.min_eigenvalue = std::min(w.min_eigenvalue, lo);
  }
  return w;
}

GroupoidFunction coefficient(const Groupoid& g, const BundleRep& rep, const Section& xi,
                             const Section& eta) {
  for (int x : g.units()) {
    if (static_cast<int>(xi.vec[x].size()) != rep.dims[x] ||
        static_cast<int>(eta.vec[x].size()) != rep.dims[x])
      throw DimensionMismatch("section length at unit " + g.id(x));
  }
  GroupoidFunction phi(g.size());
  for (int e = 0; e < g.size(); ++e)
    phi[e] = xi.vec[g.rng(e)].dot(rep.maps[e] * eta.vec[g.src(e)]);
  return phi;
}

GnsBundle gns_bundle(const Groupoid& g, const GroupoidFunction& phi) {
  PosdefWitness pd = is_positive_definite(g, phi);
  if (!pd.positive)
    throw NotPositiveDefinite("fiber Gram at unit " + g.id(pd.unit) +
                              " has eigenvalue " + std::to_string(pd.min_eigenvalue));

  GnsBundle out;
  out.rep.dims.assign(g.size(), 0);
  out.rep.maps.resize(g.size());
  out.xi.vec.resize(g.size());

  // Per unit: quotient coordinates c = Lambda_+^{1/2} V_+^dagger u, so the
  // Gram inner product becomes the standard one.
  std::vector<Eigen::MatrixXcd> coord(g.size()), coord_pinv(g.size());
  for (int x : g.units()) {
    Eigen::MatrixXcd gram = fiber_gram(g, phi, x);
    gram = ((gram + gram.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    std::vector<int> keep;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()[i] > kRankTol) keep.push_back(i);
    const int k = static_cast<int>(keep.size());
    Eigen::MatrixXcd c(k, gram.cols()), cp(gram.cols(), k);
    for (int i = 0; i < k; ++i) {
      const double root = std::sqrt(es.eigenvalues()[keep[i]]);
      c.row(i) = root * es.eigenvectors().col(keep[i]).adjoint();
      cp.col(i) = es.eigenvectors().col(keep[i]) / root;
    }
    coord[x] = std::move(c);
    coord_pinv[x] = std::move(cp);
    out.rep.dims[x] = k;
    out.xi.vec[x] = coord[x].col(g.fiber_d_pos(x));
  }

  for (int e = 0; e < g.size(); ++e) {
    const int dx = g.src(e), rx = g.rng(e);
    const auto& fiber_src = g.fiber_d(dx);
    // T_e : delta_beta -> delta_{beta e^{-1}} maps G_{d(e)} into G_{r(e)}.
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(g.fiber_d(rx).size(), fiber_src.size());
    for (size_t j = 0; j < fiber_src.size(); ++j)
      t(g.fiber_d_pos(g.comp(fiber_src[j], g.inv(e))), j) = 1.0;
    out.rep.maps[e] = coord[rx] * t * coord_pinv[dx];
  }

  // Round trip and the sup-norm identity.
  GroupoidFunction back = coefficient(g, out.rep, out.xi, out.xi);
  double dev = 0.0;
  for (int e = 0; e < g.size(); ++e) dev = std::max(dev, std::abs(back[e] - phi[e]));
  if (dev > 1e-9)
    throw NotPositiveDefinite("GNS round trip deviates by " + std::to_string(dev));
  double max_sq = 0.0;
  for (int x : g.units()) max_sq = std::max(max_sq, out.xi.vec[x].squaredNorm());
  if (std::abs(max_sq - phi.sup_norm()) > 1e-9)
    throw NotPositiveDefinite("sup-norm identity fails: max ||xi(x)||^2 = " +
                              std::to_string(max_sq) + " vs ||phi||_inf = " +
                              std::to_string(phi.sup_norm()));
  return out;
}

GodementWitness godement_witness(const Groupoid& g, const UnitWeight& w) {
  if (g.units().empty()) throw EmptyGroupoid("godement witness needs units");
  if (!w.full_support(g))
    throw NotQuasiInvariant("godement witness requires full support");
  GodementWitness out;
  out.xi.resize(g.size());
  for (int e = 0; e < g.size(); ++e)
    out.xi[e] = 1.0 / std::sqrt(static_cast<double>(g.fiber_r(g.rng(e)).size()));
  out.gfun = GroupoidFunction(g.size());
  for (int gamma = 0; gamma < g.size(); ++gamma) {
    double acc = 0.0;
    for (int beta : g.fiber_r(g.rng(gamma)))
      acc += out.xi[beta] * out.xi[g.comp(g.inv(gamma), beta)];
    out.gfun[gamma] = acc;
  }
  return out;
}

void left_regular_coefficient_realization(const Groupoid& g, const GroupoidFunction& phi,
                                          Section& xi, Section& eta) {
  xi.vec.assign(g.size(), Eigen::VectorXcd());
  eta.vec.assign(g.size(), Eigen::VectorXcd());
  std::vector<int> pos(g.size(), -1);
  for (int x : g.units()) {
    const auto& fr = g.fiber_r(x);
    for (size_t i = 0; i < fr.size(); ++i) pos[fr[i]] = static_cast<int>(i);
    Eigen::VectorXcd xv = Eigen::VectorXcd::Zero(fr.size());
    Eigen::VectorXcd ev = Eigen::VectorXcd::Zero(fr.size());
    for (size_t i = 0; i < fr.size(); ++i) xv[i] = std::conj(phi[fr[i]]);
    ev[pos[x]] = 1.0;
    xi.vec[x] = std::move(xv);
    eta.vec[x] = std::move(ev);
  }
}

double bg_norm_upper(const Groupoid& g, const GroupoidFunction& phi) {
  if (g.size() == 0) return 0.0;
  // Factor out modulus and phase at the max-modulus element so the bound
  // scales exactly: bound(c phi) = |c| bound(phi).
  int star = 0;
  for (int e = 1; e < g.size(); ++e)
    if (std::abs(phi[e]) > std::abs(phi[star])) star = e;
  const cplx s = phi[star];
  if (std::abs(s) == 0.0) return 0.0;
  GroupoidFunction unit_phi = phi * (1.0 / s);

  PosdefWitness pd = is_positive_definite(g, unit_phi);
  if (pd.positive) {
    GnsBundle gns = gns_bundle(g, unit_phi);
    double max_sq = 0.0;
    for (int x : g.units()) max_sq = std::max(max_sq, gns.xi.vec[x].squaredNorm());
    return std::abs(s) * max_sq;
  }

  // phi = (1/4) sum_k i^{-k} (xi + i^k eta, xi + i^k eta)_lambda with the
  // canonical left regular realization, balanced so both sections share the
  // same sup norm.
  Section xi, eta;
  left_regular_coefficient_realization(g, unit_phi, xi, eta);
  const double nx = xi.sup_norm(), ne = eta.sup_norm();
  if (nx == 0.0 || ne == 0.0) return 0.0;
  const double t = std::sqrt(ne / nx);
  double bound = 0.0;
  for (int k = 0; k < 4; ++k) {
    const cplx ik = std::pow(cplx(0.0, 1.0), k);
    double part = 0.0;
    for (int x : g.units()) {
      if (xi.vec[x].size() == 0) continue;
      part = std::max(part, (t * xi.vec[x] + ik / t * eta.vec[x]).squaredNorm());
    }
    bound += part / 4.0;
  }
  return std::abs(s) * bound;
}

}  // namespace gpd
