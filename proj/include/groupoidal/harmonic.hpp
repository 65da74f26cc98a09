#ifndef GROUPOIDAL_HARMONIC_HPP
#define GROUPOIDAL_HARMONIC_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "groupoidal/gfun.hpp"
#include "groupoidal/measure.hpp"

namespace gpd {

// A G-Hilbert bundle at finite scale: one fiber dimension per unit and a
// unitary L(gamma) : H_{d(gamma)} -> H_{r(gamma)} per element. All inner
// products are conjugate-linear in the first argument.
struct BundleRep {
  std::vector<int> dims;                 // indexed by unit element, 0 off-units
  std::vector<Eigen::MatrixXcd> maps;    // indexed by element

  const Eigen::MatrixXcd& L(int e) const { return maps[e]; }

  // Checks L(x) = id, multiplicativity on composable pairs, L(e)^{-1} =
  // L(inv e) and unitarity, all to `tol`. Throws AxiomViolation.
  void validate(const Groupoid& g, double tol = 1e-10) const;
};

// A bounded section: one vector per unit, of the bundle's fiber dimension.
struct Section {
  std::vector<Eigen::VectorXcd> vec;  // indexed by unit element

  static Section constant_ones(const Groupoid& g, const BundleRep& rep);
  double sup_norm() const;
};

// The trivial one-dimensional bundle (dims = 1, L = [1]).
BundleRep trivial_bundle(const Groupoid& g);

// The left regular bundle: H_x = l^2(G^x), L(gamma) delta_beta = delta_{gamma beta}.
BundleRep left_regular_bundle(const Groupoid& g);

// [phi(gamma beta^{-1})] over gamma, beta in G_x, canonical fiber order.
Eigen::MatrixXcd fiber_gram(const Groupoid& g, const GroupoidFunction& phi, int x);

struct PosdefWitness {
  bool positive = false;
  int unit = -1;                 // offending unit when not positive
  double min_eigenvalue = 0.0;
  Eigen::VectorXcd eigenvector;  // of the offending fiber Gram
};

// phi is positive definite iff every fiber Gram is PSD (eigenvalues >= -1e-10).
PosdefWitness is_positive_definite(const Groupoid& g, const GroupoidFunction& phi);

// (xi, eta)_L(gamma) = <xi(r(gamma)), L(gamma) eta(d(gamma))>.
GroupoidFunction coefficient(const Groupoid& g, const BundleRep& rep, const Section& xi,
                             const Section& eta);

struct GnsBundle {
  BundleRep rep;
  Section xi;
};

// GNS realization of a positive definite phi: fiber H_x is C^{G_x} modulo the
// Gram kernel, L(gamma) induced by delta_beta -> delta_{beta gamma^{-1}},
// xi(x) the class of delta_x. coefficient(rep, xi, xi) reproduces phi and
// max_x ||xi(x)||^2 = ||phi||_inf.
GnsBundle gns_bundle(const Groupoid& g, const GroupoidFunction& phi);

struct GodementWitness {
  std::vector<double> xi;  // per element: |G^{r(.)}|^{-1/2}
  GroupoidFunction gfun;   // the induced coefficient, identically 1
};

// One-step amenability witness for a finite groupoid with full-support weight.
GodementWitness godement_witness(const Groupoid& g, const UnitWeight& w);

// Upper bound on ||phi||_{B(G)}: max_x phi(x) for positive definite phi (via
// the GNS section norms), otherwise a balanced polarization of the canonical
// left-regular coefficient realization, after factoring out the modulus and
// phase at the max-modulus element so the bound scales exactly.
double bg_norm_upper(const Groupoid& g, const GroupoidFunction& phi);

// The canonical realization of an arbitrary phi as a left regular bundle
// coefficient (xi, eta)_lambda = phi; used by bg_norm_upper and tests.
void left_regular_coefficient_realization(const Groupoid& g, const GroupoidFunction& phi,
                                          Section& xi, Section& eta);

}  // namespace gpd

#endif
