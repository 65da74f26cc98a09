#ifndef GROUPOIDAL_ALGEBRA_HPP
#define GROUPOIDAL_ALGEBRA_HPP

#include <vector>

#include <Eigen/Dense>

#include "groupoidal/gfun.hpp"
#include "groupoidal/measure.hpp"

namespace gpd {

// Operator on L^2(G, nu^{-1}) = direct sum over x in supp(mu) of l^2(G_x),
// stored one dense block per supported unit, rows/columns in canonical fiber
// order. The nu^{-1} weight is constant on each fiber so it never enters the
// matrices; adjoints are plain conjugate transposes.
class BlockOperator {
public:
  BlockOperator() = default;
  BlockOperator(std::vector<int> units, std::vector<Eigen::MatrixXcd> blocks)
      : units_(std::move(units)), blocks_(std::move(blocks)) {}

  static BlockOperator zero(const Groupoid& g, const UnitWeight& w);
  static BlockOperator identity(const Groupoid& g, const UnitWeight& w);

  const std::vector<int>& block_units() const { return units_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const Eigen::MatrixXcd& block(int k) const { return blocks_[k]; }
  Eigen::MatrixXcd& block(int k) { return blocks_[k]; }

  BlockOperator operator+(const BlockOperator& o) const;
  BlockOperator operator-(const BlockOperator& o) const;
  BlockOperator operator*(const BlockOperator& o) const;
  BlockOperator adjoint() const;

  // Max over blocks of the spectral norm.
  double norm() const;

private:
  std::vector<int> units_;  // supported units, canonical order
  std::vector<Eigen::MatrixXcd> blocks_;
};

// Dense operator on l^2(G) x l^2(G) over the basis delta_alpha (x) delta_beta,
// index = alpha * |G| + beta.
struct TensorOperator {
  Eigen::MatrixXcd matrix;
  int n = 0;  // |G|
};

// Spectral norm via eigendecomposition of M^dagger M.
double spectral_norm(const Eigen::MatrixXcd& m);

// Left regular representation: block at x has entry (gamma, beta) =
// f(gamma beta^{-1}) for gamma, beta in G_x, over x in supp(mu).
BlockOperator regular_rep(const Groupoid& g, const UnitWeight& w, const GroupoidFunction& f);

// ||f||_r = ||lambda(f)||.
double reduced_norm(const Groupoid& g, const UnitWeight& w, const GroupoidFunction& f);

// lambda(f) as a single dense |G| x |G| matrix on l^2(G) (all units, not just
// the support); entry (gamma, beta) = f(gamma beta^{-1}) when d(gamma) = d(beta).
Eigen::MatrixXcd dense_lambda(const Groupoid& g, const GroupoidFunction& f);

// Matrix of lambda_gamma on l^2(G): delta_beta -> delta_{gamma beta}.
Eigen::MatrixXcd lambda_element(const Groupoid& g, int gamma);

// Basis {delta_gamma : gamma in G|_u} of the reduction ideal.
std::vector<int> ideal_of_open(const Groupoid& g, const UnitWeight& w,
                               const InvariantSet& u);

struct ExactnessReport {
  int dim_ideal = 0;      // im(iota) = span{delta_gamma : gamma in G|_U}
  int dim_total = 0;      // dim C_r^*(G)
  int dim_quotient = 0;   // dim C_r^*(G|_F)
  bool exact = false;     // im(iota) == ker(p) as subspaces
  std::vector<int> kernel_basis;  // elements spanning ker(p)
};

// The finite shadow of the reduction exact sequence: F invariant, U its
// complement; checks span{delta_gamma : gamma in G|_U} == {f : f|_{G|_F} = 0}.
ExactnessReport inner_exactness_check(const Groupoid& g, const UnitWeight& w,
                                      const InvariantSet& f);

}  // namespace gpd

#endif
