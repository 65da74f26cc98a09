#include "groupoidal/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace gpd {

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.adjoint() * m);
  const double top = es.eigenvalues().maxCoeff();
  return top <= 0.0 ? 0.0 : std::sqrt(top);
}

BlockOperator BlockOperator::zero(const Groupoid& g, const UnitWeight& w) {
  std::vector<int> units = w.support();
  std::vector<Eigen::MatrixXcd> blocks;
  for (int x : units) {
    const int k = static_cast<int>(g.fiber_d(x).size());
    blocks.push_back(Eigen::MatrixXcd::Zero(k, k));
  }
  return BlockOperator(std::move(units), std::move(blocks));
}

BlockOperator BlockOperator::identity(const Groupoid& g, const UnitWeight& w) {
  BlockOperator b = zero(g, w);
  for (int k = 0; k < b.block_count(); ++k)
    b.block(k) = Eigen::MatrixXcd::Identity(b.block(k).rows(), b.block(k).cols());
  return b;
}

BlockOperator BlockOperator::operator+(const BlockOperator& o) const {
  BlockOperator out = *this;
  for (size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] += o.blocks_[k];
  return out;
}

BlockOperator BlockOperator::operator-(const BlockOperator& o) const {
  BlockOperator out = *this;
  for (size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] -= o.blocks_[k];
  return out;
}

BlockOperator BlockOperator::operator*(const BlockOperator& o) const {
  BlockOperator out = *this;
  for (size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] = blocks_[k] * o.blocks_[k];
  return out;
}

BlockOperator BlockOperator::adjoint() const {
  BlockOperator out = *this;
  for (size_t k = 0; k < blocks_.size(); ++k)
    out.blocks_[k] = blocks_[k].adjoint().eval();
  return out;
}

double BlockOperator::norm() const {
  double best = 0.0;
  for (const auto& b : blocks_) best = std::max(best, spectral_norm(b));
  return best;
}

BlockOperator regular_rep(const Groupoid& g, const UnitWeight& w, const GroupoidFunction& f) {
  BlockOperator out = BlockOperator::zero(g, w);
  for (int k = 0; k < out.block_count(); ++k) {
    const int x = out.block_units()[k];
    const auto& fiber = g.fiber_d(x);
    auto& m = out.block(k);
    for (size_t i = 0; i < fiber.size(); ++i)
      for (size_t j = 0; j < fiber.size(); ++j)
        m(i, j) = f[g.comp(fiber[i], g.inv(fiber[j]))];
  }
  return out;
}

double reduced_norm(const Groupoid& g, const UnitWeight& w, const GroupoidFunction& f) {
  return regular_rep(g, w, f).norm();
}

Eigen::MatrixXcd dense_lambda(const Groupoid& g, const GroupoidFunction& f) {
  const int n = g.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int gamma = 0; gamma < n; ++gamma)
    for (int beta = 0; beta < n; ++beta)
      if (g.src(gamma) == g.src(beta))
        m(gamma, beta) = f[g.comp(gamma, g.inv(beta))];
  return m;
}

Eigen::MatrixXcd lambda_element(const Groupoid& g, int gamma) {
  const int n = g.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int beta = 0; beta < n; ++beta)
    if (g.rng(beta) == g.src(gamma)) m(g.comp(gamma, beta), beta) = 1.0;
  return m;
}

std::vector<int> ideal_of_open(const Groupoid& g, const UnitWeight& w,
                               const InvariantSet& u) {
  (void)w;
  std::vector<char> in(g.size(), 0);
  for (int x : u.carrier) in[x] = 1;
  std::vector<int> basis;
  for (int e = 0; e < g.size(); ++e)
    if (in[g.src(e)] && in[g.rng(e)]) basis.push_back(e);
  return basis;
}

ExactnessReport inner_exactness_check(const Groupoid& g, const UnitWeight& w,
                                      const InvariantSet& f) {
  std::vector<char> in_f(g.size(), 0);
  for (int x : f.carrier) in_f[x] = 1;
  std::vector<int> complement;
  for (int x : g.units())
    if (!in_f[x]) complement.push_back(x);
  InvariantSet u = InvariantSet::validate(g, complement);

  ExactnessReport rep;
  rep.dim_total = g.size();
  const std::vector<int> ideal = ideal_of_open(g, w, u);
  rep.dim_ideal = static_cast<int>(ideal.size());
  // ker(p) = {f : supp(f) inside G|_U} = span of delta_gamma with gamma
  // avoiding G|_F.
  int dim_f_part = 0;
  for (int e = 0; e < g.size(); ++e)
    if (in_f[g.src(e)] && in_f[g.rng(e)]) {
      ++dim_f_part;
    } else {
      rep.kernel_basis.push_back(e);
    }
  rep.dim_quotient = dim_f_part;
  rep.exact = rep.kernel_basis == ideal;
  return rep;
}

}  // namespace gpd
