#ifndef GROUPOIDAL_GFUN_HPP
#define GROUPOIDAL_GFUN_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "groupoidal/groupoid.hpp"

namespace gpd {

using cplx = std::complex<double>;

// The concrete C_c(G): one complex value per element in canonical order.
class GroupoidFunction {
public:
  static constexpr double kSupportTol = 1e-14;

  GroupoidFunction() = default;
  explicit GroupoidFunction(int n) : values_(Eigen::VectorXcd::Zero(n)) {}
  explicit GroupoidFunction(Eigen::VectorXcd v) : values_(std::move(v)) {}

  static GroupoidFunction zero(const Groupoid& g) { return GroupoidFunction(g.size()); }
  static GroupoidFunction delta(const Groupoid& g, int e, cplx c = cplx(1.0, 0.0)) {
    GroupoidFunction f(g.size());
    f.values_[e] = c;
    return f;
  }
  static GroupoidFunction constant(const Groupoid& g, cplx c) {
    GroupoidFunction f(g.size());
    f.values_.setConstant(c);
    return f;
  }
  static GroupoidFunction indicator(const Groupoid& g, const std::vector<int>& carrier) {
    GroupoidFunction f(g.size());
    for (int e : carrier) f.values_[e] = 1.0;
    return f;
  }
  static GroupoidFunction unit_indicator(const Groupoid& g) {
    return indicator(g, g.units());
  }

  int size() const { return static_cast<int>(values_.size()); }
  cplx operator[](int e) const { return values_[e]; }
  cplx& operator[](int e) { return values_[e]; }
  const Eigen::VectorXcd& values() const { return values_; }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int e = 0; e < size(); ++e)
      if (std::abs(values_[e]) > kSupportTol) s.push_back(e);
    return s;
  }

  GroupoidFunction operator+(const GroupoidFunction& o) const {
    return GroupoidFunction(values_ + o.values_);
  }
  GroupoidFunction operator-(const GroupoidFunction& o) const {
    return GroupoidFunction(values_ - o.values_);
  }
  GroupoidFunction operator*(cplx c) const { return GroupoidFunction(c * values_); }
  // Pointwise product.
  GroupoidFunction pointwise(const GroupoidFunction& o) const {
    return GroupoidFunction(values_.cwiseProduct(o.values_));
  }

  double sup_norm() const { return size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff(); }
  double l2_norm() const { return values_.norm(); }

private:
  Eigen::VectorXcd values_;
};

// Convolution (f1 * f2)(gamma) = sum_{alpha beta = gamma} f1(alpha) f2(beta).
GroupoidFunction convolve(const Groupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2);

// f*(gamma) = conj(f(gamma^{-1})).
GroupoidFunction involute(const Groupoid& g, const GroupoidFunction& f);

// max of the two sup-of-fiber-sums.
double i_norm(const Groupoid& g, const GroupoidFunction& f);

// Restriction to the unit space, zero elsewhere.
GroupoidFunction expectation(const Groupoid& g, const GroupoidFunction& f);

// <f1, f2>(x) = sum_{gamma in G_x} conj(f1(gamma)) f2(gamma), supported on units;
// equals expectation(involute(f1) * f2).
GroupoidFunction module_inner(const Groupoid& g, const GroupoidFunction& f1,
                              const GroupoidFunction& f2);

}  // namespace gpd

#endif
