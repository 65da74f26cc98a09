#ifndef GROUPOIDAL_MEASURE_HPP
#define GROUPOIDAL_MEASURE_HPP

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "groupoidal/groupoid.hpp"

namespace gpd {

using Rational = boost::rational<long long>;

// Quasi-invariant probability weight on the unit space. Weights given as
// rationals are kept exact alongside the double value; comparisons elsewhere
// use 1e-12 tolerance. Rejected at construction when the support fails to be
// invariant (the finite-groupoid form of quasi-invariance).
class UnitWeight {
public:
  static constexpr double kTol = 1e-12;

  // `mu` is indexed by unit element; zero for non-units. Throws
  // NotQuasiInvariant or AxiomViolation (sum != 1).
  static UnitWeight validate(const Groupoid& g, std::vector<double> mu,
                             std::optional<std::vector<Rational>> exact = std::nullopt);

  double mu(int unit) const { return mu_[unit]; }
  const std::optional<std::vector<Rational>>& exact() const { return exact_; }
  // Units carrying positive weight, canonical order.
  const std::vector<int>& support() const { return support_; }
  bool in_support(int unit) const { return in_support_[unit]; }
  bool full_support(const Groupoid& g) const {
    return support_.size() == g.units().size();
  }

private:
  std::vector<double> mu_;
  std::optional<std::vector<Rational>> exact_;
  std::vector<int> support_;
  std::vector<char> in_support_;
};

// Radon-Nikodym ratio D(gamma) = mu(r(gamma)) / mu(d(gamma)), defined on the
// reduction of the groupoid to supp(mu).
class ModularRatio {
public:
  bool defined(int e) const { return defined_[e]; }
  double value(int e) const { return d_[e]; }
  const std::optional<std::vector<Rational>>& exact() const { return exact_; }

  friend ModularRatio modular_ratio(const Groupoid& g, const UnitWeight& w);

private:
  std::vector<double> d_;
  std::vector<char> defined_;
  std::optional<std::vector<Rational>> exact_;
};

// nu(A) = sum_x |A intersect G^x| mu(x).
double nu_mass(const Groupoid& g, const UnitWeight& w, const std::vector<int>& elements);

ModularRatio modular_ratio(const Groupoid& g, const UnitWeight& w);

UnitWeight full_support_uniform(const Groupoid& g);

}  // namespace gpd

#endif
