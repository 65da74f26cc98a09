#include "groupoidal/measure.hpp"

#include <cmath>

namespace gpd {

UnitWeight UnitWeight::validate(const Groupoid& g, std::vector<double> mu,
                                std::optional<std::vector<Rational>> exact) {
  if (static_cast<int>(mu.size()) != g.size())
    throw AxiomViolation("weight-length", "mu must be indexed by all elements");
  if (exact && exact->size() != mu.size())
    throw AxiomViolation("weight-length", "exact part must match mu");

  double sum = 0.0;
  for (int e = 0; e < g.size(); ++e) {
    if (mu[e] < 0.0) throw AxiomViolation("weight-negative", g.id(e));
    if (mu[e] != 0.0 && !g.is_unit(e))
      throw AxiomViolation("weight-off-units", g.id(e));
    sum += mu[e];
  }
  if (std::abs(sum - 1.0) > kTol)
    throw AxiomViolation("weight-sum", "total " + std::to_string(sum));
  if (exact) {
    Rational rsum(0);
    for (const auto& q : *exact) rsum += q;
    if (rsum != Rational(1))
      throw AxiomViolation("weight-sum", "exact total is not 1");
  }

  UnitWeight w;
  w.mu_ = std::move(mu);
  w.exact_ = std::move(exact);
  w.in_support_.assign(g.size(), 0);
  for (int u : g.units())
    if (w.mu_[u] > 0.0) {
      w.in_support_[u] = 1;
      w.support_.push_back(u);
    }

  // Quasi-invariance at finite scale: supp(mu) must be invariant.
  for (int e = 0; e < g.size(); ++e)
    if (w.in_support_[g.src(e)] != w.in_support_[g.rng(e)])
      throw NotQuasiInvariant("element " + g.id(e) +
                              " connects supp(mu) with its complement");
  return w;
}

double nu_mass(const Groupoid& g, const UnitWeight& w, const std::vector<int>& elements) {
  double total = 0.0;
  for (int e : elements) total += w.mu(g.rng(e));
  return total;
}

ModularRatio modular_ratio(const Groupoid& g, const UnitWeight& w) {
  ModularRatio m;
  m.d_.assign(g.size(), 0.0);
  m.defined_.assign(g.size(), 0);
  if (w.exact()) m.exact_ = std::vector<Rational>(g.size(), Rational(0));
  for (int e = 0; e < g.size(); ++e) {
    if (!w.in_support(g.src(e)) || !w.in_support(g.rng(e))) continue;
    m.defined_[e] = 1;
    m.d_[e] = w.mu(g.rng(e)) / w.mu(g.src(e));
    if (w.exact()) (*m.exact_)[e] = (*w.exact())[g.rng(e)] / (*w.exact())[g.src(e)];
  }
  return m;
}

UnitWeight full_support_uniform(const Groupoid& g) {
  if (g.units().empty()) throw EmptyGroupoid("uniform weight needs at least one unit");
  const long long k = static_cast<long long>(g.units().size());
  std::vector<double> mu(g.size(), 0.0);
  std::vector<Rational> exact(g.size(), Rational(0));
  for (int u : g.units()) {
    mu[u] = 1.0 / static_cast<double>(k);
    exact[u] = Rational(1, k);
  }
  return UnitWeight::validate(g, std::move(mu), std::move(exact));
}

}  // namespace gpd
