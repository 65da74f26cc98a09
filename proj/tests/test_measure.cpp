#include "doctest.h"
#include "support.hpp"

#include "groupoidal/measure.hpp"

using namespace gpd;

TEST_CASE("uniform weights") {
  Groupoid p2 = pair_groupoid(2);
  UnitWeight w = full_support_uniform(p2);
  CHECK(w.mu(p2.units()[0]) == doctest::Approx(0.5));
  CHECK(w.support().size() == 2);

  Groupoid p3 = pair_groupoid(3);
  UnitWeight w3 = full_support_uniform(p3);
  CHECK(w3.mu(p3.units()[1]) == doctest::Approx(1.0 / 3));

  Groupoid z2 = from_group(gpdtest::z_table(2));
  CHECK(full_support_uniform(z2).mu(z2.units()[0]) == doctest::Approx(1.0));

  RawGroupoid raw;
  Groupoid empty = Groupoid::validate(raw);
  CHECK_THROWS_AS(full_support_uniform(empty), EmptyGroupoid);
}

TEST_CASE("weight validation") {
  Groupoid p2 = pair_groupoid(2);
  std::vector<double> mu(p2.size(), 0.0);
  mu[p2.units()[0]] = 0.7;
  mu[p2.units()[1]] = 0.7;
  CHECK_THROWS_AS(UnitWeight::validate(p2, mu), AxiomViolation);

  // Pair groupoid has a single orbit: killing one unit breaks invariance.
  mu[p2.units()[0]] = 1.0;
  mu[p2.units()[1]] = 0.0;
  CHECK_THROWS_AS(UnitWeight::validate(p2, mu), NotQuasiInvariant);

  // On a disjoint union the orbit pieces are separately killable.
  Groupoid u = disjoint_union(from_group(gpdtest::z_table(2)), pair_groupoid(2));
  std::vector<double> mu2(u.size(), 0.0);
  mu2[u.units()[0]] = 1.0;
  UnitWeight wu = UnitWeight::validate(u, mu2);
  CHECK(wu.support().size() == 1);
}

TEST_CASE("nu mass") {
  Groupoid p2 = pair_groupoid(2);
  UnitWeight w = full_support_uniform(p2);

  CHECK(nu_mass(p2, w, p2.units()) == doctest::Approx(1.0));

  std::vector<int> all(p2.size());
  for (int e = 0; e < p2.size(); ++e) all[e] = e;
  CHECK(nu_mass(p2, w, all) == doctest::Approx(2.0));

  CHECK(nu_mass(p2, w, {}) == doctest::Approx(0.0));
}

TEST_CASE("modular ratio") {
  Groupoid p2 = pair_groupoid(2);

  UnitWeight uniform = full_support_uniform(p2);
  ModularRatio d0 = modular_ratio(p2, uniform);
  for (int e = 0; e < p2.size(); ++e) CHECK(d0.value(e) == doctest::Approx(1.0));

  std::vector<double> mu(p2.size(), 0.0);
  mu[p2.index_of("(1,1)")] = 1.0 / 3;
  mu[p2.index_of("(2,2)")] = 2.0 / 3;
  std::vector<Rational> exact(p2.size(), Rational(0));
  exact[p2.index_of("(1,1)")] = Rational(1, 3);
  exact[p2.index_of("(2,2)")] = Rational(2, 3);
  UnitWeight w = UnitWeight::validate(p2, mu, exact);
  ModularRatio d = modular_ratio(p2, w);
  // D((1,2)) = mu(r)/mu(d) = (1/3)/(2/3) = 1/2.
  CHECK(d.value(p2.index_of("(1,2)")) == doctest::Approx(0.5));
  CHECK((*d.exact())[p2.index_of("(1,2)")] == Rational(1, 2));

  Groupoid z3 = from_group(gpdtest::z_table(3));
  ModularRatio dz = modular_ratio(z3, full_support_uniform(z3));
  for (int e = 0; e < z3.size(); ++e) CHECK(dz.value(e) == doctest::Approx(1.0));
}

TEST_CASE("modular cocycle identity, exhaustively") {
  Groupoid p3 = pair_groupoid(3);
  std::vector<double> mu(p3.size(), 0.0);
  std::vector<Rational> exact(p3.size(), Rational(0));
  const std::vector<Rational> parts = {Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  for (int i = 0; i < 3; ++i) {
    exact[p3.units()[i]] = parts[i];
    mu[p3.units()[i]] = boost::rational_cast<double>(parts[i]);
  }
  UnitWeight w = UnitWeight::validate(p3, mu, exact);
  ModularRatio d = modular_ratio(p3, w);

  for (int a = 0; a < p3.size(); ++a)
    for (int b = 0; b < p3.size(); ++b) {
      if (!p3.composable(a, b)) continue;
      // Exact identity through the rational path.
      CHECK((*d.exact())[a] * (*d.exact())[b] == (*d.exact())[p3.comp(a, b)]);
      CHECK(d.value(a) * d.value(b) ==
            doctest::Approx(d.value(p3.comp(a, b))).epsilon(1e-12));
    }
  for (int e = 0; e < p3.size(); ++e)
    CHECK(d.value(p3.inv(e)) == doctest::Approx(1.0 / d.value(e)));
}

TEST_CASE("reduction to invariant support keeps sources inside") {
  Groupoid u = disjoint_union(from_group(gpdtest::z_table(2)), pair_groupoid(2));
  std::vector<double> mu(u.size(), 0.0);
  // Weight only the pair part (units are 0:g0, 1:(1,1), 1:(2,2)).
  mu[u.units()[1]] = 0.5;
  mu[u.units()[2]] = 0.5;
  UnitWeight w = UnitWeight::validate(u, mu);
  Groupoid red = reduction(u, w.support());
  CHECK(red.size() == 4);
  for (int e = 0; e < u.size(); ++e)
    if (w.in_support(u.src(e))) CHECK(red.index_of(u.id(e)) >= 0);
}
