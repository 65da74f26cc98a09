#ifndef GPD_TESTS_SUPPORT_HPP
#define GPD_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "groupoidal/gfun.hpp"
#include "groupoidal/groupoid.hpp"

namespace gpdtest {

inline std::vector<std::vector<int>> z_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// S3 as permutations of {0,1,2} composed left-to-right over a fixed listing.
inline std::vector<std::vector<int>> s3_table() {
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [&](int a, int b) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == c) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
  return t;
}

inline gpd::GroupoidFunction random_function(const gpd::Groupoid& g, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  gpd::GroupoidFunction f(g.size());
  for (int e = 0; e < g.size(); ++e) f[e] = gpd::cplx(gauss(rng), gauss(rng));
  return f;
}

inline std::vector<gpd::Groupoid> small_zoo() {
  std::vector<gpd::Groupoid> zoo;
  zoo.push_back(gpd::from_group(z_table(2)));
  zoo.push_back(gpd::from_group(z_table(3)));
  zoo.push_back(gpd::from_group(s3_table()));
  zoo.push_back(gpd::pair_groupoid(1));
  zoo.push_back(gpd::pair_groupoid(2));
  zoo.push_back(gpd::pair_groupoid(3));
  zoo.push_back(gpd::disjoint_union(gpd::from_group(z_table(2)), gpd::pair_groupoid(2)));
  return zoo;
}

}  // namespace gpdtest

#endif
