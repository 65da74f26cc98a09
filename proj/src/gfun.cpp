#include "groupoidal/gfun.hpp"

#include <cmath>

namespace gpd {

GroupoidFunction convolve(const Groupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2) {
  GroupoidFunction out(g.size());
  // (f1 * f2)(gamma) = sum_{beta in G_{d(gamma)}} f1(gamma beta^{-1}) f2(beta);
  // iterate products directly: every composable (alpha, beta) contributes to
  // alpha beta.
  for (int alpha = 0; alpha < g.size(); ++alpha) {
    const cplx a = f1[alpha];
    if (a == cplx(0.0, 0.0)) continue;
    for (int beta : g.fiber_r(g.src(alpha))) {
      const cplx b = f2[beta];
      if (b == cplx(0.0, 0.0)) continue;
      out[g.comp(alpha, beta)] += a * b;
    }
  }
  return out;
}

GroupoidFunction involute(const Groupoid& g, const GroupoidFunction& f) {
  GroupoidFunction out(g.size());
  for (int e = 0; e < g.size(); ++e) out[e] = std::conj(f[g.inv(e)]);
  return out;
}

double i_norm(const Groupoid& g, const GroupoidFunction& f) {
  double best = 0.0;
  for (int x : g.units()) {
    double sr = 0.0, sd = 0.0;
    for (int e : g.fiber_r(x)) sr += std::abs(f[e]);
    for (int e : g.fiber_d(x)) sd += std::abs(f[e]);
    best = std::max({best, sr, sd});
  }
  return best;
}

GroupoidFunction expectation(const Groupoid& g, const GroupoidFunction& f) {
  GroupoidFunction out(g.size());
  for (int x : g.units()) out[x] = f[x];
  return out;
}

GroupoidFunction module_inner(const Groupoid& g, const GroupoidFunction& f1,
                              const GroupoidFunction& f2) {
  GroupoidFunction out(g.size());
  for (int x : g.units()) {
    cplx acc(0.0, 0.0);
    for (int e : g.fiber_d(x)) acc += std::conj(f1[e]) * f2[e];
    out[x] = acc;
  }
  return out;
}

}  // namespace gpd
