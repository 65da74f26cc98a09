#include "groupoidal/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace gpd {

namespace {

std::string wit(const std::vector<std::string>& ids, int e) { return ids[e]; }

std::string wit2(const std::vector<std::string>& ids, int a, int b) {
  return ids[a] + ", " + ids[b];
}

}  // namespace

Groupoid Groupoid::validate(const RawGroupoid& raw) {
  const int n = static_cast<int>(raw.ids.size());
  if (n > kMaxElements)
    throw AxiomViolation("element-cap", std::to_string(n) + " > " + std::to_string(kMaxElements));
  if (static_cast<int>(raw.src.size()) != n || static_cast<int>(raw.rng.size()) != n ||
      static_cast<int>(raw.inv.size()) != n)
    throw AxiomViolation("structure-maps", "src/rng/inv must cover every element");

  {
    std::unordered_map<std::string, int> seen;
    for (int e = 0; e < n; ++e)
      if (!seen.emplace(raw.ids[e], e).second)
        throw AxiomViolation("duplicate-id", raw.ids[e]);
  }

  auto in_range = [n](int e) { return e >= 0 && e < n; };
  for (int e = 0; e < n; ++e)
    if (!in_range(raw.src[e]) || !in_range(raw.rng[e]) || !in_range(raw.inv[e]))
      throw AxiomViolation("index-range", raw.ids[e]);
  for (int u : raw.units)
    if (!in_range(u)) throw AxiomViolation("index-range", "unit " + std::to_string(u));

  Groupoid g;
  g.ids_ = raw.ids;
  g.units_ = raw.units;
  std::sort(g.units_.begin(), g.units_.end());
  g.units_.erase(std::unique(g.units_.begin(), g.units_.end()), g.units_.end());
  g.src_ = raw.src;
  g.rng_ = raw.rng;
  g.inv_ = raw.inv;
  g.is_unit_.assign(n, 0);
  for (int u : g.units_) g.is_unit_[u] = 1;

  // src/rng must land on units.
  for (int e = 0; e < n; ++e) {
    if (!g.is_unit_[g.src_[e]]) throw AxiomViolation("src-not-unit", wit(g.ids_, e));
    if (!g.is_unit_[g.rng_[e]]) throw AxiomViolation("rng-not-unit", wit(g.ids_, e));
  }
  for (int u : g.units_)
    if (g.src_[u] != u || g.rng_[u] != u)
      throw AxiomViolation("unit-structure", wit(g.ids_, u) + " must have src = rng = itself");

  // Dense composition table.
  g.comp_.assign(static_cast<size_t>(n) * n, -1);
  for (const auto& t : raw.comp) {
    if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2]))
      throw AxiomViolation("index-range", "comp triple");
    int& slot = g.comp_[static_cast<size_t>(t[0]) * n + t[1]];
    if (slot != -1 && slot != t[2])
      throw AxiomViolation("comp-conflict", wit2(g.ids_, t[0], t[1]));
    slot = t[2];
  }

  // comp defined exactly on composable pairs, with matching src/rng.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = g.comp_[static_cast<size_t>(a) * n + b];
      if (g.src_[a] == g.rng_[b]) {
        if (c == -1) throw AxiomViolation("comp-missing", wit2(g.ids_, a, b));
        if (g.src_[c] != g.src_[b] || g.rng_[c] != g.rng_[a])
          throw AxiomViolation("comp-structure", wit2(g.ids_, a, b));
      } else if (c != -1) {
        throw AxiomViolation("comp-on-noncomposable", wit2(g.ids_, a, b));
      }
    }

  // Unit laws.
  for (int a = 0; a < n; ++a) {
    if (g.comp(a, g.src_[a]) != a)
      throw AxiomViolation("right-unit-law", wit(g.ids_, a));
    if (g.comp(g.rng_[a], a) != a)
      throw AxiomViolation("left-unit-law", wit(g.ids_, a));
  }

  // Inverse laws.
  for (int a = 0; a < n; ++a) {
    int ia = g.inv_[a];
    if (g.inv_[ia] != a) throw AxiomViolation("inverse-involution", wit(g.ids_, a));
    if (g.src_[ia] != g.rng_[a] || g.rng_[ia] != g.src_[a])
      throw AxiomViolation("inverse-structure", wit(g.ids_, a));
    if (g.comp(a, ia) != g.rng_[a] || g.comp(ia, a) != g.src_[a])
      throw AxiomViolation("inverse-law", wit(g.ids_, a));
  }

  // Associativity over all composable triples.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g.src_[a] != g.rng_[b]) continue;
      for (int c = 0; c < n; ++c) {
        if (g.src_[b] != g.rng_[c]) continue;
        if (g.comp(g.comp(a, b), c) != g.comp(a, g.comp(b, c)))
          throw AxiomViolation("associativity",
                               g.ids_[a] + ", " + g.ids_[b] + ", " + g.ids_[c]);
      }
    }

  // Fibers in canonical order.
  g.fiber_d_.assign(n, {});
  g.fiber_r_.assign(n, {});
  g.fiber_d_pos_.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    auto& fd = g.fiber_d_[g.src_[e]];
    g.fiber_d_pos_[e] = static_cast<int>(fd.size());
    fd.push_back(e);
    g.fiber_r_[g.rng_[e]].push_back(e);
  }

  // Orbits of the unit space under x ~ r(gamma) for src(gamma) = x.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < n; ++e) parent[find(g.src_[e])] = find(g.rng_[e]);
  std::unordered_map<int, std::vector<int>> buckets;
  for (int u : g.units_) buckets[find(u)].push_back(u);
  std::vector<int> roots;
  for (auto& [root, _] : buckets) roots.push_back(root);
  std::sort(roots.begin(), roots.end(),
            [&](int a, int b) { return buckets[a].front() < buckets[b].front(); });
  for (int root : roots) g.orbits_.push_back(buckets[root]);

  return g;
}

int Groupoid::index_of(const std::string& id) const {
  for (int e = 0; e < size(); ++e)
    if (ids_[e] == id) return e;
  return -1;
}

RawGroupoid Groupoid::raw() const {
  RawGroupoid r;
  r.ids = ids_;
  r.units = units_;
  r.src = src_;
  r.rng = rng_;
  r.inv = inv_;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (composable(a, b)) r.comp.push_back({a, b, comp(a, b)});
  return r;
}

Bisection Bisection::validate(const Groupoid& g, std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::vector<char> seen_src(g.size(), 0), seen_rng(g.size(), 0);
  for (int e : carrier) {
    if (seen_src[g.src(e)]) throw AxiomViolation("bisection-src-injective", g.id(e));
    if (seen_rng[g.rng(e)]) throw AxiomViolation("bisection-rng-injective", g.id(e));
    seen_src[g.src(e)] = seen_rng[g.rng(e)] = 1;
  }
  return Bisection{std::move(carrier)};
}

InvariantSet InvariantSet::validate(const Groupoid& g, std::vector<int> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::vector<char> in(g.size(), 0);
  for (int u : carrier) {
    if (!g.is_unit(u)) throw NotInvariant("carrier contains non-unit " + g.id(u));
    in[u] = 1;
  }
  for (int e = 0; e < g.size(); ++e)
    if (in[g.src(e)] != in[g.rng(e)])
      throw NotInvariant("element " + g.id(e) + " crosses the carrier boundary");
  return InvariantSet{std::move(carrier)};
}

Groupoid pair_groupoid(int n) {
  if (n < 0) throw AxiomViolation("pair-size", std::to_string(n));
  RawGroupoid raw;
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      raw.ids.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  raw.src.resize(n * n);
  raw.rng.resize(n * n);
  raw.inv.resize(n * n);
  for (int i = 0; i < n; ++i) {
    raw.units.push_back(idx(i, i));
    for (int j = 0; j < n; ++j) {
      raw.src[idx(i, j)] = idx(j, j);
      raw.rng[idx(i, j)] = idx(i, i);
      raw.inv[idx(i, j)] = idx(j, i);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        raw.comp.push_back({idx(i, j), idx(j, k), idx(i, k)});
  return Groupoid::validate(raw);
}

Groupoid from_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("entry out of range");
  }
  // Locate the identity.
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      ok = ok && table[cand][x] == x && table[x][cand] == x;
    if (ok) { e = cand; break; }
  }
  if (e == -1) throw NotAGroup("no two-sided identity");
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == e && table[y][x] == e) { inv[x] = y; break; }
    if (inv[x] == -1) throw NotAGroup("element " + std::to_string(x) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");

  RawGroupoid raw;
  for (int x = 0; x < n; ++x) raw.ids.push_back("g" + std::to_string(x));
  raw.units = {e};
  raw.src.assign(n, e);
  raw.rng.assign(n, e);
  raw.inv = inv;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      raw.comp.push_back({a, b, table[a][b]});
  return Groupoid::validate(raw);
}

Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2) {
  RawGroupoid raw;
  const int n1 = g1.size();
  for (int e = 0; e < n1; ++e) raw.ids.push_back("0:" + g1.id(e));
  for (int e = 0; e < g2.size(); ++e) raw.ids.push_back("1:" + g2.id(e));
  for (int u : g1.units()) raw.units.push_back(u);
  for (int u : g2.units()) raw.units.push_back(u + n1);
  for (int e = 0; e < n1; ++e) {
    raw.src.push_back(g1.src(e));
    raw.rng.push_back(g1.rng(e));
    raw.inv.push_back(g1.inv(e));
  }
  for (int e = 0; e < g2.size(); ++e) {
    raw.src.push_back(g2.src(e) + n1);
    raw.rng.push_back(g2.rng(e) + n1);
    raw.inv.push_back(g2.inv(e) + n1);
  }
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b)
      if (g1.composable(a, b)) raw.comp.push_back({a, b, g1.comp(a, b)});
  for (int a = 0; a < g2.size(); ++a)
    for (int b = 0; b < g2.size(); ++b)
      if (g2.composable(a, b)) raw.comp.push_back({a + n1, b + n1, g2.comp(a, b) + n1});
  return Groupoid::validate(raw);
}

Groupoid reduction(const Groupoid& g, const std::vector<int>& unit_subset) {
  std::vector<char> in(g.size(), 0);
  for (int u : unit_subset) {
    if (u < 0 || u >= g.size() || !g.is_unit(u))
      throw NotInvariant("reduction subset must consist of units");
    in[u] = 1;
  }
  std::vector<int> keep, old_to_new(g.size(), -1);
  for (int e = 0; e < g.size(); ++e)
    if (in[g.src(e)] && in[g.rng(e)]) {
      old_to_new[e] = static_cast<int>(keep.size());
      keep.push_back(e);
    }
  RawGroupoid raw;
  for (int e : keep) raw.ids.push_back(g.id(e));
  for (int e : keep) {
    raw.src.push_back(old_to_new[g.src(e)]);
    raw.rng.push_back(old_to_new[g.rng(e)]);
    raw.inv.push_back(old_to_new[g.inv(e)]);
    if (g.is_unit(e)) raw.units.push_back(old_to_new[e]);
  }
  for (int a : keep)
    for (int b : keep)
      if (g.composable(a, b))
        raw.comp.push_back({old_to_new[a], old_to_new[b], old_to_new[g.comp(a, b)]});
  return Groupoid::validate(raw);
}

std::vector<Bisection> bisection_cover(const Groupoid& g, const std::vector<int>& support) {
  std::vector<int> elems = support;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  std::vector<std::vector<int>> parts;
  std::vector<std::vector<char>> used_src, used_rng;
  for (int e : elems) {
    bool placed = false;
    for (size_t p = 0; p < parts.size() && !placed; ++p) {
      if (!used_src[p][g.src(e)] && !used_rng[p][g.rng(e)]) {
        parts[p].push_back(e);
        used_src[p][g.src(e)] = used_rng[p][g.rng(e)] = 1;
        placed = true;
      }
    }
    if (!placed) {
      parts.push_back({e});
      used_src.emplace_back(g.size(), 0);
      used_rng.emplace_back(g.size(), 0);
      used_src.back()[g.src(e)] = used_rng.back()[g.rng(e)] = 1;
    }
  }
  std::vector<Bisection> out;
  for (auto& p : parts) out.push_back(Bisection::validate(g, std::move(p)));
  return out;
}

std::vector<InvariantSet> invariant_sets(const Groupoid& g) {
  const auto& orbits = g.orbits();
  if (orbits.size() > 20)
    throw Error("TooManyOrbits", std::to_string(orbits.size()) + " orbits; enumeration capped at 20");
  const size_t count = size_t{1} << orbits.size();
  std::vector<InvariantSet> out;
  out.reserve(count);
  for (size_t mask = 0; mask < count; ++mask) {
    std::vector<int> carrier;
    for (size_t k = 0; k < orbits.size(); ++k)
      if (mask & (size_t{1} << k))
        carrier.insert(carrier.end(), orbits[k].begin(), orbits[k].end());
    out.push_back(InvariantSet::validate(g, std::move(carrier)));
  }
  return out;
}

std::vector<Bisection> all_bisections(const Groupoid& g, size_t cap) {
  std::vector<Bisection> out;
  std::vector<int> carrier;
  std::vector<char> used_src(g.size(), 0), used_rng(g.size(), 0);
  // Depth-first over canonical element order; emits carriers in lexicographic
  // order of their sorted index lists (empty bisection first).
  std::function<void(int)> rec = [&](int start) {
    if (out.size() >= cap)
      throw Error("TooManyBisections", "more than " + std::to_string(cap));
    out.push_back(Bisection{carrier});
    for (int e = start; e < g.size(); ++e) {
      if (used_src[g.src(e)] || used_rng[g.rng(e)]) continue;
      used_src[g.src(e)] = used_rng[g.rng(e)] = 1;
      carrier.push_back(e);
      rec(e + 1);
      carrier.pop_back();
      used_src[g.src(e)] = used_rng[g.rng(e)] = 0;
    }
  };
  rec(0);
  return out;
}

}  // namespace gpd
