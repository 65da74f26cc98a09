#ifndef GROUPOIDAL_GROUPOID_HPP
#define GROUPOIDAL_GROUPOID_HPP

#include <array>
#include <string>
#include <vector>

#include "groupoidal/errors.hpp"

namespace gpd {

// Raw groupoid description as parsed from an interchange file or assembled by
// a constructor. Nothing is checked until Groupoid::validate runs.
struct RawGroupoid {
  std::vector<std::string> ids;            // canonical element order
  std::vector<int> units;                  // indices into ids
  std::vector<int> src, rng, inv;          // per element
  std::vector<std::array<int, 3>> comp;    // triples (a, b, ab)
};

// A validated finite groupoid. Elements are indices 0..size()-1 in canonical
// (input) order; all fiber bases downstream use this order. Immutable after
// validation, safe to share across threads.
class Groupoid {
public:
  static constexpr int kMaxElements = 4096;

  // Checks every groupoid axiom on the description, including associativity
  // over all composable triples, and throws AxiomViolation with a witness on
  // the first failure.
  static Groupoid validate(const RawGroupoid& raw);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int e) const { return ids_[e]; }
  int index_of(const std::string& id) const;  // -1 when absent

  const std::vector<int>& units() const { return units_; }
  bool is_unit(int e) const { return is_unit_[e]; }
  int src(int e) const { return src_[e]; }
  int rng(int e) const { return rng_[e]; }
  int inv(int e) const { return inv_[e]; }

  bool composable(int a, int b) const { return src_[a] == rng_[b]; }
  // comp(a, b) requires src(a) == rng(b).
  int comp(int a, int b) const { return comp_[static_cast<size_t>(a) * ids_.size() + b]; }

  // d-fiber G_x = {e : src(e) == x} and r-fiber G^x = {e : rng(e) == x},
  // each in canonical order.
  const std::vector<int>& fiber_d(int unit) const { return fiber_d_[unit]; }
  const std::vector<int>& fiber_r(int unit) const { return fiber_r_[unit]; }
  // Position of element e inside fiber_d(src(e)).
  int fiber_d_pos(int e) const { return fiber_d_pos_[e]; }

  // Orbit partition of the unit space (indices into units() order are not
  // used; orbits hold unit element indices in canonical order).
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }

  RawGroupoid raw() const;

private:
  Groupoid() = default;

  std::vector<std::string> ids_;
  std::vector<int> units_;
  std::vector<char> is_unit_;
  std::vector<int> src_, rng_, inv_;
  std::vector<int> comp_;  // dense size()*size() table, -1 when undefined
  std::vector<std::vector<int>> fiber_d_, fiber_r_;  // indexed by unit element
  std::vector<int> fiber_d_pos_;
  std::vector<std::vector<int>> orbits_;
};

// Subset of elements on which src and rng are both injective.
struct Bisection {
  std::vector<int> carrier;  // canonical order
  static Bisection validate(const Groupoid& g, std::vector<int> carrier);
};

// Subset of units closed under the orbit relation: for every element,
// src in carrier iff rng in carrier.
struct InvariantSet {
  std::vector<int> carrier;  // unit element indices, canonical order
  static InvariantSet validate(const Groupoid& g, std::vector<int> carrier);
};

// Constructors for the groupoid families used throughout.
Groupoid pair_groupoid(int n);
Groupoid from_group(const std::vector<std::vector<int>>& table);
Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2);
Groupoid reduction(const Groupoid& g, const std::vector<int>& unit_subset);

// Greedy deterministic partition of `support` into bisections.
std::vector<Bisection> bisection_cover(const Groupoid& g, const std::vector<int>& support);

// All invariant unit subsets (unions of orbits), in a canonical order.
std::vector<InvariantSet> invariant_sets(const Groupoid& g);

// Every subset of elements with src and rng injective, in a canonical order.
// Exponential in general; guarded by `cap` on the output count.
std::vector<Bisection> all_bisections(const Groupoid& g, size_t cap = 1u << 20);

}  // namespace gpd

#endif
