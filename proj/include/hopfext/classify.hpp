#pragma once
// Orbit counting on the classifying group: isomorphism types of the
// extensions correspond to orbits of the symmetry group on X, with the
// trivial orbit {0} giving the split (trivial-cocycle) extension and
// orbits of symmetric classes giving the cocommutative ones.

#include "hopfext/xgroup.hpp"

namespace hopfext {

struct OrbitInfo {
  Vec representative;   // lex-least coordinate vector in the orbit
  i64 size = 0;
  bool cocommutative = false;
  bool trivial = false;  // the zero orbit
};

struct ActionClassReport {
  CpAction action;
  i64 carrier_size = 0;
  Vec carrier_orders;
  std::vector<OrbitInfo> orbits;  // sorted by representative

  i64 orbit_count(bool include_trivial) const;
  i64 noncocommutative_count() const;
  i64 cocommutative_nontrivial_count() const;
};

struct ClassifyReport {
  AbelianGroup G;
  i64 p = 2;
  std::vector<ActionClassReport> classes;

  i64 total_nontrivial() const;        // nontrivial orbits over all classes
  i64 total_noncocommutative() const;
};

// Orbits of the symmetry group of one action class on its carrier.
ActionClassReport classify_action(const CpAction& act);

// Full classification over the action catalog of (G, p).
ClassifyReport classify(const AbelianGroup& G, i64 p);

// Number of isotypes with trivial action for an elementary group of rank n:
// orbits of Aut(G) x scalar twists on characters-mod-p-th-powers x Alt[p].
i64 trivial_action_isotypes(i64 p, int rank);

// For a C_2-action on Z_n x Z_n with n odd: the order n(act) of the
// alternating part, i.e. the product of the primary components of n on which
// the action is neither the identity nor negation. The isotype count of the
// class equals the number of divisors of this order (1 when it is 1: only
// the split extension).
i64 alternating_modulus(const CpAction& act);

i64 divisor_count(i64 n);

}  // namespace hopfext
