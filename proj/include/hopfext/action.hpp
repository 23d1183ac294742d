#pragma once
// Order-p actions of a cyclic group C_p = <t> on a finite abelian group G,
// their isomorphism-class catalog, intertwiners and symmetry groups.
//
// Conventions (column matrices): a ⊳ t = T a. An automorphism lambda lies in
// I(⊳1, ⊳2) iff L T1 = T2 L. The twisted action ⊳^k has matrix T^k.

#include "hopfext/group.hpp"

namespace hopfext {

struct CpAction {
  AbelianGroup G;
  i64 p = 2;
  Endo T;
  std::string family;  // catalog tag, e.g. "trivial", "free-summand"

  bool trivial() const { return T == identity_endo(G); }
};

CpAction twist(const CpAction& act, i64 k);  // ⊳^k

// phi_p(t) = 1 + T + ... + T^(p-1) as an endomorphism (the norm).
Endo norm_endo(const CpAction& act);

// All invertible lambda with lambda T1 = T2 lambda, computed per primary
// component via constrained-entry kernels. Throws UnsupportedError when the
// enumeration would exceed `budget` candidates.
std::vector<Endo> intertwiners(const CpAction& a1, const CpAction& a2, i64 budget = 300000);

// A(⊳) = I(⊳, ⊳): the centralizer of T inside Aut(G).
std::vector<Endo> centralizer_A(const CpAction& act, i64 budget = 300000);

struct SymmetryGenerator {
  Endo lambda;  // automorphism of G
  i64 k = 1;    // lambda ∈ I(⊳, ⊳^k); k = 1 for plain A(⊳) generators
};

struct SymmetryGroup {
  std::vector<SymmetryGenerator> gens;
  i64 A_order = 0;      // |A(⊳)|; 0 when A was taken from closed-form generators
  std::vector<i64> C;   // twist exponents k with I(⊳, ⊳^k) nonempty (contains 1)
};

// A-generators (reduced) plus one intertwiner per nontrivial element of C(⊳).
SymmetryGroup symmetry_group(const CpAction& act, i64 budget = 300000);

// Complete catalog of action classes [⊳] on (G, p). Supported shapes:
// elementary p-groups of rank <= 3, Z_{p^e}+Z_p (p odd), cyclic groups,
// Z_n x Z_n with n odd and p = 2, and the trivial action on anything the
// generic enumeration can cover. Throws UnsupportedError otherwise.
std::vector<CpAction> catalog_actions(const AbelianGroup& G, i64 p);

}  // namespace hopfext
