#pragma once
// Independent cross-checks of the carrier construction:
//  - exact orders of the 2-cocycle lattices Z^2, Z^2_N, B^2_N and ker Phi
//    over Z/m, computed by linear algebra on a spanning parametrization
//    (coboundaries + bimultiplicative pair terms + integer carry cocycles);
//  - expansion of a single-generator cocycle tau(t) to the full Hopf
//    cocycle tau(t^i) on C_p x G x G;
//  - the automorphism-equivariant section search for the extension
//    (fixed characters) -> X ->> (alternating part) on elementary 2-groups
//    with the trivial action.

#include "hopfext/xgroup.hpp"
#include "hopfext/zkernel.hpp"

namespace hopfext {

struct Z2Lattice {
  FactoredInt full;        // all 2-cocycles G x G -> mu_m
  FactoredInt normalized;  // those vanishing on (1, .) and (., 1)
  FactoredInt b2;          // coboundary tables delta f
  FactoredInt h2;          // normalized / b2
};

// Orders of the 2-cocycle lattice of G with values mu_m. Uses the spanning
// parametrization z = delta f + sum_{i<j} c_ij (pair term) + sum_i e_i gamma_i
// (gamma_i = integer addition carry in coordinate i, a Z-valued cocycle);
// spanning is certified against the raw table lattice in tests.
Z2Lattice z2_group(const AbelianGroup& G, i64 m);

// Raw |Z^2_normalized| straight from the |G|^2-variable table lattice
// (cocycle identity rows over all triples); small groups only.
FactoredInt z2_normalized_brute(const AbelianGroup& G, i64 m);

struct CocycleSpaceOrders {
  FactoredInt z2N;     // normalized cocycles with phi_p z = 0 exactly
  FactoredInt b2N;     // coboundary tables among them
  FactoredInt kerPhi;  // delta f whose phi_p f is a norm of a character
  FactoredInt h2c;     // z2N / kerPhi; must equal |X| of the carrier
};
CocycleSpaceOrders z2N_and_kerPhi(const CpAction& act, i64 m);

// tau(t^i) = phi_i . tau(t) for i = 0..p-1. Requires phi_p tau(t) = 0
// exactly; verifies the crossed-homomorphism identity
// tau(t^{i+j}) = tau(t^i) + t^i . tau(t^j) (indices mod p) before returning.
std::vector<CocycleTable> theta_expand(const CpAction& act, const CocycleTable& z);

// A 1-cochain f (exponents mod m = p * exponent(G)) with phi_p f = chi
// exactly, for a fixed character chi given by coordinates mod d_j. Throws
// CheckError if chi is not fixed by the action or not divisible enough on
// fixed points.
Vec cochain_with_norm(const CpAction& act, const Vec& chi);

// Search for an Aut(G)-equivariant homomorphic section of X ->> Alt for the
// trivial C_2-action on (Z_2)^n: unknown character corrections chi_{ij}
// (one per basis form, n bits each) solved as an F_2 linear system over all
// automorphism generators. exists == false comes with an inconsistency
// certificate implied by the exact elimination.
struct SectionSearchResult {
  bool exists = false;
  std::vector<Vec> chi;  // per pair (i<j) in AltForm::pos order
};
SectionSearchResult section_search(int n);

// All abelian groups of order 2..max_order as invariant-factor lists
// (d_1 | d_2 | ... | d_k).
std::vector<AbelianGroup> abelian_groups_up_to(i64 max_order);

}  // namespace hopfext
