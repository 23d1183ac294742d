#pragma once
// The classifying group X of equivalence classes of normalized cocycles for
// a C_p-action on G: character part (fixed characters modulo norms),
// alternating part (norm-kernel of alternating forms, or an explicit
// order-2 transversal when |G| is even), explicit cocycle-table
// representatives, exact decomposition of arbitrary tables, and the induced
// symmetry action used for orbit counting.

#include <functional>
#include <map>

#include "hopfext/action.hpp"
#include "hopfext/cocycle.hpp"

namespace hopfext {

// Internal coordinates of an element of X: coordinates over the character
// quotient basis plus coordinates over the alternating part.
struct RawX {
  Vec q;
  Vec alt;

  Vec key() const {
    Vec k = q;
    k.insert(k.end(), alt.begin(), alt.end());
    return k;
  }
  bool operator==(const RawX& o) const { return q == o.q && alt == o.alt; }
};

struct XGroup {
  CpAction act;
  i64 m = 1;       // value modulus: p * exponent(G)
  bool halved = true;  // alternating part split off by halving (odd |G| or
                       // trivial alternating part); otherwise order-2
                       // transversal tables with carries

  // Character part Q = (fixed characters) / (norms): generators are actual
  // fixed characters (coordinate vectors), with componentwise coordinates.
  std::vector<Vec> norm_subgroup;   // image of the norm map on characters
  std::vector<Vec> qgens;
  Vec qorders;
  std::map<Vec, Vec> coset_coords;  // canonical coset key -> q-coordinates

  // Alternating part.
  std::vector<AltForm> alt_basis;  // halved: basis of Alt_N; else abar-images
  Vec alt_orders;                  // halved: basis orders; else all 2
  std::map<Vec, Vec> alt_coords;   // form coefficients -> alt coordinates
  std::vector<CocycleTable> transversal;  // non-halved only: tables v_i
  std::vector<Vec> carry_q;               // non-halved: q-coords of [2 v_i]

  // Basis of X as an abstract abelian group over the raw coordinates
  // (identity layout when halved; absorbs the carries otherwise).
  std::vector<RawX> basis;
  Vec orders;                       // public coordinate moduli
  std::map<Vec, Vec> raw_to_coords; // raw key -> public coordinates

  int rank() const { return static_cast<int>(orders.size()); }
  i64 size() const;

  RawX raw_zero() const;
  RawX raw_reduce(RawX r) const;
  RawX raw_add(const RawX& a, const RawX& b) const;
  RawX raw_scale(i64 k, const RawX& a) const;

  RawX raw_of(const Vec& coords) const;
  Vec coords_of(const RawX& r) const;

  CocycleTable representative_raw(const RawX& r) const;
  CocycleTable representative(const Vec& coords) const;
  RawX decompose_raw(const CocycleTable& z) const;
  Vec decompose(const CocycleTable& z) const;

  bool cocommutative(const Vec& coords) const;  // alternating part vanishes
};

XGroup build_x(const CpAction& act);

// Matrix (list of image coordinate columns, one per basis element) of the
// symmetry generator acting on X: z -> (truncated-norm phi_l z) pulled back
// along lambda^{-1}, with l = k^{-1} mod p.
std::vector<Vec> symmetry_matrix(const XGroup& X, const SymmetryGenerator& sg);
Vec apply_columns(const XGroup& X, const std::vector<Vec>& cols, const Vec& coords);

// Basis extraction for a small abelian group given as an explicit element
// list with an addition rule. Returns independent generators whose
// componentwise coordinates enumerate the group bijectively.
struct AbelianBasis {
  std::vector<Vec> gens;
  Vec orders;
};
AbelianBasis abelian_basis(const std::vector<Vec>& elements,
                           const std::function<Vec(const Vec&, const Vec&)>& add,
                           const Vec& zero);

}  // namespace hopfext
