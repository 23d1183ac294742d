#pragma once
// Dense 2-cochain tables on a finite abelian group with values written as
// additive exponents of a primitive m-th root of unity, plus alternating
// bimultiplicative forms and coboundary solving. No floating point anywhere.

#include "hopfext/group.hpp"

namespace hopfext {

// z[a*N + b] = exponent of zeta_m in z(a, b), N = |G|.
struct CocycleTable {
  AbelianGroup G;
  i64 m = 1;
  Vec e;

  i64 N() const { return G.order(); }
  i64 at(i64 a, i64 b) const { return e[a * N() + b]; }
  i64& at(i64 a, i64 b) { return e[a * N() + b]; }
  bool operator==(const CocycleTable& o) const { return m == o.m && e == o.e; }
};

CocycleTable zero_table(const AbelianGroup& G, i64 m);
CocycleTable table_add(const CocycleTable& x, const CocycleTable& y);
CocycleTable table_sub(const CocycleTable& x, const CocycleTable& y);
CocycleTable table_neg(const CocycleTable& x);
CocycleTable table_scale(i64 k, const CocycleTable& x);

// z'(a, b) = z(Pa, Pb) for an endomorphism P.
CocycleTable pullback(const CocycleTable& z, const Endo& P);

// sum_{i=0}^{l-1} pullback(z, T^i): the truncated-norm action of the cyclic
// group generated by the action matrix T on cochains.
CocycleTable phi_truncated(const CocycleTable& z, const Endo& T, i64 l);

// Coboundary of a 1-cochain f (f[idx] = exponent mod m): (a,b) -> f(a)+f(b)-f(ab).
CocycleTable coboundary(const AbelianGroup& G, i64 m, const Vec& f);

// (a,b) -> z(a,b) - z(b,a).
CocycleTable antisymmetrization(const CocycleTable& z);

bool is_cocycle(const CocycleTable& z);
bool is_normalized(const CocycleTable& z);
bool is_symmetric(const CocycleTable& z);

// Alternating bimultiplicative form: coefficients b_ij (i < j) of
// sum b_ij e_i* ^ e_j*, with b_ij taken mod gcd(orders[i], orders[j]).
struct AltForm {
  int n = 0;
  Vec b;  // flat upper triangle, index pos(i, j)

  static int pos(int n, int i, int j) {  // requires i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }
  i64 get(int i, int j) const { return b[pos(n, i, j)]; }
  bool operator==(const AltForm& o) const { return b == o.b; }
  bool operator<(const AltForm& o) const { return b < o.b; }
};

AltForm zero_form(const AbelianGroup& G);
Vec alt_moduli(const AbelianGroup& G);  // gcd(d_i, d_j) per upper pair
AltForm form_reduce(const AbelianGroup& G, AltForm f);
AltForm form_add(const AbelianGroup& G, const AltForm& x, const AltForm& y);
AltForm form_scale(const AbelianGroup& G, i64 k, const AltForm& x);
i64 form_eval(const AbelianGroup& G, const AltForm& f, const Vec& a, const Vec& b, i64 m);
CocycleTable form_table(const AbelianGroup& G, const AltForm& f, i64 m);
// f'(a, b) = f(Pa, Pb)
AltForm form_pullback(const AbelianGroup& G, const AltForm& f, const Endo& P);

// Extract the alternating form from a bimultiplicative alternating table
// (checked; throws CheckError otherwise).
AltForm form_from_table(const CocycleTable& z);

// Upper-triangular bimultiplicative table sum_{i<=j} c_ij a_i b_j with
// c_ij interpreted as multiples of m/gcd(d_i, d_j); used both for the
// "one factor ordered before the other" lift of an alternating form and
// for the bilinear complement in the cocycle-space oracle.
CocycleTable bilinear_table(const AbelianGroup& G, i64 m, const std::vector<Vec>& c);
// Lift of an alternating form: values alpha(x_i, x_j) on ordered pairs i < j
// only, zero elsewhere; its antisymmetrization is the form itself.
CocycleTable ordered_lift(const AbelianGroup& G, const AltForm& f, i64 m);

// Solve delta f = b for a symmetric normalized coboundary table b. The
// 1-cochain may need deeper roots of unity: the result is an exponent
// vector mod m_out = b.m * exponent(G). Throws CheckError if b is not a
// coboundary at that depth.
struct CochainSolution {
  Vec f;
  i64 m;  // modulus of the exponents in f
};
CochainSolution solve_coboundary(const CocycleTable& b);

// (phi_p f)(g) = sum_{i<p} f(T^i g), as a 1-cochain with f's modulus.
Vec phi_cochain(const AbelianGroup& G, const Vec& f, i64 mf, const Endo& T, i64 p);

// Interpret a 1-cochain that is actually a character as character
// coordinates (c_j mod d_j); throws CheckError if not a character.
Vec character_coords(const AbelianGroup& G, const Vec& f, i64 mf);

}  // namespace hopfext
