#pragma once
// Finite abelian groups presented as direct sums of prime-power cyclic
// factors, their endomorphisms, characters and automorphism groups.
// All arithmetic is exact (int64).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfext {

using i64 = std::int64_t;
using Vec = std::vector<i64>;

// Raised when an input is outside the supported scope (CLI exit code 2).
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal consistency check fails (CLI exit code 1).
struct CheckError : std::runtime_error {
  explicit CheckError(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool ok, const std::string& msg) {
  if (!ok) throw CheckError(msg);
}

i64 mod_reduce(i64 a, i64 m);            // representative in [0, m)
i64 mod_pow(i64 base, i64 exp, i64 m);
i64 mod_inverse(i64 a, i64 m);           // requires gcd(a, m) == 1
i64 lcm_i64(i64 a, i64 b);
bool is_prime(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);

// Direct sum of cyclic groups Z_{orders[0]} + ... + Z_{orders[n-1]},
// each order a prime power. Elements are coordinate vectors.
struct AbelianGroup {
  Vec orders;

  int rank() const { return static_cast<int>(orders.size()); }
  i64 order() const;
  i64 exponent() const;
  i64 smallest_prime() const;  // least prime dividing the order

  Vec zero() const { return Vec(orders.size(), 0); }
  Vec reduce(Vec g) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec scale(i64 k, const Vec& a) const;
  i64 element_order(const Vec& a) const;

  // Dense element indexing (mixed radix, last coordinate fastest).
  i64 index_of(const Vec& g) const;
  Vec element_at(i64 idx) const;
};

// Parse a descriptor like "Z9xZ3" or "Z15xZ15"; composite factors are split
// into their prime-power components in place.
AbelianGroup parse_group(const std::string& descriptor);
std::string group_name(const AbelianGroup& G);

// <chi, g> as an exponent of a primitive m-th root of unity, where the
// character chi is given by coordinates mod orders[i] (chi(g_i) =
// zeta_{d_i}^{chi[i]}). Requires exponent(G) | m.
i64 pair_exponent(const AbelianGroup& G, const Vec& chi, const Vec& g, i64 m);

// Endomorphism in column convention: column j holds the image of
// generator j, so (M g)_i = sum_j M[i][j] g[j]. Entry (i, j) is taken
// mod orders[i] and must be a multiple of orders[i]/gcd(orders[i], orders[j]).
struct Endo {
  int n = 0;
  Vec a;  // row-major n*n

  i64& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  i64 at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const Endo& o) const { return n == o.n && a == o.a; }
  bool operator<(const Endo& o) const { return a < o.a; }
};

Endo identity_endo(const AbelianGroup& G);
Endo zero_endo(const AbelianGroup& G);
Endo make_endo(const AbelianGroup& G, const std::vector<Vec>& rows);  // row-major init
Endo reduce_endo(const AbelianGroup& G, Endo M);     // reduce entries mod orders[i]
bool well_formed(const AbelianGroup& G, const Endo& M);

Vec apply_endo(const AbelianGroup& G, const Endo& M, const Vec& g);
Endo compose(const AbelianGroup& G, const Endo& f, const Endo& g);  // f ∘ g
Endo endo_sum(const AbelianGroup& G, const Endo& f, const Endo& g);
Endo endo_pow(const AbelianGroup& G, const Endo& M, i64 k);
bool is_automorphism(const AbelianGroup& G, const Endo& M);
i64 endo_order(const AbelianGroup& G, const Endo& M, i64 cap = 1 << 20);
std::optional<Endo> endo_inverse(const AbelianGroup& G, const Endo& M);

// Matrix of the induced map on characters: chi -> chi ∘ M, acting on
// character coordinates (mod orders[j]).
Endo dual_endo(const AbelianGroup& G, const Endo& M);

// All automorphisms by exhaustive scan of the constrained entry space.
// Throws UnsupportedError if the scan would exceed `budget` candidates.
std::vector<Endo> enumerate_automorphisms(const AbelianGroup& G, i64 budget = 625);

// Small closed-form generating set of Aut(G) (transvections + diagonal
// unit maps per prime component).
std::vector<Endo> aut_generators(const AbelianGroup& G);

// Closure of a generating set inside Aut(G) (BFS; size capped).
std::vector<Endo> endo_closure(const AbelianGroup& G, const std::vector<Endo>& gens,
                               i64 cap = 2000000);

// Greedy reduction of a full subgroup listing to a small generating set.
std::vector<Endo> reduce_generators(const AbelianGroup& G, const std::vector<Endo>& elements);

}  // namespace hopfext
