#pragma once
// Exact kernel computations for integer matrices over Z/m with m composite:
// prime-power echelon forms (Howell-style, valuation pivoting), kernel
// generators via column-transform diagonalization, and CRT recombination.

#include <map>

#include "hopfext/group.hpp"

namespace hopfext {

// Kernel of { x in (Z/M)^n : row_i · x ≡ 0 (mod row_moduli[i]) } where
// M = lcm of the row moduli. Row i is interpreted mod row_moduli[i].
struct KernelDescription {
  i64 modulus = 1;          // M
  std::vector<Vec> gens;    // generator vectors mod M
  Vec gen_orders;           // order of each generator (prime powers)
  i64 size = 1;             // |kernel| = product of generator orders
};

KernelDescription kernel_mod(const std::vector<Vec>& rows, const Vec& row_moduli, int ncols);

// Enumerate all elements of a kernel (mixed-radix walk over generator
// multiples). Throws if the kernel is larger than `cap`.
std::vector<Vec> enumerate_kernel(const KernelDescription& K, int ncols, i64 cap = 6000000);

// Order-only streaming echelon over Z/q^a (no generators). Rows are fed one
// at a time; kernel_order() = q^(a*ncols) / |row space|.
class EchelonCounter {
 public:
  EchelonCounter(i64 q, int a, int ncols);
  void add_row(Vec row);    // entries mod q^a
  int kernel_exponent() const;  // |kernel| = q^exponent
  int image_exponent() const;   // |row space| = q^exponent

 private:
  i64 q_;
  int a_;
  int n_;
  i64 qa_;
  std::vector<int> pivot_val_;    // valuation of pivot at column c, or a_ if none
  std::vector<Vec> pivot_rows_;   // row with pivot at column c (empty if none)
};

// Exact positive integer kept in factored form (kernel orders of large
// systems overflow int64).
struct FactoredInt {
  std::map<i64, int> e;  // prime -> exponent

  void mul_prime_power(i64 q, int k);
  FactoredInt times(const FactoredInt& o) const;
  // exact division; throws if not divisible
  FactoredInt over(const FactoredInt& o) const;
  bool operator==(const FactoredInt& o) const;
  i64 to_i64() const;  // throws on overflow
  std::string str() const;
  static FactoredInt of(i64 n);
};

// Kernel order of a sparse/dense row system with mixed row moduli, computed
// per prime power of M and multiplied (no generators; scales to thousands of
// rows). Rows are given as (column, coefficient) pairs valid mod row_modulus.
struct SparseRow {
  std::vector<std::pair<int, i64>> entries;
  i64 modulus;
};
FactoredInt kernel_order_mod(const std::vector<SparseRow>& rows, int ncols, i64 M);

}  // namespace hopfext
