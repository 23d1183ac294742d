#include "hopfext/zkernel.hpp"

#include <algorithm>
#include <numeric>

namespace hopfext {

namespace {

int valuation(i64 x, i64 q) {
  int v = 0;
  while (x != 0 && x % q == 0) {
    x /= q;
    ++v;
  }
  return v;
}

// Kernel generators of the map (Z/q^a)^n -> product of rows, via full
// Smith-style diagonalization with column transform tracking.
struct PrimePowerKernel {
  std::vector<Vec> gens;  // mod q^a
  Vec orders;
};

PrimePowerKernel kernel_prime_power(std::vector<Vec> A, int ncols, i64 q, int a) {
  i64 qa = 1;
  for (int i = 0; i < a; ++i) qa *= q;
  int nrows = (int)A.size();
  // Column transform U: original x = U * y, start with identity.
  std::vector<Vec> U(ncols, Vec(ncols, 0));
  for (int j = 0; j < ncols; ++j) U[j][j] = 1;

  auto colswap = [&](int c1, int c2) {
    for (int r = 0; r < nrows; ++r) std::swap(A[r][c1], A[r][c2]);
    for (int r = 0; r < ncols; ++r) std::swap(U[r][c1], U[r][c2]);
  };
  auto colscale = [&](int c, i64 u) {
    for (int r = 0; r < nrows; ++r) A[r][c] = (__int128)A[r][c] * u % qa;
    for (int r = 0; r < ncols; ++r) U[r][c] = (__int128)U[r][c] * u % qa;
  };
  auto colsub = [&](int c, int from, i64 f) {  // col_c -= f * col_from
    for (int r = 0; r < nrows; ++r) A[r][c] = mod_reduce(A[r][c] - (__int128)f * A[r][from] % qa, qa);
    for (int r = 0; r < ncols; ++r) U[r][c] = mod_reduce(U[r][c] - (__int128)f * U[r][from] % qa, qa);
  };

  int k = std::min(nrows, ncols);
  Vec diag_val;
  int pos = 0;
  for (; pos < k; ++pos) {
    // locate entry of minimal valuation in the remaining submatrix
    int bi = -1, bj = -1, bv = a;
    for (int i = pos; i < nrows; ++i)
      for (int j = pos; j < ncols; ++j) {
        i64 x = mod_reduce(A[i][j], qa);
        if (x == 0) continue;
        int v = valuation(x, q);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;  // remaining block is zero
    std::swap(A[bi], A[pos]);
    if (bj != pos) colswap(bj, pos);
    // normalize pivot to q^bv
    i64 piv = mod_reduce(A[pos][pos], qa);
    i64 unit = piv;
    for (int t = 0; t < bv; ++t) unit /= q;
    colscale(pos, mod_inverse(unit, qa));
    i64 pv = 1;
    for (int t = 0; t < bv; ++t) pv *= q;
    // clear the pivot row (column ops) and pivot column (row ops)
    for (int j = pos + 1; j < ncols; ++j) {
      i64 x = mod_reduce(A[pos][j], qa);
      if (x == 0) continue;
      colsub(j, pos, x / pv);
    }
    for (int i = pos + 1; i < nrows; ++i) {
      i64 x = mod_reduce(A[i][pos], qa);
      if (x == 0) continue;
      i64 f = x / pv;
      for (int j = 0; j < ncols; ++j)
        A[i][j] = mod_reduce(A[i][j] - (__int128)f * A[pos][j] % qa, qa);
    }
    diag_val.push_back(bv);
  }

  PrimePowerKernel K;
  for (int j = 0; j < ncols; ++j) {
    int v = j < (int)diag_val.size() ? (int)diag_val[j] : 0;
    i64 ord, mult;
    if (j < (int)diag_val.size()) {
      // diagonal entry q^v: y_j must be a multiple of q^(a-v); order q^v
      if (v == 0) continue;  // unit pivot, no kernel contribution
      ord = 1;
      for (int t = 0; t < v; ++t) ord *= q;
      mult = qa / ord;
    } else {
      ord = qa;  // free column
      mult = 1;
    }
    Vec g(ncols, 0);
    for (int r = 0; r < ncols; ++r) g[r] = (__int128)U[r][j] * mult % qa;
    K.gens.push_back(std::move(g));
    K.orders.push_back(ord);
  }
  return K;
}

}  // namespace

KernelDescription kernel_mod(const std::vector<Vec>& rows, const Vec& row_moduli, int ncols) {
  check(rows.size() == row_moduli.size(), "kernel_mod: row/modulus count mismatch");
  i64 M = 1;
  for (i64 m : row_moduli) M = lcm_i64(M, m);
  KernelDescription out;
  out.modulus = M;
  for (auto [q, e] : factorize(M)) {
    i64 qa = 1;
    for (int i = 0; i < e; ++i) qa *= q;
    // scale each row from Z/m_i to the q-part: row valid mod m_i lifts to a
    // row mod q^e after multiplying by q^e / q-part(m_i)
    std::vector<Vec> A;
    for (size_t r = 0; r < rows.size(); ++r) {
      i64 mq = 1;  // q-part of row modulus
      i64 m = row_moduli[r];
      while (m % q == 0) {
        mq *= q;
        m /= q;
      }
      i64 scale = qa / mq;
      Vec row(ncols);
      for (int c = 0; c < ncols; ++c) row[c] = mod_reduce((__int128)rows[r][c] * scale % qa, qa);
      A.push_back(std::move(row));
    }
    PrimePowerKernel K = kernel_prime_power(std::move(A), ncols, q, e);
    // CRT lift: idempotent u ≡ 1 mod q^e, 0 mod M/q^e.
    i64 rest = M / qa;
    i64 u = rest == 1 ? 1 : (__int128)rest * mod_inverse(rest % qa, qa) % M;
    for (size_t g = 0; g < K.gens.size(); ++g) {
      Vec lifted(ncols);
      for (int c = 0; c < ncols; ++c) lifted[c] = (__int128)K.gens[g][c] * u % M;
      out.gens.push_back(std::move(lifted));
      out.gen_orders.push_back(K.orders[g]);
      out.size *= K.orders[g];
    }
  }
  return out;
}

std::vector<Vec> enumerate_kernel(const KernelDescription& K, int ncols, i64 cap) {
  check(K.size <= cap, "enumerate_kernel: kernel too large");
  std::vector<Vec> out;
  out.reserve((size_t)K.size);
  Vec digits(K.gens.size(), 0);
  Vec cur(ncols, 0);
  while (true) {
    out.push_back(cur);
    size_t k = 0;
    for (; k < digits.size(); ++k) {
      if (++digits[k] < K.gen_orders[k]) {
        for (int c = 0; c < ncols; ++c) cur[c] = mod_reduce(cur[c] + K.gens[k][c], K.modulus);
        break;
      }
      // roll back this digit: subtract (order-1) * gen ≡ add one more gen
      digits[k] = 0;
      for (int c = 0; c < ncols; ++c) cur[c] = mod_reduce(cur[c] + K.gens[k][c], K.modulus);
    }
    if (k == digits.size()) break;
  }
  check((i64)out.size() == K.size, "enumerate_kernel: walk size mismatch");
  return out;
}

EchelonCounter::EchelonCounter(i64 q, int a, int ncols)
    : q_(q), a_(a), n_(ncols), qa_(1), pivot_val_(ncols, a), pivot_rows_(ncols) {
  for (int i = 0; i < a; ++i) qa_ *= q;
}

void EchelonCounter::add_row(Vec row) {
  // Howell-style reduction with valuation pivoting; when a pivot with
  // valuation v is installed, the overflow row q^(a-v)*row is processed too,
  // keeping |row space| = prod q^(a - v_c) exact.
  std::vector<Vec> work;
  work.push_back(std::move(row));
  while (!work.empty()) {
    Vec r = std::move(work.back());
    work.pop_back();
    int c = 0;
    while (c < n_) {
      i64 x = mod_reduce(r[c], qa_);
      if (x == 0) {
        ++c;
        continue;
      }
      int v = valuation(x, q_);
      if (v >= pivot_val_[c]) {
        // eliminate with the existing pivot (its leading entry is q^pv)
        i64 pv = 1;
        for (int t = 0; t < pivot_val_[c]; ++t) pv *= q_;
        i64 f = x / pv;
        const Vec& p = pivot_rows_[c];
        for (int j = c; j < n_; ++j) r[j] = mod_reduce(r[j] - (__int128)f * p[j] % qa_, qa_);
        ++c;
      } else {
        // install r as the new pivot: divide out the leading unit
        i64 unit = x;
        for (int t = 0; t < v; ++t) unit /= q_;
        i64 inv = mod_inverse(unit, qa_);
        for (int j = c; j < n_; ++j) r[j] = (__int128)mod_reduce(r[j], qa_) * inv % qa_;
        bool had_pivot = pivot_val_[c] < a_;
        std::swap(pivot_rows_[c], r);
        std::swap(pivot_val_[c], v);
        // overflow of the new pivot: q^(a-v_new) * pivot has zero lead
        i64 shift = qa_;
        for (int t = 0; t < pivot_val_[c]; ++t) shift /= q_;
        Vec over(n_, 0);
        for (int j = c; j < n_; ++j) over[j] = (__int128)pivot_rows_[c][j] * shift % qa_;
        work.push_back(std::move(over));
        if (!had_pivot) break;  // nothing displaced; row consumed
        // r now holds the displaced old pivot; reprocess the same column
        // (its valuation there is >= the new pivot's, so it will reduce).
      }
    }
  }
}

int EchelonCounter::image_exponent() const {
  int im = 0;
  for (int c = 0; c < n_; ++c) im += a_ - pivot_val_[c];
  return im;
}

int EchelonCounter::kernel_exponent() const {
  int ker = 0;
  for (int c = 0; c < n_; ++c) ker += pivot_val_[c];
  return ker;
}

void FactoredInt::mul_prime_power(i64 q, int k) {
  if (k == 0) return;
  e[q] += k;
  if (e[q] == 0) e.erase(q);
}

FactoredInt FactoredInt::times(const FactoredInt& o) const {
  FactoredInt r = *this;
  for (auto [q, k] : o.e) r.mul_prime_power(q, k);
  return r;
}

FactoredInt FactoredInt::over(const FactoredInt& o) const {
  FactoredInt r = *this;
  for (auto [q, k] : o.e) r.mul_prime_power(q, -k);
  for (auto [q, k] : r.e) check(k >= 0, "FactoredInt::over: not divisible");
  return r;
}

bool FactoredInt::operator==(const FactoredInt& o) const { return e == o.e; }

i64 FactoredInt::to_i64() const {
  i64 v = 1;
  for (auto [q, k] : e)
    for (int i = 0; i < k; ++i) {
      check(v <= (i64)4e18 / q, "FactoredInt::to_i64: overflow");
      v *= q;
    }
  return v;
}

std::string FactoredInt::str() const {
  if (e.empty()) return "1";
  std::string s;
  for (auto [q, k] : e) {
    if (!s.empty()) s += "*";
    s += std::to_string(q);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

FactoredInt FactoredInt::of(i64 n) {
  FactoredInt r;
  for (auto [q, k] : factorize(n)) r.mul_prime_power(q, k);
  return r;
}

FactoredInt kernel_order_mod(const std::vector<SparseRow>& rows, int ncols, i64 M) {
  FactoredInt total;
  for (auto [q, e] : factorize(M)) {
    i64 qa = 1;
    for (int i = 0; i < e; ++i) qa *= q;
    EchelonCounter ec(q, e, ncols);
    for (const SparseRow& sr : rows) {
      i64 mq = 1;
      i64 m = sr.modulus;
      while (m % q == 0) {
        mq *= q;
        m /= q;
      }
      i64 scale = qa / mq;
      Vec row(ncols, 0);
      bool nonzero = false;
      for (auto [c, coef] : sr.entries) {
        row[c] = mod_reduce(row[c] + (__int128)coef * scale % qa, qa);
        nonzero = nonzero || row[c] != 0;
      }
      if (nonzero) ec.add_row(std::move(row));
    }
    total.mul_prime_power(q, ec.kernel_exponent());
  }
  return total;
}

}  // namespace hopfext
