#include "hopfext/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace hopfext {

namespace {

// Spanning parametrization of the normalized 2-cocycles of G with values
// mu_m: z = delta f (f a 1-cochain with f(0) = 0) + sum_{i<j} c_ij
// (m/gcd(d_i,d_j)) a_i b_j + sum_i e_i gamma_i, where gamma_i(a,b) =
// [a_i + b_i >= d_i] is the integer carry, a Z-valued 2-cocycle. The three
// families cover B^2, Hom(wedge^2 G, mu_m) and Ext(G, mu_m) respectively,
// which together exhaust Z^2_normalized; tests certify this against the raw
// table lattice.
struct Parametrization {
  const AbelianGroup& G;
  i64 m;
  i64 N;
  int n;
  int P;
  int nvars;

  Parametrization(const AbelianGroup& g, i64 mm)
      : G(g),
        m(mm),
        N(g.order()),
        n(g.rank()),
        P(g.rank() * (g.rank() - 1) / 2),
        nvars(static_cast<int>(g.order()) + P + g.rank()) {}

  // Accumulate sign * (coefficients of z(a, b)) into a variable -> coeff map.
  void add_entry(std::map<int, i64>& row, i64 a, i64 b, i64 sign) const {
    Vec ca = G.element_at(a), cb = G.element_at(b);
    i64 ab = G.index_of(G.add(ca, cb));
    row[static_cast<int>(a)] += sign;
    row[static_cast<int>(b)] += sign;
    row[static_cast<int>(ab)] -= sign;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        i64 g = std::gcd(G.orders[i], G.orders[j]);
        i64 coeff = mod_reduce((m / g) * ca[i] % m * cb[j], m);
        if (coeff) row[static_cast<int>(N) + AltForm::pos(n, i, j)] += sign * coeff;
      }
      if (ca[i] + cb[i] >= G.orders[i]) row[static_cast<int>(N) + P + i] += sign;
    }
  }
};

SparseRow finish_row(const std::map<int, i64>& acc, i64 m) {
  SparseRow r;
  r.modulus = m;
  for (const auto& [col, coeff] : acc) {
    i64 v = mod_reduce(coeff, m);
    if (v) r.entries.push_back({col, v});
  }
  return r;
}

SparseRow pin_row(int col, i64 m) {
  SparseRow r;
  r.modulus = m;
  r.entries.push_back({col, 1});
  return r;
}

FactoredInt power_of(i64 base, i64 exp) {
  FactoredInt out;
  for (const auto& [q, k] : factorize(base)) out.mul_prime_power(q, static_cast<int>(k * exp));
  return out;
}

// Rows forcing the parametrized table to vanish identically (the kernel of
// the parametrization map).
std::vector<SparseRow> zero_table_rows(const Parametrization& par) {
  std::vector<SparseRow> rows;
  rows.push_back(pin_row(0, par.m));
  for (i64 a = 0; a < par.N; ++a)
    for (i64 b = 0; b < par.N; ++b) {
      std::map<int, i64> acc;
      par.add_entry(acc, a, b, 1);
      rows.push_back(finish_row(acc, par.m));
    }
  return rows;
}

}  // namespace

Z2Lattice z2_group(const AbelianGroup& G, i64 m) {
  check(G.order() <= 27, "z2_group: |G| exceeds the oracle budget of 27");
  Parametrization par(G, m);
  FactoredInt kernel = kernel_order_mod(zero_table_rows(par), par.nvars, m);

  Z2Lattice out;
  out.normalized = power_of(m, par.nvars - 1).over(kernel);
  out.full = out.normalized.times(FactoredInt::of(m));
  // delta f tables: m^(N-1) normalized 1-cochains modulo Hom(G, Z_m).
  FactoredInt hom;
  for (i64 d : G.orders) hom = hom.times(FactoredInt::of(std::gcd(d, m)));
  out.b2 = power_of(m, par.N - 1).over(hom);
  out.h2 = out.normalized.over(out.b2);
  return out;
}

FactoredInt z2_normalized_brute(const AbelianGroup& G, i64 m) {
  i64 N = G.order();
  check(N <= 16, "z2_normalized_brute: |G| exceeds the brute budget of 16");
  int nvars = static_cast<int>(N * N);
  auto var = [&](i64 a, i64 b) { return static_cast<int>(a * N + b); };
  std::vector<SparseRow> rows;
  for (i64 a = 0; a < N; ++a) {
    rows.push_back(pin_row(var(0, a), m));
    rows.push_back(pin_row(var(a, 0), m));
  }
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b)
      for (i64 c = 0; c < N; ++c) {
        i64 bc = G.index_of(G.add(G.element_at(b), G.element_at(c)));
        i64 ab = G.index_of(G.add(G.element_at(a), G.element_at(b)));
        std::map<int, i64> acc;
        acc[var(a, bc)] += 1;
        acc[var(b, c)] += 1;
        acc[var(ab, c)] -= 1;
        acc[var(a, b)] -= 1;
        rows.push_back(finish_row(acc, m));
      }
  return kernel_order_mod(rows, nvars, m);
}

CocycleSpaceOrders z2N_and_kerPhi(const CpAction& act, i64 m) {
  const AbelianGroup& G = act.G;
  i64 N = G.order();
  check(N <= 27, "z2N_and_kerPhi: |G| exceeds the oracle budget of 27");
  check(act.p <= 3, "z2N_and_kerPhi: p exceeds the oracle budget of 3");
  Parametrization par(G, m);

  // Index table of the iterated action a -> T^i a.
  std::vector<Vec> tpow(act.p, Vec(N));
  for (i64 a = 0; a < N; ++a) tpow[0][a] = a;
  for (i64 i = 1; i < act.p; ++i)
    for (i64 a = 0; a < N; ++a)
      tpow[i][a] = G.index_of(apply_endo(G, act.T, G.element_at(tpow[i - 1][a])));

  FactoredInt kernel = kernel_order_mod(zero_table_rows(par), par.nvars, m);

  // Z^2_N: phi_p z = 0 on every pair.
  std::vector<SparseRow> zn_rows;
  zn_rows.push_back(pin_row(0, m));
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b) {
      std::map<int, i64> acc;
      for (i64 i = 0; i < act.p; ++i) par.add_entry(acc, tpow[i][a], tpow[i][b], 1);
      zn_rows.push_back(finish_row(acc, m));
    }
  CocycleSpaceOrders out;
  out.z2N = kernel_order_mod(zn_rows, par.nvars, m).over(kernel);

  // B^2_N and ker Phi are coboundary lattices over a divisible coefficient
  // group: the 1-cochain f may take values in deeper roots of unity than the
  // table itself (e.g. a carry table on Z_d is the coboundary of a cochain
  // valued in d-th roots of the table values). Depth m*exponent suffices;
  // the m-doubling test re-checks that the quotient order has stabilized.
  const i64 M = m * G.exponent();
  const i64 div = M / m;  // table values lie in mu_m: exponents divisible by this
  auto delta_acc = [&](std::map<int, i64>& acc, i64 a, i64 b, i64 sign) {
    i64 ab = G.index_of(G.add(G.element_at(a), G.element_at(b)));
    acc[static_cast<int>(a)] += sign;
    acc[static_cast<int>(b)] += sign;
    acc[static_cast<int>(ab)] -= sign;
  };

  // B^2_N: tables delta f valued in mu_m with phi_p(delta f) = 0 exactly.
  std::vector<SparseRow> bn_rows;
  bn_rows.push_back(pin_row(0, M));
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b) {
      std::map<int, i64> acc;
      delta_acc(acc, a, b, 1);
      bn_rows.push_back(finish_row(acc, div));  // delta f lands in mu_m
      std::map<int, i64> phi;
      for (i64 i = 0; i < act.p; ++i) delta_acc(phi, tpow[i][a], tpow[i][b], 1);
      bn_rows.push_back(finish_row(phi, M));
    }
  FactoredInt hom;  // f with delta f = 0, i.e. Hom(G, Z_M)
  for (i64 d : G.orders) hom = hom.times(FactoredInt::of(std::gcd(d, M)));
  out.b2N = kernel_order_mod(bn_rows, static_cast<int>(N), M).over(hom);

  // ker Phi: tables delta f (valued in mu_m) with phi_p f = psi o norm for
  // some character psi. Variables: f (N, pinned at 0) then psi coordinates
  // (n, scaled by M/d_j).
  Endo nrm = norm_endo(act);
  int n = G.rank();
  int kp_vars = static_cast<int>(N) + n;
  std::vector<SparseRow> kp_rows;
  kp_rows.push_back(pin_row(0, M));
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b) {
      std::map<int, i64> acc;
      delta_acc(acc, a, b, 1);
      kp_rows.push_back(finish_row(acc, div));
    }
  for (i64 g = 0; g < N; ++g) {
    Vec ng = apply_endo(G, nrm, G.element_at(g));
    std::map<int, i64> acc;
    for (i64 i = 0; i < act.p; ++i) acc[static_cast<int>(tpow[i][g])] += 1;
    for (int j = 0; j < n; ++j) acc[static_cast<int>(N) + j] -= (M / G.orders[j]) * ng[j];
    kp_rows.push_back(finish_row(acc, M));
  }
  FactoredInt top = kernel_order_mod(kp_rows, kp_vars, M);
  // Quotient by the pairs (f, psi) whose delta f is the zero table.
  std::vector<SparseRow> kp_zero = kp_rows;
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b) {
      std::map<int, i64> acc;
      delta_acc(acc, a, b, 1);
      kp_zero.push_back(finish_row(acc, M));
    }
  out.kerPhi = top.over(kernel_order_mod(kp_zero, kp_vars, M));

  out.h2c = out.z2N.over(out.kerPhi);
  return out;
}

std::vector<CocycleTable> theta_expand(const CpAction& act, const CocycleTable& z) {
  check(z.G.orders == act.G.orders, "theta_expand: group mismatch");
  check(is_normalized(z), "theta_expand: tau(t) must be normalized");
  check(phi_truncated(z, act.T, act.p) == zero_table(act.G, z.m),
        "theta_expand: phi_p tau(t) must vanish exactly");
  std::vector<CocycleTable> tau;
  for (i64 i = 0; i < act.p; ++i) tau.push_back(phi_truncated(z, act.T, i));
  // Crossed-homomorphism identity tau(t^{i+j}) = tau(t^i) + t^i . tau(t^j).
  for (i64 i = 0; i < act.p; ++i) {
    Endo Ti = endo_pow(act.G, act.T, i);
    for (i64 j = 0; j < act.p; ++j) {
      CocycleTable lhs = table_add(tau[i], pullback(tau[j], Ti));
      check(lhs == tau[(i + j) % act.p], "theta_expand: Hopf cocycle identity failed");
    }
  }
  return tau;
}

Vec cochain_with_norm(const CpAction& act, const Vec& chi) {
  const AbelianGroup& G = act.G;
  i64 N = G.order();
  i64 m = act.p * G.exponent();
  auto chival = [&](i64 g) {
    Vec cg = G.element_at(g);
    i64 v = 0;
    for (int j = 0; j < G.rank(); ++j)
      v = mod_reduce(v + chi[j] * (m / G.orders[j]) % m * cg[j], m);
    return v;
  };
  auto step = [&](i64 g) { return G.index_of(apply_endo(G, act.T, G.element_at(g))); };
  for (i64 g = 0; g < N; ++g)
    check(chival(step(g)) == chival(g), "cochain_with_norm: character not fixed");

  Vec f(N, 0);
  std::vector<char> seen(N, 0);
  for (i64 g = 0; g < N; ++g) {
    if (seen[g]) continue;
    Vec orbit{g};
    seen[g] = 1;
    for (i64 h = step(g); h != g; h = step(h)) {
      orbit.push_back(h);
      seen[h] = 1;
    }
    if (static_cast<i64>(orbit.size()) == 1) {
      i64 v = chival(g);
      check(v % act.p == 0, "cochain_with_norm: fixed-point value not divisible by p");
      f[g] = v / act.p;
    } else {
      check(static_cast<i64>(orbit.size()) == act.p, "cochain_with_norm: bad orbit size");
      f[orbit[0]] = chival(orbit[0]);  // the other orbit points stay 0
    }
  }
  return f;
}

namespace {

// Solve A x = b over F_2 by Gaussian elimination. Returns false if
// inconsistent; otherwise writes one particular solution.
bool solve_f2(std::vector<Vec> rows, Vec rhs, int nvars, Vec& sol) {
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < nvars && r < nrows; ++c) {
    int pr = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][c]) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[pr], rows[r]);
    std::swap(rhs[pr], rhs[r]);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || !rows[i][c]) continue;
      for (int k = c; k < nvars; ++k) rows[i][k] ^= rows[r][k];
      rhs[i] ^= rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < nrows; ++i)
    if (rhs[i]) return false;
  sol.assign(nvars, 0);
  for (int i = 0; i < r; ++i) sol[pivot_col[i]] = rhs[i];
  return true;
}

}  // namespace

SectionSearchResult section_search(int n) {
  check(n >= 1 && n <= 4, "section_search: rank must be between 1 and 4");
  SectionSearchResult res;
  if (n == 1) {
    res.exists = true;  // Alt is trivial; the empty section splits vacuously
    return res;
  }
  AbelianGroup G{Vec(n, 2)};
  CpAction act{G, 2, identity_endo(G), "trivial"};
  XGroup X = build_x(act);
  for (i64 o : X.orders) check(o == 2, "section_search: expected an elementary carrier");
  int R = X.rank();
  i64 N = G.order();
  int P = n * (n - 1) / 2;

  // X coordinates of the character classes [delta f_k], phi_2 f_k = x_k^*.
  std::vector<Vec> qelt(n);
  for (int k = 0; k < n; ++k) {
    Vec f(N, 0);
    for (i64 g = 0; g < N; ++g) f[g] = G.element_at(g)[k];
    qelt[k] = X.decompose(coboundary(G, X.m, f));
  }
  // X coordinates of the alternating transversal classes [s_{<i,j>}].
  std::vector<Vec> base(P);
  std::vector<int> alt_index(P, -1);  // basis position of alpha_ij in X
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      AltForm a = zero_form(G);
      a.b[AltForm::pos(n, i, j)] = 1;
      int pr = AltForm::pos(n, i, j);
      base[pr] = X.decompose(ordered_lift(G, a, X.m));
      for (size_t bi = 0; bi < X.alt_basis.size(); ++bi)
        if (X.alt_basis[bi] == a) alt_index[pr] = static_cast<int>(bi);
      check(alt_index[pr] >= 0, "section_search: basis form missing from the carrier");
    }

  // Unknowns: chi_{ij} in F_2^n per pair; equations from every automorphism
  // generator acting on every basis pair.
  int nvars = P * n;
  auto var = [&](int pr, int k) { return pr * n + k; };
  std::vector<Vec> rows;
  Vec rhs;
  for (const Endo& lam : aut_generators(G)) {
    std::vector<Vec> cols = symmetry_matrix(X, SymmetryGenerator{lam, 1});
    std::vector<Vec> qimg(n);
    for (int k = 0; k < n; ++k) qimg[k] = apply_columns(X, cols, qelt[k]);
    for (int pr = 0; pr < P; ++pr) {
      Vec img = apply_columns(X, cols, base[pr]);
      Vec bits = X.raw_of(img).alt;  // decomposition of alpha_{ij}.lambda
      // Equation per coordinate r:
      //   sum_k x_{pr,k} qimg[k][r] + sum_{pr2} bits[pr2] sum_k x_{pr2,k} qelt[k][r]
      //     = (sum_{pr2} bits[pr2] base[pr2] - img)[r]  (mod 2)
      for (int r = 0; r < R; ++r) {
        Vec row(nvars, 0);
        i64 c = mod_reduce(-img[r], 2);
        for (int k = 0; k < n; ++k) row[var(pr, k)] ^= static_cast<i64>(qimg[k][r] & 1);
        for (int pr2 = 0; pr2 < P; ++pr2) {
          if (!(bits[alt_index[pr2]] & 1)) continue;
          c = (c + base[pr2][r]) & 1;
          for (int k = 0; k < n; ++k) row[var(pr2, k)] ^= static_cast<i64>(qelt[k][r] & 1);
        }
        rows.push_back(std::move(row));
        rhs.push_back(c);
      }
    }
  }
  Vec sol;
  res.exists = solve_f2(std::move(rows), std::move(rhs), nvars, sol);
  if (res.exists) {
    res.chi.resize(P);
    for (int pr = 0; pr < P; ++pr) {
      res.chi[pr].assign(n, 0);
      for (int k = 0; k < n; ++k) res.chi[pr][k] = sol[var(pr, k)];
    }
  }
  return res;
}

std::vector<AbelianGroup> abelian_groups_up_to(i64 max_order) {
  std::vector<AbelianGroup> out;
  // Invariant-factor chains d_1 | d_2 | ... | d_k with product <= max_order.
  std::function<void(Vec&, i64, i64)> rec = [&](Vec& cur, i64 prod, i64 last) {
    if (!cur.empty()) out.push_back(AbelianGroup{cur});
    for (i64 d = std::max<i64>(2, last); prod * d <= max_order; ++d) {
      if (last > 1 && d % last != 0) continue;
      cur.push_back(d);
      rec(cur, prod * d, d);
      cur.pop_back();
    }
  };
  Vec cur;
  rec(cur, 1, 1);
  std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.orders < b.orders;
  });
  return out;
}

}  // namespace hopfext
