#include "hopfext/action.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "hopfext/zkernel.hpp"

namespace hopfext {

namespace {

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

// Indices of the factors belonging to each prime, in ascending prime order.
std::map<i64, std::vector<int>> primary_indices(const AbelianGroup& G) {
  std::map<i64, std::vector<int>> out;
  for (int i = 0; i < G.rank(); ++i) {
    i64 q = factorize(G.orders[i]).front().first;
    out[q].push_back(i);
  }
  return out;
}

AbelianGroup subgroup_at(const AbelianGroup& G, const std::vector<int>& idx) {
  AbelianGroup H;
  for (int i : idx) H.orders.push_back(G.orders[i]);
  return H;
}

Endo restrict_endo(const AbelianGroup& G, const Endo& M, const std::vector<int>& idx) {
  AbelianGroup H = subgroup_at(G, idx);
  Endo R = zero_endo(H);
  int n = static_cast<int>(idx.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R.at(i, j) = M.at(idx[i], idx[j]);
  return reduce_endo(H, R);
}

// All solutions L (not necessarily invertible) of L*T1 = T2*L over a single
// primary component, by a constrained-entry kernel.
std::vector<Endo> component_intertwiner_space(const AbelianGroup& H, const Endo& T1,
                                              const Endo& T2, i64 budget) {
  int n = H.rank();
  int nvars = n * n;
  std::vector<i64> step(nvars), entry_mod(nvars);
  i64 M = H.exponent();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      i64 g = gcd_i64(H.orders[i], H.orders[j]);
      step[i * n + j] = H.orders[i] / g;
      entry_mod[i * n + j] = g;
    }

  // Condition rows: for each (i, j), sum_k L[i][k]*T1[k][j] - T2[i][k]*L[k][j]
  // ≡ 0 (mod orders[i]), in terms of the unit variables u with
  // L[i][j] = step[i][j] * u[i][j].
  std::vector<Vec> rows;
  Vec row_moduli;
  bool any_nonzero = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec row(nvars, 0);
      i64 mi = H.orders[i];
      for (int k = 0; k < n; ++k) {
        int vik = i * n + k;
        row[vik] = mod_reduce(row[vik] + step[vik] * mod_reduce(T1.at(k, j), mi), mi);
        int vkj = k * n + j;
        row[vkj] = mod_reduce(row[vkj] - step[vkj] * mod_reduce(T2.at(i, k), mi), mi);
      }
      for (i64 c : row)
        if (c != 0) any_nonzero = true;
      rows.push_back(std::move(row));
      row_moduli.push_back(mi);
    }

  std::vector<Endo> out;
  std::set<Endo> seen;
  auto emit = [&](const Vec& u) {
    Endo L = zero_endo(H);
    for (int v = 0; v < nvars; ++v)
      L.a[v] = mod_reduce(step[v] * mod_reduce(u[v], entry_mod[v]), H.orders[v / n]);
    if (seen.insert(L).second) out.push_back(L);
  };

  if (!any_nonzero) {
    // Every well-formed matrix commutes; walk the constrained entry space.
    i64 total = 1;
    for (int v = 0; v < nvars; ++v) {
      total *= entry_mod[v];
      if (total > budget)
        throw UnsupportedError("intertwiner entry space exceeds budget for " + group_name(H));
    }
    Vec u(nvars, 0);
    for (i64 c = 0; c < total; ++c) {
      i64 rest = c;
      for (int v = nvars - 1; v >= 0; --v) {
        u[v] = rest % entry_mod[v];
        rest /= entry_mod[v];
      }
      emit(u);
    }
    return out;
  }

  KernelDescription K = kernel_mod(rows, row_moduli, nvars);
  // The kernel lives mod M per variable, so each true solution appears with
  // multiplicity prod(M / entry_mod[v]); dedupe after reduction.
  i64 spurious = 1;
  for (int v = 0; v < nvars; ++v) {
    spurious *= M / entry_mod[v];
    if (spurious > budget) break;  // only used for the cap below
  }
  i64 cap = budget;
  if (spurious <= budget && budget <= std::numeric_limits<i64>::max() / spurious)
    cap = budget * spurious;
  for (const Vec& u : enumerate_kernel(K, nvars, cap)) emit(u);
  return out;
}

Endo assemble(const AbelianGroup& G, const std::map<i64, std::vector<int>>& comps,
              const std::map<i64, const Endo*>& blocks) {
  Endo M = zero_endo(G);
  for (const auto& [q, idx] : comps) {
    const Endo& B = *blocks.at(q);
    int n = static_cast<int>(idx.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(idx[i], idx[j]) = B.at(i, j);
  }
  return M;
}

std::string join_names(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += "+";
    s += p;
  }
  return s;
}

}  // namespace

CpAction twist(const CpAction& act, i64 k) {
  CpAction out = act;
  out.T = endo_pow(act.G, act.T, mod_reduce(k, act.p));
  return out;
}

Endo norm_endo(const CpAction& act) {
  Endo s = zero_endo(act.G);
  Endo pw = identity_endo(act.G);
  for (i64 i = 0; i < act.p; ++i) {
    s = endo_sum(act.G, s, pw);
    pw = compose(act.G, pw, act.T);
  }
  return s;
}

std::vector<Endo> intertwiners(const CpAction& a1, const CpAction& a2, i64 budget) {
  check(a1.G.orders == a2.G.orders && a1.p == a2.p, "intertwiners: mismatched actions");
  const AbelianGroup& G = a1.G;
  auto comps = primary_indices(G);

  // The condition decouples along primary components (cross-prime entries of
  // any endomorphism vanish): solve per component, combine, filter.
  std::map<i64, std::vector<Endo>> invertible_blocks;
  for (const auto& [q, idx] : comps) {
    AbelianGroup H = subgroup_at(G, idx);
    Endo T1 = restrict_endo(G, a1.T, idx);
    Endo T2 = restrict_endo(G, a2.T, idx);
    std::vector<Endo> sols = component_intertwiner_space(H, T1, T2, budget);
    std::vector<Endo> inv;
    for (const Endo& L : sols)
      if (is_automorphism(H, L)) inv.push_back(L);
    std::sort(inv.begin(), inv.end());
    invertible_blocks[q] = std::move(inv);
  }

  i64 total = 1;
  for (const auto& [q, blk] : invertible_blocks) {
    if (blk.empty()) return {};
    total *= static_cast<i64>(blk.size());
    check(total <= budget, "intertwiners: combined solution count exceeds budget");
  }

  std::vector<Endo> out;
  std::vector<i64> primes;
  for (const auto& [q, blk] : invertible_blocks) primes.push_back(q);
  Vec digit(primes.size(), 0);
  while (true) {
    std::map<i64, const Endo*> pick;
    for (size_t t = 0; t < primes.size(); ++t)
      pick[primes[t]] = &invertible_blocks[primes[t]][static_cast<size_t>(digit[t])];
    out.push_back(assemble(G, comps, pick));
    size_t t = 0;
    while (t < primes.size()) {
      if (++digit[t] < static_cast<i64>(invertible_blocks[primes[t]].size())) break;
      digit[t] = 0;
      ++t;
    }
    if (t == primes.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Endo> centralizer_A(const CpAction& act, i64 budget) {
  return intertwiners(act, act, budget);
}

SymmetryGroup symmetry_group(const CpAction& act, i64 budget) {
  SymmetryGroup S;
  S.C.push_back(1);
  if (act.trivial()) {
    // A(⊳) = Aut(G); every twist is again trivial, with identity intertwiner.
    for (const Endo& g : aut_generators(act.G)) S.gens.push_back({g, 1});
    for (i64 k = 2; k < act.p; ++k) {
      S.gens.push_back({identity_endo(act.G), k});
      S.C.push_back(k);
    }
    return S;
  }

  std::vector<Endo> A = centralizer_A(act, budget);
  check(!A.empty(), "symmetry_group: centralizer is empty");
  S.A_order = static_cast<i64>(A.size());
  for (const Endo& g : reduce_generators(act.G, A)) S.gens.push_back({g, 1});
  for (i64 k = 2; k < act.p; ++k) {
    std::vector<Endo> I = intertwiners(act, twist(act, k), budget);
    if (I.empty()) continue;
    S.gens.push_back({I.front(), k});  // lists are sorted: lex-least intertwiner
    S.C.push_back(k);
  }
  return S;
}

namespace {

void validate_order_p(const CpAction& act) {
  check(well_formed(act.G, act.T), "catalog: ill-formed action matrix");
  check(!(act.T == identity_endo(act.G)), "catalog: expected a nontrivial action");
  check(endo_pow(act.G, act.T, act.p) == identity_endo(act.G),
        "catalog: action matrix does not have order p");
}

std::vector<CpAction> catalog_elementary(const AbelianGroup& G, i64 p) {
  int n = G.rank();
  std::vector<CpAction> out;
  out.push_back({G, p, identity_endo(G), "trivial"});
  if (n == 1) return out;
  if (p == 2) {
    // One nontrivial class: swap two coordinates, fix the rest.
    Endo T = identity_endo(G);
    T.at(0, 0) = T.at(1, 1) = 0;
    T.at(0, 1) = T.at(1, 0) = 1;
    out.push_back({G, p, T, "swap"});
    return out;
  }
  // p odd: classes of order-p matrices over F_p correspond to Jordan types
  // with blocks of size <= p; for rank <= 3 that is one block of size 2
  // (plus fixed space) and, in rank 3, one block of size 3.
  {
    Endo T = identity_endo(G);
    T.at(1, 0) = 1;
    out.push_back({G, p, T, "jordan-2"});
  }
  if (n == 3) {
    Endo T = identity_endo(G);
    T.at(1, 0) = 1;
    T.at(2, 1) = 1;
    out.push_back({G, p, T, "jordan-3"});
  }
  for (size_t i = 1; i < out.size(); ++i) validate_order_p(out[i]);
  return out;
}

// Z_{p^e} + Z_p, p odd, e >= 2: six classes. Coordinates are arranged so
// that index iE carries order p^e and index iP carries order p.
std::vector<CpAction> catalog_pep(const AbelianGroup& G, i64 p, int iE, int iP) {
  i64 pe = G.orders[iE];
  i64 pe1 = pe / p;  // p^(e-1)
  i64 zeta = 2;
  while (mod_pow(zeta, (p - 1) / 2, p) == 1) ++zeta;  // least non-residue

  auto mk = [&](i64 aEE, i64 aEP, i64 aPE, i64 aPP, const std::string& fam) {
    Endo T = zero_endo(G);
    T.at(iE, iE) = mod_reduce(aEE, pe);
    T.at(iE, iP) = mod_reduce(aEP, pe);
    T.at(iP, iE) = mod_reduce(aPE, p);
    T.at(iP, iP) = mod_reduce(aPP, p);
    return CpAction{G, p, T, fam};
  };

  std::vector<CpAction> out;
  out.push_back({G, p, identity_endo(G), "trivial"});
  out.push_back(mk(1 + pe1, 0, 0, 1, "unit-scalar"));
  out.push_back(mk(1, pe1, 0, 1, "shear-to-socle"));
  out.push_back(mk(1, 0, 1, 1, "shear-to-small"));
  out.push_back(mk(1, pe1, 1, 1, "mixed-square"));
  out.push_back(mk(1, pe1, zeta, 1, "mixed-nonsquare"));
  for (size_t i = 1; i < out.size(); ++i) validate_order_p(out[i]);
  return out;
}

// Z_n x Z_n with n odd, p = 2: per prime component the involution is
// conjugate to +1, -1 or diag(1, -1); classes are the sign patterns.
std::vector<CpAction> catalog_odd_square(const AbelianGroup& G,
                                         const std::map<i64, std::vector<int>>& comps) {
  std::vector<i64> primes;
  for (const auto& [q, idx] : comps) primes.push_back(q);
  int w = static_cast<int>(primes.size());
  std::vector<CpAction> out;
  Vec pattern(w, 0);  // 0: +1, 1: diag(1,-1), 2: -1  (per prime)
  while (true) {
    Endo T = identity_endo(G);
    std::vector<std::string> parts;
    bool nontrivial = false;
    for (int t = 0; t < w; ++t) {
      const auto& idx = comps.at(primes[t]);
      i64 d = G.orders[idx[0]];
      if (pattern[t] >= 1) {
        T.at(idx[1], idx[1]) = d - 1;
        nontrivial = true;
      }
      if (pattern[t] == 2) T.at(idx[0], idx[0]) = d - 1;
      parts.push_back(pattern[t] == 0 ? "fix" : (pattern[t] == 1 ? "split" : "negate"));
    }
    CpAction act{G, 2, T, nontrivial ? join_names(parts) : "trivial"};
    if (nontrivial) validate_order_p(act);
    out.push_back(act);
    int t = 0;
    while (t < w && ++pattern[t] == 3) pattern[t++] = 0;
    if (t == w) break;
  }
  return out;
}

std::vector<CpAction> catalog_generic(const AbelianGroup& G, i64 p, i64 budget) {
  int n = G.rank();
  // Constrained entry space.
  std::vector<i64> entry_mod(static_cast<size_t>(n) * n), step(static_cast<size_t>(n) * n);
  i64 total = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      i64 g = gcd_i64(G.orders[i], G.orders[j]);
      entry_mod[static_cast<size_t>(i) * n + j] = g;
      step[static_cast<size_t>(i) * n + j] = G.orders[i] / g;
      total *= g;
      if (total > budget)
        throw UnsupportedError("no closed-form action catalog and the endomorphism scan "
                               "exceeds its budget for " + group_name(G));
    }

  Endo id = identity_endo(G);
  std::set<Endo> order_p;
  Endo M = zero_endo(G);
  for (i64 c = 0; c < total; ++c) {
    i64 rest = c;
    for (int v = n * n - 1; v >= 0; --v) {
      M.a[v] = mod_reduce(step[v] * (rest % entry_mod[v]), G.orders[v / n]);
      rest /= entry_mod[v];
    }
    if (M == id) continue;
    if (!(endo_pow(G, M, p) == id)) continue;
    if (!is_automorphism(G, M)) continue;
    order_p.insert(M);
  }

  // Conjugacy under Aut(G) via generator BFS, then merge a class with the
  // classes of its nontrivial powers (twisting the acting generator).
  std::vector<Endo> gens = aut_generators(G);
  std::vector<Endo> gen_inv;
  for (const Endo& g : gens) {
    auto gi = endo_inverse(G, g);
    check(gi.has_value(), "catalog: generator is not invertible");
    gen_inv.push_back(*gi);
  }
  std::set<Endo> unseen = order_p;
  std::vector<CpAction> out;
  out.push_back({G, p, id, "trivial"});
  while (!unseen.empty()) {
    Endo seed = *unseen.begin();
    std::set<Endo> cls;
    std::vector<Endo> frontier;
    auto push = [&](Endo x) {
      if (cls.insert(x).second) frontier.push_back(std::move(x));
    };
    push(seed);
    for (i64 k = 2; k < p; ++k) push(endo_pow(G, seed, k));
    while (!frontier.empty()) {
      Endo x = frontier.back();
      frontier.pop_back();
      for (size_t t = 0; t < gens.size(); ++t)
        push(compose(G, gens[t], compose(G, x, gen_inv[t])));
      for (i64 k = 2; k < p; ++k) push(endo_pow(G, x, k));
    }
    for (const Endo& x : cls) unseen.erase(x);
    out.push_back({G, p, *cls.begin(), "generic"});  // lex-least representative
  }
  std::sort(out.begin() + 1, out.end(),
            [](const CpAction& a, const CpAction& b) { return a.T < b.T; });
  return out;
}

}  // namespace

std::vector<CpAction> catalog_actions(const AbelianGroup& G, i64 p) {
  check(is_prime(p), "catalog: p must be prime");
  if (G.order() > 1 && p > G.smallest_prime())
    throw UnsupportedError("p = " + std::to_string(p) +
                           " exceeds the smallest prime dividing |" + group_name(G) + "|");
  int n = G.rank();

  bool elementary_p = true;
  for (i64 d : G.orders) elementary_p = elementary_p && d == p;
  if (elementary_p && n <= 3) return catalog_elementary(G, p);

  if (p % 2 == 1 && n == 2) {
    int iE = G.orders[0] >= G.orders[1] ? 0 : 1;
    int iP = 1 - iE;
    i64 pe = G.orders[iE];
    if (G.orders[iP] == p && pe % p == 0 && pe > p) {
      bool power_of_p = true;
      for (i64 v = pe; v > 1; v /= p) power_of_p = power_of_p && v % p == 0;
      if (power_of_p) return catalog_pep(G, p, iE, iP);
    }
  }

  if (p == 2 && G.order() % 2 == 1) {
    auto comps = primary_indices(G);
    bool square = n % 2 == 0;
    for (const auto& [q, idx] : comps)
      square = square && idx.size() == 2 && G.orders[idx[0]] == G.orders[idx[1]];
    if (square) return catalog_odd_square(G, comps);
  }

  return catalog_generic(G, p, 65536);
}

}  // namespace hopfext
