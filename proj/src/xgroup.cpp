#include "hopfext/xgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hopfext {

namespace {

constexpr i64 kAltSpaceBudget = 2000000;
constexpr i64 kGroupSizeBudget = 4096;

Vec coset_key(const AbelianGroup& G, const std::vector<Vec>& N, const Vec& chi) {
  Vec best = G.reduce(chi);
  for (const Vec& nu : N) {
    Vec cand = G.add(chi, nu);
    if (cand < best) best = cand;
  }
  return best;
}

// Character coordinates live in the same coordinate system as G itself
// (chi_i mod orders[i]), so group arithmetic on them reuses G.

}  // namespace

AbelianBasis abelian_basis(const std::vector<Vec>& elements,
                           const std::function<Vec(const Vec&, const Vec&)>& add,
                           const Vec& zero) {
  AbelianBasis out;
  std::set<Vec> span{zero};
  size_t total = elements.size();
  check(total >= 1, "abelian_basis: empty element list");
  while (span.size() < total) {
    // Quotient order of each element modulo the current span.
    i64 best_ord = 0;
    for (const Vec& e : elements) {
      i64 c = 1;
      Vec acc = e;
      while (!span.count(acc)) {
        acc = add(acc, e);
        ++c;
        check(c <= static_cast<i64>(total), "abelian_basis: addition does not close");
      }
      if (c > best_ord) best_ord = c;
    }
    check(best_ord > 1, "abelian_basis: no element enlarges the span");
    // Among elements of maximal quotient order, pick one whose cyclic group
    // meets the span trivially (one always exists: the span stays a direct
    // summand throughout).
    const Vec* pick = nullptr;
    for (const Vec& e : elements) {
      i64 c = 1;
      Vec acc = e;
      while (!span.count(acc)) {
        acc = add(acc, e);
        ++c;
      }
      if (c == best_ord && acc == zero) {
        pick = &e;
        break;
      }
    }
    check(pick != nullptr, "abelian_basis: no independent element of maximal order");
    out.gens.push_back(*pick);
    out.orders.push_back(best_ord);
    std::set<Vec> grown;
    for (const Vec& s : span) {
      Vec acc = s;
      for (i64 c = 0; c < best_ord; ++c) {
        grown.insert(acc);
        acc = add(acc, *pick);
      }
    }
    check(grown.size() == span.size() * static_cast<size_t>(best_ord),
          "abelian_basis: span growth mismatch");
    span = std::move(grown);
  }
  return out;
}

i64 XGroup::size() const {
  i64 s = 1;
  for (i64 d : orders) s *= d;
  return s;
}

RawX XGroup::raw_zero() const {
  return RawX{Vec(qorders.size(), 0), Vec(alt_orders.size(), 0)};
}

RawX XGroup::raw_reduce(RawX r) const {
  for (size_t i = 0; i < r.q.size(); ++i) r.q[i] = mod_reduce(r.q[i], qorders[i]);
  for (size_t i = 0; i < r.alt.size(); ++i) r.alt[i] = mod_reduce(r.alt[i], alt_orders[i]);
  return r;
}

RawX XGroup::raw_add(const RawX& a, const RawX& b) const {
  RawX r = raw_zero();
  for (size_t i = 0; i < r.q.size(); ++i) r.q[i] = a.q[i] + b.q[i];
  for (size_t i = 0; i < r.alt.size(); ++i) r.alt[i] = a.alt[i] + b.alt[i];
  if (!halved) {
    // Doubling a transversal element lands in the character part.
    for (size_t i = 0; i < r.alt.size(); ++i)
      if (a.alt[i] % 2 == 1 && b.alt[i] % 2 == 1)
        for (size_t j = 0; j < r.q.size(); ++j) r.q[j] += carry_q[i][j];
  }
  return raw_reduce(r);
}

RawX XGroup::raw_scale(i64 k, const RawX& a) const {
  check(k >= 0, "raw_scale: negative multiplier");
  // Small orders throughout; repeated addition is exact and cheap.
  RawX acc = raw_zero();
  for (i64 c = 0; c < k; ++c) acc = raw_add(acc, a);
  return acc;
}

RawX XGroup::raw_of(const Vec& coords) const {
  check(coords.size() == orders.size(), "raw_of: coordinate rank mismatch");
  RawX acc = raw_zero();
  for (size_t r = 0; r < basis.size(); ++r) {
    i64 c = mod_reduce(coords[r], orders[r]);
    for (i64 t = 0; t < c; ++t) acc = raw_add(acc, basis[r]);
  }
  return acc;
}

Vec XGroup::coords_of(const RawX& r) const {
  auto it = raw_to_coords.find(raw_reduce(r).key());
  check(it != raw_to_coords.end(), "coords_of: element outside the carrier");
  return it->second;
}

CocycleTable XGroup::representative_raw(const RawX& r) const {
  const AbelianGroup& G = act.G;
  i64 N = G.order();
  // Character of the chosen coset representative.
  Vec chi = G.zero();
  for (size_t i = 0; i < qgens.size(); ++i)
    chi = G.add(chi, G.scale(mod_reduce(r.q[i], qorders[i]), qgens[i]));

  // A 1-cochain with truncated norm equal to chi: put the full value on one
  // point of each free T-orbit; divide by p on fixed points.
  Vec f(N, 0);
  std::vector<char> visited(N, 0);
  for (i64 idx = 0; idx < N; ++idx) {
    if (visited[idx]) continue;
    std::vector<i64> orbit;
    i64 cur = idx;
    do {
      orbit.push_back(cur);
      visited[cur] = 1;
      cur = G.index_of(apply_endo(G, act.T, G.element_at(cur)));
    } while (cur != idx);
    i64 val = pair_exponent(G, chi, G.element_at(idx), m);
    if (orbit.size() == 1) {
      check(val % act.p == 0, "representative: fixed-point value not divisible by p");
      f[idx] = val / act.p;
    } else {
      check(static_cast<i64>(orbit.size()) == act.p, "representative: bad orbit size");
      f[idx] = val;
    }
  }
  CocycleTable z = coboundary(G, m, f);

  if (halved) {
    AltForm gamma = zero_form(G);
    for (size_t i = 0; i < alt_basis.size(); ++i)
      gamma = form_add(G, gamma,
                       form_scale(G, mod_reduce(r.alt[i], alt_orders[i]), alt_basis[i]));
    z = table_add(z, form_table(G, gamma, m));
  } else {
    for (size_t i = 0; i < transversal.size(); ++i)
      if (mod_reduce(r.alt[i], 2) == 1) z = table_add(z, transversal[i]);
  }
  return z;
}

CocycleTable XGroup::representative(const Vec& coords) const {
  return representative_raw(raw_of(coords));
}

namespace {

// Character-part coordinates of a symmetric table in Z^2_N.
Vec char_part_q(const XGroup& X, const CocycleTable& sym) {
  const AbelianGroup& G = X.act.G;
  check(is_symmetric(sym), "decompose: residual table is not symmetric");
  CochainSolution s = solve_coboundary(sym);
  Vec chi = phi_cochain(G, s.f, s.m, X.act.T, X.act.p);
  Vec coords = character_coords(G, chi, s.m);
  // Must be a fixed character (membership in the carrier).
  Endo D = dual_endo(G, X.act.T);
  check(apply_endo(G, D, coords) == coords, "decompose: character part is not fixed");
  Vec key = coset_key(G, X.norm_subgroup, coords);
  auto it = X.coset_coords.find(key);
  check(it != X.coset_coords.end(), "decompose: character class outside the carrier");
  return it->second;
}

}  // namespace

RawX XGroup::decompose_raw(const CocycleTable& z) const {
  const AbelianGroup& G = act.G;
  check(z.m == m, "decompose: modulus mismatch");
  // Full cocycle validation is cubic in |G| and is skipped here: the
  // antisymmetrization must be bimultiplicative (checked in form_from_table)
  // and the symmetric residue must split (verified inside solve_coboundary).
  check(is_normalized(z), "decompose: table is not normalized");
  AltForm beta = form_from_table(antisymmetrization(z));

  RawX r = raw_zero();
  CocycleTable sym = z;
  if (halved) {
    AltForm gamma = zero_form(G);
    if (!alt_basis.empty()) {
      i64 inv2 = mod_inverse(2, G.exponent());  // odd exponent here
      gamma = form_scale(G, inv2, beta);
      auto it = alt_coords.find(gamma.b);
      check(it != alt_coords.end(), "decompose: alternating part outside the carrier");
      r.alt = it->second;
    } else {
      check(beta == zero_form(G), "decompose: unexpected alternating part");
    }
    sym = table_sub(z, form_table(G, gamma, m));
  } else {
    auto it = alt_coords.find(beta.b);
    check(it != alt_coords.end(), "decompose: alternating part outside the carrier");
    r.alt = it->second;
    for (size_t i = 0; i < transversal.size(); ++i)
      if (r.alt[i] == 1) sym = table_sub(sym, transversal[i]);
  }
  r.q = char_part_q(*this, sym);
  return raw_reduce(r);
}

Vec XGroup::decompose(const CocycleTable& z) const { return coords_of(decompose_raw(z)); }

bool XGroup::cocommutative(const Vec& coords) const {
  RawX r = raw_of(coords);
  for (i64 c : r.alt)
    if (c != 0) return false;
  return true;
}

namespace {

// Transversal tables for the non-halved (even |G|, nontrivial alternating
// kernel) carrier; only the trivial action and the elementary swap are
// supported.
std::vector<CocycleTable> build_transversal(const CpAction& act, i64 m,
                                            const std::vector<AltForm>& altN) {
  const AbelianGroup& G = act.G;
  int n = G.rank();
  std::vector<CocycleTable> out;
  if (act.trivial()) {
    // One order-2 lift per 2-torsion coefficient of the alternating group.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        i64 g = std::gcd(G.orders[i], G.orders[j]);
        if (g % 2 != 0) continue;
        AltForm beta = zero_form(G);
        beta.b[AltForm::pos(n, i, j)] = g / 2;
        out.push_back(ordered_lift(G, beta, m));
      }
  } else if (act.family == "swap") {
    check(m == 4, "swap transversal: unexpected modulus");
    auto unit_form = [&](int i, int j) {
      AltForm beta = zero_form(G);
      beta.b[AltForm::pos(n, i, j)] = 1;
      return beta;
    };
    // Orbit pairs {0,j} ~ {1,j}: truncated-norm images of a one-pair lift.
    for (int j = 2; j < n; ++j)
      out.push_back(phi_truncated(ordered_lift(G, unit_form(0, j), m), act.T, 2));
    // Pairs inside the fixed block.
    for (int i = 2; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(ordered_lift(G, unit_form(i, j), m));
    // The swapped pair itself needs a quadratic correction to land in Z^2_N.
    {
      Vec g(G.order(), 0);
      for (i64 idx = 0; idx < G.order(); ++idx) {
        Vec a = G.element_at(idx);
        g[idx] = mod_reduce(a[0] + a[1] + a[0] * a[1], m);
      }
      out.push_back(table_add(ordered_lift(G, unit_form(0, 1), m), coboundary(G, m, g)));
    }
  } else {
    throw UnsupportedError("no cocycle transversal construction for this action on " +
                           group_name(G));
  }
  return out;
}

}  // namespace

XGroup build_x(const CpAction& act) {
  XGroup X;
  X.act = act;
  const AbelianGroup& G = act.G;
  i64 p = act.p;
  X.m = p * G.exponent();
  check(G.order() <= kGroupSizeBudget, "build_x: group too large");

  // Fixed characters and the norm subgroup.
  Endo D = dual_endo(G, act.T);
  Endo Dn = dual_endo(G, norm_endo(act));
  std::vector<Vec> fixed;
  std::set<Vec> norm_set;
  for (i64 idx = 0; idx < G.order(); ++idx) {
    Vec chi = G.element_at(idx);
    if (apply_endo(G, D, chi) == chi) fixed.push_back(chi);
    norm_set.insert(apply_endo(G, Dn, chi));
  }
  X.norm_subgroup.assign(norm_set.begin(), norm_set.end());
  for (const Vec& nu : X.norm_subgroup)
    check(apply_endo(G, D, nu) == nu, "build_x: norm character is not fixed");

  // Coset keys of the quotient Q.
  std::set<Vec> key_set;
  for (const Vec& chi : fixed) key_set.insert(coset_key(G, X.norm_subgroup, chi));
  std::vector<Vec> keys(key_set.begin(), key_set.end());
  auto q_add = [&](const Vec& a, const Vec& b) {
    return coset_key(G, X.norm_subgroup, G.add(a, b));
  };
  AbelianBasis QB = abelian_basis(keys, q_add, coset_key(G, X.norm_subgroup, G.zero()));
  X.qgens = QB.gens;
  X.qorders = QB.orders;
  {
    Vec c(X.qorders.size(), 0);
    while (true) {
      Vec chi = G.zero();
      for (size_t i = 0; i < X.qgens.size(); ++i)
        chi = G.add(chi, G.scale(c[i], X.qgens[i]));
      Vec key = coset_key(G, X.norm_subgroup, chi);
      check(!X.coset_coords.count(key), "build_x: quotient coordinates collide");
      X.coset_coords[key] = c;
      size_t t = 0;
      while (t < c.size() && ++c[t] == X.qorders[t]) c[t++] = 0;
      if (t == c.size()) break;
    }
    check(X.coset_coords.size() == keys.size(), "build_x: quotient coordinates incomplete");
  }

  // Norm-kernel of the alternating forms.
  Vec mods = alt_moduli(G);
  i64 alt_space = 1;
  for (i64 d : mods) {
    alt_space *= d;
    check(alt_space <= kAltSpaceBudget, "build_x: alternating form space too large");
  }
  std::vector<Endo> Tpow;
  {
    Endo pw = identity_endo(G);
    for (i64 i = 0; i < p; ++i) {
      Tpow.push_back(pw);
      pw = compose(G, pw, act.T);
    }
  }
  AltForm zf = zero_form(G);
  std::vector<AltForm> altN;
  for (i64 code = 0; code < alt_space; ++code) {
    AltForm beta = zf;
    i64 rest = code;
    for (size_t t = 0; t < mods.size(); ++t) {
      beta.b[t] = rest % mods[t];
      rest /= mods[t];
    }
    AltForm img = zf;
    for (i64 i = 0; i < p; ++i) img = form_add(G, img, form_pullback(G, beta, Tpow[i]));
    if (img == zf) altN.push_back(beta);
  }

  X.halved = (G.order() % 2 == 1) || altN.size() == 1;
  if (X.halved) {
    std::vector<Vec> elems;
    for (const AltForm& b : altN) elems.push_back(b.b);
    auto a_add = [&](const Vec& x, const Vec& y) {
      AltForm fx = zf, fy = zf;
      fx.b = x;
      fy.b = y;
      return form_add(G, fx, fy).b;
    };
    AbelianBasis AB = abelian_basis(elems, a_add, zf.b);
    for (const Vec& g : AB.gens) {
      AltForm f = zf;
      f.b = g;
      X.alt_basis.push_back(f);
    }
    X.alt_orders = AB.orders;
    Vec c(X.alt_orders.size(), 0);
    while (true) {
      AltForm f = zf;
      for (size_t i = 0; i < X.alt_basis.size(); ++i)
        f = form_add(G, f, form_scale(G, c[i], X.alt_basis[i]));
      check(!X.alt_coords.count(f.b), "build_x: alternating coordinates collide");
      X.alt_coords[f.b] = c;
      size_t t = 0;
      while (t < c.size() && ++c[t] == X.alt_orders[t]) c[t++] = 0;
      if (t == c.size()) break;
    }
    check(X.alt_coords.size() == altN.size(), "build_x: alternating coordinates incomplete");
  } else {
    check(p == 2, "build_x: even carrier requires p = 2");
    X.transversal = build_transversal(act, X.m, altN);
    size_t k = X.transversal.size();
    check((static_cast<size_t>(1) << k) == altN.size(),
          "build_x: transversal size does not match the alternating kernel");
    for (const CocycleTable& v : X.transversal) {
      check(is_cocycle(v) && is_normalized(v), "build_x: transversal entry is not a cocycle");
      check(is_symmetric(phi_truncated(v, act.T, 2)),
            "build_x: transversal entry is outside Z^2_N");
      X.alt_basis.push_back(form_from_table(antisymmetrization(v)));
      X.alt_orders.push_back(2);
    }
    // Bit coordinates over the antisymmetrization images.
    for (size_t code = 0; code < altN.size(); ++code) {
      AltForm f = zf;
      Vec bits(k, 0);
      for (size_t i = 0; i < k; ++i) {
        bits[i] = (code >> i) & 1;
        if (bits[i]) f = form_add(G, f, X.alt_basis[i]);
      }
      check(!X.alt_coords.count(f.b), "build_x: transversal images are dependent");
      X.alt_coords[f.b] = bits;
    }
    // Carries: the character class of each doubled transversal entry.
    for (const CocycleTable& v : X.transversal) {
      CocycleTable dbl = table_scale(2, v);
      X.carry_q.push_back(char_part_q(X, dbl));
    }
  }

  // Public basis over the raw coordinates.
  if (X.halved) {
    X.orders = X.qorders;
    X.orders.insert(X.orders.end(), X.alt_orders.begin(), X.alt_orders.end());
    for (size_t i = 0; i < X.orders.size(); ++i) {
      RawX b = X.raw_zero();
      if (i < X.qorders.size())
        b.q[i] = 1;
      else
        b.alt[i - X.qorders.size()] = 1;
      X.basis.push_back(b);
    }
    Vec c(X.orders.size(), 0);
    while (true) {
      RawX r = X.raw_zero();
      for (size_t i = 0; i < X.qorders.size(); ++i) r.q[i] = c[i];
      for (size_t i = 0; i < X.alt_orders.size(); ++i) r.alt[i] = c[X.qorders.size() + i];
      X.raw_to_coords[r.key()] = c;
      size_t t = 0;
      while (t < c.size() && ++c[t] == X.orders[t]) c[t++] = 0;
      if (t == c.size() || c.empty()) break;
    }
  } else {
    std::vector<Vec> elems;
    {
      Vec qc(X.qorders.size(), 0);
      while (true) {
        for (size_t code = 0; code < (static_cast<size_t>(1) << X.alt_orders.size());
             ++code) {
          RawX r = X.raw_zero();
          r.q = qc;
          for (size_t i = 0; i < X.alt_orders.size(); ++i) r.alt[i] = (code >> i) & 1;
          elems.push_back(r.key());
        }
        size_t t = 0;
        while (t < qc.size() && ++qc[t] == X.qorders[t]) qc[t++] = 0;
        if (t == qc.size() || qc.empty()) break;
      }
    }
    size_t nq = X.qorders.size();
    auto split = [&](const Vec& key) {
      RawX r;
      r.q.assign(key.begin(), key.begin() + nq);
      r.alt.assign(key.begin() + nq, key.end());
      return r;
    };
    auto x_add = [&](const Vec& a, const Vec& b) {
      return X.raw_add(split(a), split(b)).key();
    };
    AbelianBasis XB = abelian_basis(elems, x_add, X.raw_zero().key());
    for (const Vec& g : XB.gens) X.basis.push_back(split(g));
    X.orders = XB.orders;
    Vec c(X.orders.size(), 0);
    while (true) {
      RawX r = X.raw_zero();
      for (size_t i = 0; i < X.basis.size(); ++i) {
        RawX term = X.raw_zero();
        for (i64 t = 0; t < c[i]; ++t) term = X.raw_add(term, X.basis[i]);
        r = X.raw_add(r, term);
      }
      check(!X.raw_to_coords.count(r.key()), "build_x: basis coordinates collide");
      X.raw_to_coords[r.key()] = c;
      size_t t = 0;
      while (t < c.size() && ++c[t] == X.orders[t]) c[t++] = 0;
      if (t == c.size() || c.empty()) break;
    }
    check(X.raw_to_coords.size() == elems.size(), "build_x: basis does not span the carrier");
  }
  return X;
}

std::vector<Vec> symmetry_matrix(const XGroup& X, const SymmetryGenerator& sg) {
  const AbelianGroup& G = X.act.G;
  i64 p = X.act.p;
  i64 l = 1;
  while (mod_reduce(l * sg.k, p) != 1) ++l;  // l = k^{-1} mod p
  auto lam_inv = endo_inverse(G, sg.lambda);
  check(lam_inv.has_value(), "symmetry_matrix: lambda is not invertible");
  std::vector<Vec> cols;
  for (const RawX& b : X.basis) {
    CocycleTable z = X.representative_raw(b);
    CocycleTable img = pullback(phi_truncated(z, X.act.T, l), *lam_inv);
    cols.push_back(X.coords_of(X.decompose_raw(img)));
  }
  return cols;
}

Vec apply_columns(const XGroup& X, const std::vector<Vec>& cols, const Vec& coords) {
  Vec out(X.orders.size(), 0);
  for (size_t r = 0; r < cols.size(); ++r)
    for (size_t i = 0; i < out.size(); ++i) out[i] += coords[r] * cols[r][i];
  for (size_t i = 0; i < out.size(); ++i) out[i] = mod_reduce(out[i], X.orders[i]);
  return out;
}

}  // namespace hopfext
