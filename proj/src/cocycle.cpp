#include "hopfext/cocycle.hpp"

#include <numeric>

namespace hopfext {

CocycleTable zero_table(const AbelianGroup& G, i64 m) {
  CocycleTable z;
  z.G = G;
  z.m = m;
  z.e.assign(G.order() * G.order(), 0);
  return z;
}

static void check_same_shape(const CocycleTable& x, const CocycleTable& y) {
  check(x.m == y.m && x.e.size() == y.e.size(), "cocycle tables have mismatched shape");
}

CocycleTable table_add(const CocycleTable& x, const CocycleTable& y) {
  check_same_shape(x, y);
  CocycleTable z = x;
  for (size_t i = 0; i < z.e.size(); ++i) z.e[i] = mod_reduce(z.e[i] + y.e[i], z.m);
  return z;
}

CocycleTable table_sub(const CocycleTable& x, const CocycleTable& y) {
  check_same_shape(x, y);
  CocycleTable z = x;
  for (size_t i = 0; i < z.e.size(); ++i) z.e[i] = mod_reduce(z.e[i] - y.e[i], z.m);
  return z;
}

CocycleTable table_neg(const CocycleTable& x) {
  CocycleTable z = x;
  for (auto& v : z.e) v = mod_reduce(-v, z.m);
  return z;
}

CocycleTable table_scale(i64 k, const CocycleTable& x) {
  CocycleTable z = x;
  for (auto& v : z.e) v = mod_reduce((__int128)k * v % z.m, z.m);
  return z;
}

CocycleTable pullback(const CocycleTable& z, const Endo& P) {
  i64 N = z.N();
  std::vector<i64> map((size_t)N);
  for (i64 i = 0; i < N; ++i) map[i] = z.G.index_of(apply_endo(z.G, P, z.G.element_at(i)));
  CocycleTable out = zero_table(z.G, z.m);
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b) out.at(a, b) = z.at(map[a], map[b]);
  return out;
}

CocycleTable phi_truncated(const CocycleTable& z, const Endo& T, i64 l) {
  CocycleTable acc = zero_table(z.G, z.m);
  Endo P = identity_endo(z.G);
  for (i64 i = 0; i < l; ++i) {
    acc = table_add(acc, pullback(z, P));
    P = compose(z.G, T, P);
  }
  return acc;
}

CocycleTable coboundary(const AbelianGroup& G, i64 m, const Vec& f) {
  i64 N = G.order();
  check((i64)f.size() == N, "coboundary: bad cochain length");
  CocycleTable z = zero_table(G, m);
  for (i64 a = 0; a < N; ++a) {
    Vec va = G.element_at(a);
    for (i64 b = 0; b < N; ++b) {
      i64 ab = G.index_of(G.add(va, G.element_at(b)));
      z.at(a, b) = mod_reduce(f[a] + f[b] - f[ab], m);
    }
  }
  return z;
}

CocycleTable antisymmetrization(const CocycleTable& z) {
  CocycleTable out = zero_table(z.G, z.m);
  i64 N = z.N();
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b) out.at(a, b) = mod_reduce(z.at(a, b) - z.at(b, a), z.m);
  return out;
}

bool is_cocycle(const CocycleTable& z) {
  i64 N = z.N();
  std::vector<i64> sum((size_t)N * N);  // index of a+b
  for (i64 a = 0; a < N; ++a) {
    Vec va = z.G.element_at(a);
    for (i64 b = 0; b < N; ++b) sum[a * N + b] = z.G.index_of(z.G.add(va, z.G.element_at(b)));
  }
  for (i64 a = 0; a < N; ++a)
    for (i64 b = 0; b < N; ++b) {
      i64 ab = sum[a * N + b];
      for (i64 c = 0; c < N; ++c) {
        i64 bc = sum[b * N + c];
        if (mod_reduce(z.at(b, c) - z.at(ab, c) + z.at(a, bc) - z.at(a, b), z.m) != 0)
          return false;
      }
    }
  return true;
}

bool is_normalized(const CocycleTable& z) {
  i64 N = z.N();
  i64 id = z.G.index_of(z.G.zero());
  for (i64 a = 0; a < N; ++a)
    if (z.at(id, a) != 0 || z.at(a, id) != 0) return false;
  return true;
}

bool is_symmetric(const CocycleTable& z) {
  i64 N = z.N();
  for (i64 a = 0; a < N; ++a)
    for (i64 b = a + 1; b < N; ++b)
      if (z.at(a, b) != z.at(b, a)) return false;
  return true;
}

AltForm zero_form(const AbelianGroup& G) {
  AltForm f;
  f.n = G.rank();
  f.b.assign((size_t)f.n * (f.n - 1) / 2, 0);
  return f;
}

Vec alt_moduli(const AbelianGroup& G) {
  int n = G.rank();
  Vec mods((size_t)n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      mods[AltForm::pos(n, i, j)] = std::gcd(G.orders[i], G.orders[j]);
  return mods;
}

AltForm form_reduce(const AbelianGroup& G, AltForm f) {
  Vec mods = alt_moduli(G);
  for (size_t k = 0; k < f.b.size(); ++k) f.b[k] = mod_reduce(f.b[k], mods[k]);
  return f;
}

AltForm form_add(const AbelianGroup& G, const AltForm& x, const AltForm& y) {
  AltForm z = x;
  for (size_t k = 0; k < z.b.size(); ++k) z.b[k] += y.b[k];
  return form_reduce(G, z);
}

AltForm form_scale(const AbelianGroup& G, i64 k, const AltForm& x) {
  AltForm z = x;
  for (auto& v : z.b) v *= k;
  return form_reduce(G, z);
}

i64 form_eval(const AbelianGroup& G, const AltForm& f, const Vec& a, const Vec& b, i64 m) {
  int n = G.rank();
  i64 acc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      i64 g = std::gcd(G.orders[i], G.orders[j]);
      i64 coef = mod_reduce(f.get(i, j), g);
      i64 cross = mod_reduce((__int128)a[i] * b[j] % g - (__int128)a[j] * b[i] % g, g);
      acc = mod_reduce(acc + (__int128)coef * cross % m * (m / g) % m, m);
    }
  return acc;
}

CocycleTable form_table(const AbelianGroup& G, const AltForm& f, i64 m) {
  CocycleTable z = zero_table(G, m);
  i64 N = G.order();
  for (i64 a = 0; a < N; ++a) {
    Vec va = G.element_at(a);
    for (i64 b = 0; b < N; ++b) z.at(a, b) = form_eval(G, f, va, G.element_at(b), m);
  }
  return z;
}

AltForm form_pullback(const AbelianGroup& G, const AltForm& f, const Endo& P) {
  int n = G.rank();
  i64 m = G.exponent();
  AltForm out = zero_form(G);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec ei(G.rank(), 0), ej(G.rank(), 0);
      ei[i] = 1;
      ej[j] = 1;
      i64 v = form_eval(G, f, apply_endo(G, P, ei), apply_endo(G, P, ej), m);
      i64 g = std::gcd(G.orders[i], G.orders[j]);
      check(v % (m / g) == 0, "form_pullback: value escapes the coefficient lattice");
      out.b[AltForm::pos(n, i, j)] = mod_reduce(v / (m / g), g);
    }
  return out;
}

AltForm form_from_table(const CocycleTable& z) {
  const AbelianGroup& G = z.G;
  int n = G.rank();
  AltForm f = zero_form(G);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      i64 v = z.at(G.index_of(ei), G.index_of(ej));
      i64 g = std::gcd(G.orders[i], G.orders[j]);
      check(v % (z.m / g) == 0, "form_from_table: generator value not in the lattice");
      f.b[AltForm::pos(n, i, j)] = mod_reduce(v / (z.m / g), g);
    }
  check(form_table(G, f, z.m) == z, "form_from_table: table is not bimultiplicative alternating");
  return f;
}

CocycleTable bilinear_table(const AbelianGroup& G, i64 m, const std::vector<Vec>& c) {
  int n = G.rank();
  i64 N = G.order();
  CocycleTable z = zero_table(G, m);
  for (i64 a = 0; a < N; ++a) {
    Vec va = G.element_at(a);
    for (i64 b = 0; b < N; ++b) {
      Vec vb = G.element_at(b);
      i64 acc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          i64 g = std::gcd(G.orders[i], G.orders[j]);
          i64 coef = mod_reduce(c[i][j], g);
          if (coef == 0) continue;
          acc = mod_reduce(acc + (__int128)coef * va[i] % m * vb[j] % m * (m / g) % m, m);
        }
      z.at(a, b) = acc;
    }
  }
  return z;
}

CocycleTable ordered_lift(const AbelianGroup& G, const AltForm& f, i64 m) {
  int n = G.rank();
  std::vector<Vec> c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c[i][j] = f.get(i, j);
  return bilinear_table(G, m, c);
}

CochainSolution solve_coboundary(const CocycleTable& b) {
  const AbelianGroup& G = b.G;
  i64 N = G.order();
  i64 mf = b.m * G.exponent();
  i64 lift = mf / b.m;
  check(is_symmetric(b), "solve_coboundary: input not symmetric");
  Vec f((size_t)N, 0);
  int n = G.rank();
  // values on generators: d_i * f(e_i) telescopes along the cyclic factor
  Vec fgen(n, 0);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    i64 ei = G.index_of(e);
    i64 S = 0;
    Vec pow = e;
    for (i64 k = 1; k < G.orders[i]; ++k) {
      S = mod_reduce(S + b.at(G.index_of(pow), ei) * lift, mf);
      pow = G.add(pow, e);
    }
    check(S % G.orders[i] == 0, "solve_coboundary: not a coboundary (generator telescope)");
    fgen[i] = S / G.orders[i];  // a solution of d_i x = S mod mf
  }
  // extend along the canonical factorization a = a' + e_i (last nonzero slot)
  for (i64 idx = 1; idx < N; ++idx) {
    Vec a = G.element_at(idx);
    int i = n - 1;
    while (a[i] == 0) --i;
    Vec aprev = a;
    aprev[i] -= 1;
    Vec e(n, 0);
    e[i] = 1;
    i64 prev = G.index_of(aprev);
    f[idx] = mod_reduce(f[prev] + fgen[i] - b.at(prev, G.index_of(e)) * lift, mf);
  }
  // full verification
  CocycleTable d = coboundary(G, mf, f);
  for (size_t k = 0; k < d.e.size(); ++k)
    check(d.e[k] == mod_reduce(b.e[k] * lift, mf), "solve_coboundary: verification failed");
  return {std::move(f), mf};
}

Vec phi_cochain(const AbelianGroup& G, const Vec& f, i64 mf, const Endo& T, i64 p) {
  i64 N = G.order();
  Vec out((size_t)N, 0);
  Endo P = identity_endo(G);
  for (i64 i = 0; i < p; ++i) {
    for (i64 a = 0; a < N; ++a)
      out[a] = mod_reduce(out[a] + f[G.index_of(apply_endo(G, P, G.element_at(a)))], mf);
    P = compose(G, T, P);
  }
  return out;
}

Vec character_coords(const AbelianGroup& G, const Vec& f, i64 mf) {
  int n = G.rank();
  Vec coords(n, 0);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    i64 v = f[G.index_of(e)];
    check(v % (mf / G.orders[i]) == 0, "character_coords: generator value not a d_i-th root");
    coords[i] = v / (mf / G.orders[i]);
  }
  // verify multiplicativity everywhere
  for (i64 a = 0; a < G.order(); ++a)
    check(f[a] == pair_exponent(G, coords, G.element_at(a), mf),
          "character_coords: cochain is not a character");
  return coords;
}

}  // namespace hopfext
