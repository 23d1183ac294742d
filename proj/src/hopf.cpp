#include "hopfext/hopf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hopfext/oracle.hpp"

namespace hopfext {

namespace {

// tpow[i][a] = index of T^i a.
std::vector<Vec> action_powers(const CpAction& act) {
  i64 N = act.G.order();
  std::vector<Vec> tpow(act.p, Vec(N));
  for (i64 a = 0; a < N; ++a) tpow[0][a] = a;
  for (i64 i = 1; i < act.p; ++i)
    for (i64 a = 0; a < N; ++a)
      tpow[i][a] = act.G.index_of(apply_endo(act.G, act.T, act.G.element_at(tpow[i - 1][a])));
  return tpow;
}

std::string basis_name(const HopfStructure& H, i64 u) {
  std::ostringstream os;
  os << "p_" << H.gpart(u) << " t^" << H.grade(u);
  return os.str();
}

using TermList = std::vector<std::pair<i64, i64>>;  // (key, exponent mod m)

void sort_terms(TermList& t) { std::sort(t.begin(), t.end()); }

// First differing entry of two sorted term lists, rendered for a witness.
std::string term_diff(const HopfStructure& H, const TermList& a, const TermList& b) {
  size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  std::ostringstream os;
  auto show = [&](const TermList& t) -> std::string {
    if (i >= t.size()) return "(no term)";
    std::ostringstream o;
    o << "key " << t[i].first << " exponent " << t[i].second;
    return o.str();
  };
  os << "lhs " << show(a) << " vs rhs " << show(b);
  return os.str();
}

std::string join_i64(const Vec& v, char sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

Vec split_i64(const std::string& s, char sep) {
  Vec out;
  if (s.empty() || s == "-") return out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, sep)) out.push_back(std::stoll(part));
  return out;
}

// Word in the character generators from an exponent vector, e.g. "x1 x3^2".
std::string word_str(const AbelianGroup& G, const Vec& exps) {
  std::ostringstream os;
  bool any = false;
  for (size_t j = 0; j < exps.size(); ++j) {
    i64 e = mod_reduce(exps[j], G.orders[j]);
    if (e == 0) continue;
    if (any) os << " ";
    os << "x" << (j + 1);
    if (e != 1) os << "^" << e;
    any = true;
  }
  return any ? os.str() : "1";
}

}  // namespace

HopfStructure build_hopf_from_tau(const CpAction& act, i64 m, std::vector<CocycleTable> tau,
                                  Vec coords) {
  const AbelianGroup& G = act.G;
  check(static_cast<i64>(tau.size()) == act.p, "build_hopf: need one cocycle grade per power of t");
  HopfStructure H;
  H.act = act;
  H.m = m;
  H.coords = std::move(coords);
  H.tau = std::move(tau);
  H.N = G.order();
  H.p = act.p;
  H.dim = H.N * H.p;
  std::vector<Vec> tpow = action_powers(act);

  // (p_a t^i)(p_b t^j) = [b = T^i a] p_a t^{i+j}.
  H.mult.assign(static_cast<size_t>(H.dim) * H.dim, -1);
  for (i64 a = 0; a < H.N; ++a)
    for (i64 i = 0; i < H.p; ++i) {
      i64 u = H.idx(a, i);
      i64 b = tpow[i][a];
      for (i64 j = 0; j < H.p; ++j)
        H.mult[u * H.dim + H.idx(b, j)] = H.idx(a, (i + j) % H.p);
    }

  // Delta(p_c t^i) = sum_{a+b=c} zeta^{tau(t^i; a, b)} p_a t^i (x) p_b t^i.
  H.comult.assign(H.dim, {});
  for (i64 c = 0; c < H.N; ++c)
    for (i64 i = 0; i < H.p; ++i) {
      auto& terms = H.comult[H.idx(c, i)];
      terms.reserve(H.N);
      Vec cc = G.element_at(c);
      for (i64 a = 0; a < H.N; ++a) {
        i64 b = G.index_of(G.sub(cc, G.element_at(a)));
        terms.push_back({H.tau[i].at(a, b), H.idx(a, i), H.idx(b, i)});
      }
    }

  // S(p_a t^i) = zeta^{-tau(t^i; -a, a)} p_{T^i(-a)} t^{p-i}.
  H.antipode.assign(H.dim, {});
  for (i64 a = 0; a < H.N; ++a) {
    i64 na = G.index_of(G.neg(G.element_at(a)));
    for (i64 i = 0; i < H.p; ++i)
      H.antipode[H.idx(a, i)] = {mod_reduce(-H.tau[i].at(na, a), H.m),
                                 H.idx(tpow[i][na], (H.p - i) % H.p)};
  }

  // eps(p_a t^i) = [a = 0].
  H.counit.assign(H.dim, 0);
  for (i64 i = 0; i < H.p; ++i) H.counit[H.idx(0, i)] = 1;
  return H;
}

HopfStructure build_hopf(const CpAction& act, const XGroup& X, const Vec& coords) {
  CocycleTable z = X.representative(coords);
  return build_hopf_from_tau(act, X.m, theta_expand(act, z), coords);
}

AxiomVerdict verify_axioms(const HopfStructure& H) {
  const i64 dim = H.dim;
  auto fail = [](std::string w) { return AxiomVerdict{false, std::move(w)}; };

  // Unit: 1 = sum_a p_a t^0 acts as identity on every basis element.
  for (i64 u = 0; u < dim; ++u) {
    i64 left = -1, right = -1;
    int lc = 0, rc = 0;
    for (i64 a = 0; a < H.N; ++a) {
      i64 e = H.idx(a, 0);
      if (H.mult[e * dim + u] >= 0) {
        left = H.mult[e * dim + u];
        ++lc;
      }
      if (H.mult[u * dim + e] >= 0) {
        right = H.mult[u * dim + e];
        ++rc;
      }
    }
    if (lc != 1 || left != u) return fail("unit (left) at " + basis_name(H, u));
    if (rc != 1 || right != u) return fail("unit (right) at " + basis_name(H, u));
  }

  // Associativity on all basis triples (products are single basis elements
  // or zero, so this is exact index arithmetic).
  for (i64 u = 0; u < dim; ++u)
    for (i64 v = 0; v < dim; ++v) {
      i64 uv = H.mult[u * dim + v];
      const i64* vrow = &H.mult[v * dim];
      const i64* urow = &H.mult[u * dim];
      for (i64 w = 0; w < dim; ++w) {
        i64 l = uv < 0 ? -1 : H.mult[uv * dim + w];
        i64 vw = vrow[w];
        i64 r = vw < 0 ? -1 : urow[vw];
        if (l != r)
          return fail("associativity at (" + basis_name(H, u) + ", " + basis_name(H, v) + ", " +
                      basis_name(H, w) + ")");
      }
    }

  // Coassociativity: (Delta x id)Delta = (id x Delta)Delta, compared as
  // sorted (basis-triple key, exponent) lists. For honest tables every key
  // occurs once, so list equality is exactly scalar equality; a key
  // collision would itself be reported as a mismatch.
  for (i64 u = 0; u < dim; ++u) {
    TermList lhs, rhs;
    for (const auto& t : H.comult[u]) {
      for (const auto& s : H.comult[t.x])
        lhs.push_back({(s.x * dim + s.y) * dim + t.y, mod_reduce(t.e + s.e, H.m)});
      for (const auto& s : H.comult[t.y])
        rhs.push_back({(t.x * dim + s.x) * dim + s.y, mod_reduce(t.e + s.e, H.m)});
    }
    sort_terms(lhs);
    sort_terms(rhs);
    if (lhs != rhs)
      return fail("coassociativity at " + basis_name(H, u) + ": " + term_diff(H, lhs, rhs));
  }

  // Counit: (eps x id)Delta = id = (id x eps)Delta.
  for (i64 u = 0; u < dim; ++u) {
    TermList lhs, rhs;
    for (const auto& t : H.comult[u]) {
      if (H.counit[t.x]) lhs.push_back({t.y, mod_reduce(t.e, H.m)});
      if (H.counit[t.y]) rhs.push_back({t.x, mod_reduce(t.e, H.m)});
    }
    TermList expect{{u, 0}};
    if (lhs != expect) return fail("counit (left) at " + basis_name(H, u));
    if (rhs != expect) return fail("counit (right) at " + basis_name(H, u));
  }

  // Delta is an algebra map: Delta(u)Delta(v) = Delta(uv) for all basis
  // pairs (the basis is closed under multiplication, so this is the full
  // condition). The product of term lists collapses through the sparse
  // multiplication table; keys never collide for honest tables (see above).
  std::vector<std::vector<i64>> premult(dim);  // x2 -> all x1 with x1 x2 != 0
  for (i64 x1 = 0; x1 < dim; ++x1)
    for (i64 x2 = 0; x2 < dim; ++x2)
      if (H.mult[x1 * dim + x2] >= 0) premult[x2].push_back(x1);
  // comult terms of u indexed by their left basis element.
  std::vector<std::vector<std::pair<i64, std::pair<i64, i64>>>> byx(dim);
  for (i64 u = 0; u < dim; ++u) {
    std::vector<std::vector<std::pair<i64, i64>>> index(dim);
    for (const auto& t : H.comult[u]) index[t.x].push_back({t.e, t.y});
    for (i64 v = 0; v < dim; ++v) {
      TermList lhs, rhs;
      for (const auto& t2 : H.comult[v])
        for (i64 x1 : premult[t2.x])
          for (const auto& [e1, y1] : index[x1]) {
            i64 yp = H.mult[y1 * dim + t2.y];
            if (yp < 0) continue;
            i64 xp = H.mult[x1 * dim + t2.x];
            lhs.push_back({xp * dim + yp, mod_reduce(e1 + t2.e, H.m)});
          }
      i64 uv = H.mult[u * dim + v];
      if (uv >= 0)
        for (const auto& t : H.comult[uv]) rhs.push_back({t.x * dim + t.y, mod_reduce(t.e, H.m)});
      sort_terms(lhs);
      sort_terms(rhs);
      if (lhs != rhs)
        return fail("comultiplication not multiplicative at (" + basis_name(H, u) + ", " +
                    basis_name(H, v) + "): " + term_diff(H, lhs, rhs));
    }
  }

  // Antipode: m(S x id)Delta(u) = eps(u) 1 = m(id x S)Delta(u).
  for (i64 u = 0; u < dim; ++u) {
    TermList lhs, rhs;
    for (const auto& t : H.comult[u]) {
      const auto& sx = H.antipode[t.x];
      i64 wl = H.mult[sx.x * dim + t.y];
      if (wl >= 0) lhs.push_back({wl, mod_reduce(t.e + sx.e, H.m)});
      const auto& sy = H.antipode[t.y];
      i64 wr = H.mult[t.x * dim + sy.x];
      if (wr >= 0) rhs.push_back({wr, mod_reduce(t.e + sy.e, H.m)});
    }
    TermList expect;
    if (H.counit[u])
      for (i64 a = 0; a < H.N; ++a) expect.push_back({H.idx(a, 0), 0});
    sort_terms(lhs);
    sort_terms(rhs);
    sort_terms(expect);
    if (lhs != expect)
      return fail("antipode (left) at " + basis_name(H, u) + ": " + term_diff(H, lhs, expect));
    if (rhs != expect)
      return fail("antipode (right) at " + basis_name(H, u) + ": " + term_diff(H, rhs, expect));
  }

  return {};
}

i64 grouplike_count(const HopfStructure& H) {
  i64 count = 0;
  for (i64 i = 0; i < H.p; ++i) {
    if (!is_symmetric(H.tau[i])) continue;
    // Certify: tau(t^i) = delta c is exactly solvable (possibly with c in
    // deeper roots of unity), so sum_a zeta^{c(a)} p_a t^i is grouplike and
    // its |G| character twists exhaust the grade.
    CochainSolution s = solve_coboundary(H.tau[i]);
    CocycleTable lifted = H.tau[i];
    lifted.m = s.m;
    for (i64& e : lifted.e) e *= s.m / H.m;
    check(coboundary(H.act.G, s.m, s.f) == lifted, "grouplike_count: witness failed");
    count += H.N;
  }
  return count;
}

GradedElement he_one(const HopfStructure& H) { return {0, Vec(H.N, 0)}; }

GradedElement he_character(const HopfStructure& H, const Vec& chi) {
  const AbelianGroup& G = H.act.G;
  GradedElement x{0, Vec(H.N, 0)};
  for (i64 a = 0; a < H.N; ++a) x.c[a] = pair_exponent(G, chi, G.element_at(a), H.m);
  return x;
}

GradedElement he_tbar(const HopfStructure& H) { return {1 % H.p, Vec(H.N, 0)}; }

GradedElement he_mul(const HopfStructure& H, const GradedElement& x, const GradedElement& y) {
  std::vector<Vec> tpow = action_powers(H.act);
  GradedElement z{(x.g + y.g) % H.p, Vec(H.N, 0)};
  for (i64 a = 0; a < H.N; ++a) z.c[a] = mod_reduce(x.c[a] + y.c[tpow[x.g][a]], H.m);
  return z;
}

GradedElement he_inv(const HopfStructure& H, const GradedElement& x) {
  std::vector<Vec> tpow = action_powers(H.act);
  i64 gi = (H.p - x.g) % H.p;
  GradedElement y{gi, Vec(H.N, 0)};
  for (i64 b = 0; b < H.N; ++b) y.c[tpow[x.g][b]] = mod_reduce(-x.c[b], H.m);
  check(he_mul(H, x, y) == he_one(H) && he_mul(H, y, x) == he_one(H), "he_inv: not an inverse");
  return y;
}

GradedElement he_pow(const HopfStructure& H, GradedElement x, i64 k) {
  if (k < 0) {
    x = he_inv(H, x);
    k = -k;
  }
  GradedElement r = he_one(H);
  for (i64 i = 0; i < k; ++i) r = he_mul(H, r, x);
  return r;
}

bool he_grouplike(const HopfStructure& H, const GradedElement& x) {
  const AbelianGroup& G = H.act.G;
  for (i64 a = 0; a < H.N; ++a)
    for (i64 b = 0; b < H.N; ++b) {
      i64 ab = G.index_of(G.add(G.element_at(a), G.element_at(b)));
      if (mod_reduce(x.c[a] + x.c[b] - x.c[ab], H.m) != H.tau[x.g].at(a, b)) return false;
    }
  return true;
}

std::string presentation(const HopfStructure& H) {
  const AbelianGroup& G = H.act.G;
  int n = G.rank();
  std::ostringstream os;
  os << "hopfext-presentation v1\n";
  os << "dimension " << H.dim << "\n";
  os << "group " << group_name(G) << "\n";
  os << "prime " << H.p << "\n";
  os << "modulus " << H.m << "\n";
  os << "generators:";
  for (int j = 1; j <= n; ++j) os << " x" << j;
  os << " t  (xj: character dual to group generator j; t: the section of C_p)\n";
  os << "relations:\n";
  for (int j = 0; j < n; ++j) os << "x" << (j + 1) << "^" << G.orders[j] << " = 1\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      os << "x" << (i + 1) << " x" << (j + 1) << " = x" << (j + 1) << " x" << (i + 1) << "\n";
  os << "t^" << H.p << " = 1\n";
  Endo D = dual_endo(G, H.act.T);
  for (int j = 0; j < n; ++j) {
    Vec img(n);
    for (int k = 0; k < n; ++k) img[k] = D.at(k, j);
    os << "t x" << (j + 1) << " t^-1 = " << word_str(G, img) << "\n";
  }
  os << "comultiplication:\n";
  os << "Delta(xj) = xj (x) xj\n";
  os << "Delta(t) = (sum_{a,b} zeta_" << H.m << "^tau(a,b) p_a (x) p_b)(t (x) t), tau rows:\n";
  const CocycleTable& t1 = H.tau[1 % H.p];
  for (i64 a = 0; a < H.N; ++a) {
    Vec row(H.N);
    for (i64 b = 0; b < H.N; ++b) row[b] = t1.at(a, b);
    os << join_i64(row, ',') << "\n";
  }
  os << "counit: eps(xj) = 1, eps(t) = 1\n";
  os << "antipode: S(xj) = xj^-1, S(p_a t^i) = zeta_" << H.m
     << "^{-tau(t^i; -a, a)} p_{T^i(-a)} t^{p-i}\n";
  os << "end\n";
  return os.str();
}

std::string export_structure_constants(const HopfStructure& H) {
  std::ostringstream os;
  os << "hopfext-structure-constants v1\n";
  os << "group " << join_i64(H.act.G.orders, ',') << "\n";
  os << "prime " << H.p << "\n";
  os << "action " << join_i64(H.act.T.a, ',') << "\n";
  os << "family " << H.act.family << "\n";
  os << "coords " << (H.coords.empty() ? "-" : join_i64(H.coords, ',')) << "\n";
  os << "modulus " << H.m << "\n";
  os << "dimension " << H.dim << "\n";

  // Twist section: the nonzero grades of the Hopf 2-cocycle. A zero class
  // (group algebra) has an empty twist section.
  std::vector<std::pair<i64, std::pair<std::pair<i64, i64>, i64>>> twist;
  for (i64 i = 0; i < H.p; ++i)
    for (i64 a = 0; a < H.N; ++a)
      for (i64 b = 0; b < H.N; ++b)
        if (H.tau[i].at(a, b)) twist.push_back({i, {{a, b}, H.tau[i].at(a, b)}});
  os << "twist " << twist.size() << "\n";
  for (const auto& [i, rest] : twist)
    os << i << " " << rest.first.first << " " << rest.first.second << " " << rest.second << "\n";

  i64 nmult = 0;
  for (i64 v : H.mult) nmult += v >= 0;
  os << "mult " << nmult << "\n";
  for (i64 u = 0; u < H.dim; ++u)
    for (i64 v = 0; v < H.dim; ++v)
      if (H.mult[u * H.dim + v] >= 0) os << u << " " << v << " " << H.mult[u * H.dim + v] << "\n";

  i64 ncom = 0;
  for (const auto& terms : H.comult) ncom += static_cast<i64>(terms.size());
  os << "comult " << ncom << "\n";
  for (i64 u = 0; u < H.dim; ++u)
    for (const auto& t : H.comult[u]) os << u << " " << t.x << " " << t.y << " " << t.e << "\n";

  os << "antipode " << H.dim << "\n";
  for (i64 u = 0; u < H.dim; ++u)
    os << u << " " << H.antipode[u].x << " " << H.antipode[u].e << "\n";

  Vec eps;
  for (i64 u = 0; u < H.dim; ++u)
    if (H.counit[u]) eps.push_back(u);
  os << "counit " << eps.size() << "\n";
  for (i64 u : eps) os << u << "\n";
  os << "end\n";
  return os.str();
}

HopfStructure parse_structure_constants(const std::string& text) {
  std::istringstream is(text);
  std::string line, word;
  auto next = [&](const std::string& expect_key) -> std::string {
    check(static_cast<bool>(std::getline(is, line)), "parse: unexpected end of file");
    std::istringstream ls(line);
    std::string key, rest;
    ls >> key;
    check(key == expect_key, "parse: expected '" + expect_key + "', got '" + key + "'");
    std::getline(ls, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
    return rest;
  };

  check(static_cast<bool>(std::getline(is, line)) && line == "hopfext-structure-constants v1",
        "parse: bad header");
  HopfStructure H;
  AbelianGroup G{split_i64(next("group"), ',')};
  i64 p = std::stoll(next("prime"));
  Endo T{static_cast<int>(G.rank()), split_i64(next("action"), ',')};
  std::string family = next("family");
  H.act = {G, p, T, family};
  H.coords = split_i64(next("coords"), ',');
  H.m = std::stoll(next("modulus"));
  H.dim = std::stoll(next("dimension"));
  H.N = G.order();
  H.p = p;
  check(H.dim == H.N * H.p, "parse: dimension mismatch");

  auto read_count = [&](const std::string& key) { return std::stoll(next(key)); };
  auto tuple_line = [&](size_t arity) {
    check(static_cast<bool>(std::getline(is, line)), "parse: unexpected end of file");
    Vec t = split_i64(line, ' ');
    check(t.size() == arity, "parse: malformed tuple line '" + line + "'");
    return t;
  };

  H.tau.assign(p, zero_table(G, H.m));
  for (i64 k = read_count("twist"); k > 0; --k) {
    Vec t = tuple_line(4);
    H.tau[t[0]].at(t[1], t[2]) = t[3];
  }

  H.mult.assign(static_cast<size_t>(H.dim) * H.dim, -1);
  for (i64 k = read_count("mult"); k > 0; --k) {
    Vec t = tuple_line(3);
    H.mult[t[0] * H.dim + t[1]] = t[2];
  }

  H.comult.assign(H.dim, {});
  for (i64 k = read_count("comult"); k > 0; --k) {
    Vec t = tuple_line(4);
    H.comult[t[0]].push_back({t[3], t[1], t[2]});
  }

  H.antipode.assign(H.dim, {});
  for (i64 k = read_count("antipode"); k > 0; --k) {
    Vec t = tuple_line(3);
    H.antipode[t[0]] = {t[2], t[1]};
  }

  H.counit.assign(H.dim, 0);
  for (i64 k = read_count("counit"); k > 0; --k) H.counit[tuple_line(1)[0]] = 1;
  check(next("end").empty(), "parse: trailing content after end");
  return H;
}

DualityVerdict dual_cocycle_p3(i64 p) {
  check(p % 2 == 1 && is_prime(p), "dual_cocycle_p3: p must be an odd prime");
  AbelianGroup G{{p, p}};
  CpAction act;
  bool found = false;
  for (const CpAction& cand : catalog_actions(G, p))
    if (cand.family == "jordan-2") {
      act = cand;
      found = true;
    }
  check(found, "dual_cocycle_p3: regular action class not found");
  XGroup X = build_x(act);

  // The bimultiplicative representative of the class e* ^ f* (the full form
  // table, a normalized norm-killed cocycle).
  AltForm alpha = zero_form(G);
  alpha.b[0] = 1;
  CocycleTable zR = form_table(G, alpha, X.m);
  Vec primal = X.decompose(zR);
  HopfStructure H = build_hopf_from_tau(act, X.m, theta_expand(act, zR), primal);
  check(verify_axioms(H).ok, "dual_cocycle_p3: axiom failure");

  // Section of the quotient H ->> k[Gbar], Gbar = <x, y> with x = Pi(f*),
  // y = Pi(t): T = u tbar with u = sum_{i,j} zeta_p^{-ij} p_{e^i f^j}
  // satisfies the coaction equation rho_Pi(T) = T (x) y, which in
  // coefficients reads tau(t; a, (0,j)) = c(a) - c(a + (0,j)).
  GradedElement u{0, Vec(H.N, 0)};
  for (i64 a = 0; a < H.N; ++a) {
    Vec ca = G.element_at(a);
    u.c[a] = mod_reduce(-(H.m / p) * ca[0] % H.m * ca[1], H.m);
  }
  GradedElement T = he_mul(H, u, he_tbar(H));
  for (i64 a = 0; a < H.N; ++a)
    for (i64 j = 0; j < p; ++j) {
      i64 b = G.index_of(Vec{0, j});
      i64 ab = G.index_of(G.add(G.element_at(a), Vec{0, j}));
      check(H.tau[1].at(a, b) == mod_reduce(T.c[a] - T.c[ab], H.m),
            "dual_cocycle_p3: section fails the coaction equation");
    }

  // gamma(x^i y^j) = f*^i T^j; the section defect tau'(a, b) =
  // gamma(a) gamma(b) gamma(ab)^{-1} lands in k<e*>, and e*^k evaluated on
  // the C_p generator is zeta_p^k, giving the dual cocycle table.
  GradedElement fstar = he_character(H, Vec{0, 1});
  auto gamma = [&](i64 i, i64 j) { return he_mul(H, he_pow(H, fstar, i), he_pow(H, T, j)); };
  i64 e_idx = G.index_of(Vec{1, 0});
  CocycleTable zdual = zero_table(G, H.m);
  for (i64 a = 0; a < H.N; ++a)
    for (i64 b = 0; b < H.N; ++b) {
      Vec ca = G.element_at(a), cb = G.element_at(b);
      GradedElement prod = he_mul(H, gamma(ca[0], ca[1]), gamma(cb[0], cb[1]));
      GradedElement gab = gamma(mod_reduce(ca[0] + cb[0], p), mod_reduce(ca[1] + cb[1], p));
      GradedElement w = he_mul(H, prod, he_inv(H, gab));
      i64 k = w.c[e_idx] / (H.m / p);
      check(w == he_character(H, Vec{k, 0}), "dual_cocycle_p3: defect is not a power of e*");
      zdual.at(a, b) = w.c[e_idx];
    }
  check(is_cocycle(zdual) && is_normalized(zdual), "dual_cocycle_p3: dual table is not a cocycle");
  check(phi_truncated(zdual, act.T, act.p) == zero_table(G, H.m),
        "dual_cocycle_p3: dual cocycle is not norm-killed");

  Vec dual_coords = X.decompose(zdual);
  DualityVerdict out;
  out.dual_coefficient = -1;
  for (i64 k = 0; k < p; ++k)
    if (X.coords_of(X.raw_reduce(X.raw_scale(k, X.raw_of(primal)))) == dual_coords) {
      out.dual_coefficient = k;
      break;
    }
  check(out.dual_coefficient >= 0, "dual_cocycle_p3: dual class is not a multiple of the primal");

  // Orbit membership of the dual class, from the symmetry generators.
  SymmetryGroup sym = symmetry_group(act);
  std::vector<std::vector<Vec>> mats;
  for (const SymmetryGenerator& sg : sym.gens) mats.push_back(symmetry_matrix(X, sg));
  std::set<Vec> orbit{primal};
  std::vector<Vec> frontier{primal};
  while (!frontier.empty()) {
    Vec v = frontier.back();
    frontier.pop_back();
    for (const auto& cols : mats) {
      Vec w = apply_columns(X, cols, v);
      if (orbit.insert(w).second) frontier.push_back(w);
    }
  }
  out.same_orbit = orbit.count(dual_coords) > 0;
  out.qr = mod_pow((p - 1) / 2, (p - 1) / 2, p) == 1;
  return out;
}

}  // namespace hopfext
