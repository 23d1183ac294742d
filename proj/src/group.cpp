#include "hopfext/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hopfext {

i64 mod_reduce(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mod_pow(i64 base, i64 exp, i64 m) {
  base = mod_reduce(base, m);
  i64 r = 1 % m;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % m;
    base = (__int128)base * base % m;
    exp >>= 1;
  }
  return r;
}

namespace {
// Extended gcd: returns g and writes x with a*x ≡ g (mod m-ish usage).
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}
}  // namespace

i64 mod_inverse(i64 a, i64 m) {
  a = mod_reduce(a, m);
  i64 x, y;
  i64 g = ext_gcd(a, m, x, y);
  check(g == 1, "mod_inverse: not a unit");
  return mod_reduce(x, m);
}

i64 lcm_i64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

i64 AbelianGroup::order() const {
  i64 o = 1;
  for (i64 d : orders) o *= d;
  return o;
}

i64 AbelianGroup::exponent() const {
  i64 e = 1;
  for (i64 d : orders) e = lcm_i64(e, d);
  return e;
}

i64 AbelianGroup::smallest_prime() const {
  i64 best = 0;
  for (i64 d : orders) {
    i64 p = factorize(d).front().first;
    if (best == 0 || p < best) best = p;
  }
  check(best != 0, "smallest_prime of trivial group");
  return best;
}

Vec AbelianGroup::reduce(Vec g) const {
  for (size_t i = 0; i < orders.size(); ++i) g[i] = mod_reduce(g[i], orders[i]);
  return g;
}

Vec AbelianGroup::add(const Vec& a, const Vec& b) const {
  Vec r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) r[i] = mod_reduce(a[i] + b[i], orders[i]);
  return r;
}

Vec AbelianGroup::neg(const Vec& a) const {
  Vec r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) r[i] = mod_reduce(-a[i], orders[i]);
  return r;
}

Vec AbelianGroup::sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }

Vec AbelianGroup::scale(i64 k, const Vec& a) const {
  Vec r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i)
    r[i] = mod_reduce((__int128)k * a[i] % orders[i], orders[i]);
  return r;
}

i64 AbelianGroup::element_order(const Vec& a) const {
  i64 o = 1;
  for (size_t i = 0; i < orders.size(); ++i)
    o = lcm_i64(o, orders[i] / std::gcd(orders[i], mod_reduce(a[i], orders[i])));
  return o;
}

i64 AbelianGroup::index_of(const Vec& g) const {
  i64 idx = 0;
  for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + mod_reduce(g[i], orders[i]);
  return idx;
}

Vec AbelianGroup::element_at(i64 idx) const {
  Vec g(orders.size());
  for (size_t i = orders.size(); i-- > 0;) {
    g[i] = idx % orders[i];
    idx /= orders[i];
  }
  return g;
}

AbelianGroup parse_group(const std::string& descriptor) {
  AbelianGroup G;
  size_t pos = 0;
  while (pos < descriptor.size()) {
    if (descriptor[pos] != 'Z')
      throw UnsupportedError("cannot parse group descriptor: " + descriptor);
    ++pos;
    size_t start = pos;
    while (pos < descriptor.size() && isdigit(descriptor[pos])) ++pos;
    if (start == pos) throw UnsupportedError("cannot parse group descriptor: " + descriptor);
    i64 n = std::stoll(descriptor.substr(start, pos - start));
    if (n < 2) throw UnsupportedError("cyclic factor must have order >= 2");
    for (auto [p, e] : factorize(n)) {
      i64 q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      G.orders.push_back(q);
    }
    if (pos < descriptor.size()) {
      if (descriptor[pos] != 'x')
        throw UnsupportedError("cannot parse group descriptor: " + descriptor);
      ++pos;
    }
  }
  if (G.orders.empty()) throw UnsupportedError("empty group descriptor");
  return G;
}

std::string group_name(const AbelianGroup& G) {
  std::string s;
  for (size_t i = 0; i < G.orders.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(G.orders[i]);
  }
  return s;
}

i64 pair_exponent(const AbelianGroup& G, const Vec& chi, const Vec& g, i64 m) {
  check(m % G.exponent() == 0, "pair_exponent: exponent(G) must divide m");
  i64 acc = 0;
  for (size_t i = 0; i < G.orders.size(); ++i) {
    i64 di = G.orders[i];
    acc = mod_reduce(acc + (__int128)mod_reduce(chi[i], di) * mod_reduce(g[i], di) % m * (m / di) % m, m);
  }
  return acc;
}

Endo identity_endo(const AbelianGroup& G) {
  Endo M;
  M.n = G.rank();
  M.a.assign((size_t)M.n * M.n, 0);
  for (int i = 0; i < M.n; ++i) M.at(i, i) = 1;
  return M;
}

Endo zero_endo(const AbelianGroup& G) {
  Endo M;
  M.n = G.rank();
  M.a.assign((size_t)M.n * M.n, 0);
  return M;
}

Endo make_endo(const AbelianGroup& G, const std::vector<Vec>& rows) {
  Endo M;
  M.n = G.rank();
  M.a.assign((size_t)M.n * M.n, 0);
  check((int)rows.size() == M.n, "make_endo: bad row count");
  for (int i = 0; i < M.n; ++i) {
    check((int)rows[i].size() == M.n, "make_endo: bad column count");
    for (int j = 0; j < M.n; ++j) M.at(i, j) = rows[i][j];
  }
  return reduce_endo(G, M);
}

Endo reduce_endo(const AbelianGroup& G, Endo M) {
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) M.at(i, j) = mod_reduce(M.at(i, j), G.orders[i]);
  return M;
}

bool well_formed(const AbelianGroup& G, const Endo& M) {
  if (M.n != G.rank()) return false;
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) {
      i64 step = G.orders[i] / std::gcd(G.orders[i], G.orders[j]);
      if (mod_reduce(M.at(i, j), G.orders[i]) % step != 0) return false;
    }
  return true;
}

Vec apply_endo(const AbelianGroup& G, const Endo& M, const Vec& g) {
  Vec r(G.orders.size(), 0);
  for (int i = 0; i < M.n; ++i) {
    i64 acc = 0;
    for (int j = 0; j < M.n; ++j)
      acc = mod_reduce(acc + (__int128)M.at(i, j) * mod_reduce(g[j], G.orders[j]) % G.orders[i],
                       G.orders[i]);
    r[i] = acc;
  }
  return r;
}

Endo compose(const AbelianGroup& G, const Endo& f, const Endo& g) {
  Endo M = zero_endo(G);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) {
      i64 acc = 0;
      for (int k = 0; k < M.n; ++k)
        acc = mod_reduce(acc + (__int128)f.at(i, k) * g.at(k, j) % G.orders[i], G.orders[i]);
      M.at(i, j) = acc;
    }
  return M;
}

Endo endo_sum(const AbelianGroup& G, const Endo& f, const Endo& g) {
  Endo M = zero_endo(G);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) M.at(i, j) = mod_reduce(f.at(i, j) + g.at(i, j), G.orders[i]);
  return M;
}

Endo endo_pow(const AbelianGroup& G, const Endo& M, i64 k) {
  Endo r = identity_endo(G);
  Endo b = M;
  while (k > 0) {
    if (k & 1) r = compose(G, r, b);
    b = compose(G, b, b);
    k >>= 1;
  }
  return r;
}

Endo dual_endo(const AbelianGroup& G, const Endo& M) {
  // chi -> chi ∘ M on character coordinates: c'_j = sum_i M[i][j] * (d_j/d_i) * c_i.
  // The divisibility constraint on M[i][j] makes the scaled entry integral.
  Endo D = zero_endo(G);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) {
      i64 g = std::gcd(G.orders[i], G.orders[j]);
      i64 step = G.orders[i] / g;
      i64 entry = mod_reduce(M.at(i, j), G.orders[i]);
      check(entry % step == 0, "dual_endo: malformed endomorphism entry");
      D.at(j, i) = mod_reduce((entry / step) * (G.orders[j] / g), G.orders[j]);
    }
  return D;
}

bool is_automorphism(const AbelianGroup& G, const Endo& M) {
  if (!well_formed(G, M)) return false;
  // M is bijective iff the induced map on G/qG is invertible for every
  // prime q dividing |G| (Nakayama-style criterion). Entries between
  // factors of coprime order vanish mod q by the divisibility constraint.
  std::set<i64> primes;
  for (i64 d : G.orders)
    for (auto [q, e] : factorize(d)) primes.insert(q);
  for (i64 q : primes) {
    std::vector<int> idx;
    for (int i = 0; i < G.rank(); ++i)
      if (G.orders[i] % q == 0) idx.push_back(i);
    int k = (int)idx.size();
    std::vector<i64> mat((size_t)k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) mat[(size_t)i * k + j] = mod_reduce(M.at(idx[i], idx[j]), q);
    // Gaussian elimination over F_q.
    int rank = 0;
    for (int col = 0; col < k && rank < k; ++col) {
      int piv = -1;
      for (int r = rank; r < k; ++r)
        if (mat[(size_t)r * k + col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return false;
      for (int c = 0; c < k; ++c) std::swap(mat[(size_t)piv * k + c], mat[(size_t)rank * k + c]);
      i64 inv = mod_inverse(mat[(size_t)rank * k + col], q);
      for (int r = 0; r < k; ++r) {
        if (r == rank) continue;
        i64 f = mat[(size_t)r * k + col] * inv % q;
        if (f == 0) continue;
        for (int c = 0; c < k; ++c)
          mat[(size_t)r * k + c] =
              mod_reduce(mat[(size_t)r * k + c] - f * mat[(size_t)rank * k + c], q);
      }
      ++rank;
    }
    if (rank != k) return false;
  }
  return true;
}

i64 endo_order(const AbelianGroup& G, const Endo& M, i64 cap) {
  Endo id = identity_endo(G);
  Endo P = M;
  for (i64 k = 1; k <= cap; ++k) {
    if (P == id) return k;
    P = compose(G, P, M);
  }
  return 0;
}

std::optional<Endo> endo_inverse(const AbelianGroup& G, const Endo& M) {
  if (!is_automorphism(G, M)) return std::nullopt;
  // For an automorphism, M^(ord-1) is the inverse; automorphism orders of
  // the groups in scope are tiny, so a linear power walk is fine.
  Endo id = identity_endo(G);
  Endo P = M;
  Endo prev = id;
  for (i64 k = 1; k <= (1 << 22); ++k) {
    if (P == id) return prev;
    prev = P;
    P = compose(G, P, M);
  }
  check(false, "endo_inverse: order walk did not terminate");
  return std::nullopt;
}

std::vector<Endo> enumerate_automorphisms(const AbelianGroup& G, i64 budget) {
  int n = G.rank();
  // Entry (i, j) ranges over multiples of orders[i]/gcd inside Z_{orders[i]},
  // i.e. gcd(orders[i], orders[j]) choices.
  std::vector<i64> choices((size_t)n * n);
  i64 total = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      choices[(size_t)i * n + j] = std::gcd(G.orders[i], G.orders[j]);
      if (total > budget / std::max<i64>(1, choices[(size_t)i * n + j]) + 1)
        total = budget + 1;
      else
        total *= choices[(size_t)i * n + j];
    }
  if (total > budget)
    throw UnsupportedError("enumerate_automorphisms: candidate space exceeds budget");

  std::vector<Endo> out;
  Endo M = zero_endo(G);
  std::vector<i64> digits((size_t)n * n, 0);
  while (true) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        i64 step = G.orders[i] / choices[(size_t)i * n + j];
        M.at(i, j) = digits[(size_t)i * n + j] * step;
      }
    if (is_automorphism(G, M)) out.push_back(M);
    // increment mixed-radix counter
    size_t k = 0;
    for (; k < digits.size(); ++k) {
      if (++digits[k] < choices[k]) break;
      digits[k] = 0;
    }
    if (k == digits.size()) break;
  }
  return out;
}

std::vector<Endo> aut_generators(const AbelianGroup& G) {
  int n = G.rank();
  std::vector<Endo> gens;
  // Transvections g_j -> g_j + step*g_i for i != j in the same primary
  // component (across distinct primes the constrained entry is forced to 0).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      i64 g = std::gcd(G.orders[i], G.orders[j]);
      if (g == 1) continue;
      Endo M = identity_endo(G);
      M.at(i, j) = G.orders[i] / g;
      gens.push_back(M);
    }
  // Diagonal unit maps: a generating set of (Z/d)^* per factor, built
  // greedily by closing the generated unit subgroup under multiplication.
  for (int i = 0; i < n; ++i) {
    i64 d = G.orders[i];
    std::vector<i64> units;
    std::set<i64> span{1 % d};
    for (i64 u = 2; u < d; ++u) {
      if (std::gcd(u, d) != 1) continue;
      if (span.count(u)) continue;
      units.push_back(u);
      std::vector<i64> frontier(span.begin(), span.end());
      while (!frontier.empty()) {
        i64 x = frontier.back();
        frontier.pop_back();
        i64 y = x * u % d;
        if (span.insert(y).second) frontier.push_back(y);
      }
    }
    for (i64 u : units) {
      Endo M = identity_endo(G);
      M.at(i, i) = u;
      gens.push_back(M);
    }
  }
  return gens;
}

std::vector<Endo> endo_closure(const AbelianGroup& G, const std::vector<Endo>& gens, i64 cap) {
  std::set<Endo> seen;
  std::vector<Endo> queue;
  Endo id = identity_endo(G);
  seen.insert(id);
  queue.push_back(id);
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const Endo& g : gens) {
      Endo next = compose(G, queue[head], g);
      if (seen.insert(next).second) {
        check((i64)seen.size() <= cap, "endo_closure: size cap exceeded");
        queue.push_back(next);
      }
    }
  }
  return queue;
}

std::vector<Endo> reduce_generators(const AbelianGroup& G, const std::vector<Endo>& elements) {
  std::set<Endo> target(elements.begin(), elements.end());
  std::vector<Endo> gens;
  std::set<Endo> have;
  have.insert(identity_endo(G));
  for (const Endo& e : elements) {
    if (have.count(e)) continue;
    gens.push_back(e);
    have.clear();
    for (const Endo& x : endo_closure(G, gens, (i64)target.size() + 1)) have.insert(x);
    if (have.size() == target.size()) break;
  }
  check(have.size() == target.size(), "reduce_generators: closure mismatch");
  return gens;
}

}  // namespace hopfext
