#include "hopfext/classify.hpp"

#include <algorithm>
#include <set>

namespace hopfext {

namespace {

constexpr i64 kCarrierBudget = 2000000;

}  // namespace

i64 ActionClassReport::orbit_count(bool include_trivial) const {
  i64 c = 0;
  for (const OrbitInfo& o : orbits)
    if (include_trivial || !o.trivial) ++c;
  return c;
}

i64 ActionClassReport::noncocommutative_count() const {
  i64 c = 0;
  for (const OrbitInfo& o : orbits)
    if (!o.cocommutative) ++c;
  return c;
}

i64 ActionClassReport::cocommutative_nontrivial_count() const {
  i64 c = 0;
  for (const OrbitInfo& o : orbits)
    if (o.cocommutative && !o.trivial) ++c;
  return c;
}

i64 ClassifyReport::total_nontrivial() const {
  // "Nontrivial" = neither commutative nor cocommutative: a nonzero
  // alternating part inside a class with a nontrivial action. Trivial-action
  // classes yield commutative algebras whatever the cocycle.
  i64 c = 0;
  for (const ActionClassReport& r : classes)
    if (!r.action.trivial()) c += r.noncocommutative_count();
  return c;
}

i64 ClassifyReport::total_noncocommutative() const {
  i64 c = 0;
  for (const ActionClassReport& r : classes) c += r.noncocommutative_count();
  return c;
}

ActionClassReport classify_action(const CpAction& act) {
  ActionClassReport rep;
  rep.action = act;
  XGroup X = build_x(act);
  rep.carrier_size = X.size();
  rep.carrier_orders = X.orders;
  check(rep.carrier_size <= kCarrierBudget, "classify_action: carrier too large");

  SymmetryGroup S = symmetry_group(act);
  std::vector<std::vector<Vec>> mats;
  for (const SymmetryGenerator& sg : S.gens) mats.push_back(symmetry_matrix(X, sg));

  i64 n = X.size();
  auto index_of = [&](const Vec& c) {
    i64 idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * X.orders[i] + c[i];
    return idx;
  };
  auto coords_at = [&](i64 idx) {
    Vec c(X.orders.size(), 0);
    for (size_t i = 0; i < c.size(); ++i) {
      c[i] = idx % X.orders[i];
      idx /= X.orders[i];
    }
    return c;
  };

  std::vector<char> visited(n, 0);
  for (i64 seed = 0; seed < n; ++seed) {
    if (visited[seed]) continue;
    std::vector<i64> queue{seed};
    visited[seed] = 1;
    Vec best = coords_at(seed);
    i64 size = 0;
    while (!queue.empty()) {
      i64 cur = queue.back();
      queue.pop_back();
      ++size;
      Vec c = coords_at(cur);
      if (c < best) best = c;
      for (const auto& m : mats) {
        i64 nx = index_of(apply_columns(X, m, c));
        if (!visited[nx]) {
          visited[nx] = 1;
          queue.push_back(nx);
        }
      }
    }
    OrbitInfo o;
    o.representative = best;
    o.size = size;
    o.cocommutative = X.cocommutative(best);
    o.trivial = best == Vec(X.orders.size(), 0);
    rep.orbits.push_back(std::move(o));
  }
  std::sort(rep.orbits.begin(), rep.orbits.end(),
            [](const OrbitInfo& a, const OrbitInfo& b) {
              return a.representative < b.representative;
            });
  return rep;
}

ClassifyReport classify(const AbelianGroup& G, i64 p) {
  ClassifyReport rep;
  rep.G = G;
  rep.p = p;
  for (const CpAction& act : catalog_actions(G, p)) rep.classes.push_back(classify_action(act));
  return rep;
}

i64 alternating_modulus(const CpAction& act) {
  const AbelianGroup& G = act.G;
  check(act.p == 2 && G.order() % 2 == 1,
        "alternating_modulus: requires a C_2-action on Z_n x Z_n with n odd");
  int n = G.rank();
  i64 out = 1;
  for (auto [q, e] : factorize(G.order())) {
    (void)e;
    // The q-primary component must be Z_{q^f} x Z_{q^f} (two coordinates of
    // equal q-valuation f); its generators are the coordinate vectors scaled
    // to q-power order.
    i64 qf = 0;
    std::vector<int> coords;
    for (int j = 0; j < n; ++j) {
      i64 part = 1;
      for (i64 d = G.orders[j]; d % q == 0; d /= q) part *= q;
      if (part == 1) continue;
      check(qf == 0 || qf == part, "alternating_modulus: carrier is not Z_n x Z_n");
      qf = part;
      coords.push_back(j);
    }
    check(coords.size() == 2, "alternating_modulus: carrier is not Z_n x Z_n");
    bool is_id = true, is_neg = true;
    for (int j : coords) {
      i64 scale = G.orders[j] / qf;  // e_j * scale generates the q-part of <e_j>
      for (int i = 0; i < n; ++i) {
        i64 t = act.T.a[static_cast<size_t>(i * n + j)];
        if (mod_reduce((t - (i == j ? 1 : 0)) * scale, G.orders[i]) != 0) is_id = false;
        if (mod_reduce((t + (i == j ? 1 : 0)) * scale, G.orders[i]) != 0) is_neg = false;
      }
    }
    if (!is_id && !is_neg) out *= qf;
  }
  return out;
}

i64 divisor_count(i64 n) {
  i64 out = 1;
  for (auto [q, e] : factorize(n)) out *= e + 1;
  return out;
}

i64 trivial_action_isotypes(i64 p, int rank) {
  AbelianGroup G;
  G.orders.assign(static_cast<size_t>(rank), p);
  ActionClassReport r = classify_action(CpAction{G, p, identity_endo(G), "trivial"});
  return static_cast<i64>(r.orbits.size());
}

}  // namespace hopfext
