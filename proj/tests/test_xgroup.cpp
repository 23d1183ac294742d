#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hopfext/xgroup.hpp"

using namespace hopfext;

namespace {

CpAction find_class(const std::string& group, i64 p, const std::string& family) {
  for (const CpAction& a : catalog_actions(parse_group(group), p))
    if (a.family == family) return a;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

Vec all_coords(const XGroup& X, i64 idx) {
  Vec c(X.orders.size(), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = idx % X.orders[i];
    idx /= X.orders[i];
  }
  return c;
}

// Round-trip plus group-law consistency on every element (and a quadratic
// number of pairs when the carrier is small).
void check_carrier(const XGroup& X, bool all_pairs = true) {
  i64 n = X.size();
  std::vector<CocycleTable> reps;
  for (i64 i = 0; i < n; ++i) {
    Vec c = all_coords(X, i);
    CocycleTable z = X.representative(c);
    CHECK(is_cocycle(z));
    CHECK(is_normalized(z));
    // Lies in Z^2_N with exact truncated-norm vanishing (needed so that the
    // expanded Hopf cocycle satisfies tau(t^p) = tau(1) = 1 on the nose).
    CHECK(phi_truncated(z, X.act.T, X.act.p) == zero_table(X.act.G, X.m));
    CHECK(X.decompose(z) == c);
    reps.push_back(z);
  }
  i64 pair_cap = all_pairs ? n : 6;
  for (i64 i = 0; i < pair_cap; ++i)
    for (i64 j = i; j < pair_cap; ++j) {
      Vec ci = all_coords(X, i), cj = all_coords(X, j);
      Vec sum(ci.size());
      for (size_t t = 0; t < ci.size(); ++t)
        sum[t] = mod_reduce(ci[t] + cj[t], X.orders[t]);
      CHECK(X.decompose(table_add(reps[i], reps[j])) == sum);
    }
}

void check_symmetries(const XGroup& X) {
  SymmetryGroup S = symmetry_group(X.act);
  for (const SymmetryGenerator& sg : S.gens) {
    std::vector<Vec> cols = symmetry_matrix(X, sg);
    std::set<Vec> image;
    for (i64 i = 0; i < X.size(); ++i) {
      Vec c = all_coords(X, i);
      Vec ic = apply_columns(X, cols, c);
      image.insert(ic);
      CHECK(X.cocommutative(c) == X.cocommutative(ic));
    }
    CHECK(static_cast<i64>(image.size()) == X.size());  // acts bijectively
    // Zero is fixed.
    CHECK(apply_columns(X, cols, Vec(X.orders.size(), 0)) == Vec(X.orders.size(), 0));
  }
}

}  // namespace

TEST_CASE("regular action on Z3xZ3: carrier is Z3 x Z3") {
  XGroup X = build_x(find_class("Z3xZ3", 3, "jordan-2"));
  CHECK(X.size() == 9);
  CHECK(X.orders == Vec{3, 3});
  CHECK(X.halved);
  check_carrier(X);
  check_symmetries(X);
}

TEST_CASE("trivial actions: characters mod p-th powers times p-torsion forms") {
  {
    XGroup X = build_x(find_class("Z3xZ3", 3, "trivial"));
    CHECK(X.size() == 27);  // (Z3)^2 quotient x Alt[3] = 9 * 3
    check_carrier(X);
    check_symmetries(X);
  }
  {
    XGroup X = build_x(find_class("Z9xZ3", 3, "trivial"));
    CHECK(X.size() == 27);  // 9 * 3
    check_carrier(X);
  }
  {
    XGroup X = build_x(find_class("Z2xZ2", 2, "trivial"));
    CHECK(X.size() == 8);  // 4 * 2, with an order-2 transversal
    CHECK(!X.halved);
    check_carrier(X);
    check_symmetries(X);
  }
}

TEST_CASE("swap action on Z2xZ2: carrier is Z2") {
  XGroup X = build_x(find_class("Z2xZ2", 2, "swap"));
  CHECK(X.size() == 2);
  CHECK(X.orders == Vec{2});
  // The nontrivial class is genuinely noncocommutative.
  CocycleTable z = X.representative(Vec{1});
  CHECK(!is_symmetric(z));
  check_carrier(X);
  check_symmetries(X);
}

TEST_CASE("swap action on Z2xZ2xZ2: order-4 elements from transversal carries") {
  XGroup X = build_x(find_class("Z2xZ2xZ2", 2, "swap"));
  CHECK(X.size() == 8);
  CHECK(!X.halved);
  check_carrier(X);
  check_symmetries(X);
}

TEST_CASE("negation on Z4 and a mixed cyclic case") {
  {
    AbelianGroup G = parse_group("Z4");
    Endo T = make_endo(G, {Vec{3}});
    XGroup X = build_x(CpAction{G, 2, T, "generic"});
    CHECK(X.size() == 2);
    check_carrier(X);
  }
  {
    // Z12 with negation on the 3-part only.
    AbelianGroup G = parse_group("Z12");
    Endo T = make_endo(G, {Vec{1, 0}, Vec{0, 2}});
    XGroup X = build_x(CpAction{G, 2, T, "generic"});
    check_carrier(X);
  }
}

TEST_CASE("case Z9xZ3: carriers of the five nontrivial classes") {
  for (const char* fam :
       {"unit-scalar", "shear-to-socle", "shear-to-small", "mixed-square", "mixed-nonsquare"}) {
    XGroup X = build_x(find_class("Z9xZ3", 3, fam));
    CHECK(X.halved);
    check_carrier(X);
    check_symmetries(X);
  }
}

TEST_CASE("odd square with p = 2: sign-pattern carriers") {
  for (const CpAction& act : catalog_actions(parse_group("Z3xZ3"), 2)) {
    XGroup X = build_x(act);
    CHECK(X.halved);  // |G| odd
    check_carrier(X);
    check_symmetries(X);
  }
}

TEST_CASE("regular action on Z5xZ5") {
  XGroup X = build_x(find_class("Z5xZ5", 5, "jordan-2"));
  CHECK(X.size() == 25);
  check_carrier(X);
  check_symmetries(X);
}

TEST_CASE("unsupported even carriers raise explicit errors") {
  AbelianGroup G = parse_group("Z4xZ2");
  // An order-2 automorphism with a nontrivial alternating kernel but no
  // transversal construction.
  for (const CpAction& act : catalog_actions(G, 2)) {
    if (act.trivial()) continue;
    AltForm beta = zero_form(G);
    beta.b[0] = 1;
    AltForm img = form_add(G, beta, form_pullback(G, beta, act.T));
    if (img == zero_form(G)) {
      CHECK_THROWS_AS(build_x(act), UnsupportedError);
      return;
    }
  }
}
