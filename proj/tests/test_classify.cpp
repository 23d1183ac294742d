#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfext/classify.hpp"

using namespace hopfext;

namespace {

const ActionClassReport& class_by_family(const ClassifyReport& rep, const std::string& fam) {
  for (const ActionClassReport& r : rep.classes)
    if (r.action.family == fam) return r;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("dimension p^3: p+7 algebras, p+1 nontrivial") {
  for (i64 p : {3, 5, 7}) {
    AbelianGroup G;
    G.orders = {p, p};
    ClassifyReport rep = classify(G, p);
    REQUIRE(rep.classes.size() == 2);
    i64 total = 0;
    for (const auto& r : rep.classes) total += static_cast<i64>(r.orbits.size());
    CHECK(total == p + 7);
    CHECK(rep.total_nontrivial() == p + 1);
    // Trivial action: four commutative algebras; regular action: p+3 types.
    CHECK(class_by_family(rep, "trivial").orbits.size() == 4);
    const auto& reg = class_by_family(rep, "jordan-2");
    CHECK(static_cast<i64>(reg.orbits.size()) == p + 3);
    CHECK(reg.noncocommutative_count() == p + 1);
    CHECK(reg.cocommutative_nontrivial_count() == 1);
  }
}

TEST_CASE("commutative types with trivial action: floor((3n+2)/2)") {
  for (i64 p : {2, 3, 5})
    for (int n : {1, 2, 3}) CHECK(trivial_action_isotypes(p, n) == (3 * n + 2) / 2);
  CHECK(trivial_action_isotypes(2, 4) == 7);
}

TEST_CASE("dimension p^4, elementary case: Jordan-block classes") {
  {
    ClassifyReport rep = classify(parse_group("Z3xZ3xZ3"), 3);
    CHECK(class_by_family(rep, "jordan-2").noncocommutative_count() == 14);  // 2p+8
    CHECK(class_by_family(rep, "jordan-3").noncocommutative_count() == 3);   // exceptional p=3
    CHECK(rep.total_nontrivial() == 17);
  }
  {
    ClassifyReport rep = classify(parse_group("Z5xZ5xZ5"), 5);
    CHECK(class_by_family(rep, "jordan-2").noncocommutative_count() == 18);  // 2p+8
    CHECK(class_by_family(rep, "jordan-3").noncocommutative_count() == 12);  // p+7
    CHECK(rep.total_nontrivial() == 30);
  }
}

TEST_CASE("dimension p^4, mixed case Z_{p^2} x Z_p") {
  {
    ClassifyReport rep = classify(parse_group("Z9xZ3"), 3);
    CHECK(class_by_family(rep, "unit-scalar").noncocommutative_count() == 2);
    CHECK(class_by_family(rep, "shear-to-socle").noncocommutative_count() == 4);   // p+1
    CHECK(class_by_family(rep, "shear-to-small").noncocommutative_count() == 4);   // p+1
    CHECK(class_by_family(rep, "mixed-square").noncocommutative_count() == 2);
    CHECK(class_by_family(rep, "mixed-nonsquare").noncocommutative_count() == 4);  // p=3 exception
    CHECK(rep.total_nontrivial() == 16);
  }
  {
    ClassifyReport rep = classify(parse_group("Z25xZ5"), 5);
    CHECK(class_by_family(rep, "unit-scalar").noncocommutative_count() == 2);
    CHECK(class_by_family(rep, "shear-to-socle").noncocommutative_count() == 6);   // p+1
    CHECK(class_by_family(rep, "shear-to-small").noncocommutative_count() == 6);   // p+1
    CHECK(class_by_family(rep, "mixed-square").noncocommutative_count() == 2);
    CHECK(class_by_family(rep, "mixed-nonsquare").noncocommutative_count() == 2);
    CHECK(rep.total_nontrivial() == 18);  // 2p+8
  }
}

TEST_CASE("dimension 8: one nontrivial type overall, from the swap on Z2xZ2") {
  ClassifyReport a = classify(parse_group("Z4"), 2);
  CHECK(a.total_nontrivial() == 0);
  ClassifyReport b = classify(parse_group("Z2xZ2"), 2);
  CHECK(b.total_nontrivial() == 1);
  const auto& sw = class_by_family(b, "swap");
  CHECK(sw.orbits.size() == 2);
  CHECK(sw.noncocommutative_count() == 1);
  // Trivial action on Z2xZ2: four commutative algebras, two of them
  // noncocommutative (duals of the dihedral and quaternion algebras).
  const auto& tr = class_by_family(b, "trivial");
  CHECK(tr.orbits.size() == 4);
  CHECK(tr.noncocommutative_count() == 2);
}

TEST_CASE("orbit representatives are lex-least and deterministic") {
  ClassifyReport rep = classify(parse_group("Z3xZ3"), 3);
  for (const auto& cls : rep.classes) {
    i64 covered = 0;
    for (size_t i = 0; i < cls.orbits.size(); ++i) {
      covered += cls.orbits[i].size;
      if (i > 0) CHECK(cls.orbits[i - 1].representative < cls.orbits[i].representative);
    }
    CHECK(covered == cls.carrier_size);
  }
}
