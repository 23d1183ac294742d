// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion recomputes its numbers from scratch; nothing is
// cached between criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "hopfext/classify.hpp"
#include "hopfext/hopf.hpp"
#include "hopfext/oracle.hpp"

using namespace hopfext;

namespace {

bool all_ok = true;

void report(int criterion, const std::string& what, bool pass, double seconds) {
  all_ok = all_ok && pass;
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << seconds;
  std::cout << "criterion " << criterion << " [" << what << "]: " << (pass ? "PASS" : "FAIL")
            << " (" << t.str() << "s)" << std::endl;
}

template <typename F>
void run(int criterion, const std::string& what, F body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << std::endl;
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(criterion, what, pass, dt);
}

AbelianGroup elementary(i64 p, int rank) {
  AbelianGroup G;
  G.orders.assign(static_cast<size_t>(rank), p);
  return G;
}

i64 family_noncocom(const ClassifyReport& rep, const std::string& fam) {
  for (const auto& cls : rep.classes)
    if (cls.action.family == fam) return cls.noncocommutative_count();
  return -1;
}

}  // namespace

int main() {
  run(1, "dim p^3 counts", [] {
    bool ok = true;
    for (i64 p : {3, 5, 7}) {
      ClassifyReport rep = classify(elementary(p, 2), p);
      i64 total = 0;
      for (const auto& cls : rep.classes) total += static_cast<i64>(cls.orbits.size());
      ok = ok && total == p + 7 && rep.total_nontrivial() == p + 1;
    }
    return ok;
  });

  run(2, "dim p^4 components and totals", [] {
    bool ok = true;
    for (i64 p : {3, 5, 7}) {
      ClassifyReport rA = classify(elementary(p, 3), p);
      ClassifyReport rB = classify(AbelianGroup{{p, p * p}}, p);
      ok = ok && family_noncocom(rA, "jordan-2") == (p == 3 ? 14 : 2 * p + 8);
      ok = ok && family_noncocom(rA, "jordan-3") == (p == 3 ? 3 : p + 7);
      ok = ok && rB.total_nontrivial() == (p == 3 ? 16 : 2 * p + 8);
      ok = ok && rA.total_nontrivial() + rB.total_nontrivial() == (p == 3 ? 33 : 5 * p + 23);
    }
    return ok;
  });

  run(3, "oracle equivalence |H2_c| = |X|, |G| <= 27, p <= 3", [] {
    int checked = 0;
    for (const AbelianGroup& G : abelian_groups_up_to(27)) {
      for (i64 p : {2, 3}) {
        if (p > G.smallest_prime()) continue;
        std::vector<CpAction> classes;
        try {
          classes = catalog_actions(G, p);
        } catch (const UnsupportedError&) {
          continue;
        }
        for (const CpAction& act : classes) {
          XGroup X;
          try {
            X = build_x(act);
          } catch (const UnsupportedError&) {
            continue;
          }
          if (z2N_and_kerPhi(act, p * G.exponent()).h2c != FactoredInt::of(X.size()))
            return false;
          ++checked;
        }
      }
    }
    return checked >= 40;
  });

  run(4, "dim 8: unique nontrivial type, axioms, relations", [] {
    if (classify(parse_group("Z4"), 2).total_nontrivial() != 0) return false;
    ClassifyReport rep = classify(parse_group("Z2xZ2"), 2);
    if (rep.total_nontrivial() != 1) return false;
    for (const auto& cls : rep.classes) {
      if (cls.action.trivial()) continue;
      XGroup X = build_x(cls.action);
      for (const auto& o : cls.orbits) {
        if (o.trivial || o.cocommutative) continue;
        HopfStructure H = build_hopf(cls.action, X, o.representative);
        if (H.dim != 8 || !verify_axioms(H).ok) return false;
        std::string pres = presentation(H);
        for (const char* rel : {"x1^2 = 1", "x2^2 = 1", "x1 x2 = x2 x1", "t^2 = 1",
                                "t x1 t^-1 = x2", "t x2 t^-1 = x1"})
          if (pres.find(rel) == std::string::npos) return false;
      }
    }
    return true;
  });

  run(5, "equivariant section: exists for rank 2, not for rank 3", [] {
    SectionSearchResult two = section_search(2);
    return two.exists && two.chi.size() == 1 && two.chi[0] == Vec{1, 1} &&
           !section_search(3).exists;
  });

  run(6, "dim 2n^2 isotype counts, n in {3, 9, 15}", [] {
    for (i64 n : {3, 9, 15}) {
      AbelianGroup G = parse_group("Z" + std::to_string(n) + "xZ" + std::to_string(n));
      for (const CpAction& act : catalog_actions(G, 2)) {
        i64 na = alternating_modulus(act);
        i64 count = static_cast<i64>(classify_action(act).orbits.size());
        if (count != divisor_count(na)) return false;
        if (na == 1 && count != 1) return false;
      }
    }
    return true;
  });

  run(7, "commutative counts floor((3n+2)/2); trivial-action contribution 4", [] {
    for (auto [n, p] : std::vector<std::pair<int, i64>>{{1, 3}, {2, 3}, {2, 5}})
      if (trivial_action_isotypes(p, n) != (3 * n + 2) / 2) return false;
    for (i64 p : {3, 5}) {
      ClassifyReport rep = classify(elementary(p, 2), p);
      for (const auto& cls : rep.classes)
        if (cls.action.trivial() && cls.orbits.size() != 4) return false;
    }
    return true;
  });

  run(8, "self-duality: coefficient (p-1)/2, orbit verdict = QR verdict", [] {
    for (i64 p : {3, 5, 7}) {
      DualityVerdict d = dual_cocycle_p3(p);
      if (d.dual_coefficient != (p - 1) / 2) return false;
      if (d.same_orbit != d.qr) return false;
      if (d.qr != (p == 3)) return false;
    }
    return true;
  });

  run(9, "axiom suite up to dim 625; mutated control fails with witness", [] {
    // Every orbit representative on every cataloged carrier with |G| <= 16
    // and p <= 3, plus one representative per action class at dimension 625.
    int built = 0;
    for (const AbelianGroup& G : abelian_groups_up_to(16)) {
      for (i64 p : {2, 3}) {
        if (p > G.smallest_prime()) continue;
        std::vector<CpAction> classes;
        try {
          classes = catalog_actions(G, p);
        } catch (const UnsupportedError&) {
          continue;
        }
        for (const CpAction& act : classes) {
          XGroup X;
          try {
            X = build_x(act);
          } catch (const UnsupportedError&) {
            continue;
          }
          for (const auto& o : classify_action(act).orbits) {
            if (!verify_axioms(build_hopf(act, X, o.representative)).ok) return false;
            ++built;
          }
        }
      }
    }
    for (const char* name : {"Z5xZ25", "Z5xZ5xZ5"}) {
      for (const CpAction& act : catalog_actions(parse_group(name), 5)) {
        XGroup X = build_x(act);
        ActionClassReport cls = classify_action(act);
        // Lex-greatest representative: exercises nonzero character parts too.
        HopfStructure H = build_hopf(act, X, cls.orbits.back().representative);
        if (H.dim != 625 || !verify_axioms(H).ok) return false;
        ++built;
      }
    }
    if (built < 100) return false;
    // Negative control: one corrupted comultiplication coefficient.
    CpAction act = catalog_actions(parse_group("Z3xZ3"), 3).back();
    XGroup X = build_x(act);
    HopfStructure bad = build_hopf(act, X, classify_action(act).orbits.back().representative);
    bad.comult[bad.idx(1, 1)][1].e = mod_reduce(bad.comult[bad.idx(1, 1)][1].e + 1, bad.m);
    AxiomVerdict v = verify_axioms(bad);
    return !v.ok && !v.witness.empty();
  });

  run(10, "conjecture scan: fit p+1, zero residual at p=11", [] {
    Vec primes{3, 5, 7, 11}, counts;
    for (i64 p : primes) counts.push_back(classify(elementary(p, 2), p).total_nontrivial());
    i64 a = (counts[1] - counts[0]) / (primes[1] - primes[0]);
    i64 b = counts[0] - a * primes[0];
    if (a != 1 || b != 1) return false;
    for (size_t i = 0; i < primes.size(); ++i)
      if (counts[i] != a * primes[i] + b) return false;
    return true;
  });

  std::cout << (all_ok ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
  return all_ok ? 0 : 1;
}
