#include <doctest.h>

#include "hypersurf/certify.hpp"
#include "hypersurf/genfam.hpp"

#include <random>

using namespace hypersurf;

namespace {

std::vector<Int> degrees(std::initializer_list<int> xs) {
  std::vector<Int> out;
  for (int x : xs) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("multidegree classification patterns") {
  CHECK(classify_multidegree(degrees({2, 2, 2, 2, 2, 2, 2, 2})).primary() ==
        FamilyKind::FamA);
  CHECK(classify_multidegree(degrees({3, 4, 5, 6, 7})).primary() == FamilyKind::FamB);
  CHECK(classify_multidegree(degrees({2, 3, 3, 3})).primary() == FamilyKind::FamD);
  CHECK(classify_multidegree(degrees({2, 2, 3, 3, 3, 3})).primary() == FamilyKind::FamC);
  CHECK(classify_multidegree(degrees({2, 2, 2, 2})).primary() == FamilyKind::NotCovered);
  CHECK_THROWS_AS(classify_multidegree(degrees({1, 3, 3})), DomainError);
}

TEST_CASE("excluded multidegrees from the method's boundary") {
  // all-quadric tuples below length 8
  for (int len : {5, 6, 7}) {
    std::vector<Int> d(len, Int(2));
    CHECK(classify_multidegree(d).primary() == FamilyKind::NotCovered);
  }
  // every length-4 tuple without the single-2 pattern
  CHECK(classify_multidegree(degrees({3, 3, 3, 3})).primary() == FamilyKind::NotCovered);
  CHECK(classify_multidegree(degrees({2, 2, 2, 2})).primary() == FamilyKind::NotCovered);
  CHECK(classify_multidegree(degrees({5, 5, 5, 5})).primary() == FamilyKind::NotCovered);
  // the equal-degree length-4 case carries the informational note
  CHECK(classify_multidegree(degrees({5, 5, 5, 5})).note.find("other methods") !=
        std::string::npos);
}

TEST_CASE("both quadratic routes listed when applicable, most specific first") {
  Classification cls = classify_multidegree(degrees({2, 2, 3, 3, 3, 3, 3, 3}));
  REQUIRE(cls.routes.size() == 2);
  CHECK(cls.routes[0].kind == FamilyKind::FamC);
  CHECK(cls.routes[1].kind == FamilyKind::FamA);
}

TEST_CASE("FAM_B instantiation shape") {
  EquationSet es = instantiate_family(FamilyKind::FamB, degrees({3, 3, 3, 3, 3}));
  CHECK(es.ambient.dim == 7);
  CHECK(es.equations.size() == 5);
  for (const auto& eq : es.equations) {
    CHECK(eq.degree == 3);
    CHECK(eq.factors.size() == 3);
    CHECK(eq.rhs_power == 3);
    CHECK_FALSE(eq.perturbation_symbol.empty());
  }
  CHECK(validate_family(es).ok);
}

TEST_CASE("FAM_D instantiation carries the quadric") {
  EquationSet es = instantiate_family(FamilyKind::FamD, degrees({2, 3, 3, 3}));
  CHECK(es.ambient.dim == 6);
  REQUIRE(es.equations.size() == 4);
  CHECK(es.equations[0].is_quadric);
  for (size_t i = 1; i < 4; ++i) CHECK(es.equations[i].degree == 3);
  CHECK(validate_family(es).ok);
}

TEST_CASE("weighted line hypersurface") {
  EquationSet es = instantiate_weighted_lines(15, 3);
  CHECK(es.ambient.kind == Ambient::Kind::WeightedP111R);
  CHECK(es.ambient.weight == 5);
  REQUIRE(es.equations.size() == 1);
  CHECK(es.equations[0].factors.size() == 15);
  CHECK(es.equations[0].rhs_power == 3);
  CHECK(validate_family(es).ok);
  CHECK_THROWS_AS(instantiate_weighted_lines(14, 3), DomainError);
}

TEST_CASE("instantiated families certify as hyperbolic at t = 0") {
  for (auto d : {degrees({2, 2, 2, 2, 2, 2, 2, 2}), degrees({3, 4, 5, 6, 7}),
                 degrees({2, 2, 3, 3, 3, 3}), degrees({2, 3, 3, 3})}) {
    Classification cls = classify_multidegree(d);
    REQUIRE(cls.primary() != FamilyKind::NotCovered);
    EquationSet es = instantiate_family(cls.primary(), d);
    Verdict v = verdict(build_tower(es.tower));
    CHECK(v.kind == VerdictKind::Hyperbolic);
  }
}

TEST_CASE("validation catches injected violations") {
  EquationSet es = instantiate_family(FamilyKind::FamA, degrees({2, 2, 2, 2, 2, 2, 2, 2}));
  REQUIRE(validate_family(es).ok);

  SUBCASE("duplicated parameter in the certificate") {
    EquationSet bad = es;
    REQUIRE(bad.constraints[0].values.size() >= 2);
    bad.constraints[0].values[1] = bad.constraints[0].values[0];
    ValidationReport rep = validate_family(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violations[0].find("duplicate") != std::string::npos);
  }
  SUBCASE("forbidden-window violation") {
    // mixed multidegree, so the generic-parameter window constraint is live
    EquationSet mixed =
        instantiate_family(FamilyKind::FamA, degrees({2, 2, 2, 2, 2, 2, 2, 3}));
    REQUIRE(validate_family(mixed).ok);
    bool mutated = false;
    for (auto& c : mixed.constraints)
      if (c.kind == Constraint::Kind::AvoidValues && !c.values.empty()) {
        c.values[0] = c.forbidden[0];
        mutated = true;
      }
    REQUIRE(mutated);
    CHECK_FALSE(validate_family(mixed).ok);
  }
  SUBCASE("tampered expansion") {
    EquationSet bad = es;
    for (auto& eq : bad.equations)
      if (!eq.is_quadric) {
        eq.expanded.terms.begin()->second += 1;
        break;
      }
    CHECK_FALSE(validate_family(bad).ok);
  }
  SUBCASE("a quadratic factor moved off the coefficient diagonals") {
    EquationSet bad = es;
    for (auto& eq : bad.equations) {
      if (eq.is_quadric || eq.degree != 2) continue;
      // displace one fiber pair: its node leaves every coefficient diagonal
      eq.factors[1] = LinearFactor{{Int(1), Int(-100), Int(-200), Int(20000)}};
      eq.expanded = eq.expanded;  // stale expansion also flagged; rebuild to isolate
      Polynomial p = Polynomial::constant(1, 4);
      p = p.times(eq.factors[0]);
      p = p.times(eq.factors[1]);
      eq.expanded = p;
      break;
    }
    // keep the stored tower in sync so the geometric check itself fires
    bad.tower.levels[0].curves[2] =
        {CurveGeom::fiber_v(P1Point::finite(GaussRat(Rat(100)))), 1};
    bad.tower.levels[0].curves[3] =
        {CurveGeom::fiber_h(P1Point::finite(GaussRat(Rat(200)))), 1};
    ValidationReport rep = validate_family(bad);
    CHECK_FALSE(rep.ok);
    bool vanishing = false;
    for (const auto& v : rep.violations)
      if (v.find("hypothesis") != std::string::npos) vanishing = true;
    CHECK(vanishing);
  }
}

TEST_CASE("seeded admissible multidegrees round-trip") {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> kind_pick(0, 3);
  std::uniform_int_distribution<int> deg_pick(3, 6);
  for (int it = 0; it < 25; ++it) {
    std::vector<Int> d;
    switch (kind_pick(rng)) {
      case 0: {  // FamA pattern
        std::uniform_int_distribution<int> len(8, 9);
        int n = len(rng);
        std::uniform_int_distribution<int> twos(2, n);
        int t = twos(rng);
        for (int i = 0; i < t; ++i) d.push_back(2);
        for (int i = t; i < n; ++i) d.push_back(deg_pick(rng));
        break;
      }
      case 1: {  // FamB
        std::uniform_int_distribution<int> len(5, 8);
        int n = len(rng);
        for (int i = 0; i < n; ++i) d.push_back(deg_pick(rng));
        break;
      }
      case 2: {  // FamC
        std::uniform_int_distribution<int> len(6, 9);
        int n = len(rng);
        std::uniform_int_distribution<int> twos(2, n - 1);
        int t = twos(rng);
        for (int i = 0; i < t; ++i) d.push_back(2);
        for (int i = t; i < n; ++i) d.push_back(deg_pick(rng));
        break;
      }
      default: {  // FamD
        std::uniform_int_distribution<int> len(4, 8);
        int n = len(rng);
        d.push_back(2);
        for (int i = 1; i < n; ++i) d.push_back(deg_pick(rng));
        break;
      }
    }
    std::shuffle(d.begin(), d.end(), rng);
    Classification cls = classify_multidegree(d);
    if (cls.primary() == FamilyKind::NotCovered) continue;  // e.g. all 2's, short
    EquationSet es = instantiate_family(cls.primary(), d);
    ValidationReport rep = validate_family(es);
    CHECK(rep.ok);
    REQUIRE(es.equations.size() == d.size());
    for (size_t i = 0; i < d.size(); ++i) CHECK(es.equations[i].degree == d[i]);
    if (it % 5 == 0)  // spot-check the full verdict on the emitted tower
      CHECK(verdict(build_tower(es.tower)).kind == VerdictKind::Hyperbolic);
  }
}

TEST_CASE("weighted generator enforces the degree criterion") {
  CHECK_THROWS_AS(instantiate_weighted_lines(12, 3), DomainError);
  CHECK_NOTHROW(instantiate_weighted_lines(15, 3));
}
