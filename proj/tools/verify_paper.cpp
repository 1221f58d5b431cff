#include "verify_paper.hpp"

#include "hypersurf/certify.hpp"
#include "hypersurf/genfam.hpp"
#include "hypersurf/invariants.hpp"
#include "hypersurf/parallel.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

using namespace hypersurf;

namespace {

struct Check {
  std::string name;
  std::function<void()> body;
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

std::vector<Check> checks() {
  std::vector<Check> out;

  out.push_back({"cuboid tower has 48 singular points of type A_1", [] {
    auto inv = singularity_inventory(build_tower(builtin::cuboid_tower()));
    expect(inv.size() == 1 && inv.begin()->first == SingularityType(2, 1) &&
               inv.begin()->second == 48,
           "inventory differs");
  }});

  out.push_back({"cuboid image-curve partition is 24/24 with sum E_i' = 2E", [] {
    CuboidReport rep = cuboid_report();
    for (int i = 0; i < 4; ++i)
      expect(rep.e_size[i] == 24 && rep.e_prime_size[i] == 24, "partition differs");
    expect(rep.two_e_identity, "2E identity fails");
  }});

  out.push_back({"cuboid degree bound constant is 44 = 48 - 4", [] {
    expect(cuboid_report().degree_bound_constant == 44, "constant differs");
  }});

  out.push_back({"cuboid minimal exceptional intersection is 8", [] {
    expect(cuboid_report().min_e_intersection == 8, "bound differs");
  }});

  out.push_back({"cuboid low-genus inventory is 32 + 12 + 48 = 92 curves", [] {
    CuboidReport rep = cuboid_report();
    expect(rep.rational_curves == 32 && rep.elliptic_fiber_curves == 12 &&
               rep.elliptic_orbit_curves == 48 && rep.inventory_total == 92,
           "inventory differs");
  }});

  out.push_back({"Noether gap of the cuboid tower is -48", [] {
    expect(noether_gap(build_tower(builtin::cuboid_tower())) == -48, "gap differs");
  }});

  out.push_back({"Noether gap of the m=3 n=3 tower is -432", [] {
    expect(noether_gap(build_tower(builtin::fiber_tower(3, 3))) == -432, "gap differs");
  }});

  out.push_back({"m=3 n=3 tower has 243 singular points of type 1/3(1,2)", [] {
    auto inv = singularity_inventory(build_tower(builtin::fiber_tower(3, 3)));
    expect(inv.size() == 1 && inv.begin()->first == SingularityType(3, 2) &&
               inv.begin()->second == 243,
           "inventory differs");
  }});

  out.push_back({"spot invariants: chi, K^2 = (8, 16) and (162, 864)", [] {
    auto a = level_invariants(build_tower(builtin::cuboid_tower()));
    expect(a[3].chi == 8 && a[3].k2 == 16, "cuboid floor invariants differ");
    auto b = level_invariants(build_tower(builtin::fiber_tower(3, 3)));
    expect(b[3].chi == 162 && b[3].k2 == 864, "m=3 n=3 floor invariants differ");
  }});

  out.push_back({"pushforward chi agrees with the recursion (1 and 43)", [] {
    TowerSpec one = builtin::cuboid_tower();
    one.levels.resize(1);
    Tower t1 = build_tower(one);
    expect(chi_via_pushforward(t1) == 1 && level_invariants(t1)[1].chi == 1,
           "single cuboid level differs");
    Tower t2 = build_tower(builtin::tangent_lines_tower(15, 3));
    expect(chi_via_pushforward(t2) == 43 && level_invariants(t2)[1].chi == 43,
           "15-line cover differs");
  }});

  out.push_back({"branch-curve genus matches the closed form for m<=6, n<=6", [] {
    for (int m = 2; m <= 6; ++m)
      for (int n = 1; n <= 6; ++n) {
        Tower t = build_tower(builtin::fiber_tower(m, n));
        for (int k = 1; k <= n; ++k) {
          TracedCurve tc = trace_curve_partial(t, t.level(k).curves[0].geom, k - 1);
          Int mk = 1;
          for (int i = 1; i < k; ++i) mk *= m;
          expect(!tc.manual && 2 * tc.genus - 2 == mk * (Int(m - 1) * (k - 1) - 2),
                 "closed form differs");
        }
      }
  }});

  out.push_back({"cuboid fibers lift to 12 elliptic curves", [] {
    Tower t = build_tower(builtin::cuboid_tower());
    int count = 0;
    for (const auto& lv : t.spec.levels)
      for (const auto& bc : lv.curves) {
        TracedCurve tc = trace_curve(t, bc.geom);
        expect(tc.genus == 1 && tc.components == 1, "fiber lift differs");
        ++count;
      }
    expect(count == 12, "fiber count differs");
  }});

  out.push_back({"cuboid image curves lift to 32 rational components", [] {
    Tower t = build_tower(builtin::cuboid_tower());
    Int total = 0;
    for (int i = 0; i < 4; ++i) {
      TracedCurve tc = trace_curve(t, CurveGeom::cuboid_c(i));
      expect(tc.genus == 0, "not rational");
      total += tc.components;
    }
    expect(total == 32, "component count differs");
  }});

  out.push_back({"conic above 15 tangent lines lifts irreducibly with genus 13", [] {
    TracedCurve tc = trace_curve(build_tower(builtin::tangent_lines_tower(15, 3)),
                                 CurveGeom::conic());
    expect(tc.components == 1 && tc.genus == 13, "conic lift differs");
  }});

  out.push_back({"cuboid verdict: INCONCLUSIVE, vanishing certificate fails", [] {
    Verdict v = verdict(build_tower(builtin::cuboid_tower()));
    expect(v.kind == VerdictKind::Inconclusive && !v.checks.vanishing_ok,
           "verdict differs");
  }});

  out.push_back({"15-line verdict: QUASI_HYPERBOLIC with the 15 lines as locus", [] {
    Verdict v = verdict(build_tower(builtin::tangent_lines_tower(15, 3)));
    expect(v.kind == VerdictKind::QuasiHyperbolic && v.exceptional_locus.size() == 15,
           "verdict differs");
  }});

  out.push_back({"HYPERBOLIC sweep over fiber towers, 3 <= m, n <= 5", [] {
    for (int m = 3; m <= 5; ++m)
      for (int n = 3; n <= 5; ++n)
        expect(verdict(build_tower(builtin::fiber_tower(m, n))).kind ==
                   VerdictKind::Hyperbolic,
               "sweep member not hyperbolic");
  }});

  out.push_back({"multidegree classifier matches the covered patterns", [] {
    auto mk = [](std::initializer_list<int> xs) {
      std::vector<Int> v;
      for (int x : xs) v.push_back(x);
      return v;
    };
    expect(classify_multidegree(mk({2, 2, 2, 2, 2, 2, 2, 2})).primary() ==
               FamilyKind::FamA, "(2^8)");
    expect(classify_multidegree(mk({3, 4, 5, 6, 7})).primary() == FamilyKind::FamB,
           "(3,4,5,6,7)");
    expect(classify_multidegree(mk({2, 2, 3, 3, 3, 3})).primary() == FamilyKind::FamC,
           "(2,2,3^4)");
    expect(classify_multidegree(mk({2, 3, 3, 3})).primary() == FamilyKind::FamD,
           "(2,3,3,3)");
    for (int len : {4, 5, 6, 7})
      expect(classify_multidegree(std::vector<Int>(len, Int(2))).primary() ==
                 FamilyKind::NotCovered,
             "(2^" + std::to_string(len) + ")");
    expect(classify_multidegree(mk({3, 3, 3, 3})).primary() == FamilyKind::NotCovered,
           "(3,3,3,3)");
  }});

  out.push_back({"emitted families certify HYPERBOLIC at t = 0", [] {
    auto mk = [](std::initializer_list<int> xs) {
      std::vector<Int> v;
      for (int x : xs) v.push_back(x);
      return v;
    };
    for (auto d : {mk({2, 2, 2, 2, 2, 2, 2, 2}), mk({3, 3, 3, 3, 3}),
                   mk({2, 2, 3, 3, 3, 3}), mk({2, 3, 3, 3})}) {
      EquationSet es = instantiate_family(classify_multidegree(d).primary(), d);
      expect(validate_family(es).ok, "validation failed");
      expect(verdict(build_tower(es.tower)).kind == VerdictKind::Hyperbolic,
             "emitted family not hyperbolic");
    }
  }});

  out.push_back({"vanishing certificate fails exactly on 1/m(1,1), m <= 200", [] {
    for (int m = 2; m <= 200; ++m)
      for (int q = 1; q < m; ++q) {
        if (int_gcd(q, m) != 1) continue;
        expect(vanishing_certificate(SingularityType(m, q), 2).pass == (q != 1),
               "boundary differs at m=" + std::to_string(m));
      }
  }});

  out.push_back({"continued-fraction arithmetic is sound for m <= 200", [] {
    for (int m = 2; m <= 200; ++m)
      for (int q = 1; q < m; ++q) {
        if (int_gcd(q, m) != 1) continue;
        ResolutionData d = resolution_data(SingularityType(m, q));
        Rat acc = 0;
        for (auto it = d.b.rbegin(); it != d.b.rend(); ++it)
          acc = (acc == 0) ? Rat(*it) : Rat(*it) - 1 / acc;
        expect(acc == Rat(m, q), "reconstruction differs");
        expect(mod_nonneg(d.alpha[d.length()] * q, m) == 1, "inverse differs");
      }
  }});

  return out;
}

}  // namespace

int run_verify_paper(std::ostream& out) {
  std::vector<Check> all = checks();
  std::vector<std::string> lines = parallel_map(all.size(), [&](size_t i) {
    try {
      all[i].body();
      return "PASS: " + all[i].name;
    } catch (const std::exception& e) {
      return "FAIL: " + all[i].name + ": " + e.what();
    }
  });
  int failures = 0;
  for (const auto& line : lines) {
    out << line << "\n";
    if (line.rfind("FAIL", 0) == 0) ++failures;
  }
  if (failures == 0)
    out << "all reference constants re-derived\n";
  else
    out << failures << " reference checks FAILED\n";
  return failures;
}
