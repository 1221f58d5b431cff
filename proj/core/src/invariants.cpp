#include "hypersurf/invariants.hpp"

#include <sstream>

namespace hypersurf {

namespace {

Rat base_k2(BaseKind b) { return b == BaseKind::P2 ? Rat(9) : Rat(8); }

Int expect_integer(const Rat& v, const char* what, int level) {
  if (!is_integer(v))
    throw ConsistencyError(std::string(what) + " is not an integer on floor " +
                           std::to_string(level) + ": " + rat_to_string(v));
  return numerator(v);
}

// Genus of a level-k branch curve inside floor k-1.
Int branch_genus_before(const Tower& t, int k) {
  TracedCurve tc = trace_curve_partial(t, t.level(k).curves.front().geom, k - 1);
  if (tc.manual) throw ConsistencyError("manual incidence while tracing a branch curve");
  return tc.genus;
}

}  // namespace

std::vector<LevelInvariants> level_invariants(const Tower& t) {
  std::vector<LevelInvariants> out;

  LevelInvariants base;
  base.level = 0;
  base.chi = 1;
  base.k2 = base_k2(t.spec.base);
  base.K_class = canonical_class(t.spec.base);
  base.D_sq = 0;
  base.D_dot_K = 0;
  base.k_ample = false;
  out.push_back(base);

  Rat chi = 1;
  DivClass kappa = canonical_class(t.spec.base);
  for (int k = 1; k <= t.level_count(); ++k) {
    const LevelSpec& lv = t.level(k);
    const Rat m(lv.m);
    const DivClass& d = t.level_reduced[k - 1];
    Rat below(t.degree_below(k));

    LevelInvariants inv;
    inv.level = k;
    inv.D_sq = below * intersect(d, d);
    inv.D_dot_K = below * intersect(d, kappa);
    chi = m * chi + (m - 1) * (2 * m - 1) / (12 * m) * inv.D_sq +
          (m - 1) / 4 * inv.D_dot_K;
    kappa = kappa + d * ((m - 1) / m);

    inv.chi = chi;
    inv.k2 = below * m * intersect(kappa, kappa);
    inv.K_class = kappa;
    inv.k_ample = is_q_ample(kappa);
    inv.branch_component_genus = branch_genus_before(t, k);
    inv.has_branch_genus = true;
    expect_integer(inv.chi, "chi", k);
    expect_integer(inv.k2, "K^2", k);
    out.push_back(inv);
  }
  return out;
}

namespace {

// Checks the tower is n levels of equal degree m, each branched over m
// horizontal and m vertical fibers with unit multiplicities.
Int equal_degree_fiber_check(const Tower& t) {
  if (t.spec.base != BaseKind::P1xP1)
    throw DomainError("closed forms apply to fiber towers over P1xP1 only");
  Int m = t.level(1).m;
  for (int k = 1; k <= t.level_count(); ++k) {
    const LevelSpec& lv = t.level(k);
    if (lv.m != m) throw DomainError("closed forms need equal cover degrees");
    Int h = 0, v = 0;
    for (const auto& bc : lv.curves) {
      if (bc.a != 1) throw DomainError("closed forms need unit multiplicities");
      if (bc.geom.kind == GeomKind::FiberH) ++h;
      else if (bc.geom.kind == GeomKind::FiberV) ++v;
      else throw DomainError("closed forms need fiber branch curves only");
    }
    if (h != m || v != m)
      throw DomainError("closed forms need m horizontal and m vertical fibers per level");
  }
  return m;
}

}  // namespace

Rat noether_gap(const Tower& t) {
  Int m = equal_degree_fiber_check(t);
  auto inv = level_invariants(t);
  Rat gap = 0;
  Int mk = 1;
  for (int k = 1; k <= t.level_count(); ++k) {
    mk *= m;
    gap = inv[k].k2 - 8 * inv[k].chi;
    Rat closed = Rat(-2 * k, 3) * Rat(mk) * Rat(m * m - 1);
    if (gap != closed)
      throw ConsistencyError("K^2 - 8chi = " + rat_to_string(gap) + " on floor " +
                             std::to_string(k) + ", closed form says " +
                             rat_to_string(closed));
  }
  return gap;
}

Rat chi_via_pushforward(const Tower& t) {
  if (t.level_count() != 1)
    throw DomainError("pushforward chi is defined for single-level towers");
  const LevelSpec& lv = t.level(1);
  Rat chi = 0;
  for (const DivClass& mi : normalization_bundle_classes(lv, t.level_m_class[0]))
    chi += riemann_roch_chi(mi * Rat(-1));
  return chi;
}

bool forced_integrality_general(int n, const Int& g, const Rat& deg11) {
  if (n <= 2) throw DomainError("criterion needs n >= 3");
  return Rat(4 * g - 4) < deg11 * (n - 2);
}

bool cuboid_inequality(const Int& deg, const Int& g, const Int& e_dot_c) {
  if (deg < 1) throw DomainError("degree must be positive");
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (e_dot_c < 0) throw DomainError("exceptional intersection must be nonnegative");
  return -deg + e_dot_c + 4 * g - 4 < 0;
}

CuboidReport cuboid_report() {
  Tower t = build_tower(builtin::cuboid_tower());
  CuboidReport rep;

  auto inventory = singularity_inventory(t);
  for (const auto& [type, count] : inventory) rep.sing_count += count;

  std::array<CurveGeom, 4> c_curves = {CurveGeom::cuboid_c(0), CurveGeom::cuboid_c(1),
                                       CurveGeom::cuboid_c(2), CurveGeom::cuboid_c(3)};

  // Node membership: each of the 12 base nodes lies on exactly two of the
  // four image curves, and carries 4 of the 48 singular points.
  rep.two_e_identity = true;
  Int sing_per_node = t.degree_excluding(1);  // 4, level-independent here
  for (const auto& node : t.nodes) {
    if (!node.same_level()) continue;
    int through = 0;
    for (int i = 0; i < 4; ++i)
      if (c_curves[i].contains(node.point)) {
        ++rep.nodes_on_c[i];
        ++through;
      }
    if (through != 2) rep.two_e_identity = false;
  }
  for (int i = 0; i < 4; ++i) {
    rep.e_size[i] = Int(rep.nodes_on_c[i]) * sing_per_node;
    rep.e_prime_size[i] = rep.sing_count - rep.e_size[i];
  }

  rep.degree_bound_constant = rep.sing_count - 4;

  // Four per-curve bounds of 4, glued by the multiset identity sum E_i' = 2E.
  Int per_curve_bound = 4;
  rep.min_e_intersection = (4 * per_curve_bound) / 2;

  for (const auto& c : c_curves) {
    TracedCurve tc = trace_curve(t, c);
    if (tc.manual || tc.genus != 0)
      throw ConsistencyError("cuboid image curve did not trace to rational components");
    rep.rational_curves += tc.components;
  }
  for (const auto& lv : t.spec.levels)
    for (const auto& bc : lv.curves) {
      TracedCurve tc = trace_curve(t, bc.geom);
      if (tc.manual || tc.genus != 1 || tc.components != 1)
        throw ConsistencyError("cuboid fiber did not trace to one elliptic curve");
      rep.elliptic_fiber_curves += tc.components;
    }

  rep.inventory_total =
      rep.rational_curves + rep.elliptic_fiber_curves + rep.elliptic_orbit_curves;
  return rep;
}

}  // namespace hypersurf
