#include "hypersurf/tower.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hypersurf {

const char* omega_name(OmegaId id) {
  switch (id) {
    case OmegaId::Fiber22: return "FIBER_22";
    case OmegaId::FiberDiag44: return "FIBER_DIAG_44";
    case OmegaId::FiberDiag66: return "FIBER_DIAG_66";
    case OmegaId::TangentConic4: return "TANGENT_CONIC_4";
    case OmegaId::Cuboid33_0: return "CUBOID_33_0";
    case OmegaId::Cuboid33_1: return "CUBOID_33_1";
    case OmegaId::Cuboid33_2: return "CUBOID_33_2";
    case OmegaId::Cuboid33_3: return "CUBOID_33_3";
  }
  throw StructuralError("unreachable");
}

OmegaId omega_from_name(const std::string& name) {
  for (OmegaId id : {OmegaId::Fiber22, OmegaId::FiberDiag44, OmegaId::FiberDiag66,
                     OmegaId::TangentConic4, OmegaId::Cuboid33_0, OmegaId::Cuboid33_1,
                     OmegaId::Cuboid33_2, OmegaId::Cuboid33_3})
    if (name == omega_name(id)) return id;
  throw SpecError("unknown differential id '" + name + "'");
}

OmegaSpec::OmegaSpec(OmegaId id_, BaseKind base_, DivClass L_)
    : id(id_), base(base_), L(std::move(L_)), r(2), all_solutions_algebraic(true),
      fiber_families(false), tangent_line_family(false) {}

OmegaSpec resolve_omega(OmegaId id) {
  switch (id) {
    case OmegaId::Fiber22: {
      OmegaSpec w(id, BaseKind::P1xP1, DivClass::p1xp1(2, 2));
      w.fiber_families = true;
      return w;
    }
    case OmegaId::FiberDiag44: {
      OmegaSpec w(id, BaseKind::P1xP1, DivClass::p1xp1(4, 4));
      w.fiber_families = true;
      w.extra_integral = {CurveGeom::diagonal(GaussRat(Rat(0))),
                          CurveGeom::antidiagonal(GaussRat(Rat(0)))};
      w.coefficient_extra = w.extra_integral;
      return w;
    }
    case OmegaId::FiberDiag66: {
      OmegaSpec w(id, BaseKind::P1xP1, DivClass::p1xp1(6, 6));
      w.fiber_families = true;
      for (int c : {0, -1, 1, 2})
        w.extra_integral.push_back(CurveGeom::diagonal(GaussRat(Rat(c))));
      w.coefficient_extra = w.extra_integral;
      return w;
    }
    case OmegaId::TangentConic4: {
      OmegaSpec w(id, BaseKind::P2, DivClass::p2(4));
      w.tangent_line_family = true;
      w.extra_integral = {CurveGeom::conic()};
      return w;
    }
    case OmegaId::Cuboid33_0:
    case OmegaId::Cuboid33_1:
    case OmegaId::Cuboid33_2:
    case OmegaId::Cuboid33_3: {
      OmegaSpec w(id, BaseKind::P1xP1, DivClass::p1xp1(3, 3));
      w.fiber_families = true;
      int idx = static_cast<int>(id) - static_cast<int>(OmegaId::Cuboid33_0);
      w.extra_integral = {CurveGeom::cuboid_c(idx)};
      w.coefficient_extra = w.extra_integral;
      return w;
    }
  }
  throw StructuralError("unreachable");
}

Int Tower::degree_below(int k) const {
  Int d = 1;
  for (int i = 1; i < k; ++i) d *= spec.levels[i - 1].m;
  return d;
}

Int Tower::degree_excluding(int i) const {
  Int d = 1;
  for (int j = 1; j <= level_count(); ++j)
    if (j != i) d *= spec.levels[j - 1].m;
  return d;
}

namespace {

bool omega_admits_branch_curve(const OmegaSpec& w, const CurveGeom& g) {
  if (g.base != w.base) return false;
  if (w.fiber_families && (g.kind == GeomKind::FiberH || g.kind == GeomKind::FiberV))
    return true;
  if (w.tangent_line_family &&
      (g.kind == GeomKind::TangentLine || g.kind == GeomKind::Conic))
    return true;
  for (const auto& e : w.extra_integral)
    if (e.same_curve(g)) return true;
  return false;
}

struct PointIncidence {
  int level;      // 1-based
  int curve;      // index within level
  const BranchCurve* bc;
  int mult;
};

}  // namespace

Tower build_tower(const TowerSpec& spec) {
  Tower t{spec, resolve_omega(spec.omega)};
  if (t.omega.base != spec.base)
    throw SpecError(std::string("differential ") + omega_name(spec.omega) +
                    " lives on " + base_name(t.omega.base) + ", spec says " +
                    base_name(spec.base));
  if (spec.levels.empty()) throw SpecError("tower needs at least one level");

  // Level validation: degrees, multiplicities, curve bases, omega membership.
  for (size_t i = 0; i < spec.levels.size(); ++i) {
    const LevelSpec& lv = spec.levels[i];
    std::string where = "level " + std::to_string(i + 1);
    if (lv.m < 2) throw SpecError(where + ": cover degree must be >= 2");
    if (lv.curves.empty()) throw SpecError(where + ": no branch curves");
    for (const auto& bc : lv.curves) {
      if (bc.geom.base != spec.base)
        throw SpecError(where + ": curve " + bc.geom.label + " is on the wrong base");
      if (bc.a <= 0 || bc.a >= lv.m)
        throw SpecError(where + ": multiplicity of " + bc.geom.label +
                        " must satisfy 0 < a < m");
      if (int_gcd(bc.a, lv.m) != 1)
        throw SpecError(where + ": gcd(a, m) != 1 for " + bc.geom.label);
      if (!omega_admits_branch_curve(t.omega, bc.geom))
        throw SpecError(where + ": " + bc.geom.label +
                        " is not an integral curve of " + omega_name(spec.omega));
    }
    t.total_degree *= lv.m;
  }

  // Pairwise distinctness across the whole tower.
  std::vector<const CurveGeom*> all;
  for (const auto& lv : spec.levels)
    for (const auto& bc : lv.curves) all.push_back(&bc.geom);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (all[i]->same_curve(*all[j]))
        throw SpecError("duplicate branch curve " + all[i]->label);

  // Class bookkeeping and M_i integrality.
  for (const auto& lv : spec.levels) {
    DivClass reduced = DivClass::zero(spec.base);
    DivClass weighted = DivClass::zero(spec.base);
    for (const auto& bc : lv.curves) {
      reduced = reduced + bc.geom.cls();
      weighted = weighted + bc.geom.cls() * Rat(bc.a);
    }
    DivClass M = weighted * Rat(1, lv.m);
    if (!M.is_integral())
      throw SpecError("level class " + weighted.str() + " is not divisible by m = " +
                      lv.m.str() + "; no root bundle exists");
    t.level_reduced.push_back(reduced);
    t.level_m_class.push_back(M);
  }

  // Node scan: every pairwise incidence of branch curves, grouped by point.
  std::map<Point, std::vector<PointIncidence>> by_point;
  std::map<Point, int> max_mult;
  for (int li = 1; li <= t.level_count(); ++li) {
    for (int lj = li; lj <= t.level_count(); ++lj) {
      const auto& ci = spec.levels[li - 1].curves;
      const auto& cj = spec.levels[lj - 1].curves;
      for (size_t a = 0; a < ci.size(); ++a) {
        size_t b0 = (li == lj) ? a + 1 : 0;
        for (size_t b = b0; b < cj.size(); ++b) {
          for (const auto& inc : intersect_curves(ci[a].geom, cj[b].geom)) {
            auto& lst = by_point[inc.point];
            auto add = [&](int lvl, int idx, const BranchCurve* bc) {
              for (const auto& e : lst)
                if (e.level == lvl && e.curve == idx) return;
              lst.push_back({lvl, idx, bc, inc.mult});
            };
            add(li, static_cast<int>(a), &ci[a]);
            add(lj, static_cast<int>(b), &cj[b]);
            int& mm = max_mult[inc.point];
            mm = std::max(mm, inc.mult);
          }
        }
      }
    }
  }

  // Coefficient curves that are themselves branch curves cannot serve as
  // extra vanishing factors: their divisibility is the pure-term mechanism.
  std::vector<const CurveGeom*> free_extras, free_coeff;
  auto is_branch = [&](const CurveGeom& g) {
    for (const auto& lv : spec.levels)
      for (const auto& bc : lv.curves)
        if (bc.geom.same_curve(g)) return true;
    return false;
  };
  for (const auto& extra : t.omega.extra_integral)
    if (!is_branch(extra)) free_extras.push_back(&extra);
  for (const auto& extra : t.omega.coefficient_extra)
    if (!is_branch(extra)) free_coeff.push_back(&extra);

  for (auto& [pt, incs] : by_point) {
    if (incs.size() > 2) {
      t.snc_violations.push_back(
          {pt, std::to_string(incs.size()) + " branch curves through " + pt.str()});
      continue;
    }
    if (max_mult[pt] > 1) {
      t.snc_violations.push_back(
          {pt, "tangential contact (multiplicity " + std::to_string(max_mult[pt]) +
                   ") at " + pt.str()});
      // recorded below with its tangency so reports can show the witness
    }
    BranchNode node;
    node.point = pt;
    const PointIncidence* u = &incs[0];
    const PointIncidence* v = &incs[1];
    if (std::tie(v->level, v->curve) < std::tie(u->level, u->curve)) std::swap(u, v);
    node.level_lo = u->level;
    node.curve_lo = u->curve;
    node.level_hi = v->level;
    node.curve_hi = v->curve;
    node.a_u = u->bc->a;
    node.a_v = v->bc->a;
    node.tangency = max_mult[pt];
    for (const CurveGeom* extra : free_extras)
      if (extra->contains(pt)) node.on_curves.push_back(extra->label);
    for (const CurveGeom* extra : free_coeff)
      if (extra->contains(pt)) ++node.rescue_factors;
    t.nodes.push_back(std::move(node));
  }
  return t;
}

namespace {

void require_snc(const Tower& t) {
  if (t.snc_violations.empty()) return;
  std::ostringstream os;
  os << "branch divisor is not simple normal crossings:";
  for (const auto& v : t.snc_violations) os << " " << v.reason << ";";
  throw SncViolationError(os.str());
}

}  // namespace

std::vector<NodeRecord> node_inventory(const Tower& t) {
  require_snc(t);
  // Aggregate branch nodes by (level pair, multiplicities, tangency, extras).
  std::map<std::string, NodeRecord> agg;
  auto key_of = [](const NodeRecord& r) {
    std::ostringstream os;
    os << r.level_lo << "|" << r.level_hi << "|" << r.a_u << "|" << r.a_v << "|"
       << r.tangency << "|";
    for (const auto& c : r.on_curves) os << c << ",";
    return os.str();
  };
  for (const auto& n : t.nodes) {
    NodeRecord r;
    r.kind = NodeRecord::Kind::BranchNode;
    r.level_lo = n.level_lo;
    r.level_hi = n.level_hi;
    r.a_u = n.a_u;
    r.a_v = n.a_v;
    r.tangency = n.tangency;
    r.on_curves = n.on_curves;
    r.singularity_producing = n.same_level();
    r.count = 1;
    auto [it, fresh] = agg.emplace(key_of(r), r);
    if (!fresh) it->second.count += 1;
  }
  std::vector<NodeRecord> out;
  for (auto& [k, r] : agg) out.push_back(std::move(r));

  // Contacts of branch curves with named integral curves (e.g. the conic):
  // tangency bookkeeping for reports, not singularity-producing.
  std::map<std::string, NodeRecord> contacts;
  for (int li = 1; li <= t.level_count(); ++li) {
    for (const auto& bc : t.level(li).curves) {
      for (const auto& extra : t.omega.extra_integral) {
        if (extra.same_curve(bc.geom)) continue;
        bool extra_is_branch = false;
        for (const auto& lv : t.spec.levels)
          for (const auto& other : lv.curves)
            if (other.geom.same_curve(extra)) extra_is_branch = true;
        if (extra_is_branch) continue;
        for (const auto& inc : intersect_curves(bc.geom, extra)) {
          if (inc.mult < 2) continue;  // only tangency records are interesting
          NodeRecord r;
          r.kind = NodeRecord::Kind::IntegralContact;
          r.level_lo = r.level_hi = li;
          r.a_u = bc.a;
          r.a_v = 0;
          r.tangency = inc.mult;
          r.on_curves = {extra.label};
          r.singularity_producing = false;
          r.count = 1;
          std::ostringstream os;
          os << li << "|" << bc.a << "|" << inc.mult << "|" << extra.label;
          auto [it, fresh] = contacts.emplace(os.str(), r);
          if (!fresh) it->second.count += 1;
        }
      }
    }
  }
  for (auto& [k, r] : contacts) out.push_back(std::move(r));
  return out;
}

std::map<SingularityType, Int> singularity_inventory(const Tower& t) {
  require_snc(t);
  std::map<SingularityType, Int> inv;
  for (const auto& n : t.nodes) {
    if (!n.same_level()) continue;
    const Int& m = t.level(n.level_lo).m;
    SingularityType type = sing_from_node(n.a_u, n.a_v, m);
    auto [it, fresh] = inv.emplace(type, Int(0));
    it->second += t.degree_excluding(n.level_lo);
  }
  return inv;
}

RamificationReport ramification_decomposition(const Tower& t) {
  require_snc(t);
  RamificationReport rep;
  for (int li = 1; li <= t.level_count(); ++li) {
    RamificationLevel lvl;
    lvl.level = li;
    lvl.m = t.level(li).m;
    lvl.reduced_class = t.level_reduced[li - 1];
    std::map<SingularityType, Int> counts;
    for (const auto& n : t.nodes)
      if (n.same_level() && n.level_lo == li) {
        auto type = sing_from_node(n.a_u, n.a_v, lvl.m);
        auto [it, fresh] = counts.emplace(type, Int(0));
        it->second += 1;
      }
    for (const auto& [type, cnt] : counts) {
      RamificationEntry e{type, cnt, {}};
      ResolutionData rd = resolution_data(type);
      for (int l = 1; l <= rd.length(); ++l) {
        Rat coeff = Rat(rd.alpha[l] + rd.beta[l], type.m);
        if (coeff <= 0 || coeff > 1)
          throw ConsistencyError("exceptional coefficient out of (0,1] at " + type.str());
        if ((coeff == 1) != (rd.discrepancies[l - 1] == 0))
          throw ConsistencyError("coefficient/discrepancy mismatch at " + type.str());
        if (coeff != 1) lvl.crepant = false;
        e.exceptional_coeffs.push_back(coeff);
      }
      lvl.entries.push_back(std::move(e));
    }
    rep.all_crepant = rep.all_crepant && lvl.crepant;
    rep.levels.push_back(std::move(lvl));
  }
  return rep;
}

std::vector<DivClass> normalization_bundle_classes(const LevelSpec& level,
                                                   const DivClass& M) {
  std::vector<DivClass> out;
  for (Int i = 0; i < level.m; ++i) {
    DivClass cls = M * Rat(i);
    for (const auto& bc : level.curves) {
      Int fl = floor_div(bc.a * i, level.m);
      cls = cls - bc.geom.cls() * Rat(fl);
    }
    out.push_back(cls);
  }
  return out;
}

namespace builtin {

TowerSpec fiber_tower(const Int& m, int n, OmegaId omega) {
  if (n < 1) throw SpecError("tower needs at least one level");
  TowerSpec spec;
  spec.base = BaseKind::P1xP1;
  spec.omega = omega;
  Int param = 1;
  for (int k = 0; k < n; ++k) {
    LevelSpec lv;
    lv.m = m;
    std::vector<P1Point> hs, vs;
    for (Int j = 0; j < m; ++j) {
      hs.push_back(P1Point::finite(GaussRat(Rat(param))));
      vs.push_back(P1Point::finite(GaussRat(Rat(param))));
      ++param;
    }
    for (const auto& p : hs) lv.curves.push_back({CurveGeom::fiber_h(p), 1});
    for (const auto& p : vs) lv.curves.push_back({CurveGeom::fiber_v(p), 1});
    spec.levels.push_back(std::move(lv));
  }
  return spec;
}

TowerSpec cuboid_tower(OmegaId omega) {
  TowerSpec spec;
  spec.base = BaseKind::P1xP1;
  spec.omega = omega;
  auto level_at = [](std::vector<P1Point> params) {
    LevelSpec lv;
    lv.m = 2;
    for (const auto& p : params) lv.curves.push_back({CurveGeom::fiber_h(p), 1});
    for (const auto& p : params) lv.curves.push_back({CurveGeom::fiber_v(p), 1});
    return lv;
  };
  const GaussRat i = GaussRat::i();
  spec.levels.push_back(level_at({P1Point::finite(GaussRat(Rat(1))),
                                  P1Point::finite(GaussRat(Rat(-1)))}));
  spec.levels.push_back(level_at({P1Point::finite(i), P1Point::finite(-i)}));
  spec.levels.push_back(level_at({P1Point::finite(GaussRat(Rat(0))),
                                  P1Point::infinity()}));
  return spec;
}

TowerSpec tangent_lines_tower(int d, const Int& m) {
  TowerSpec spec;
  spec.base = BaseKind::P2;
  spec.omega = OmegaId::TangentConic4;
  LevelSpec lv;
  lv.m = m;
  for (int j = 1; j <= d; ++j)
    lv.curves.push_back({CurveGeom::tangent_line(P1Point::finite(GaussRat(Rat(j)))), 1});
  spec.levels.push_back(std::move(lv));
  return spec;
}

}  // namespace builtin

}  // namespace hypersurf
