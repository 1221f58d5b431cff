#include "hypersurf/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hypersurf {

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Hyperbolic: return "HYPERBOLIC";
    case VerdictKind::QuasiHyperbolic: return "QUASI_HYPERBOLIC";
    case VerdictKind::GenusBoundOnly: return "GENUS_BOUND_ONLY";
    case VerdictKind::Inconclusive: return "INCONCLUSIVE";
  }
  throw StructuralError("unreachable");
}

CheckReport check_hypotheses(const Tower& t) {
  CheckReport rep;
  rep.criterion_class = DivClass::zero(t.spec.base);

  // snc
  rep.snc_ok = t.snc_violations.empty();
  for (const auto& v : t.snc_violations) rep.snc_witnesses.push_back(v.reason);

  // ampleness of sum (1/m_i) sum_j D_ij - L
  DivClass crit = DivClass::zero(t.spec.base);
  for (int i = 1; i <= t.level_count(); ++i)
    crit = crit + t.level_reduced[i - 1] * Rat(1, t.level(i).m);
  crit = crit - t.omega.L;
  rep.criterion_class = crit;
  rep.ampleness_ok = is_q_ample(crit);

  // multiplicity condition a_j + a_j' != 0 (mod m) within each level.
  // A violating pair is harmless when the curves are disjoint, and rescued
  // when every common node lies on a coefficient curve of the differential.
  rep.multiplicity_ok = true;
  for (int li = 1; li <= t.level_count(); ++li) {
    const LevelSpec& lv = t.level(li);
    for (size_t a = 0; a < lv.curves.size(); ++a) {
      for (size_t b = a + 1; b < lv.curves.size(); ++b) {
        if (mod_nonneg(lv.curves[a].a + lv.curves[b].a, lv.m) != 0) continue;
        bool meet = false, all_rescued = true;
        for (const auto& n : t.nodes) {
          if (!(n.level_lo == li && n.level_hi == li)) continue;
          int clo = static_cast<int>(std::min(a, b));
          int chi = static_cast<int>(std::max(a, b));
          if (n.curve_lo != clo || n.curve_hi != chi) continue;
          meet = true;
          if (n.rescue_factors == 0) all_rescued = false;
        }
        std::ostringstream os;
        os << "level " << li << ": a(" << lv.curves[a].geom.label << ") + a("
           << lv.curves[b].geom.label << ") = 0 (mod " << lv.m << ")";
        if (!meet) {
          rep.rescued_pairs.push_back(os.str() + " [curves disjoint]");
        } else if (all_rescued) {
          rep.rescued_pairs.push_back(os.str() + " [all nodes on coefficient curves]");
        } else {
          rep.multiplicity_ok = false;
          rep.multiplicity_witnesses.push_back(os.str());
        }
      }
    }
  }

  // vanishing certificate, node by node, with coefficient-curve rescues
  rep.vanishing_ok = true;
  for (const auto& n : t.nodes) {
    if (!n.same_level() || n.tangency > 1) continue;
    const Int& m = t.level(n.level_lo).m;
    SingularityType type = sing_from_node(n.a_u, n.a_v, m);
    CertificateResult cert = vanishing_certificate(type, t.omega.r, n.rescue_factors);
    if (!cert.pass) {
      rep.vanishing_ok = false;
      std::ostringstream os;
      os << type.str() << " at " << n.point.str() << ": alpha_l = beta_l = 1 at l = "
         << cert.failing_index << ", no coefficient factor through the node";
      rep.vanishing_witnesses.push_back(os.str());
    }
  }
  return rep;
}

CurveTrace cover_restriction(const CurveTrace& trace, const Int& m,
                             const std::vector<std::pair<Int, Int>>& branch) {
  if (m < 2) throw DomainError("cover degree must be >= 2");
  for (const auto& [e, cnt] : branch)
    if (e <= 0 || cnt <= 0) throw DomainError("branch exponents and counts must be positive");

  CurveTrace out = trace;
  Int c = m;
  for (const auto& [e, cnt] : branch) c = int_gcd(c, e);

  Int mc = m / c;
  Int phi = mc * (2 * trace.genus - 2);
  for (const auto& [e, cnt] : branch) {
    Int residual = int_gcd(mc, e / c);
    phi += cnt * (mc - residual);
  }
  if (mod_nonneg(phi, 2) != 0)
    throw ConsistencyError("odd Euler characteristic in a cover step");
  out.genus = (phi + 2) / 2;
  if (out.genus < 0) throw ConsistencyError("negative genus in a cover step");
  out.components = trace.components * c;
  out.degree = trace.degree * mc;
  if (branch.empty()) out.unbranched_step = true;
  for (auto& mk : out.marked) mk.count *= mc;
  return out;
}

namespace {

struct MarkedSetup {
  // per level: exponent -> count (downstairs, per original curve)
  std::map<int, std::map<Int, Int>> marks;
  bool manual = false;
  std::string manual_reason;
};

// Collects every branch incidence of `geom` up to last_level and classifies
// its points.
MarkedSetup collect_marks(const Tower& t, const CurveGeom& geom, int own_level,
                          int last_level) {
  struct Hit {
    int level;
    Int a;
    int mult;
  };
  std::map<Point, std::vector<Hit>> by_point;
  for (int li = 1; li <= last_level; ++li) {
    if (li == own_level) continue;  // the curve's own level is a degree-1 step
    for (const auto& bc : t.level(li).curves) {
      if (bc.geom.same_curve(geom)) continue;
      for (const auto& inc : intersect_curves(geom, bc.geom))
        by_point[inc.point].push_back({li, bc.a, inc.mult});
    }
  }
  MarkedSetup setup;
  for (const auto& [pt, hits] : by_point) {
    int lvl = hits[0].level;
    bool mixed_levels = false;
    Int exponent = 0;
    for (const auto& h : hits) {
      if (h.level != lvl) mixed_levels = true;
      exponent += Int(h.mult) * h.a;
    }
    if (mixed_levels) {
      setup.manual = true;
      setup.manual_reason = "curve through branch curves of several levels at " +
                            pt.str() + "; at least three local branches";
      continue;
    }
    auto& bucket = setup.marks[lvl][exponent];
    bucket += 1;
  }
  return setup;
}

}  // namespace

TracedCurve trace_curve(const Tower& t, const CurveGeom& geom) {
  return trace_curve_partial(t, geom, t.level_count());
}

TracedCurve trace_curve_partial(const Tower& t, const CurveGeom& geom, int last_level) {
  if (last_level < 0 || last_level > t.level_count())
    throw StructuralError("trace level out of range");
  TracedCurve out;
  out.geom = geom;
  for (int li = 1; li <= t.level_count(); ++li)
    for (const auto& bc : t.level(li).curves)
      if (bc.geom.same_curve(geom)) out.branch_level = li;

  MarkedSetup setup = collect_marks(t, geom, out.branch_level, last_level);
  if (setup.manual) {
    out.manual = true;
    out.manual_reason = setup.manual_reason;
    return out;
  }

  CurveTrace tr;
  tr.genus = CurveGeom::genus();
  for (const auto& [lvl, by_exp] : setup.marks)
    for (const auto& [exp, cnt] : by_exp) tr.marked.push_back({lvl, exp, cnt});

  for (int li = 1; li <= last_level; ++li) {
    if (li == out.branch_level) continue;  // ramification curve: genus unchanged
    std::vector<std::pair<Int, Int>> branch;
    std::vector<CurveTrace::Marked> remaining;
    for (const auto& mk : tr.marked) {
      if (mk.level == li)
        branch.push_back({mk.exponent, mk.count});
      else
        remaining.push_back(mk);
    }
    tr.marked = std::move(remaining);
    tr = cover_restriction(tr, t.level(li).m, branch);
  }

  out.components = tr.components;
  out.genus = tr.genus;
  out.unbranched_step = tr.unbranched_step;
  return out;
}

namespace {

// A finite parameter past everything the tower uses, so the generic
// family member avoids every branch curve and node.
P1Point fresh_parameter(const Tower& t) {
  Rat best(0);
  auto consider = [&best](const GaussRat& g) {
    for (const Rat* r : {&g.re, &g.im}) {
      Rat v = *r < 0 ? -*r : *r;
      if (v > best) best = v;
    }
  };
  for (const auto& lv : t.spec.levels)
    for (const auto& bc : lv.curves) {
      if (!bc.geom.param.is_infinity() && bc.geom.kind != GeomKind::Conic)
        consider(bc.geom.param.p);
      if (bc.geom.graph) {
        consider(bc.geom.graph->a);
        consider(bc.geom.graph->b);
        consider(bc.geom.graph->c);
        consider(bc.geom.graph->d);
      }
    }
  Int next = to_integer(Rat(boost::multiprecision::numerator(best) /
                            boost::multiprecision::denominator(best))) + 7;
  return P1Point::finite(GaussRat(Rat(next)));
}

}  // namespace

std::vector<TracedCurve> classify_preimages(const Tower& t) {
  std::vector<TracedCurve> out;
  std::vector<CurveGeom> traced;

  auto push = [&](const CurveGeom& g, bool generic) {
    for (const auto& seen : traced)
      if (seen.same_curve(g)) return;
    traced.push_back(g);
    TracedCurve tc = trace_curve(t, g);
    tc.generic_representative = generic;
    out.push_back(std::move(tc));
  };

  for (const auto& lv : t.spec.levels)
    for (const auto& bc : lv.curves) push(bc.geom, false);
  for (const auto& extra : t.omega.extra_integral) push(extra, false);
  if (t.omega.fiber_families) {
    P1Point fresh = fresh_parameter(t);
    push(CurveGeom::fiber_h(fresh), true);
    push(CurveGeom::fiber_v(fresh), true);
  }
  if (t.omega.tangent_line_family) push(CurveGeom::tangent_line(fresh_parameter(t)), true);
  return out;
}

Verdict verdict(const Tower& t) {
  Verdict v;
  v.checks = check_hypotheses(t);
  v.curves = classify_preimages(t);

  bool any_manual = false;
  for (const auto& c : v.curves) {
    if (c.manual) {
      any_manual = true;
      v.notes.push_back("MANUAL: " + c.geom.label + ": " + c.manual_reason);
      continue;
    }
    if (c.genus <= 1) v.exceptional_locus.push_back(c);
    if (c.unbranched_step)
      v.notes.push_back("unbranched cover step while tracing " + c.geom.label);
  }

  if (!v.checks.all_pass()) {
    v.kind = VerdictKind::Inconclusive;
    return v;
  }
  if (any_manual) {
    v.kind = VerdictKind::Inconclusive;
    v.notes.push_back("a traced curve required manual analysis");
    return v;
  }
  if (!t.omega.all_solutions_algebraic) {
    v.kind = VerdictKind::GenusBoundOnly;
    return v;
  }
  v.kind = v.exceptional_locus.empty() ? VerdictKind::Hyperbolic
                                       : VerdictKind::QuasiHyperbolic;
  return v;
}

}  // namespace hypersurf
