#pragma once

#include "hypersurf/tower.hpp"

namespace hypersurf {

/// Outcome of the four hypothesis checks.  Failures are data, not errors.
struct CheckReport {
  bool multiplicity_ok = false;
  bool snc_ok = false;
  bool ampleness_ok = false;
  bool vanishing_ok = false;
  DivClass criterion_class = DivClass::p2(Rat(0));  // sum_i (1/m_i) sum_j D_ij - L

  std::vector<std::string> multiplicity_witnesses;  // unrescued violating pairs
  std::vector<std::string> rescued_pairs;           // informational
  std::vector<std::string> snc_witnesses;
  std::vector<std::string> vanishing_witnesses;

  bool all_pass() const {
    return multiplicity_ok && snc_ok && ampleness_ok && vanishing_ok;
  }
};

CheckReport check_hypotheses(const Tower& t);

/// State of one curve pushed through the tower.  `genus` and `degree` are
/// per component (the deck action is transitive, so components are
/// isomorphic); `components` counts them all.  `marked` lists the branch
/// incidences still ahead: at `level`, points of effective exponent
/// `exponent`, `count` of them on each component.
struct CurveTrace {
  Int genus{0};
  Int components{1};
  Int degree{1};
  struct Marked {
    int level;
    Int exponent;
    Int count;
  };
  std::vector<Marked> marked;
  bool unbranched_step = false;  // some cover step had no marked points
};

/// One cyclic-cover step of degree m applied to a trace.  `branch` lists the
/// (effective exponent, count-per-component) pairs marked at this level.
/// Components split by c = gcd(m, exponents); each component is a degree m/c
/// cover, with 2g'-2 = (m/c)(2g-2) + sum (m/c - gcd(m/c, e/c)) per point.
/// An empty branch multiset multiplies components by m (flagged).
CurveTrace cover_restriction(const CurveTrace& trace, const Int& m,
                             const std::vector<std::pair<Int, Int>>& branch);

struct TracedCurve {
  CurveGeom geom;
  int branch_level = 0;  // 0 when the curve is not a branch curve
  bool generic_representative = false;
  Int components{1};
  Int genus{0};
  bool manual = false;  // unsupported incidence pattern; no genus claim made
  std::string manual_reason;
  bool unbranched_step = false;
};

/// Pushes one curve through every level of the tower.  Works for any
/// supported geometry, branch curve or not.
TracedCurve trace_curve(const Tower& t, const CurveGeom& geom);

/// Same, folding only levels 1..last_level (the curve's state inside that
/// floor).  last_level = 0 returns the downstairs state.
TracedCurve trace_curve_partial(const Tower& t, const CurveGeom& geom, int last_level);

/// Traces every integral curve of the tower's differential: all branch
/// curves, the named extra integral curves, and one generic representative
/// per infinite family (fiber directions, tangent lines).  For the built-in
/// geometries the generic member is exact: every non-branch family member
/// meets the branch divisor in the same pattern.
std::vector<TracedCurve> classify_preimages(const Tower& t);

enum class VerdictKind { Hyperbolic, QuasiHyperbolic, GenusBoundOnly, Inconclusive };

const char* verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  CheckReport checks;
  std::vector<TracedCurve> curves;
  /// Preimage components of geometric genus <= 1 (with their data);
  /// nonempty for QuasiHyperbolic.
  std::vector<TracedCurve> exceptional_locus;
  std::vector<std::string> notes;
};

/// Full pipeline: hypothesis checks, preimage classification, verdict.
/// Hyperbolic needs all checks green, an algebraically-integrable
/// differential, and every preimage component of genus >= 2;
/// QuasiHyperbolic the same with a nonempty low-genus locus;
/// GenusBoundOnly when only the algebraic confinement applies;
/// Inconclusive whenever a check fails (witnesses carried).
Verdict verdict(const Tower& t);

}  // namespace hypersurf
