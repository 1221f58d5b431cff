#pragma once

#include "hypersurf/geometry.hpp"
#include "hypersurf/hjsing.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypersurf {

/// Raised when the branch divisor of a tower is not simple normal crossings
/// (a triple incidence or a tangential contact between branch curves).
struct SncViolationError : SpecError {
  using SpecError::SpecError;
};

enum class OmegaId {
  Fiber22,        // fiber-integrable form with twist (2,2) on P1xP1
  FiberDiag44,    // twist (4,4); fibers plus the two slope +-1 diagonals through 0
  FiberDiag66,    // twist (6,6); fibers plus four parallel diagonals
  TangentConic4,  // twist O(4) on P2; tangent lines to y^2 = 4xz plus the conic
  Cuboid33_0,     // twist (3,3); fibers plus one of the four cuboid image curves
  Cuboid33_1,
  Cuboid33_2,
  Cuboid33_3,
};

const char* omega_name(OmegaId id);
OmegaId omega_from_name(const std::string& name);

/// A symmetric-differential descriptor: the twist class L, the symmetric
/// degree r, the full list of integral curve families, and the extra curves
/// dividing the coefficient (which rescue the vanishing certificate at nodes
/// they pass through).  Each id fixes all of this as a matched bundle.
struct OmegaSpec {
  OmegaId id;
  BaseKind base;
  DivClass L;
  Int r;
  bool all_solutions_algebraic;
  bool fiber_families;        // both fiber directions are integral families
  bool tangent_line_family;   // the 1-parameter tangent-line family
  std::vector<CurveGeom> extra_integral;     // named non-family integral curves
  std::vector<CurveGeom> coefficient_extra;  // curves dividing the coefficient

  OmegaSpec(OmegaId id, BaseKind base, DivClass L);
};

OmegaSpec resolve_omega(OmegaId id);

struct BranchCurve {
  CurveGeom geom;
  Int a;  // multiplicity, 0 < a < m, gcd(a, m) = 1
};

struct LevelSpec {
  Int m;
  std::vector<BranchCurve> curves;
};

struct TowerSpec {
  BaseKind base;
  OmegaId omega;
  std::vector<LevelSpec> levels;
};

/// One incidence point of the branch divisor, with every branch curve
/// through it.  For a valid (SNC) divisor there are exactly two curves,
/// meeting transversally.
struct BranchNode {
  Point point;
  int level_lo = 0, level_hi = 0;  // 1-based levels of the two curves
  int curve_lo = 0, curve_hi = 0;  // indices within their levels
  Int a_u{1}, a_v{1};              // multiplicities (curve_lo first)
  int tangency = 1;                // max local intersection multiplicity
  std::vector<std::string> on_curves;  // non-branch integral curves through it
  int rescue_factors = 0;          // coefficient-extra curves through it

  bool same_level() const { return level_lo == level_hi; }
};

struct SncViolation {
  Point point;
  std::string reason;
};

/// Aggregated node report.
struct NodeRecord {
  enum class Kind { BranchNode, IntegralContact } kind = Kind::BranchNode;
  int level_lo = 0, level_hi = 0;
  Int a_u{0}, a_v{0};
  int tangency = 1;
  std::vector<std::string> on_curves;
  Int count{0};
  bool singularity_producing = false;
};

/// A validated tower of cyclic covers.  Immutable after construction; every
/// query below is pure and safe to call from parallel workers.
struct Tower {
  TowerSpec spec;
  OmegaSpec omega;
  Int total_degree{1};                  // product of the level degrees
  std::vector<DivClass> level_reduced;  // sum of branch classes per level
  std::vector<DivClass> level_m_class;  // M_i with m_i M_i = sum a_ij D_ij
  std::vector<BranchNode> nodes;
  std::vector<SncViolation> snc_violations;

  int level_count() const { return static_cast<int>(spec.levels.size()); }
  const LevelSpec& level(int k) const { return spec.levels.at(k - 1); }  // 1-based

  /// Degree of the composite cover below level k, i.e. prod_{i<k} m_i.
  Int degree_below(int k) const;
  /// prod_{j != i} m_j.
  Int degree_excluding(int i) const;
};

/// Validates and builds a tower.  SpecError on duplicate curves, bad
/// multiplicities, a non-integral M_i class, or a branch curve outside the
/// integral families of the chosen differential.
Tower build_tower(const TowerSpec& spec);

/// Aggregated node inventory; SncViolationError if the branch divisor is not
/// simple normal crossings.  Includes tangency records for contacts between
/// branch curves and named integral curves (e.g. line/conic tangencies).
std::vector<NodeRecord> node_inventory(const Tower& t);

/// Singularities of the top floor: each same-level node at level i of local
/// type sing_from_node(a_u, a_v, m_i), counted with multiplicity
/// prod_{j != i} m_j.  Cross-level nodes contribute none.
std::map<SingularityType, Int> singularity_inventory(const Tower& t);

/// Exceptional data of the pull-back identity for one level:
/// the reduced branch divisor pulls back to m_i R_i + m_i sum (1+d_k) E_k.
struct RamificationEntry {
  SingularityType type;
  Int node_count;               // same-level nodes of this type at the level
  std::vector<Rat> exceptional_coeffs;  // (alpha_l + beta_l)/m per chain curve
};

struct RamificationLevel {
  int level = 0;
  Int m{0};
  DivClass reduced_class = DivClass::p2(Rat(0));
  std::vector<RamificationEntry> entries;
  bool crepant = true;  // all exceptional coefficients equal 1
};

struct RamificationReport {
  std::vector<RamificationLevel> levels;
  bool all_crepant = true;  // the aggregate reduces to "R + E"
};

RamificationReport ramification_decomposition(const Tower& t);

/// The bundles M^(i) = i M - sum_j floor(a_j i / m) D_j, i = 0..m-1, that
/// assemble the pushforward of the structure sheaf of a normalized cover.
std::vector<DivClass> normalization_bundle_classes(const LevelSpec& level,
                                                   const DivClass& M);

namespace builtin {

/// Equal-degree fiber tower: n levels of degree m, each branched over m
/// fresh horizontal and m fresh vertical fibers (integer parameters).
TowerSpec fiber_tower(const Int& m, int n, OmegaId omega = OmegaId::Fiber22);

/// The classical cuboid tower: m = 2, n = 3, fiber parameters
/// {1,-1}, {i,-i}, {0,inf}.
TowerSpec cuboid_tower(OmegaId omega = OmegaId::Fiber22);

/// Single cyclic cover of P2 of degree m branched over d tangent lines with
/// parameters [1:1]..[d:1], all multiplicities 1.
TowerSpec tangent_lines_tower(int d, const Int& m);

}  // namespace builtin

}  // namespace hypersurf
