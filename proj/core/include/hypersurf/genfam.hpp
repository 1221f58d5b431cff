#pragma once

#include "hypersurf/tower.hpp"

#include <map>
#include <string>
#include <vector>

namespace hypersurf {

enum class FamilyKind { FamA, FamB, FamC, FamD, NotCovered };

const char* family_name(FamilyKind k);

struct RouteInfo {
  FamilyKind kind;
  std::string route;  // the construction used (fiber tower, line tower, ...)
};

struct Classification {
  std::vector<RouteInfo> routes;  // most specific first; empty => NotCovered
  std::string note;

  FamilyKind primary() const {
    return routes.empty() ? FamilyKind::NotCovered : routes.front().kind;
  }
};

/// Decides which construction covers a complete-intersection multidegree:
///   no 2's,  n >= 5            -> FamB  (plane line tower)
///   one 2, rest >= 3, n >= 4   -> FamD  (fiber tower behind a quadric)
///   >= two 2's, some >= 3, n >= 6 -> FamC (quadratic levels + diagonals)
///   >= two 2's, n >= 8         -> FamA  (quadratic levels + four diagonals)
/// Anything else is NotCovered.  DomainError on a degree < 2.
Classification classify_multidegree(const std::vector<Int>& degrees);

/// Ambient space of an emitted system.
struct Ambient {
  enum class Kind { Projective, WeightedP111R } kind = Kind::Projective;
  int dim = 0;     // projective dimension
  Int weight{0};   // R for P(1,1,1,R)
};

/// Homogeneous linear form in the product variables.
struct LinearFactor {
  std::vector<Int> coeffs;
};

/// Sparse exact polynomial over the product variables.
struct Polynomial {
  std::map<std::vector<int>, Int> terms;

  static Polynomial constant(const Int& c, int nvars);
  Polynomial times(const LinearFactor& f) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return terms == o.terms; }
  int degree() const;
  bool homogeneous() const;
  std::string str(const std::vector<std::string>& vars) const;
};

struct Equation {
  Int degree{0};
  bool is_quadric = false;
  std::vector<LinearFactor> factors;  // cover equations only
  Polynomial expanded;                // product of factors, or the quadric form
  std::string perturbation_symbol;    // "t3" etc.; empty when none
  Polynomial perturbation;            // the pure-power monomial it multiplies
  int rhs_var = -1;                   // index into `variables`; -1 when none
  Int rhs_power{0};
};

struct Constraint {
  enum class Kind { AllDistinct, AvoidValues } kind = Kind::AllDistinct;
  std::string label;
  std::vector<Rat> values;
  std::vector<Rat> forbidden;  // AvoidValues only
};

/// A generated polynomial system with its parameter certificate and the
/// underlying branch-data tower at deformation parameter zero.
struct EquationSet {
  std::string family;
  Ambient ambient;
  std::vector<std::string> variables;
  int product_vars = 0;  // leading variables appearing in the products
  std::vector<Equation> equations;
  std::vector<Constraint> constraints;
  std::vector<Int> requested_degrees;
  TowerSpec tower;
};

/// Deterministic instantiation of a covered multidegree.  The parameter
/// schedules are fixed, so emitted families are reproducible byte for byte.
/// Deformation scalars t_i stay symbolic.  DomainError when `kind` does not
/// cover `degrees`.
EquationSet instantiate_family(FamilyKind kind, const std::vector<Int>& degrees);

/// The weighted hypersurface prod_{j=1}^{d} (j^2 x + j y + z) = w^m in
/// P(1,1,1,d/m).  Requires m >= 2 and m | d.
EquationSet instantiate_weighted_lines(int d, const Int& m);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Re-checks an emitted system independently of the generator: declared
/// parameter constraints, factor-derived parameter collections, expansion
/// and degree agreement, perturbation divisibility, and the branch-data
/// hypotheses of the rebuilt tower.  Reports every violation found.
ValidationReport validate_family(const EquationSet& eqs);

}  // namespace hypersurf
