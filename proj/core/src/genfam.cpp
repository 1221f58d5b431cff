#include "hypersurf/genfam.hpp"

#include "hypersurf/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hypersurf {

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::FamA: return "FAM_A";
    case FamilyKind::FamB: return "FAM_B";
    case FamilyKind::FamC: return "FAM_C";
    case FamilyKind::FamD: return "FAM_D";
    case FamilyKind::NotCovered: return "NOT_COVERED";
  }
  throw StructuralError("unreachable");
}

Classification classify_multidegree(const std::vector<Int>& degrees) {
  for (const auto& d : degrees)
    if (d < 2) throw DomainError("multidegree entries must be >= 2");
  const int n = static_cast<int>(degrees.size());
  int twos = 0;
  bool has3 = false;
  for (const auto& d : degrees) {
    if (d == 2) ++twos;
    else has3 = true;
  }

  Classification cls;
  if (twos == 0 && n >= 5)
    cls.routes.push_back({FamilyKind::FamB, "tower of tangent-line covers of P2"});
  if (twos == 1 && n >= 4 && has3)
    cls.routes.push_back(
        {FamilyKind::FamD, "fiber tower behind the quadric surface in P3"});
  if (twos >= 2 && has3 && n >= 6)
    cls.routes.push_back(
        {FamilyKind::FamC, "quadratic fiber levels rescued by two diagonals"});
  if (twos >= 2 && n >= 8)
    cls.routes.push_back(
        {FamilyKind::FamA, "quadratic fiber levels rescued by four diagonals"});

  if (!cls.routes.empty()) {
    if (n >= 8 && cls.routes.front().kind != FamilyKind::FamA &&
        cls.routes.front().kind != FamilyKind::FamC)
      cls.note = "length >= 8 pattern delegated to the primary route";
    return cls;
  }

  bool all_equal = n > 0 && std::all_of(degrees.begin(), degrees.end(),
                                        [&](const Int& d) { return d == degrees[0]; });
  if (n == 4 && all_equal && degrees[0] >= 3)
    cls.note = "equal-degree (k,k,k,k) surfaces in P6 are known by other methods; "
               "this generator does not produce them";
  else
    cls.note = "multidegree outside every covered pattern";
  return cls;
}

Polynomial Polynomial::constant(const Int& c, int nvars) {
  Polynomial p;
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

Polynomial Polynomial::times(const LinearFactor& f) const {
  Polynomial out;
  for (const auto& [exps, coeff] : terms) {
    for (size_t v = 0; v < f.coeffs.size(); ++v) {
      if (f.coeffs[v] == 0) continue;
      std::vector<int> e = exps;
      ++e[v];
      Int& slot = out.terms[e];
      slot += coeff * f.coeffs[v];
      if (slot == 0) out.terms.erase(e);
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms) {
    Int& slot = out.terms[e];
    slot += c;
    if (slot == 0) out.terms.erase(e);
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms) {
    Int& slot = out.terms[e];
    slot -= c;
    if (slot == 0) out.terms.erase(e);
  }
  return out;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

bool Polynomial::homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms) {
    int d = 0;
    for (int x : e) d += x;
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::ostringstream mono;
    bool any = false;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (any) mono << "*";
      mono << vars[v];
      if (e[v] > 1) mono << "^" << e[v];
      any = true;
    }
    if (!any) os << mag.str();
    else if (mag == 1) os << mono.str();
    else os << mag.str() << "*" << mono.str();
  }
  return os.str();
}

namespace {

LinearFactor quadric_factor(const Int& a, const Int& b) {
  // z0 - a z1 - b z2 + a b z3, cutting the vertical fiber at a and the
  // horizontal fiber at b on the quadric model of P1xP1.
  return LinearFactor{{Int(1), -a, -b, a * b}};
}

LinearFactor line_factor(const Int& j) {
  // tangent line at [j:1]: j^2 x + j y + z
  return LinearFactor{{j * j, j, Int(1)}};
}

Polynomial product_of(const std::vector<LinearFactor>& factors, int nvars) {
  Polynomial p = Polynomial::constant(1, nvars);
  for (const auto& f : factors) p = p.times(f);
  return p;
}

Polynomial pure_power(int var, int nvars, const Int& deg) {
  Polynomial p;
  std::vector<int> e(nvars, 0);
  e[var] = static_cast<int>(deg);
  p.terms[e] = 1;
  return p;
}

Polynomial quadric_form() {
  // z0 z3 - z1 z2
  Polynomial p;
  p.terms[{1, 0, 0, 1}] = 1;
  p.terms[{0, 1, 1, 0}] = -1;
  return p;
}

struct QuadricBuilder {
  EquationSet out;
  int cover_count = 0;

  explicit QuadricBuilder(const std::vector<Int>& degrees, OmegaId omega,
                          const std::string& family) {
    out.family = family;
    out.requested_degrees = degrees;
    out.product_vars = 4;
    out.ambient.kind = Ambient::Kind::Projective;
    out.ambient.dim = static_cast<int>(degrees.size()) + 2;
    out.variables = {"z0", "z1", "z2", "z3"};
    out.tower.base = BaseKind::P1xP1;
    out.tower.omega = omega;
  }

  void add_quadric() {
    Equation eq;
    eq.degree = 2;
    eq.is_quadric = true;
    eq.expanded = quadric_form();
    out.equations.push_back(std::move(eq));
  }

  // One cover equation: product of the level's factors, t-perturbation by
  // z0^m, root variable z_{4+index}.
  void add_cover(const Int& m, const std::vector<std::pair<Int, Int>>& params) {
    Equation eq;
    eq.degree = m;
    for (const auto& [a, b] : params) eq.factors.push_back(quadric_factor(a, b));
    eq.expanded = product_of(eq.factors, 4);
    eq.perturbation_symbol = "t" + std::to_string(cover_count + 1);
    eq.perturbation = pure_power(0, 4, m);
    std::string w = "z" + std::to_string(4 + cover_count);
    out.variables.push_back(w);
    eq.rhs_var = static_cast<int>(out.variables.size()) - 1;
    eq.rhs_power = m;
    out.equations.push_back(std::move(eq));

    LevelSpec lv;
    lv.m = m;
    for (const auto& [a, b] : params) {
      lv.curves.push_back({CurveGeom::fiber_v(P1Point::finite(GaussRat(Rat(a)))), 1});
      lv.curves.push_back({CurveGeom::fiber_h(P1Point::finite(GaussRat(Rat(b)))), 1});
    }
    out.tower.levels.push_back(std::move(lv));
    ++cover_count;
  }
};

void add_distinct_constraint(EquationSet& es, const std::string& label,
                             const std::vector<Rat>& values) {
  Constraint c;
  c.kind = Constraint::Kind::AllDistinct;
  c.label = label;
  c.values = values;
  es.constraints.push_back(std::move(c));
}

void add_avoid_constraint(EquationSet& es, const std::string& label,
                          const std::vector<Rat>& values,
                          const std::vector<Rat>& forbidden) {
  Constraint c;
  c.kind = Constraint::Kind::AvoidValues;
  c.label = label;
  c.values = values;
  c.forbidden = forbidden;
  es.constraints.push_back(std::move(c));
}

EquationSet build_fam_b(const std::vector<Int>& degrees) {
  EquationSet es;
  es.family = "FAM_B";
  es.requested_degrees = degrees;
  es.product_vars = 3;
  es.ambient.kind = Ambient::Kind::Projective;
  es.ambient.dim = static_cast<int>(degrees.size()) + 2;
  es.variables = {"x", "y", "z"};
  es.tower.base = BaseKind::P2;
  es.tower.omega = OmegaId::TangentConic4;

  Int param = 1;
  std::vector<Rat> used;
  for (size_t i = 0; i < degrees.size(); ++i) {
    Equation eq;
    eq.degree = degrees[i];
    LevelSpec lv;
    lv.m = degrees[i];
    for (Int j = 0; j < degrees[i]; ++j, ++param) {
      eq.factors.push_back(line_factor(param));
      lv.curves.push_back(
          {CurveGeom::tangent_line(P1Point::finite(GaussRat(Rat(param)))), 1});
      used.push_back(Rat(param));
    }
    eq.expanded = product_of(eq.factors, 3);
    eq.perturbation_symbol = "t" + std::to_string(i + 1);
    eq.perturbation = pure_power(0, 3, degrees[i]);
    es.variables.push_back("w" + std::to_string(i + 1));
    eq.rhs_var = static_cast<int>(es.variables.size()) - 1;
    eq.rhs_power = degrees[i];
    es.equations.push_back(std::move(eq));
    es.tower.levels.push_back(std::move(lv));
  }
  add_distinct_constraint(es, "tangent-line parameters", used);
  return es;
}

EquationSet build_fam_d(const std::vector<Int>& degrees) {
  QuadricBuilder qb(degrees, OmegaId::Fiber22, "FAM_D");
  Int counter = 1;
  std::vector<Rat> a_used, b_used;
  bool quadric_done = false;
  for (const Int& d : degrees) {
    if (d == 2 && !quadric_done) {
      qb.add_quadric();
      quadric_done = true;
      continue;
    }
    std::vector<std::pair<Int, Int>> params;
    for (Int j = 0; j < d; ++j, ++counter) {
      params.push_back({counter, counter});
      a_used.push_back(Rat(counter));
      b_used.push_back(Rat(counter));
    }
    qb.add_cover(d, params);
  }
  add_distinct_constraint(qb.out, "vertical fiber parameters", a_used);
  add_distinct_constraint(qb.out, "horizontal fiber parameters", b_used);
  return qb.out;
}

EquationSet build_fam_c(const std::vector<Int>& degrees) {
  QuadricBuilder qb(degrees, OmegaId::FiberDiag44, "FAM_C");
  // quadratic levels use +- k; generic parameters start past every |a|.
  int r = -1;  // quadratic cover levels (one multidegree 2 is the ambient quadric)
  for (const Int& d : degrees)
    if (d == 2) ++r;
  Int quad_index = 0;
  Int counter = r + 1;
  std::vector<Rat> a_used, v_used, h_used;
  bool quadric_done = false;
  for (const Int& d : degrees) {
    if (d == 2 && !quadric_done) {
      qb.add_quadric();
      quadric_done = true;
      continue;
    }
    std::vector<std::pair<Int, Int>> params;
    if (d == 2) {
      ++quad_index;
      params = {{quad_index, quad_index}, {-quad_index, -quad_index}};
      a_used.push_back(Rat(quad_index));
      v_used.push_back(Rat(quad_index));
      v_used.push_back(Rat(-quad_index));
      h_used.push_back(Rat(quad_index));
      h_used.push_back(Rat(-quad_index));
    } else {
      for (Int j = 0; j < d; ++j) {
        Int b = counter++;
        Int c = counter++;
        params.push_back({b, c});
        v_used.push_back(Rat(b));
        h_used.push_back(Rat(c));
      }
    }
    qb.add_cover(d, params);
  }
  add_distinct_constraint(qb.out, "vertical fiber parameters", v_used);
  add_distinct_constraint(qb.out, "horizontal fiber parameters", h_used);
  std::vector<Rat> forbidden;
  for (const Rat& a : a_used) {
    forbidden.push_back(a);
    forbidden.push_back(-a);
  }
  std::vector<Rat> generic;
  for (const Rat& v : v_used)
    if (std::find(forbidden.begin(), forbidden.end(), v) == forbidden.end() &&
        v > Rat(r))
      generic.push_back(v);
  for (const Rat& h : h_used)
    if (std::find(forbidden.begin(), forbidden.end(), h) == forbidden.end() &&
        h > Rat(r))
      generic.push_back(h);
  add_avoid_constraint(qb.out, "generic fiber parameters avoid +-a_k", generic,
                       forbidden);
  return qb.out;
}

EquationSet build_fam_a(const std::vector<Int>& degrees) {
  QuadricBuilder qb(degrees, OmegaId::FiberDiag66, "FAM_A");
  int r = -1;
  for (const Int& d : degrees)
    if (d == 2) ++r;
  // Quadratic level k sits at alpha = 6k with factors (alpha, alpha) and
  // (alpha-2, alpha-1): its four nodes land on the four coefficient
  // diagonals (offsets 0, -1, 1, 2), one node per diagonal, and every
  // diagonal keeps two transverse fiber crossings per level.
  Int quad_index = 0;
  Int counter = 6 * Int(r) + 8;  // generic parameters, spaced by 4
  std::vector<Rat> v_used, h_used, alphas;
  bool quadric_done = false;
  for (const Int& d : degrees) {
    if (d == 2 && !quadric_done) {
      qb.add_quadric();
      quadric_done = true;
      continue;
    }
    std::vector<std::pair<Int, Int>> params;
    if (d == 2) {
      ++quad_index;
      Int alpha = 6 * quad_index;
      alphas.push_back(Rat(alpha));
      params = {{alpha, alpha}, {alpha - 2, alpha - 1}};
      v_used.push_back(Rat(alpha));
      v_used.push_back(Rat(alpha - 2));
      h_used.push_back(Rat(alpha));
      h_used.push_back(Rat(alpha - 1));
    } else {
      for (Int j = 0; j < d; ++j) {
        Int b = counter;
        counter += 4;
        Int c = counter;
        counter += 4;
        params.push_back({b, c});
        v_used.push_back(Rat(b));
        h_used.push_back(Rat(c));
      }
    }
    qb.add_cover(d, params);
  }
  add_distinct_constraint(qb.out, "vertical fiber parameters", v_used);
  add_distinct_constraint(qb.out, "horizontal fiber parameters", h_used);
  // Generic parameters must avoid a window around every quadratic level, so
  // that no cross-level node lands on a coefficient diagonal.
  std::vector<Rat> forbidden;
  for (const Rat& a : alphas)
    for (int off = -3; off <= 2; ++off) forbidden.push_back(a + off);
  std::vector<Rat> generic;
  for (const Rat& v : v_used)
    if (v > Rat(6 * Int(r) + 2)) generic.push_back(v);
  for (const Rat& h : h_used)
    if (h > Rat(6 * Int(r) + 2)) generic.push_back(h);
  add_avoid_constraint(qb.out, "generic fiber parameters avoid quadratic windows",
                       generic, forbidden);
  return qb.out;
}

}  // namespace

EquationSet instantiate_family(FamilyKind kind, const std::vector<Int>& degrees) {
  Classification cls = classify_multidegree(degrees);
  bool ok = false;
  for (const auto& r : cls.routes) ok = ok || r.kind == kind;
  if (!ok)
    throw DomainError(std::string(family_name(kind)) +
                      " does not cover the requested multidegree");
  switch (kind) {
    case FamilyKind::FamA: return build_fam_a(degrees);
    case FamilyKind::FamB: return build_fam_b(degrees);
    case FamilyKind::FamC: return build_fam_c(degrees);
    case FamilyKind::FamD: return build_fam_d(degrees);
    case FamilyKind::NotCovered: break;
  }
  throw DomainError("cannot instantiate an uncovered multidegree");
}

EquationSet instantiate_weighted_lines(int d, const Int& m) {
  if (m < 2) throw DomainError("cover degree must be >= 2");
  if (d < 1 || Int(d) % m != 0)
    throw DomainError("the line count must be a positive multiple of m");
  if (4 * m >= d)
    throw DomainError("the criterion needs 4m < d; got d = " + std::to_string(d) +
                      ", m = " + m.str());
  EquationSet es;
  es.family = "WEIGHTED_LINES";
  es.requested_degrees = {Int(d)};
  es.product_vars = 3;
  es.ambient.kind = Ambient::Kind::WeightedP111R;
  es.ambient.dim = 3;
  es.ambient.weight = Int(d) / m;
  es.variables = {"x", "y", "z", "w"};
  es.tower = builtin::tangent_lines_tower(d, m);

  Equation eq;
  eq.degree = d;
  std::vector<Rat> used;
  for (int j = 1; j <= d; ++j) {
    eq.factors.push_back(line_factor(j));
    used.push_back(Rat(j));
  }
  eq.expanded = product_of(eq.factors, 3);
  eq.rhs_var = 3;
  eq.rhs_power = m;
  es.equations.push_back(std::move(eq));
  add_distinct_constraint(es, "tangent-line parameters", used);
  return es;
}

namespace {

void check_declared_constraints(const EquationSet& es, ValidationReport& rep) {
  for (const auto& c : es.constraints) {
    if (c.kind == Constraint::Kind::AllDistinct) {
      for (size_t i = 0; i < c.values.size(); ++i)
        for (size_t j = i + 1; j < c.values.size(); ++j)
          if (c.values[i] == c.values[j]) {
            rep.ok = false;
            rep.violations.push_back(c.label + ": duplicate value " +
                                     rat_to_string(c.values[i]) + " at positions " +
                                     std::to_string(i) + "," + std::to_string(j));
          }
    } else {
      for (const Rat& v : c.values)
        for (const Rat& f : c.forbidden)
          if (v == f) {
            rep.ok = false;
            rep.violations.push_back(c.label + ": value " + rat_to_string(v) +
                                     " hits the forbidden set");
          }
    }
  }
}

void check_equations(const EquationSet& es, ValidationReport& rep) {
  if (es.equations.size() != es.requested_degrees.size()) {
    rep.ok = false;
    rep.violations.push_back("equation count differs from the multidegree length");
    return;
  }
  for (size_t i = 0; i < es.equations.size(); ++i) {
    const Equation& eq = es.equations[i];
    std::string where = "equation " + std::to_string(i + 1);
    if (eq.degree != es.requested_degrees[i]) {
      rep.ok = false;
      rep.violations.push_back(where + ": degree differs from the multidegree");
    }
    if (!eq.expanded.homogeneous() || eq.expanded.degree() != eq.degree) {
      rep.ok = false;
      rep.violations.push_back(where + ": expansion is not homogeneous of the stated degree");
    }
    if (eq.is_quadric) {
      if (!(eq.expanded == quadric_form())) {
        rep.ok = false;
        rep.violations.push_back(where + ": quadric form tampered");
      }
      continue;
    }
    Polynomial prod = product_of(eq.factors, es.product_vars);
    if (!(prod == eq.expanded)) {
      rep.ok = false;
      rep.violations.push_back(where + ": expansion differs from the factor product");
    }
    if (eq.rhs_power != eq.degree &&
        es.ambient.kind == Ambient::Kind::Projective) {
      rep.ok = false;
      rep.violations.push_back(where + ": root power differs from the degree");
    }
    if (!eq.perturbation_symbol.empty()) {
      if (eq.perturbation.terms.size() != 1) {
        rep.ok = false;
        rep.violations.push_back(where + ": perturbation is not a monomial");
        continue;
      }
      const auto& mono = eq.perturbation.terms.begin()->first;
      int var = -1;
      for (size_t v = 0; v < mono.size(); ++v)
        if (mono[v] > 0) var = static_cast<int>(v);
      for (const auto& f : eq.factors) {
        bool proportional = true;
        for (size_t v = 0; v < f.coeffs.size(); ++v)
          if (static_cast<int>(v) != var && f.coeffs[v] != 0) proportional = false;
        if (proportional) {
          rep.ok = false;
          rep.violations.push_back(where + ": a branch form divides the perturbation");
        }
      }
    }
  }
}

// Rebuilds fiber parameters from the emitted factors and cross-checks the
// stored tower, then re-runs the branch-data hypotheses.
void check_tower(const EquationSet& es, ValidationReport& rep) {
  TowerSpec rebuilt = es.tower;
  rebuilt.levels.clear();
  for (const auto& eq : es.equations) {
    if (eq.is_quadric || eq.factors.empty()) continue;
    LevelSpec lv;
    lv.m = eq.rhs_power;
    for (const auto& f : eq.factors) {
      if (es.tower.base == BaseKind::P1xP1) {
        if (f.coeffs.size() != 4 || f.coeffs[0] != 1 ||
            f.coeffs[3] != f.coeffs[1] * f.coeffs[2]) {
          rep.ok = false;
          rep.violations.push_back("factor does not split into a fiber pair");
          return;
        }
        Int a = -f.coeffs[1], b = -f.coeffs[2];
        lv.curves.push_back({CurveGeom::fiber_v(P1Point::finite(GaussRat(Rat(a)))), 1});
        lv.curves.push_back({CurveGeom::fiber_h(P1Point::finite(GaussRat(Rat(b)))), 1});
      } else {
        if (f.coeffs.size() != 3 || f.coeffs[0] * f.coeffs[2] != f.coeffs[1] * f.coeffs[1]) {
          rep.ok = false;
          rep.violations.push_back("factor is not tangent to the coefficient conic");
          return;
        }
        if (f.coeffs[2] == 0) {
          rep.ok = false;
          rep.violations.push_back("factor is a line through [0:0:1]; unsupported schedule");
          return;
        }
        Rat t = Rat(f.coeffs[1], f.coeffs[2]);
        lv.curves.push_back({CurveGeom::tangent_line(P1Point::finite(GaussRat(t))), 1});
      }
    }
    rebuilt.levels.push_back(std::move(lv));
  }

  if (rebuilt.levels.size() != es.tower.levels.size()) {
    rep.ok = false;
    rep.violations.push_back("stored tower and emitted factors disagree on level count");
    return;
  }
  for (size_t i = 0; i < rebuilt.levels.size(); ++i) {
    const auto& a = rebuilt.levels[i];
    const auto& b = es.tower.levels[i];
    bool same = a.m == b.m && a.curves.size() == b.curves.size();
    for (size_t j = 0; same && j < a.curves.size(); ++j)
      same = a.curves[j].geom.same_curve(b.curves[j].geom) && a.curves[j].a == b.curves[j].a;
    if (!same) {
      rep.ok = false;
      rep.violations.push_back("stored tower and emitted factors disagree at level " +
                               std::to_string(i + 1));
      return;
    }
  }

  try {
    Tower t = build_tower(rebuilt);
    CheckReport checks = check_hypotheses(t);
    if (!checks.all_pass()) {
      rep.ok = false;
      for (const auto& w : checks.multiplicity_witnesses)
        rep.violations.push_back("hypothesis: " + w);
      for (const auto& w : checks.snc_witnesses)
        rep.violations.push_back("hypothesis: " + w);
      for (const auto& w : checks.vanishing_witnesses)
        rep.violations.push_back("hypothesis: " + w);
      if (!checks.ampleness_ok)
        rep.violations.push_back("hypothesis: criterion class " +
                                 checks.criterion_class.str() + " is not Q-ample");
    }
  } catch (const SpecError& e) {
    rep.ok = false;
    rep.violations.push_back(std::string("tower rebuild failed: ") + e.what());
  }
}

}  // namespace

ValidationReport validate_family(const EquationSet& es) {
  ValidationReport rep;
  check_declared_constraints(es, rep);
  check_equations(es, rep);
  check_tower(es, rep);
  return rep;
}

}  // namespace hypersurf
