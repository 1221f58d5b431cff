#include "hypersurf/geometry.hpp"

namespace hypersurf {

PlanePoint::PlanePoint(GaussRat x_, GaussRat y_, GaussRat z_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
  const GaussRat* lead = nullptr;
  for (const GaussRat* c : {&x, &y, &z})
    if (!c->is_zero()) { lead = c; break; }
  if (!lead) throw DomainError("[0:0:0] is not a point of P2");
  GaussRat inv = lead->inverse();
  x = x * inv;
  y = y * inv;
  z = z * inv;
}

bool PlanePoint::operator<(const PlanePoint& o) const {
  if (!(x == o.x)) return x < o.x;
  if (!(y == o.y)) return y < o.y;
  return z < o.z;
}

bool Point::operator==(const Point& o) const { return base == o.base && v == o.v; }

bool Point::operator<(const Point& o) const {
  if (base != o.base) return base < o.base;
  return v < o.v;
}

std::string Point::str() const {
  if (base == BaseKind::P1xP1) {
    const auto& q = std::get<QuadricPoint>(v);
    return "(" + q.s.str() + "," + q.t.str() + ")";
  }
  const auto& p = std::get<PlanePoint>(v);
  return "[" + p.x.str() + ":" + p.y.str() + ":" + p.z.str() + "]";
}

CurveGeom CurveGeom::fiber_h(const P1Point& t) {
  CurveGeom g;
  g.base = BaseKind::P1xP1;
  g.kind = GeomKind::FiberH;
  g.param = t;
  g.label = "FIBER_H(" + t.str() + ")";
  return g;
}

CurveGeom CurveGeom::fiber_v(const P1Point& s) {
  CurveGeom g;
  g.base = BaseKind::P1xP1;
  g.kind = GeomKind::FiberV;
  g.param = s;
  g.label = "FIBER_V(" + s.str() + ")";
  return g;
}

CurveGeom CurveGeom::graph11(const Moebius& m, const std::string& label) {
  CurveGeom g;
  g.base = BaseKind::P1xP1;
  g.kind = GeomKind::Graph11;
  g.graph = m;
  g.label = label;
  return g;
}

CurveGeom CurveGeom::diagonal(const GaussRat& offset) {
  return graph11(Moebius(GaussRat(Rat(1)), offset, GaussRat(Rat(0)), GaussRat(Rat(1))),
                 "DIAGONAL(" + offset.str() + ")");
}

CurveGeom CurveGeom::antidiagonal(const GaussRat& offset) {
  return graph11(Moebius(GaussRat(Rat(-1)), offset, GaussRat(Rat(0)), GaussRat(Rat(1))),
                 "ANTIDIAGONAL(" + offset.str() + ")");
}

CurveGeom CurveGeom::cuboid_c(int index) {
  const GaussRat zero{Rat(0)}, one{Rat(1)}, minus{Rat(-1)};
  Moebius m = [&]() -> Moebius {
    switch (index) {
      case 0: return Moebius(minus, zero, zero, one);  // t = -s
      case 1: return Moebius(one, zero, zero, one);    // t = s
      case 2: return Moebius(zero, one, one, zero);    // t = 1/s
      case 3: return Moebius(zero, minus, one, zero);  // t = -1/s
      default: throw DomainError("cuboid curve index must be 0..3");
    }
  }();
  return graph11(m, "CUBOID_C" + std::to_string(index));
}

CurveGeom CurveGeom::tangent_line(const P1Point& tu) {
  CurveGeom g;
  g.base = BaseKind::P2;
  g.kind = GeomKind::TangentLine;
  g.param = tu;
  g.label = "LINE_TANGENT(" + tu.str() + ")";
  return g;
}

CurveGeom CurveGeom::conic() {
  CurveGeom g;
  g.base = BaseKind::P2;
  g.kind = GeomKind::Conic;
  g.label = "CONIC";
  return g;
}

DivClass CurveGeom::cls() const {
  switch (kind) {
    case GeomKind::FiberH: return DivClass::p1xp1(Rat(1), Rat(0));
    case GeomKind::FiberV: return DivClass::p1xp1(Rat(0), Rat(1));
    case GeomKind::Graph11: return DivClass::p1xp1(Rat(1), Rat(1));
    case GeomKind::TangentLine: return DivClass::p2(Rat(1));
    case GeomKind::Conic: return DivClass::p2(Rat(2));
  }
  throw StructuralError("unreachable");
}

namespace {

// Homogeneous line coefficients (on x, y, z) of the tangent line at [t:u].
std::array<GaussRat, 3> line_coeffs(const P1Point& tu) {
  const GaussRat& t = tu.p;
  const GaussRat& u = tu.q;
  return {t * t, t * u, u * u};
}

GaussRat eval_line(const std::array<GaussRat, 3>& L, const PlanePoint& p) {
  return L[0] * p.x + L[1] * p.y + L[2] * p.z;
}

}  // namespace

bool CurveGeom::contains(const Point& pt) const {
  if (pt.base != base) throw StructuralError("point/curve base mismatch");
  if (base == BaseKind::P1xP1) {
    const auto& q = std::get<QuadricPoint>(pt.v);
    switch (kind) {
      case GeomKind::FiberH: return q.t == param;
      case GeomKind::FiberV: return q.s == param;
      case GeomKind::Graph11: return graph->apply(q.s) == q.t;
      default: throw StructuralError("curve kind not on P1xP1");
    }
  }
  const auto& p = std::get<PlanePoint>(pt.v);
  if (kind == GeomKind::TangentLine) return eval_line(line_coeffs(param), p).is_zero();
  if (kind == GeomKind::Conic) return (p.y * p.y - GaussRat(Rat(4)) * p.x * p.z).is_zero();
  throw StructuralError("curve kind not on P2");
}

bool CurveGeom::same_curve(const CurveGeom& o) const {
  if (base != o.base || kind != o.kind) return false;
  switch (kind) {
    case GeomKind::FiberH:
    case GeomKind::FiberV:
    case GeomKind::TangentLine: return param == o.param;
    case GeomKind::Graph11: return graph->same_map(*o.graph);
    case GeomKind::Conic: return true;
  }
  return false;
}

namespace {

Moebius compose(const Moebius& m, const Moebius& n) {
  return Moebius(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                 m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

Point quadric_point(const P1Point& s, const P1Point& t) {
  return Point{BaseKind::P1xP1, QuadricPoint{s, t}};
}

std::vector<Incidence> intersect_on_quadric(const CurveGeom& a, const CurveGeom& b) {
  // Fiber-fiber
  if (a.kind == GeomKind::FiberH && b.kind == GeomKind::FiberH) return {};
  if (a.kind == GeomKind::FiberV && b.kind == GeomKind::FiberV) return {};
  if (a.kind == GeomKind::FiberH && b.kind == GeomKind::FiberV)
    return {{quadric_point(b.param, a.param), 1}};
  if (a.kind == GeomKind::FiberV && b.kind == GeomKind::FiberH)
    return {{quadric_point(a.param, b.param), 1}};

  // Fiber-graph
  if (a.kind == GeomKind::Graph11 && b.kind != GeomKind::Graph11)
    return intersect_on_quadric(b, a);
  if (a.kind == GeomKind::FiberV) {
    P1Point t = b.graph->apply(a.param);
    return {{quadric_point(a.param, t), 1}};
  }
  if (a.kind == GeomKind::FiberH) {
    P1Point s = b.graph->inverse().apply(a.param);
    return {{quadric_point(s, a.param), 1}};
  }

  // Graph-graph: fixed points of b^{-1} o a.
  auto fixed = moebius_fixed_points(compose(b.graph->inverse(), *a.graph));
  if (!fixed)
    throw DomainError("intersection of " + a.label + " and " + b.label +
                      " is not defined over Q(i)");
  std::vector<Incidence> out;
  for (auto& [s, mult] : *fixed)
    out.push_back({quadric_point(s, a.graph->apply(s)), mult});
  return out;
}

std::vector<Incidence> intersect_on_plane(const CurveGeom& a, const CurveGeom& b) {
  if (a.kind == GeomKind::TangentLine && b.kind == GeomKind::TangentLine) {
    auto L1 = line_coeffs(a.param);
    auto L2 = line_coeffs(b.param);
    GaussRat x = L1[1] * L2[2] - L1[2] * L2[1];
    GaussRat y = L1[2] * L2[0] - L1[0] * L2[2];
    GaussRat z = L1[0] * L2[1] - L1[1] * L2[0];
    return {{Point{BaseKind::P2, PlanePoint(x, y, z)}, 1}};
  }
  // line-conic: tangency at [u^2 : -2tu : t^2]
  const CurveGeom& line = a.kind == GeomKind::TangentLine ? a : b;
  const GaussRat& t = line.param.p;
  const GaussRat& u = line.param.q;
  PlanePoint p(u * u, GaussRat(Rat(-2)) * t * u, t * t);
  return {{Point{BaseKind::P2, std::move(p)}, 2}};
}

}  // namespace

std::vector<Incidence> intersect_curves(const CurveGeom& a, const CurveGeom& b) {
  if (a.base != b.base) throw StructuralError("curves on different bases");
  if (a.same_curve(b))
    throw DomainError("self-intersection requested for " + a.label);
  return a.base == BaseKind::P1xP1 ? intersect_on_quadric(a, b)
                                   : intersect_on_plane(a, b);
}

}  // namespace hypersurf
