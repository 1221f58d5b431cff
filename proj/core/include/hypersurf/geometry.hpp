#pragma once

#include "hypersurf/gauss.hpp"
#include "hypersurf/lattice.hpp"

#include <variant>
#include <vector>

namespace hypersurf {

/// Point of P1xP1, as a pair of fiber parameters (s, t):
/// s is the vertical-fiber parameter, t the horizontal one.
struct QuadricPoint {
  P1Point s, t;
  bool operator==(const QuadricPoint& o) const { return s == o.s && t == o.t; }
  bool operator<(const QuadricPoint& o) const {
    return s != o.s ? s < o.s : t < o.t;
  }
};

/// Point of P2, normalized so the first nonzero coordinate is 1.
struct PlanePoint {
  GaussRat x, y, z;
  PlanePoint(GaussRat x_, GaussRat y_, GaussRat z_);
  bool operator==(const PlanePoint& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  bool operator<(const PlanePoint& o) const;
};

struct Point {
  BaseKind base;
  std::variant<QuadricPoint, PlanePoint> v;

  bool operator==(const Point& o) const;
  bool operator<(const Point& o) const;
  std::string str() const;
};

enum class GeomKind { FiberH, FiberV, Graph11, TangentLine, Conic };

/// One of the supported irreducible curves on a base surface.
///
/// On P1xP1: horizontal fibers {t = t0}, vertical fibers {s = s0}, and smooth
/// (1,1)-curves presented as Moebius graphs {t = mu(s)} (diagonals, the four
/// cuboid image curves, and anything projectively equivalent).
/// On P2: tangent lines t^2 x + t u y + u^2 z to the fixed conic y^2 - 4xz,
/// and that conic itself.
struct CurveGeom {
  BaseKind base;
  GeomKind kind;
  P1Point param;                  // FiberH / FiberV / TangentLine
  std::optional<Moebius> graph;   // Graph11 only
  std::string label;              // canonical display label

  static CurveGeom fiber_h(const P1Point& t);
  static CurveGeom fiber_v(const P1Point& s);
  static CurveGeom diagonal(const GaussRat& offset);      // {t = s + c}
  static CurveGeom antidiagonal(const GaussRat& offset);  // {t = -s + c}
  static CurveGeom cuboid_c(int index);                   // index in 0..3
  static CurveGeom graph11(const Moebius& m, const std::string& label);
  static CurveGeom tangent_line(const P1Point& tu);
  static CurveGeom conic();

  DivClass cls() const;
  bool contains(const Point& p) const;
  bool same_curve(const CurveGeom& o) const;

  /// All built-in curves are rational.
  static Int genus() { return 0; }
};

struct Incidence {
  Point point;
  int mult;  // local intersection multiplicity
};

/// Exact intersection of two distinct curves on the same base, as points with
/// local multiplicities summing to the pairing of the classes.
/// DomainError if the curves coincide; UnsupportedGeometry (as DomainError)
/// if an intersection point does not live over Q(i).
std::vector<Incidence> intersect_curves(const CurveGeom& a, const CurveGeom& b);

}  // namespace hypersurf
