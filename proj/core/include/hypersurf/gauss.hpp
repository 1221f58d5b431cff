#pragma once

#include "hypersurf/numeric.hpp"

#include <optional>
#include <string>

namespace hypersurf {

/// Element of Q(i).  All incidence geometry is decided exactly over this
/// field; no floating point anywhere.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator-() const { return {-re, -im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }
  GaussRat inverse() const;
  GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
  bool operator<(const GaussRat& o) const {  // lexicographic; used for canonical maps
    return re != o.re ? re < o.re : im < o.im;
  }

  std::string str() const;
};

/// Square root in Q(i) when one exists.
std::optional<GaussRat> gauss_sqrt(const GaussRat& z);

/// Parses "3", "-1/2", "i", "-i", "2i", "1+2i", "3/2-i".  DomainError on junk.
GaussRat parse_gauss(const std::string& s);

/// Point of P^1 over Q(i), stored as a normalized pair [p : q]:
/// q = 1 for finite points, [1 : 0] for infinity.
struct P1Point {
  GaussRat p{Rat(0)};
  GaussRat q{Rat(1)};

  P1Point() = default;
  P1Point(GaussRat p_, GaussRat q_);

  static P1Point finite(GaussRat v) { return P1Point(std::move(v), GaussRat(Rat(1))); }
  static P1Point infinity() { return P1Point(GaussRat(Rat(1)), GaussRat(Rat(0))); }

  bool is_infinity() const { return q.is_zero(); }
  const GaussRat& value() const;  // finite points only

  bool operator==(const P1Point& o) const { return p == o.p && q == o.q; }
  bool operator!=(const P1Point& o) const { return !(*this == o); }
  bool operator<(const P1Point& o) const;

  std::string str() const;  // "inf" or the value
};

/// Parses a P^1 parameter: "inf" (or "oo"), otherwise a Q(i) literal.
P1Point parse_p1(const std::string& s);

/// Invertible Moebius map s -> (a s + b)/(c s + d) over Q(i), acting on P^1.
struct Moebius {
  GaussRat a, b, c, d;

  Moebius(GaussRat a_, GaussRat b_, GaussRat c_, GaussRat d_);

  P1Point apply(const P1Point& s) const;
  Moebius inverse() const;  // up to scale: (d, -b, -c, a)

  /// Projective normalization: first nonzero entry scaled to 1.
  Moebius normalized() const;
  bool same_map(const Moebius& o) const;
};

/// Fixed points of a Moebius map, with multiplicity (size 1 means a double
/// fixed point).  Returns nullopt when a fixed point would live in a proper
/// quadratic extension of Q(i).
std::optional<std::vector<std::pair<P1Point, int>>> moebius_fixed_points(const Moebius& n);

}  // namespace hypersurf
