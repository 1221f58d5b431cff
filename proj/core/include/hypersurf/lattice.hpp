#pragma once

#include "hypersurf/numeric.hpp"

#include <vector>

namespace hypersurf {

/// The two supported base surfaces. Everything downstream (ampleness,
/// Riemann-Roch, canonical classes) is closed-form on these.
enum class BaseKind { P2, P1xP1 };

inline int picard_rank(BaseKind b) { return b == BaseKind::P2 ? 1 : 2; }

const char* base_name(BaseKind b);

/// A rational vector in the Picard lattice of a fixed base surface.
/// Rank 1 for P2 (degree), rank 2 for P1xP1 (bidegree).
struct DivClass {
  BaseKind base;
  std::vector<Rat> coeffs;

  DivClass(BaseKind b, std::vector<Rat> c);

  static DivClass p2(Rat d) { return DivClass(BaseKind::P2, {std::move(d)}); }
  static DivClass p1xp1(Rat a, Rat b) {
    return DivClass(BaseKind::P1xP1, {std::move(a), std::move(b)});
  }
  static DivClass zero(BaseKind b);

  bool is_zero() const;
  bool is_integral() const;

  DivClass operator+(const DivClass& o) const;
  DivClass operator-(const DivClass& o) const;
  DivClass operator*(const Rat& s) const;
  bool operator==(const DivClass& o) const;

  std::string str() const;
};

/// Intersection pairing: dd' on P2, ab' + a'b on P1xP1.
Rat intersect(const DivClass& c1, const DivClass& c2);

/// Nakai criterion specialized to the two bases: Q-ample iff every
/// coefficient is strictly positive.
bool is_q_ample(const DivClass& c);

/// K = (-3) on P2, (-2,-2) on P1xP1.
DivClass canonical_class(BaseKind base);

/// Euler characteristic of the line bundle with the given integral class:
/// chi(O(d)) = (d+1)(d+2)/2 on P2, chi(O(a,b)) = (a+1)(b+1) on P1xP1.
/// DomainError on non-integral coefficients.
Rat riemann_roch_chi(const DivClass& c);

}  // namespace hypersurf
