#include "hypersurf/gauss.hpp"

#include <cctype>

namespace hypersurf {

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(i)");
  Rat n = norm();
  return {re / n, -im / n};
}

std::string GaussRat::str() const {
  if (im == 0) return rat_to_string(re);
  std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : rat_to_string(im) + "i";
  if (re == 0) return imag;
  if (im > 0) return rat_to_string(re) + "+" + imag;
  return rat_to_string(re) + imag;  // imag already carries the sign
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
  // (x + yi)^2 = a + bi  =>  x^2 - y^2 = a, 2xy = b, x^2 + y^2 = |z|.
  if (z.is_zero()) return GaussRat(Rat(0));
  Rat mod2;
  if (!rat_sqrt(z.norm(), mod2)) return std::nullopt;
  Rat x2 = (z.re + mod2) / 2;
  Rat x;
  if (rat_sqrt(x2, x) && x != 0) {
    Rat y = z.im / (2 * x);
    GaussRat r{x, y};
    if (r * r == z) return r;
  }
  // pure-imaginary root case: x = 0, z = -y^2
  Rat y2 = -z.re;
  Rat y;
  if (z.im == 0 && rat_sqrt(y2, y)) {
    GaussRat r{Rat(0), y};
    if (r * r == z) return r;
  }
  return std::nullopt;
}

namespace {

// Splits "1+2i" / "-3i" / "5/2" into real and imaginary rational parts.
struct GaussParser {
  const std::string& s;
  size_t pos = 0;

  explicit GaussParser(const std::string& str) : s(str) {}

  bool done() const { return pos >= s.size(); }

  // one signed term: [+-]? (rat 'i'? | 'i')
  void term(GaussRat& acc) {
    Rat sign(1);
    if (!done() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    size_t start = pos;
    while (!done() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    std::string digits = s.substr(start, pos - start);
    bool imag = !done() && s[pos] == 'i';
    if (imag) ++pos;
    if (digits.empty() && !imag)
      throw DomainError("malformed Q(i) literal '" + s + "'");
    Rat mag = digits.empty() ? Rat(1) : parse_rat(digits);
    if (imag)
      acc.im += sign * mag;
    else
      acc.re += sign * mag;
  }
};

}  // namespace

GaussRat parse_gauss(const std::string& s) {
  if (s.empty()) throw DomainError("empty Q(i) literal");
  GaussParser p(s);
  GaussRat acc;
  p.term(acc);
  if (!p.done()) p.term(acc);
  if (!p.done()) throw DomainError("malformed Q(i) literal '" + s + "'");
  return acc;
}

P1Point::P1Point(GaussRat p_, GaussRat q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p.is_zero() && q.is_zero()) throw DomainError("[0:0] is not a point of P1");
  if (!q.is_zero()) {
    p = p / q;
    q = GaussRat(Rat(1));
  } else {
    p = GaussRat(Rat(1));
  }
}

const GaussRat& P1Point::value() const {
  if (is_infinity()) throw DomainError("infinity has no affine value");
  return p;
}

bool P1Point::operator<(const P1Point& o) const {
  if (is_infinity() != o.is_infinity()) return o.is_infinity();  // finite < inf
  if (is_infinity()) return false;
  return p < o.p;
}

std::string P1Point::str() const { return is_infinity() ? "inf" : p.str(); }

P1Point parse_p1(const std::string& s) {
  if (s == "inf" || s == "oo" || s == "infinity") return P1Point::infinity();
  return P1Point::finite(parse_gauss(s));
}

Moebius::Moebius(GaussRat a_, GaussRat b_, GaussRat c_, GaussRat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if ((a * d - b * c).is_zero()) throw DomainError("degenerate Moebius map");
}

P1Point Moebius::apply(const P1Point& s) const {
  GaussRat np = a * s.p + b * s.q;
  GaussRat nq = c * s.p + d * s.q;
  return P1Point(np, nq);
}

Moebius Moebius::inverse() const { return Moebius(d, -b, -c, a); }

Moebius Moebius::normalized() const {
  const GaussRat* lead = nullptr;
  for (const GaussRat* x : {&a, &b, &c, &d})
    if (!x->is_zero()) { lead = x; break; }
  GaussRat inv = lead->inverse();
  return Moebius(a * inv, b * inv, c * inv, d * inv);
}

bool Moebius::same_map(const Moebius& o) const {
  Moebius x = normalized(), y = o.normalized();
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

std::optional<std::vector<std::pair<P1Point, int>>> moebius_fixed_points(const Moebius& n) {
  // Fixed points of s -> (a s + b)/(c s + d): roots of c s^2 + (d - a) s - b
  // in P^1, counted with multiplicity (always total multiplicity 2).
  const GaussRat& A = n.c;
  GaussRat B = n.d - n.a;
  GaussRat C = -n.b;
  std::vector<std::pair<P1Point, int>> out;
  if (A.is_zero()) {
    if (B.is_zero()) {
      if (C.is_zero()) throw DomainError("identity map has no isolated fixed points");
      out.push_back({P1Point::infinity(), 2});
      return out;
    }
    out.push_back({P1Point::infinity(), 1});
    out.push_back({P1Point::finite(-C / B), 1});
    return out;
  }
  GaussRat disc = B * B - GaussRat(Rat(4)) * A * C;
  if (disc.is_zero()) {
    out.push_back({P1Point::finite(-B / (GaussRat(Rat(2)) * A)), 2});
    return out;
  }
  auto root = gauss_sqrt(disc);
  if (!root) return std::nullopt;
  GaussRat two_a = GaussRat(Rat(2)) * A;
  out.push_back({P1Point::finite((-B + *root) / two_a), 1});
  out.push_back({P1Point::finite((-B - *root) / two_a), 1});
  return out;
}

}  // namespace hypersurf
