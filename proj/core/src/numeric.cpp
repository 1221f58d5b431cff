#include "hypersurf/numeric.hpp"

namespace hypersurf {

Int mod_inverse(Int a, const Int& m) {
  if (m <= 1) throw DomainError("modulus must exceed 1");
  a = mod_nonneg(a, m);
  // extended Euclid
  Int r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw DomainError("no inverse: gcd != 1");
  return mod_nonneg(s0, m);
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
}

namespace {

// Exact integer square root test.
bool int_sqrt(const Int& n, Int& root) {
  if (n < 0) return false;
  if (n == 0) { root = 0; return true; }
  Int r = boost::multiprecision::sqrt(n);
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) { root = r; return true; }
  return false;
}

}  // namespace

bool rat_sqrt(const Rat& r, Rat& out) {
  if (r < 0) return false;
  Int n, d;
  if (!int_sqrt(numerator(r), n)) return false;
  if (!int_sqrt(denominator(r), d)) return false;
  out = Rat(n, d);
  return true;
}

}  // namespace hypersurf
