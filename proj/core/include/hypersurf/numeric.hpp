#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypersurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an operation receives a value outside its mathematical domain
/// (bad gcd, out-of-range multiplicity, non-integer where an integer is due).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed aggregates: rank mismatches, indices out of range.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a user-supplied tower specification fails validation.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when two independent derivations of the same quantity disagree.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

/// Least nonnegative residue of a mod m, m > 0.
inline Int mod_nonneg(Int a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1, m > 1.
Int mod_inverse(Int a, const Int& m);

/// Floor of a/b for b != 0.
Int floor_div(const Int& a, const Int& b);

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Integer value of an integral rational; DomainError otherwise.
inline Int to_integer(const Rat& r) {
  if (!is_integer(r)) throw DomainError("expected an integer, got " + r.str());
  return numerator(r);
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

/// Parses "p", "p/q" with optional sign; DomainError on junk or q = 0.
Rat parse_rat(const std::string& s);

/// Exact test for being the square of a rational, with the square root.
bool rat_sqrt(const Rat& r, Rat& out);

}  // namespace hypersurf
