#include "hypersurf/lattice.hpp"

#include <sstream>

namespace hypersurf {

const char* base_name(BaseKind b) { return b == BaseKind::P2 ? "P2" : "P1xP1"; }

DivClass::DivClass(BaseKind b, std::vector<Rat> c) : base(b), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != picard_rank(base))
    throw StructuralError("divisor class rank mismatch on " + std::string(base_name(base)));
}

DivClass DivClass::zero(BaseKind b) {
  return DivClass(b, std::vector<Rat>(picard_rank(b), Rat(0)));
}

bool DivClass::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool DivClass::is_integral() const {
  for (const auto& c : coeffs)
    if (!is_integer(c)) return false;
  return true;
}

namespace {
void check_same_base(const DivClass& a, const DivClass& b) {
  if (a.base != b.base)
    throw StructuralError("divisor classes live on different base surfaces");
}
}  // namespace

DivClass DivClass::operator+(const DivClass& o) const {
  check_same_base(*this, o);
  std::vector<Rat> c(coeffs);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
  return DivClass(base, std::move(c));
}

DivClass DivClass::operator-(const DivClass& o) const {
  check_same_base(*this, o);
  std::vector<Rat> c(coeffs);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
  return DivClass(base, std::move(c));
}

DivClass DivClass::operator*(const Rat& s) const {
  std::vector<Rat> c(coeffs);
  for (auto& x : c) x *= s;
  return DivClass(base, std::move(c));
}

bool DivClass::operator==(const DivClass& o) const {
  return base == o.base && coeffs == o.coeffs;
}

std::string DivClass::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(coeffs[i]);
  }
  os << ")";
  return os.str();
}

Rat intersect(const DivClass& c1, const DivClass& c2) {
  check_same_base(c1, c2);
  if (c1.base == BaseKind::P2) return c1.coeffs[0] * c2.coeffs[0];
  return c1.coeffs[0] * c2.coeffs[1] + c1.coeffs[1] * c2.coeffs[0];
}

bool is_q_ample(const DivClass& c) {
  for (const auto& x : c.coeffs)
    if (x <= 0) return false;
  return true;
}

DivClass canonical_class(BaseKind base) {
  if (base == BaseKind::P2) return DivClass::p2(Rat(-3));
  return DivClass::p1xp1(Rat(-2), Rat(-2));
}

Rat riemann_roch_chi(const DivClass& c) {
  if (!c.is_integral())
    throw DomainError("riemann_roch_chi needs integral coefficients, got " + c.str());
  if (c.base == BaseKind::P2) {
    const Rat& d = c.coeffs[0];
    return (d + 1) * (d + 2) / 2;
  }
  return (c.coeffs[0] + 1) * (c.coeffs[1] + 1);
}

}  // namespace hypersurf
