#include "hypersurf/hjsing.hpp"

namespace hypersurf {

SingularityType::SingularityType(Int m_, Int q_) : m(std::move(m_)), q(std::move(q_)) {
  if (m < 2 || q <= 0 || q >= m)
    throw DomainError("singularity type needs 0 < q < m, m >= 2; got m=" + m.str() +
                      " q=" + q.str());
  if (int_gcd(q, m) != 1)
    throw DomainError("singularity type needs gcd(q,m)=1; got m=" + m.str() +
                      " q=" + q.str());
}

std::string SingularityType::str() const {
  return "1/" + m.str() + "(1," + q.str() + ")";
}

std::vector<Int> hj_expand(const Int& m, const Int& q) {
  if (q <= 0 || q >= m) throw DomainError("hj_expand needs 0 < q < m");
  if (int_gcd(q, m) != 1) throw DomainError("hj_expand needs gcd(q,m)=1");
  std::vector<Int> b;
  Int mm = m, qq = q;
  while (qq > 0) {
    // ceil(mm/qq)
    Int bi = (mm + qq - 1) / qq;
    b.push_back(bi);
    Int next = bi * qq - mm;
    mm = qq;
    qq = next;
  }
  return b;
}

ResolutionData resolution_data(const SingularityType& sing) {
  ResolutionData d;
  d.sing = sing;
  d.b = hj_expand(sing.m, sing.q);
  const int s = static_cast<int>(d.b.size());

  d.beta.assign(s + 2, Int(0));
  d.alpha.assign(s + 2, Int(0));
  d.gamma.assign(s + 2, Int(0));
  d.beta[0] = sing.m;
  d.beta[1] = sing.q;
  d.alpha[0] = 0;
  d.alpha[1] = 1;
  d.gamma[0] = -1;
  d.gamma[1] = 0;
  for (int i = 1; i <= s; ++i) {
    d.beta[i + 1] = d.b[i - 1] * d.beta[i] - d.beta[i - 1];
    d.alpha[i + 1] = d.b[i - 1] * d.alpha[i] - d.alpha[i - 1];
    d.gamma[i + 1] = d.b[i - 1] * d.gamma[i] - d.gamma[i - 1];
  }

  d.discrepancies.reserve(s);
  for (int i = 1; i <= s; ++i)
    d.discrepancies.push_back(Rat(d.beta[i] + d.alpha[i], sing.m) - 1);
  return d;
}

SingularityType sing_from_node(const Int& a_u, const Int& a_v, const Int& m) {
  if (a_u <= 0 || a_u >= m || a_v <= 0 || a_v >= m)
    throw DomainError("node multiplicities must lie strictly between 0 and m");
  if (int_gcd(a_u, m) != 1 || int_gcd(a_v, m) != 1)
    throw DomainError("node multiplicities must be coprime to m");
  Int q = mod_nonneg(-a_v * mod_inverse(a_u, m), m);
  return SingularityType(m, q);
}

Int term_vanishing_order(const ResolutionData& data, int l, const Int& c_u,
                         const Int& c_v, const Int& du_power, const Int& dv_power) {
  if (l < 1 || l > data.length())
    throw StructuralError("exceptional index out of range");
  if (c_u < 0 || c_v < 0 || du_power < 0 || dv_power < 0)
    throw DomainError("term exponents must be nonnegative");
  return c_u * data.beta[l] + c_v * data.alpha[l] + du_power * (data.beta[l] - 1) +
         dv_power * (data.alpha[l] - 1);
}

CertificateResult vanishing_certificate(const SingularityType& sing, const Int& r,
                                        const Int& extra_node_factors) {
  if (r < 2) throw DomainError("vanishing certificate needs r >= 2");
  if (extra_node_factors < 0) throw DomainError("negative factor count");
  ResolutionData data = resolution_data(sing);

  CertificateResult res;
  for (int l = 1; l <= data.length(); ++l) {
    const Int& a = data.alpha[l];
    const Int& b = data.beta[l];
    Int extra = extra_node_factors * (a < b ? a : b);

    // Mixed terms du^{r-k} dv^k, 0 < k < r: the order is linear in k, so the
    // minimum sits at k = 1 or k = r - 1.
    Int mixed_lo = term_vanishing_order(data, l, 0, 0, r - 1, 1);
    Int mixed_hi = term_vanishing_order(data, l, 0, 0, 1, r - 1);
    Int mixed_min = (mixed_lo < mixed_hi ? mixed_lo : mixed_hi) + extra;
    // Pure terms carry the forced coefficient divisor of the opposite axis.
    Int pure_u = term_vanishing_order(data, l, 0, 1, r, 0) + extra;
    Int pure_v = term_vanishing_order(data, l, 1, 0, 0, r) + extra;

    if (mixed_min <= 0 || pure_u <= 0 || pure_v <= 0) {
      res.pass = false;
      res.failing_index = l;
      res.alpha_l = a;
      res.beta_l = b;
      return res;
    }
  }
  res.pass = true;
  return res;
}

}  // namespace hypersurf
