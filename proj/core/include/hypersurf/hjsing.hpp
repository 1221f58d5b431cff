#pragma once

#include "hypersurf/numeric.hpp"

#include <vector>

namespace hypersurf {

/// Cyclic quotient singularity 1/m(1,q): the germ of C^2 by
/// (x,y) -> (mu x, mu^q y) with mu a primitive m-th root of unity.
/// Requires 0 < q < m and gcd(q,m) = 1.
struct SingularityType {
  Int m;
  Int q;

  SingularityType(Int m_, Int q_);

  bool operator==(const SingularityType& o) const { return m == o.m && q == o.q; }
  bool operator<(const SingularityType& o) const {
    return m != o.m ? m < o.m : q < o.q;
  }
  std::string str() const;  // "1/m(1,q)"
};

/// Full resolution arithmetic of 1/m(1,q).
///
/// b lists the negatives of the self-intersections of the exceptional chain,
/// i.e. m/q = [b_1,...,b_s] as a Hirzebruch-Jung continued fraction.
/// The companion sequences are indexed 0..s+1:
///   beta:  m = beta_0 > q = beta_1 > ... > beta_s = 1 > beta_{s+1} = 0
///   alpha: 0 = alpha_0 < 1 = alpha_1 < ... < alpha_s = q^{-1} < alpha_{s+1} = m
///   gamma: gamma_0 = -1, gamma_1 = 0, gamma_{i+1} = b_i gamma_i - gamma_{i-1}
/// They satisfy alpha_{i+1} gamma_i - alpha_i gamma_{i+1} = -1 and
/// beta_i = q alpha_i - m gamma_i.  On the minimal resolution the local cover
/// is (u_i, u_{i+1}) -> (u_i^{beta_i} u_{i+1}^{beta_{i+1}},
///                       u_i^{alpha_i} u_{i+1}^{alpha_{i+1}}),
/// and discrepancies[i-1] = -1 + (beta_i + alpha_i)/m for the i-th
/// exceptional curve, always in (-1, 0].
struct ResolutionData {
  SingularityType sing{2, 1};
  std::vector<Int> b;
  std::vector<Int> alpha;
  std::vector<Int> beta;
  std::vector<Int> gamma;
  std::vector<Rat> discrepancies;

  int length() const { return static_cast<int>(b.size()); }
};

/// Hirzebruch-Jung expansion m/q = b_1 - 1/(b_2 - ...), every b_i >= 2.
/// DomainError unless 0 < q < m and gcd(q,m) = 1.
std::vector<Int> hj_expand(const Int& m, const Int& q);

/// All resolution sequences of 1/m(1,q).
ResolutionData resolution_data(const SingularityType& sing);

/// Singularity over a node of two branch curves with multiplicities a_u, a_v
/// in a degree-m cyclic cover: type 1/m(1,q) with a_u q + a_v = 0 (mod m).
SingularityType sing_from_node(const Int& a_u, const Int& a_v, const Int& m);

/// Certified lower bound for the vanishing order along the l-th exceptional
/// curve (1 <= l <= length) of the pull-back of
///   u^{c_u} v^{c_v} du^{du_power} dv^{dv_power}.
/// Equals c_u beta_l + c_v alpha_l + du_power (beta_l - 1)
///        + dv_power (alpha_l - 1).
Int term_vanishing_order(const ResolutionData& data, int l, const Int& c_u,
                         const Int& c_v, const Int& du_power, const Int& dv_power);

/// Outcome of the twisted-differential vanishing certificate.
struct CertificateResult {
  bool pass = false;
  int failing_index = 0;  // witnessing exceptional index l when pass = false
  Int alpha_l{0};
  Int beta_l{0};
};

/// Checks that the pull-back of every degree-r term of a symmetric
/// differential whose axes are integral curves gains positive vanishing order
/// along every exceptional curve of the resolution of `sing`.
///
/// Mixed terms du^{r-k} dv^k (0 < k < r) vanish on the l-th curve iff
/// alpha_l > 1 or beta_l > 1; the pure terms carry a forced coefficient
/// divisor (a_0 = v a_0', a_r = u a_r') and always gain order.  Hence the
/// certificate fails exactly on 1/m(1,1), where alpha_1 = beta_1 = 1.
///
/// `extra_node_factors` counts additional linear forms through the node that
/// divide the coefficient of the differential; each adds min(alpha_l, beta_l)
/// to every term's order and rescues the 1/m(1,1) case.
CertificateResult vanishing_certificate(const SingularityType& sing, const Int& r,
                                        const Int& extra_node_factors = 0);

}  // namespace hypersurf
