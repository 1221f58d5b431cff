#include <doctest.h>

#include "hypersurf/hjsing.hpp"

using namespace hypersurf;

namespace {

// Evaluates [b_1,...,b_s] back to a rational, the independent oracle for the
// expansion: b_1 - 1/(b_2 - 1/(...)).
Rat continued_fraction_value(const std::vector<Int>& b) {
  Rat acc = 0;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    if (acc == 0)
      acc = Rat(*it);
    else
      acc = Rat(*it) - 1 / acc;
  }
  return acc;
}

}  // namespace

TEST_CASE("continued fraction expansion") {
  CHECK(hj_expand(2, 1) == std::vector<Int>{2});
  CHECK(hj_expand(5, 2) == std::vector<Int>{3, 2});
  CHECK(hj_expand(7, 3) == std::vector<Int>{3, 2, 2});
  CHECK_THROWS_AS(hj_expand(6, 3), DomainError);
  CHECK_THROWS_AS(hj_expand(5, 5), DomainError);
  CHECK_THROWS_AS(hj_expand(5, 0), DomainError);
}

TEST_CASE("expansion reconstructs m/q and entries are >= 2") {
  for (int m = 2; m <= 60; ++m)
    for (int q = 1; q < m; ++q) {
      if (int_gcd(q, m) != 1) continue;
      auto b = hj_expand(m, q);
      for (const auto& x : b) CHECK(x >= 2);
      CHECK(continued_fraction_value(b) == Rat(m, q));
    }
}

TEST_CASE("resolution data of 1/5(1,2)") {
  ResolutionData d = resolution_data(SingularityType(5, 2));
  CHECK(d.b == std::vector<Int>{3, 2});
  CHECK(d.beta == std::vector<Int>{5, 2, 1, 0});
  CHECK(d.alpha == std::vector<Int>{0, 1, 3, 5});
  CHECK(d.gamma == std::vector<Int>{-1, 0, 1, 2});
  CHECK(d.discrepancies == std::vector<Rat>{Rat(-2, 5), Rat(-1, 5)});
}

TEST_CASE("A_1 is crepant") {
  ResolutionData d = resolution_data(SingularityType(2, 1));
  CHECK(d.b == std::vector<Int>{2});
  CHECK(d.beta == std::vector<Int>{2, 1, 0});
  CHECK(d.alpha == std::vector<Int>{0, 1, 2});
  CHECK(d.discrepancies == std::vector<Rat>{Rat(0)});
}

TEST_CASE("resolution data of 1/7(1,3)") {
  ResolutionData d = resolution_data(SingularityType(7, 3));
  CHECK(d.alpha[d.length()] == 5);  // 3 * 5 = 1 (mod 7)
  CHECK(d.discrepancies == std::vector<Rat>{Rat(-3, 7), Rat(-2, 7), Rat(-1, 7)});
}

TEST_CASE("resolution identities for all m <= 200") {
  for (int m = 2; m <= 200; ++m) {
    for (int q = 1; q < m; ++q) {
      if (int_gcd(q, m) != 1) continue;
      ResolutionData d = resolution_data(SingularityType(m, q));
      int s = d.length();
      REQUIRE(d.beta[s + 1] == 0);
      REQUIRE(d.alpha[s + 1] == m);
      REQUIRE(mod_nonneg(d.alpha[s] * q, m) == 1);
      for (int i = 0; i <= s; ++i) {
        CHECK(d.alpha[i + 1] * d.gamma[i] - d.alpha[i] * d.gamma[i + 1] == -1);
        CHECK(d.beta[i] == q * d.alpha[i] - m * d.gamma[i]);
        CHECK(d.beta[i] > d.beta[i + 1]);
        CHECK(d.alpha[i] < d.alpha[i + 1]);
      }
      for (const Rat& disc : d.discrepancies) {
        CHECK(disc > -1);
        CHECK(disc <= 0);
      }
      // reversal: m/q^{-1} expands to the reversed entry list
      std::vector<Int> rev(d.b.rbegin(), d.b.rend());
      CHECK(hj_expand(m, d.alpha[s]) == rev);
    }
  }
}

TEST_CASE("type A chains have b = [2,...,2] and zero discrepancies") {
  for (int m = 2; m <= 40; ++m) {
    ResolutionData d = resolution_data(SingularityType(m, m - 1));
    CHECK(d.length() == m - 1);
    for (const auto& b : d.b) CHECK(b == 2);
    for (const auto& disc : d.discrepancies) CHECK(disc == 0);
  }
}

TEST_CASE("A-series sequences specialize to the chain cover map") {
  // For 1/m(1,m-1) the local cover on the i-th chart must be
  // (u_i^{m-i} u_{i+1}^{m-i-1}, u_i^i u_{i+1}^{i+1}), i.e. beta_i = m - i and
  // alpha_i = i throughout.
  for (int m = 2; m <= 30; ++m) {
    ResolutionData d = resolution_data(SingularityType(m, m - 1));
    for (int i = 0; i <= d.length() + 1; ++i) {
      CHECK(d.beta[i] == m - i);
      CHECK(d.alpha[i] == i);
    }
  }
}

TEST_CASE("singularity type over a node") {
  CHECK(sing_from_node(1, 1, 2) == SingularityType(2, 1));
  CHECK(sing_from_node(1, 3, 7) == SingularityType(7, 4));
  CHECK(sing_from_node(2, 1, 5) == SingularityType(5, 2));
  CHECK_THROWS_AS(sing_from_node(2, 1, 4), DomainError);
  CHECK_THROWS_AS(sing_from_node(0, 1, 5), DomainError);
}

TEST_CASE("term vanishing orders") {
  ResolutionData a2 = resolution_data(SingularityType(3, 2));
  CHECK(term_vanishing_order(a2, 1, 0, 1, 2, 0) == 3);  // v du^2
  ResolutionData a1 = resolution_data(SingularityType(2, 1));
  CHECK(term_vanishing_order(a1, 1, 0, 0, 1, 1) == 0);  // du dv
  ResolutionData s52 = resolution_data(SingularityType(5, 2));
  CHECK(term_vanishing_order(s52, 2, 0, 0, 1, 1) == 2);
  CHECK_THROWS_AS(term_vanishing_order(s52, 3, 0, 0, 1, 1), StructuralError);
}

TEST_CASE("vanishing certificate boundary cases") {
  CHECK_FALSE(vanishing_certificate(SingularityType(2, 1), 2).pass);
  CHECK(vanishing_certificate(SingularityType(2, 1), 2).failing_index == 1);
  CHECK(vanishing_certificate(SingularityType(3, 2), 2).pass);
  CHECK(vanishing_certificate(SingularityType(5, 2), 2).pass);
}

TEST_CASE("certificate fails exactly on 1/m(1,1), for all m <= 200") {
  for (int m = 2; m <= 200; ++m)
    for (int q = 1; q < m; ++q) {
      if (int_gcd(q, m) != 1) continue;
      CertificateResult res = vanishing_certificate(SingularityType(m, q), 2);
      CHECK(res.pass == (q != 1));
      if (!res.pass) {
        CHECK(res.alpha_l == 1);
        CHECK(res.beta_l == 1);
      }
    }
}

TEST_CASE("one coefficient factor through the node rescues 1/m(1,1)") {
  for (int m = 2; m <= 20; ++m)
    CHECK(vanishing_certificate(SingularityType(m, 1), 2, 1).pass);
}
