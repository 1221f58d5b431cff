#pragma once

#include "hypersurf/certify.hpp"
#include "hypersurf/tower.hpp"

#include <array>

namespace hypersurf {

/// Numerical invariants of one floor of a tower.  `K_class` is the
/// pull-back presentation: the rational downstairs class kappa with
/// K_{X_k} = g_k^*(kappa).  `D_sq` and `D_dot_K` describe the branch divisor
/// entering that floor (zero on floor 0).
struct LevelInvariants {
  int level = 0;
  Rat chi;
  Rat k2;
  DivClass K_class = DivClass::p2(Rat(0));
  Rat D_sq;
  Rat D_dot_K;
  Int branch_component_genus{0};  // genus of a branch curve inside the floor below
  bool has_branch_genus = false;
  bool k_ample = false;
};

/// chi and K^2 of every floor, by the cover recursions
///   chi_k = m chi_{k-1} + (m-1)(2m-1)/(12m) D^2 + (m-1)/4 D.K
///   kappa_k = kappa_{k-1} + ((m-1)/m) d_k,   K^2_k = deg(g_k) kappa_k^2
/// with D^2, D.K evaluated by exact lattice pairing.  Both invariants are
/// asserted integral on every floor (ConsistencyError otherwise).
/// Returns floors 0..n.
std::vector<LevelInvariants> level_invariants(const Tower& t);

/// K^2 - 8 chi of the top floor of an equal-degree fiber tower, asserted
/// against the closed form -(2k/3) m^k (m^2 - 1) on every floor.
/// DomainError unless the tower is an equal-degree fiber tower with unit
/// multiplicities; ConsistencyError when recursion and closed form disagree.
Rat noether_gap(const Tower& t);

/// chi of a single cyclic cover from the pushforward decomposition of its
/// structure sheaf: sum_i chi(-M^(i)).  Independent of the recursion route.
Rat chi_via_pushforward(const Tower& t);

/// Degree criterion forcing integrality on equal-degree fiber towers:
/// (4g - 4)/(n - 2) < deg11.  DomainError when n <= 2.
bool forced_integrality_general(int n, const Int& g, const Rat& deg11);

/// The quantity -deg(C) + (E.C') + 4g(C) - 4; true iff negative.
bool cuboid_inequality(const Int& deg, const Int& g, const Int& e_dot_c);

/// Fixed report on the cuboid tower (m = 2, n = 3, parameters
/// {1,-1}, {i,-i}, {0,inf}) and its four image curves C_0..C_3.
struct CuboidReport {
  Int sing_count{0};                       // 48
  std::array<int, 4> nodes_on_c{};         // 6 per curve
  std::array<Int, 4> e_size{};             // |E_i| = 24
  std::array<Int, 4> e_prime_size{};       // |E_i'| = 24
  bool two_e_identity = false;             // sum of E_i' = 2E as multisets
  Int degree_bound_constant{0};            // #singular points - 4 = 44
  Int min_e_intersection{0};               // (sum of four bounds of 4)/2 = 8
  Int rational_curves{0};                  // components over C_0..C_3 = 32
  Int elliptic_fiber_curves{0};            // genus-1 fiber preimages = 12
  Int elliptic_orbit_curves{48};           // reported orbit count (literature)
  Int inventory_total{0};                  // 92
};

CuboidReport cuboid_report();

}  // namespace hypersurf
