#pragma once

// Reference computations that share no code with the library.

#include <vector>

#include "kcell/model0.hpp"
#include "kcell/permgraph.hpp"

namespace oracle {

using kcell::Rational;

/// <tau_d1 ... tau_dn>_g by the DVV (Virasoro) recursion, seeded with
/// <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
Rational witten_kontsevich(int genus, std::vector<int> d);

/// Orbifold Euler characteristic of M_{g,n} (Harer-Zagier with the
/// forgetful-map recursion).
Rational euler_characteristic(int genus, int n);

/// Half-edge bijections commuting with sigma1 that carry one graph to the
/// other (vertex blocks, cyclic orders, defects and face labels preserved),
/// found by trying every edge permutation and flip. Meant for E <= 4.
long count_isomorphisms(const kcell::StableRibbonGraph& a, const kcell::StableRibbonGraph& b);

/// Sum over trivalent classes of type (g, n) of 1/|Aut|, by sweeping every
/// sigma0 made of 3-cycles on 2E half-edges with sigma1 fixed and counting
/// face labelings. Meant for E <= 6.
Rational trivalent_mass(int genus, int n);

/// Cross-ratio (x1, x2; x3, x4) as a homogeneous pair (num, den).
std::pair<kcell::Complex, kcell::Complex> cross_ratio(const kcell::PointConfig& x);

}  // namespace oracle
