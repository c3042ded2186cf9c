#pragma once

#include <cstdint>
#include <vector>

#include "cotwist/cocycle.hpp"

namespace cotwist {

/// H^2(G, C_m) = Z^2 / B^2 as a list of elementary divisors (each > 1, in
/// divisibility order); the trivial group gives an empty list.
///
/// Z^2 is computed as the kernel of the cocycle constraint system on the
/// (|G|-1)^2 normalized unknowns; B^2 as the image of the coboundary map.
/// m = 2 uses a bitset F_2 echelon with adaptive constraint selection (a
/// subset of the |G|^3 equations is echelonized, then the candidate kernel
/// is verified against all equations and violated ones are fed back, so the
/// result is exact). The quotient structure is read off directly in the
/// prime case and through a small integer Smith normal form otherwise.
std::vector<unsigned> h2_structure(const GroupPtr& group, unsigned m);

/// Schur multiplier M(G) for elementary abelian G = C_p^k, computed as the
/// space of bicharacters modulo symmetric bicharacters over F_p. Returns the
/// exponent vector (binom(k,2) copies of p). Throws InvalidInputError for
/// non-elementary-abelian input.
std::vector<unsigned> schur_multiplier_abelian(const GroupPtr& group, unsigned p);

} // namespace cotwist
