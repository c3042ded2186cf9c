#pragma once

#include <optional>
#include <vector>

#include "cotwist/clifford.hpp"
#include "cotwist/cocycle.hpp"
#include "cotwist/symmetric_group.hpp"

namespace cotwist {

/// Normalized Clifford-algebra section of the spin double cover:
/// T(sigma) = (e_{i1} - e_{i1+1}) ... along the lex-min reduced word,
/// T(1) = 1. Each T(sigma) is supported on subsets of parity l(sigma) mod 2,
/// and T(g)T(h) = +-2^{(l(g)+l(h)-l(gh))/2} T(gh).
class SpinSection {
public:
    explicit SpinSection(SymPtr sym);

    const SymPtr& sym() const { return sym_; }
    const CliffordElement& section(std::uint32_t perm_index) const { return t_[perm_index]; }

private:
    SymPtr sym_;
    std::vector<CliffordElement> t_;
};

/// The C_2-cocycle cut out by the spin section: the sign of
/// T(g)T(h) / (2^{(l(g)+l(h)-l(gh))/2} T(gh)). Represents the class [1,z].
ZmCocycle spin_cocycle(unsigned n);

/// The length cocycle [z,1]: exponent (l(g)+l(h)-l(gh))/2 mod 2. Verifies the
/// evenness of l(g)+l(h)-l(gh) during construction.
ZmCocycle length_cocycle(unsigned n);

/// Schur's four classes [alpha, beta] over C_2: alpha=z iff lifts of
/// transpositions square to z; beta=z iff disjoint lifts anticommute.
/// [1,1]=trivial, [z,1]=length formula, [1,z]=spin section (chi-normalized,
/// see below), [z,z]=their pointwise product.
ZmCocycle cocycle_family(unsigned n, bool alpha_z, bool beta_z);

/// Vendramin's chi table extended to all of S_n: the Z^1 word-extension of
/// the transposition-pair rule "z iff sigma(i) < sigma(j)". Entry (sigma,
/// tau-index in X_n) is the exponent of z.
std::vector<std::uint32_t> vendramin_chi(const SymmetricGroup& sym);

struct ChiComparison {
    bool exact = false;                       // chi of the raw spin table == Vendramin
    std::optional<OneCochain> correction;     // phi with chi(spin*dphi) == Vendramin
};

/// Compares chi of the raw spin cocycle against Vendramin's table on
/// (sigma, tau) with tau a transposition, and finds the coboundary
/// correction when they differ.
ChiComparison compare_chi_with_vendramin(unsigned n);

/// The chi-normalized representative of [1,z]: spin_cocycle * d(correction),
/// whose chi equals the word-extended Vendramin table for every sigma. Used
/// by the twisted double constructions.
ZmCocycle canonical_spin_cocycle(unsigned n);

} // namespace cotwist
