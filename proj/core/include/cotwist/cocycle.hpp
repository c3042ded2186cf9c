#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cotwist/finite_group.hpp"

namespace cotwist {

/// Normalized 2-cocycle on a finite group with values in C_m, stored as an
/// exponent table: mu(g,h) = z^exponent(g,h), exponents additive mod m.
class ZmCocycle {
public:
    ZmCocycle(GroupPtr group, unsigned m);
    ZmCocycle(GroupPtr group, unsigned m, std::vector<std::uint32_t> exponents);

    static ZmCocycle trivial(GroupPtr group, unsigned m) { return ZmCocycle(group, m); }

    const GroupPtr& group() const { return group_; }
    unsigned modulus() const { return m_; }
    std::uint32_t exponent(FiniteGroup::Index g, FiniteGroup::Index h) const {
        return exp_[std::size_t(g) * group_->order() + h];
    }
    void set_exponent(FiniteGroup::Index g, FiniteGroup::Index h, std::uint32_t e) {
        exp_[std::size_t(g) * group_->order() + h] = e % m_;
    }
    const std::vector<std::uint32_t>& exponents() const { return exp_; }

    /// Pointwise product (Z^2 is a group).
    ZmCocycle operator*(const ZmCocycle& o) const;
    ZmCocycle inverse_cocycle() const;
    /// Doubles exponents into C_{2m}, e.g. to view a C_2-cocycle in C_4.
    ZmCocycle embed_double() const;

    bool operator==(const ZmCocycle& o) const;

private:
    GroupPtr group_;
    unsigned m_;
    std::vector<std::uint32_t> exp_;
};

struct CocycleDiagnostic {
    bool ok = true;
    FiniteGroup::Index g = 0, h = 0, k = 0; // witnessing triple when !ok
};

/// Exhaustive check of the cocycle identity over all |G|^3 triples.
CocycleDiagnostic is_cocycle(const ZmCocycle& mu);

/// Normalized 1-cochain phi: G -> C_m with phi(1) = 1 (exponent 0).
class OneCochain {
public:
    OneCochain(GroupPtr group, unsigned m);
    OneCochain(GroupPtr group, unsigned m, std::vector<std::uint32_t> values);

    const GroupPtr& group() const { return group_; }
    unsigned modulus() const { return m_; }
    std::uint32_t value(FiniteGroup::Index g) const { return val_[g]; }
    void set_value(FiniteGroup::Index g, std::uint32_t v);
    const std::vector<std::uint32_t>& values() const { return val_; }

private:
    GroupPtr group_;
    unsigned m_;
    std::vector<std::uint32_t> val_;
};

/// d(phi)(g,h) = phi(g) + phi(h) - phi(gh); always a normalized cocycle.
ZmCocycle coboundary(const OneCochain& phi);

/// Witness phi with nu = mu * d(phi), or nullopt when the classes differ.
/// Solved as a linear system over Z/m (prime-power lifting + CRT for
/// composite m).
std::optional<OneCochain> cohomologous(const ZmCocycle& mu, const ZmCocycle& nu);

/// chi(g,h) = mu(g,h) * mu(ghg^{-1}, g); as a function of g it is a
/// 1-cocycle with values in Fun(G, C_m) under the adjoint action.
class ChiTable {
public:
    ChiTable(GroupPtr group, unsigned m, std::vector<std::uint32_t> table);

    const GroupPtr& group() const { return group_; }
    unsigned modulus() const { return m_; }
    std::uint32_t exponent(FiniteGroup::Index g, FiniteGroup::Index h) const {
        return tab_[std::size_t(g) * group_->order() + h];
    }

    /// chi(gh, k) = chi(g, hkh^{-1}) + chi(h, k) over all triples.
    bool z1_condition_holds() const;

private:
    GroupPtr group_;
    unsigned m_;
    std::vector<std::uint32_t> tab_;
};

ChiTable chi_from_cocycle(const ZmCocycle& mu);

} // namespace cotwist
