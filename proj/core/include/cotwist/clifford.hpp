#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cotwist/rational.hpp"

namespace cotwist {

/// Element of the rank-n integer Clifford algebra with e_i^2 = 1, stored as
/// a sparse map from subset bitmask to coefficient. Monomial product rule:
/// e_S e_T = sign(S,T) e_{S xor T} with sign = (-1)^{#{(s,t) in SxT : s > t}}.
class CliffordElement {
public:
    CliffordElement() = default;

    static CliffordElement one();
    /// e_i, 0-based index.
    static CliffordElement generator(unsigned i);
    static CliffordElement monomial(std::uint32_t mask, BigInt coeff);

    const std::map<std::uint32_t, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const CliffordElement& o) const;
    bool operator==(const CliffordElement& o) const { return terms_ == o.terms_; }

    /// Result of testing proportionality: *this == c * o.
    struct Ratio {
        bool proportional = false;
        BigInt factor;
    };
    Ratio ratio_to(const CliffordElement& o) const;

    std::string str() const;

    static int monomial_sign(std::uint32_t s, std::uint32_t t);

private:
    std::map<std::uint32_t, BigInt> terms_;

    void add_term(std::uint32_t mask, const BigInt& c);
};

} // namespace cotwist
