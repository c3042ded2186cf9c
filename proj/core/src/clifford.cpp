#include "cotwist/clifford.hpp"

#include <bit>
#include <sstream>

namespace cotwist {

CliffordElement CliffordElement::one() { return monomial(0, BigInt(1)); }

CliffordElement CliffordElement::generator(unsigned i) {
    return monomial(1u << i, BigInt(1));
}

CliffordElement CliffordElement::monomial(std::uint32_t mask, BigInt coeff) {
    CliffordElement e;
    if (coeff != 0) e.terms_.emplace(mask, std::move(coeff));
    return e;
}

void CliffordElement::add_term(std::uint32_t mask, const BigInt& c) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(mask, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int CliffordElement::monomial_sign(std::uint32_t s, std::uint32_t t) {
    // parity of #{(a,b) in S x T : a > b}
    int swaps = 0;
    while (t) {
        const unsigned b = unsigned(std::countr_zero(t));
        t &= t - 1;
        swaps += std::popcount(s >> (b + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    CliffordElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    CliffordElement r;
    for (const auto& [s, cs] : terms_)
        for (const auto& [t, ct] : o.terms_) {
            BigInt prod = cs * ct;
            if (monomial_sign(s, t) < 0) prod = -prod;
            r.add_term(s ^ t, prod);
        }
    return r;
}

CliffordElement::Ratio CliffordElement::ratio_to(const CliffordElement& o) const {
    Ratio res;
    if (o.is_zero() || is_zero()) return res;
    if (terms_.size() != o.terms_.size()) return res;
    const auto& [m0, c0] = *o.terms_.begin();
    auto it = terms_.find(m0);
    if (it == terms_.end() || it->second % c0 != 0) return res;
    BigInt f = it->second / c0;
    for (const auto& [m, c] : o.terms_) {
        auto jt = terms_.find(m);
        if (jt == terms_.end() || jt->second != f * c) return res;
    }
    res.proportional = true;
    res.factor = std::move(f);
    return res;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str();
        for (unsigned i = 0; i < 32; ++i)
            if (m & (1u << i)) os << "*e" << (i + 1);
        first = false;
    }
    return os.str();
}

} // namespace cotwist
