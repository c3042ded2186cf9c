#include "cotwist/cocycle.hpp"

#include "cotwist/modm.hpp"

namespace cotwist {

ZmCocycle::ZmCocycle(GroupPtr group, unsigned m)
    : group_(std::move(group)), m_(m),
      exp_(std::size_t(group_->order()) * group_->order(), 0) {
    if (m_ == 0) throw InvalidInputError("cocycle modulus must be positive");
}

ZmCocycle::ZmCocycle(GroupPtr group, unsigned m, std::vector<std::uint32_t> exponents)
    : group_(std::move(group)), m_(m), exp_(std::move(exponents)) {
    if (m_ == 0) throw InvalidInputError("cocycle modulus must be positive");
    if (exp_.size() != std::size_t(group_->order()) * group_->order())
        throw InvalidInputError("cocycle table size mismatch");
    for (auto& e : exp_) e %= m_;
}

ZmCocycle ZmCocycle::operator*(const ZmCocycle& o) const {
    if (group_ != o.group_ || m_ != o.m_)
        throw InvalidInputError("cocycle product: group or modulus mismatch");
    ZmCocycle r(group_, m_);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = (exp_[i] + o.exp_[i]) % m_;
    return r;
}

ZmCocycle ZmCocycle::inverse_cocycle() const {
    ZmCocycle r(group_, m_);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = (m_ - exp_[i]) % m_;
    return r;
}

ZmCocycle ZmCocycle::embed_double() const {
    ZmCocycle r(group_, 2 * m_);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = 2 * exp_[i];
    return r;
}

bool ZmCocycle::operator==(const ZmCocycle& o) const {
    return group_ == o.group_ && m_ == o.m_ && exp_ == o.exp_;
}

CocycleDiagnostic is_cocycle(const ZmCocycle& mu) {
    const auto& G = *mu.group();
    const auto n = G.order();
    const unsigned m = mu.modulus();
    const auto e = G.identity();
    for (FiniteGroup::Index g = 0; g < n; ++g) {
        if (mu.exponent(e, g) != 0 || mu.exponent(g, e) != 0)
            return {false, g, e, e};
    }
    for (FiniteGroup::Index g = 0; g < n; ++g)
        for (FiniteGroup::Index h = 0; h < n; ++h) {
            const auto gh = G.mul(g, h);
            const auto base = mu.exponent(g, h);
            for (FiniteGroup::Index k = 0; k < n; ++k) {
                const std::uint32_t lhs = base + mu.exponent(gh, k);
                const std::uint32_t rhs = mu.exponent(g, G.mul(h, k)) + mu.exponent(h, k);
                if (lhs % m != rhs % m) return {false, g, h, k};
            }
        }
    return {};
}

OneCochain::OneCochain(GroupPtr group, unsigned m)
    : group_(std::move(group)), m_(m), val_(group_->order(), 0) {}

OneCochain::OneCochain(GroupPtr group, unsigned m, std::vector<std::uint32_t> values)
    : group_(std::move(group)), m_(m), val_(std::move(values)) {
    if (val_.size() != group_->order()) throw InvalidInputError("cochain size mismatch");
    for (auto& v : val_) v %= m_;
    if (val_[group_->identity()] != 0)
        throw InvalidInputError("cochain must be normalized at the identity");
}

void OneCochain::set_value(FiniteGroup::Index g, std::uint32_t v) {
    if (g == group_->identity() && v % m_ != 0)
        throw InvalidInputError("cochain must be normalized at the identity");
    val_[g] = v % m_;
}

ZmCocycle coboundary(const OneCochain& phi) {
    const auto& G = *phi.group();
    const unsigned m = phi.modulus();
    ZmCocycle d(phi.group(), m);
    for (FiniteGroup::Index g = 0; g < G.order(); ++g)
        for (FiniteGroup::Index h = 0; h < G.order(); ++h) {
            const std::uint32_t v =
                phi.value(g) + phi.value(h) + (m - phi.value(G.mul(g, h)) % m);
            d.set_exponent(g, h, v % m);
        }
    return d;
}

std::optional<OneCochain> cohomologous(const ZmCocycle& mu, const ZmCocycle& nu) {
    if (mu.group() != nu.group() || mu.modulus() != nu.modulus())
        throw InvalidInputError("cohomologous: group or modulus mismatch");
    const auto& G = *mu.group();
    const unsigned m = mu.modulus();
    const auto n = G.order();
    const auto e = G.identity();
    // unknown j-th column = phi at the j-th non-identity element
    std::vector<std::int32_t> col(n, -1);
    std::uint32_t ncols = 0;
    for (FiniteGroup::Index g = 0; g < n; ++g)
        if (g != e) col[g] = std::int32_t(ncols++);
    std::vector<ZmRow> rows;
    rows.reserve(std::size_t(n) * n);
    for (FiniteGroup::Index g = 0; g < n; ++g)
        for (FiniteGroup::Index h = 0; h < n; ++h) {
            // phi(g) + phi(h) - phi(gh) = nu(g,h) - mu(g,h)
            ZmRow row;
            row.rhs = (nu.exponent(g, h) + m - mu.exponent(g, h)) % m;
            if (col[g] >= 0) row.terms.emplace_back(std::uint32_t(col[g]), 1);
            if (col[h] >= 0) row.terms.emplace_back(std::uint32_t(col[h]), 1);
            const auto gh = G.mul(g, h);
            if (col[gh] >= 0) row.terms.emplace_back(std::uint32_t(col[gh]), m - 1);
            if (row.terms.empty() && row.rhs == 0) continue;
            rows.push_back(std::move(row));
        }
    auto x = zm_solve(ncols, m, rows);
    if (!x) return std::nullopt;
    OneCochain phi(mu.group(), m);
    for (FiniteGroup::Index g = 0; g < n; ++g)
        if (col[g] >= 0) phi.set_value(g, std::uint32_t((*x)[std::size_t(col[g])]));
    return phi;
}

ChiTable::ChiTable(GroupPtr group, unsigned m, std::vector<std::uint32_t> table)
    : group_(std::move(group)), m_(m), tab_(std::move(table)) {
    if (tab_.size() != std::size_t(group_->order()) * group_->order())
        throw InvalidInputError("chi table size mismatch");
}

bool ChiTable::z1_condition_holds() const {
    const auto& G = *group_;
    const auto n = G.order();
    for (FiniteGroup::Index g = 0; g < n; ++g)
        for (FiniteGroup::Index h = 0; h < n; ++h) {
            const auto gh = G.mul(g, h);
            for (FiniteGroup::Index k = 0; k < n; ++k) {
                const auto hkh = G.conj(h, k);
                if (exponent(gh, k) % m_ != (exponent(g, hkh) + exponent(h, k)) % m_)
                    return false;
            }
        }
    return true;
}

ChiTable chi_from_cocycle(const ZmCocycle& mu) {
    const auto& G = *mu.group();
    const auto n = G.order();
    std::vector<std::uint32_t> tab(std::size_t(n) * n);
    for (FiniteGroup::Index g = 0; g < n; ++g)
        for (FiniteGroup::Index h = 0; h < n; ++h) {
            const auto ghg = G.conj(g, h);
            tab[std::size_t(g) * n + h] = (mu.exponent(g, h) + mu.exponent(ghg, g)) % mu.modulus();
        }
    return ChiTable(mu.group(), mu.modulus(), std::move(tab));
}

} // namespace cotwist
