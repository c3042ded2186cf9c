#include "cotwist/spin_cover.hpp"

#include "cotwist/modm.hpp"
#include "cotwist/rack.hpp"

namespace cotwist {

SpinSection::SpinSection(SymPtr sym) : sym_(std::move(sym)) {
    const auto& S = *sym_;
    t_.reserve(S.order());
    for (std::uint32_t i = 0; i < S.order(); ++i) {
        CliffordElement el = CliffordElement::one();
        for (std::uint8_t gen : S.reduced_word(i)) {
            // generator s_i -> factor e_i - e_{i+1} (1-based), bits i-1, i
            el = el * (CliffordElement::generator(gen - 1) - CliffordElement::generator(gen));
        }
        t_.push_back(std::move(el));
    }
}

ZmCocycle spin_cocycle(unsigned n) {
    if (n < 2 || n > 7) throw BudgetError("spin_cocycle: desk scale is 2 <= n <= 7");
    auto sym = SymmetricGroup::get(n);
    const auto& S = *sym;
    SpinSection section(sym);
    GroupPtr G = S.finite_group();
    ZmCocycle mu(G, 2);
    BigInt two(2);
    for (std::uint32_t g = 0; g < S.order(); ++g) {
        for (std::uint32_t h = 0; h < S.order(); ++h) {
            const std::uint32_t gh = S.mul(g, h);
            const CliffordElement prod = section.section(g) * section.section(h);
            const auto ratio = prod.ratio_to(section.section(gh));
            const unsigned drop = S.length(g) + S.length(h) - S.length(gh);
            if (drop % 2 != 0)
                throw InternalError("l(g)+l(h)-l(gh) must be even");
            BigInt scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 2, drop / 2);
            if (!ratio.proportional || (ratio.factor != scale && ratio.factor != -scale))
                throw InternalError("spin section: T(g)T(h) is not +-2^{d/2} T(gh)");
            mu.set_exponent(g, h, ratio.factor == scale ? 0 : 1);
        }
    }
    return mu;
}

ZmCocycle length_cocycle(unsigned n) {
    auto sym = SymmetricGroup::get(n);
    const auto& S = *sym;
    GroupPtr G = S.finite_group();
    ZmCocycle mu(G, 2);
    for (std::uint32_t g = 0; g < S.order(); ++g)
        for (std::uint32_t h = 0; h < S.order(); ++h) {
            const unsigned drop = S.length(g) + S.length(h) - S.length(S.mul(g, h));
            if (drop % 2 != 0) throw InternalError("l(g)+l(h)-l(gh) must be even");
            mu.set_exponent(g, h, (drop / 2) % 2);
        }
    return mu;
}

ZmCocycle cocycle_family(unsigned n, bool alpha_z, bool beta_z) {
    auto sym = SymmetricGroup::get(n);
    GroupPtr G = sym->finite_group();
    ZmCocycle mu = ZmCocycle::trivial(G, 2);
    if (alpha_z) mu = mu * length_cocycle(n);
    if (beta_z) mu = mu * canonical_spin_cocycle(n);
    return mu;
}

std::vector<std::uint32_t> vendramin_chi(const SymmetricGroup& sym) {
    // word-extension of the generator rule along lex-min reduced words:
    // chi(s_w sigma', tau) = chi(s_w, sigma' tau sigma'^-1) + chi(sigma', tau)
    const RackCocycle qz = RackCocycle::q_z(sym.n());
    const RackCocycle q1 = RackCocycle::q_one(sym.n());
    const TranspositionClass X(sym.n());
    std::vector<std::uint32_t> chi(std::size_t(sym.order()) * X.size());
    for (std::uint32_t s = 0; s < sym.order(); ++s)
        for (std::size_t t = 0; t < X.size(); ++t)
            // q_z / q_1 has values in {1, z}: the z-exponent of q_z where the
            // signs cancel
            chi[std::size_t(s) * X.size() + t] = qz.value(s, t).zexp ^ q1.value(s, t).zexp;
    return chi;
}

ChiComparison compare_chi_with_vendramin(unsigned n) {
    auto sym = SymmetricGroup::get(n);
    const auto& S = *sym;
    const TranspositionClass X(n);
    const ZmCocycle spin = spin_cocycle(n);
    GroupPtr G = spin.group();
    const ChiTable chi = chi_from_cocycle(spin);
    const auto target = vendramin_chi(S);

    // group indices of the transpositions
    std::vector<FiniteGroup::Index> xidx(X.size());
    for (std::size_t t = 0; t < X.size(); ++t) xidx[t] = S.index(X.perm(t));

    ChiComparison out;
    bool exact = true;
    for (std::uint32_t s = 0; s < S.order() && exact; ++s)
        for (std::size_t t = 0; t < X.size(); ++t)
            if (chi.exponent(s, xidx[t]) != target[std::size_t(s) * X.size() + t]) {
                exact = false;
                break;
            }
    out.exact = exact;
    if (exact) return out;

    // chi(mu*dphi)(s,tau) = chi(mu)(s,tau) + phi(tau) + phi(s tau s^-1);
    // unknowns: phi on the transpositions (other values do not affect chi on
    // transposition arguments)
    std::vector<ZmRow> rows;
    for (std::uint32_t s = 0; s < S.order(); ++s)
        for (std::size_t t = 0; t < X.size(); ++t) {
            ZmRow row;
            const std::size_t tc = X.conjugate(S.perm(s), t);
            row.terms.emplace_back(std::uint32_t(t), 1);
            row.terms.emplace_back(std::uint32_t(tc), 1);
            row.rhs = (target[std::size_t(s) * X.size() + t] + 2 -
                       chi.exponent(s, xidx[t])) % 2;
            rows.push_back(std::move(row));
        }
    auto sol = zm_solve(X.size(), 2, rows);
    if (!sol) return out; // neither exact nor correctable
    OneCochain phi(G, 2);
    for (std::size_t t = 0; t < X.size(); ++t)
        phi.set_value(xidx[t], std::uint32_t((*sol)[t]));
    out.correction = std::move(phi);
    return out;
}

ZmCocycle canonical_spin_cocycle(unsigned n) {
    ZmCocycle spin = spin_cocycle(n);
    auto cmp = compare_chi_with_vendramin(n);
    if (cmp.exact) return spin;
    if (!cmp.correction)
        throw InternalError("spin cocycle chi is not cohomologous to Vendramin's table");
    return spin * coboundary(*cmp.correction);
}

} // namespace cotwist
