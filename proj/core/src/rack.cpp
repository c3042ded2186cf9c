#include "cotwist/rack.hpp"

#include <algorithm>
#include <numeric>

#include "cotwist/errors.hpp"

namespace cotwist {

Rational RackValue::as_rational() const {
    if (zexp) throw InvalidInputError("rack value has a z component");
    return sign ? Rational(-1) : Rational(1);
}

GroupRingScalar RackValue::as_group_ring() const {
    GroupRingScalar v = GroupRingScalar::z_power(2, zexp);
    return sign ? -v : v;
}

Rational RackValue::at(int s) const {
    Rational v = (zexp && s < 0) ? Rational(-1) : Rational(1);
    return sign ? -v : v;
}

RackCocycle::RackCocycle(unsigned n, bool has_z)
    : n_(n), sym_(SymmetricGroup::get(n)), x_(n), has_z_(has_z),
      val_(std::size_t(sym_->order()) * x_.size()) {}

template <class GenRule>
void RackCocycle::extend(GenRule&& rule) {
    const auto& S = *sym_;
    // process elements by length; sigma = s_w[0] * sigma'
    std::vector<std::uint32_t> order(S.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return S.length(a) < S.length(b); });
    for (std::uint32_t si : order) {
        const auto& word = S.reduced_word(si);
        for (std::size_t t = 0; t < x_.size(); ++t) {
            if (word.empty()) {
                val_[std::size_t(si) * x_.size() + t] = RackValue{};
                continue;
            }
            const unsigned k = word.front(); // 1-based generator
            const Perm sk = Perm::simple(n_, k);
            const std::uint32_t rest = S.index(sk * S.perm(si));
            const std::size_t tc = x_.conjugate(S.perm(rest), t);
            const RackValue head = rule(k - 1, x_.pair(tc)); // 0-based gen position
            val_[std::size_t(si) * x_.size() + t] =
                head.mul(val_[std::size_t(rest) * x_.size() + t]);
        }
    }
    verify_z1();
}

void RackCocycle::verify_z1() const {
    const auto& S = *sym_;
    for (std::uint32_t rho = 0; rho < S.order(); ++rho)
        for (std::uint32_t sigma = 0; sigma < S.order(); ++sigma) {
            const std::uint32_t prod = S.mul(rho, sigma);
            for (std::size_t t = 0; t < x_.size(); ++t) {
                const std::size_t tc = x_.conjugate(S.perm(sigma), t);
                const RackValue lhs = value(prod, t);
                const RackValue rhs = value(rho, tc).mul(value(sigma, t));
                if (lhs.sign != rhs.sign || lhs.zexp != rhs.zexp)
                    throw InternalError("rack cocycle fails the Z^1 identity");
            }
        }
}

namespace {
// generator rule inputs: 0-based generator position k (i.e. s = (k, k+1)),
// tau = (i, j) with i < j; sigma(i) < sigma(j) test for sigma = (k, k+1)
bool swaps_order(unsigned k, std::pair<std::uint8_t, std::uint8_t> tau) {
    auto apply = [k](unsigned x) -> unsigned {
        if (x == k) return k + 1;
        if (x == k + 1) return k;
        return x;
    };
    return apply(tau.first) > apply(tau.second);
}
} // namespace

RackCocycle RackCocycle::q_one(unsigned n) {
    RackCocycle q(n, false);
    q.extend([](unsigned k, std::pair<std::uint8_t, std::uint8_t> tau) {
        return RackValue{std::uint8_t(swaps_order(k, tau) ? 1 : 0), 0};
    });
    return q;
}

RackCocycle RackCocycle::q_minus_one(unsigned n) {
    RackCocycle q(n, false);
    q.extend([](unsigned, std::pair<std::uint8_t, std::uint8_t>) {
        return RackValue{1, 0};
    });
    return q;
}

RackCocycle RackCocycle::q_z(unsigned n) {
    RackCocycle q(n, true);
    q.extend([](unsigned k, std::pair<std::uint8_t, std::uint8_t> tau) {
        return swaps_order(k, tau) ? RackValue{1, 0} : RackValue{0, 1};
    });
    return q;
}

} // namespace cotwist
