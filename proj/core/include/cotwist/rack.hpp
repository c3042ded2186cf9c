#pragma once

#include <cstdint>
#include <vector>

#include "cotwist/group_ring.hpp"
#include "cotwist/rational.hpp"
#include "cotwist/symmetric_group.hpp"

namespace cotwist {

/// Value of a rack cocycle: (-1)^sign * z^zexp with z of order 2.
struct RackValue {
    std::uint8_t sign = 0;
    std::uint8_t zexp = 0;

    RackValue mul(RackValue o) const {
        return {std::uint8_t((sign + o.sign) & 1), std::uint8_t((zexp + o.zexp) & 1)};
    }
    Rational as_rational() const; // requires zexp == 0
    GroupRingScalar as_group_ring() const;
    /// Evaluation at z = s, s in {+1, -1}.
    Rational at(int s) const;
};

/// 1-cocycle q in Z^1(S_n, Fun(X_n, units)): values q(sigma, tau) for all
/// sigma in S_n, tau in X_n. Stored on the generator pairs and extended
/// along lex-min reduced words by q(s_w sigma', tau) =
/// q(s_w, sigma' tau sigma'^-1) q(sigma', tau); the Z^1 identity is then
/// verified exhaustively rather than assumed.
class RackCocycle {
public:
    /// q_1: +1 / -1 by whether sigma(i) < sigma(j) (tau = (i j), i < j).
    static RackCocycle q_one(unsigned n);
    /// q_{-1}: constant -1 on generator pairs.
    static RackCocycle q_minus_one(unsigned n);
    /// q_z: z / -1 by whether sigma(i) < sigma(j); values in Q[C_2].
    static RackCocycle q_z(unsigned n);

    unsigned n() const { return n_; }
    const SymPtr& sym() const { return sym_; }
    const TranspositionClass& transpositions() const { return x_; }
    bool has_z() const { return has_z_; }

    RackValue value(std::uint32_t sigma_index, std::size_t tau_index) const {
        return val_[std::size_t(sigma_index) * x_.size() + tau_index];
    }

private:
    unsigned n_;
    SymPtr sym_;
    TranspositionClass x_;
    bool has_z_;
    std::vector<RackValue> val_;

    RackCocycle(unsigned n, bool has_z);
    template <class GenRule>
    void extend(GenRule&& rule);
    void verify_z1() const;
};

} // namespace cotwist
