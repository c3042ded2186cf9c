#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cotwist/rational.hpp"

namespace cotwist {

/// Element of the cyclotomic field Q(zeta_m), stored as a polynomial in
/// zeta_m reduced modulo the m-th cyclotomic polynomial Phi_m. Reduction
/// modulo Phi_m (rather than z^m - 1) keeps the representation a field, so
/// zero tests are unambiguous.
class Cyclotomic {
public:
    /// Zero of Q(zeta_m).
    explicit Cyclotomic(unsigned order);
    /// Embeds a rational constant.
    Cyclotomic(unsigned order, const Rational& constant);

    /// zeta_m^k.
    static Cyclotomic zeta(unsigned order, long k = 1);
    /// Integer coefficients of Phi_m, lowest degree first (cached).
    static const std::vector<BigInt>& cyclotomic_polynomial(unsigned m);
    static unsigned totient(unsigned m);

    unsigned order() const { return order_; }
    /// Coefficient of zeta^k, 0 <= k < phi(m).
    const Rational& coeff(std::size_t k) const { return coeff_[k]; }
    const std::vector<Rational>& coeffs() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The constant term; valid when is_rational().
    Rational rational_part() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws NonUnitError on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    std::string str() const;

private:
    unsigned order_;
    std::vector<Rational> coeff_; // length phi(order_)

    void reduce(std::vector<Rational>& poly) const;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inv(const Cyclotomic& x) { return x.inverse(); }

} // namespace cotwist
