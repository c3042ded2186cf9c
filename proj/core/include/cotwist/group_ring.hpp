#pragma once

#include <string>
#include <vector>

#include "cotwist/cyclotomic.hpp"
#include "cotwist/rational.hpp"

namespace cotwist {

/// Element of the group ring Q[C_m] = Q[z]/(z^m - 1), stored as the
/// coefficient vector of 1, z, ..., z^{m-1}. Unlike Cyclotomic this is not a
/// field: kernels over it are computed componentwise per idempotent.
class GroupRingScalar {
public:
    explicit GroupRingScalar(unsigned modulus);
    GroupRingScalar(unsigned modulus, const Rational& constant);
    /// Sum of given coefficients: c[0] + c[1] z + ...
    GroupRingScalar(unsigned modulus, std::vector<Rational> coeffs);

    static GroupRingScalar z_power(unsigned modulus, long e);

    unsigned modulus() const { return m_; }
    const Rational& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;

    GroupRingScalar operator-() const;
    GroupRingScalar operator+(const GroupRingScalar& o) const;
    GroupRingScalar operator-(const GroupRingScalar& o) const;
    GroupRingScalar operator*(const GroupRingScalar& o) const;
    GroupRingScalar& operator+=(const GroupRingScalar& o) { return *this = *this + o; }
    GroupRingScalar& operator*=(const GroupRingScalar& o) { return *this = *this * o; }
    bool operator==(const GroupRingScalar& o) const;
    bool operator!=(const GroupRingScalar& o) const { return !(*this == o); }

    /// Inverse in Q[z]/(z^m - 1); throws NonUnitError for zero divisors,
    /// e.g. 1 + z when m = 2.
    GroupRingScalar inverse() const;
    bool is_unit() const;

    /// Evaluation at z = q, a root of unity of order dividing m; a ring
    /// homomorphism onto Q(zeta). Throws InvalidRootError when q^m != 1.
    Cyclotomic specialize(const Cyclotomic& q) const;
    /// Evaluation at z = r for rational r with r^m = 1 (r = +-1).
    Rational specialize_rational(const Rational& r) const;

    /// Componentwise evaluation at each m-th root of unity, j-th entry at
    /// zeta_m^j. Inverse of recombine().
    std::vector<Cyclotomic> idempotent_split() const;
    static GroupRingScalar recombine(const std::vector<Cyclotomic>& values);

    std::string str() const;

private:
    unsigned m_;
    std::vector<Rational> c_;
};

inline bool is_zero(const GroupRingScalar& x) { return x.is_zero(); }
inline GroupRingScalar inv(const GroupRingScalar& x) { return x.inverse(); }

} // namespace cotwist
