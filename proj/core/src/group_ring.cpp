#include "cotwist/group_ring.hpp"

#include <sstream>

namespace cotwist {

GroupRingScalar::GroupRingScalar(unsigned modulus) : m_(modulus), c_(modulus, Rational(0)) {
    if (modulus == 0) throw InvalidInputError("group ring modulus must be positive");
}

GroupRingScalar::GroupRingScalar(unsigned modulus, const Rational& constant)
    : GroupRingScalar(modulus) {
    c_[0] = constant;
}

GroupRingScalar::GroupRingScalar(unsigned modulus, std::vector<Rational> coeffs)
    : m_(modulus), c_(std::move(coeffs)) {
    if (m_ == 0 || c_.size() != m_) throw InvalidInputError("group ring coefficient size mismatch");
}

GroupRingScalar GroupRingScalar::z_power(unsigned modulus, long e) {
    GroupRingScalar r(modulus);
    long k = e % static_cast<long>(modulus);
    if (k < 0) k += modulus;
    r.c_[static_cast<std::size_t>(k)] = 1;
    return r;
}

bool GroupRingScalar::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool GroupRingScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational GroupRingScalar::rational_part() const {
    if (!is_rational()) throw InvalidInputError("group ring value is not a constant: " + str());
    return c_[0];
}

GroupRingScalar GroupRingScalar::operator-() const {
    GroupRingScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

GroupRingScalar GroupRingScalar::operator+(const GroupRingScalar& o) const {
    if (m_ != o.m_) throw InvalidInputError("group ring modulus mismatch");
    GroupRingScalar r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

GroupRingScalar GroupRingScalar::operator-(const GroupRingScalar& o) const { return *this + (-o); }

GroupRingScalar GroupRingScalar::operator*(const GroupRingScalar& o) const {
    if (m_ != o.m_) throw InvalidInputError("group ring modulus mismatch");
    GroupRingScalar r(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < m_; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            r.c_[(i + j) % m_] += c_[i] * o.c_[j];
        }
    }
    return r;
}

bool GroupRingScalar::operator==(const GroupRingScalar& o) const {
    return m_ == o.m_ && c_ == o.c_;
}

bool GroupRingScalar::is_unit() const {
    for (const auto& v : idempotent_split())
        if (v.is_zero()) return false;
    return true;
}

GroupRingScalar GroupRingScalar::inverse() const {
    auto values = idempotent_split();
    for (auto& v : values) {
        if (v.is_zero())
            throw NonUnitError("non-unit in Q[z]/(z^" + std::to_string(m_) + " - 1): " + str());
        v = v.inverse();
    }
    return recombine(values);
}

Cyclotomic GroupRingScalar::specialize(const Cyclotomic& q) const {
    if (!q.pow(static_cast<long>(m_)).is_rational() ||
        q.pow(static_cast<long>(m_)).rational_part() != 1)
        throw InvalidRootError("specialisation point q with q^" + std::to_string(m_) + " != 1");
    Cyclotomic acc(q.order(), c_.empty() ? Rational(0) : c_.back());
    for (std::size_t i = m_ - 1; i-- > 0;) acc = acc * q + Cyclotomic(q.order(), c_[i]);
    return acc;
}

Rational GroupRingScalar::specialize_rational(const Rational& r) const {
    Rational rm = 1;
    for (unsigned i = 0; i < m_; ++i) rm *= r;
    if (rm != 1) throw InvalidRootError("specialisation point r with r^m != 1");
    Rational acc = c_.back();
    for (std::size_t i = m_ - 1; i-- > 0;) acc = acc * r + c_[i];
    return acc;
}

std::vector<Cyclotomic> GroupRingScalar::idempotent_split() const {
    std::vector<Cyclotomic> out;
    out.reserve(m_);
    for (unsigned j = 0; j < m_; ++j)
        out.push_back(specialize(Cyclotomic::zeta(m_, j)));
    return out;
}

GroupRingScalar GroupRingScalar::recombine(const std::vector<Cyclotomic>& values) {
    if (values.empty()) throw InvalidInputError("recombine of empty value list");
    const unsigned m = static_cast<unsigned>(values.size());
    // c_i = (1/m) sum_j zeta^{-ij} v_j; a valid split recombines to rationals.
    GroupRingScalar r(m);
    for (unsigned i = 0; i < m; ++i) {
        Cyclotomic acc(values[0].order());
        for (unsigned j = 0; j < m; ++j)
            acc += Cyclotomic::zeta(m, -static_cast<long>(i) * static_cast<long>(j)) * values[j];
        r.c_[i] = acc.rational_part() / m;
    }
    return r;
}

std::string GroupRingScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace cotwist
