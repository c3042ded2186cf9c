#include "cotwist/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace cotwist {

namespace {

// Dense polynomial helpers over Q, lowest degree first.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

// a = q*b + r with deg r < deg b
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (a.size() < b.size()) break;
    }
    trim(q);
    r = std::move(a);
}

// g = gcd(a, b) monic, with u*a + v*b = g
Poly poly_ext_gcd(Poly a, Poly b, Poly& u, Poly& v) {
    Poly u0 = {Rational(1)}, v0 = {};
    Poly u1 = {}, v1 = {Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
        Poly nu = u0, nv = v0;
        nu.resize(std::max(nu.size(), qu.size()), Rational(0));
        nv.resize(std::max(nv.size(), qv.size()), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
        for (std::size_t i = 0; i < qv.size(); ++i) nv[i] -= qv[i];
        trim(nu);
        trim(nv);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (!a.empty() && a.back() != 1) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
        for (auto& c : u0) c /= lead;
        for (auto& c : v0) c /= lead;
    }
    u = std::move(u0);
    v = std::move(v0);
    return a;
}

// Exact division of integer polynomials (used only where divisibility is
// guaranteed, e.g. (x^m - 1) by products of cyclotomic polynomials).
std::vector<BigInt> int_poly_exact_div(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    std::vector<BigInt> q(a.size() - b.size() + 1, BigInt(0));
    while (a.size() >= b.size()) {
        BigInt f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return q;
}

} // namespace

unsigned Cyclotomic::totient(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<BigInt>& Cyclotomic::cyclotomic_polynomial(unsigned m) {
    static std::map<unsigned, std::vector<BigInt>> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<BigInt> num(m + 1, BigInt(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& phi_d = cyclotomic_polynomial(d);
        num = int_poly_exact_div(num, phi_d);
    }
    return cache.emplace(m, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic(unsigned order) : order_(order), coeff_(totient(order), Rational(0)) {
    if (order == 0) throw InvalidInputError("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(unsigned order, const Rational& constant) : Cyclotomic(order) {
    coeff_[0] = constant;
}

void Cyclotomic::reduce(std::vector<Rational>& poly) const {
    const auto& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1; // == phi(m)
    while (poly.size() > deg) {
        Rational lead = poly.back();
        if (sgn(lead) != 0) {
            std::size_t shift = poly.size() - 1 - deg;
            for (std::size_t i = 0; i < deg; ++i)
                poly[shift + i] -= lead * Rational(phi[i]);
        }
        poly.pop_back();
    }
    poly.resize(deg, Rational(0));
}

Cyclotomic Cyclotomic::zeta(unsigned order, long k) {
    Cyclotomic z(order);
    long e = k % static_cast<long>(order);
    if (e < 0) e += order;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly.back() = 1;
    z.reduce(poly);
    z.coeff_ = std::move(poly);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeff_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        if (sgn(coeff_[i]) != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw InvalidInputError("cyclotomic value is not rational: " + str());
    return coeff_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_) throw InvalidInputError("cyclotomic order mismatch");
    Cyclotomic r = *this;
    for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) throw InvalidInputError("cyclotomic order mismatch");
    std::vector<Rational> prod(2 * coeff_.size(), Rational(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (sgn(coeff_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.coeff_.size(); ++j)
            prod[i + j] += coeff_[i] * o.coeff_[j];
    }
    Cyclotomic r(order_);
    reduce(prod);
    r.coeff_ = std::move(prod);
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return order_ == o.order_ && coeff_ == o.coeff_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw NonUnitError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    const auto& phi_int = cyclotomic_polynomial(order_);
    Poly phi(phi_int.size());
    for (std::size_t i = 0; i < phi_int.size(); ++i) phi[i] = Rational(phi_int[i]);
    Poly a = coeff_;
    trim(a);
    Poly u, v;
    Poly g = poly_ext_gcd(a, phi, u, v);
    // Phi_m is irreducible over Q, so gcd(a, Phi_m) = 1 for nonzero a.
    Cyclotomic r(order_);
    u.resize(coeff_.size() * 2, Rational(0));
    reduce(u);
    r.coeff_ = std::move(u);
    return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Cyclotomic acc(order_, Rational(1));
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (sgn(coeff_[i]) == 0) continue;
        if (!first) os << " + ";
        os << coeff_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace cotwist
