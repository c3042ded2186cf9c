#include "cotwist/modm.hpp"

#include <algorithm>
#include <bit>

#include "cotwist/errors.hpp"

namespace cotwist {

// ---------------------------------------------------------------- F2Echelon

F2Echelon::F2Echelon(std::size_t cols)
    : cols_(cols), words_((cols + 63) / 64), row_of_pivot_(cols, -1) {}

bool F2Echelon::add_row(const std::vector<std::uint32_t>& support, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (auto c : support) row[c >> 6] ^= 1ull << (c & 63);
    bool b = rhs;
    // reduce against existing pivots, lowest set bit first
    for (std::size_t w = 0; w < words_; ++w) {
        while (row[w]) {
            const std::uint32_t c = std::uint32_t(w * 64 + std::countr_zero(row[w]));
            const std::int32_t r = row_of_pivot_[c];
            if (r < 0) {
                // new pivot
                pivot_of_row_.push_back(c);
                row_of_pivot_[c] = std::int32_t(rows_.size());
                rows_.push_back(std::move(row));
                rhs_.push_back(b);
                return true;
            }
            const auto& er = rows_[std::size_t(r)];
            for (std::size_t k = w; k < words_; ++k) row[k] ^= er[k];
            b ^= rhs_[std::size_t(r)];
        }
    }
    if (b) consistent_ = false;
    return false;
}

bool F2Echelon::dot(const std::vector<std::uint64_t>& x, const std::vector<std::uint32_t>& support) {
    bool b = false;
    for (auto c : support) b ^= get_bit(x, c);
    return b;
}

void F2Echelon::back_substitute(std::vector<std::uint64_t>& x, const std::vector<bool>* rhs) const {
    // rows in reverse creation order: each row's pivot depends only on later
    // pivots and free columns
    for (std::size_t t = rows_.size(); t-- > 0;) {
        const auto& row = rows_[t];
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_; ++w) acc ^= row[w] & x[w];
        bool bit = std::popcount(acc) & 1;
        if (rhs && (*rhs)[t]) bit = !bit;
        if (bit) {
            const std::uint32_t p = pivot_of_row_[t];
            x[p >> 6] ^= 1ull << (p & 63);
        }
    }
}

std::vector<std::vector<std::uint64_t>> F2Echelon::kernel_basis() const {
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::uint32_t f = 0; f < cols_; ++f) {
        if (row_of_pivot_[f] >= 0) continue;
        std::vector<std::uint64_t> x(words_, 0);
        x[f >> 6] |= 1ull << (f & 63);
        back_substitute(x, nullptr);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<std::uint64_t>> F2Echelon::particular_solution() const {
    if (!consistent_) return std::nullopt;
    std::vector<std::uint64_t> x(words_, 0);
    back_substitute(x, &rhs_);
    return x;
}

// ---------------------------------------------------------------- FpEchelon

FpEchelon::FpEchelon(std::size_t cols, std::uint64_t p)
    : cols_(cols), p_(p), row_of_pivot_(cols, -1) {}

namespace {
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (__uint128_t(r) * b) % m;
        b = (__uint128_t(b) * b) % m;
        e >>= 1;
    }
    return r;
}
std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// extended gcd for CRT over machine ints
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}
} // namespace

void FpEchelon::reduce(std::vector<std::uint64_t>& row, std::uint64_t& rhs) const {
    for (std::uint32_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        const std::int32_t r = row_of_pivot_[c];
        if (r < 0) continue;
        const std::uint64_t f = row[c]; // pivot rows are normalized to 1
        const auto& er = rows_[std::size_t(r)];
        for (std::uint32_t k = c; k < cols_; ++k)
            if (er[k]) row[k] = (row[k] + (p_ - f) % p_ * er[k]) % p_;
        rhs = (rhs + (p_ - f) % p_ * rhs_[std::size_t(r)]) % p_;
    }
}

bool FpEchelon::add_row(std::vector<std::uint64_t> dense, std::uint64_t rhs) {
    for (auto& v : dense) v %= p_;
    rhs %= p_;
    reduce(dense, rhs);
    for (std::uint32_t c = 0; c < cols_; ++c) {
        if (dense[c] == 0) continue;
        const std::uint64_t inv = inv_mod_prime(dense[c], p_);
        for (std::uint32_t k = c; k < cols_; ++k)
            dense[k] = (__uint128_t(dense[k]) * inv) % p_;
        rhs = (__uint128_t(rhs) * inv) % p_;
        pivot_of_row_.push_back(c);
        row_of_pivot_[c] = std::int32_t(rows_.size());
        rows_.push_back(std::move(dense));
        rhs_.push_back(rhs);
        return true;
    }
    if (rhs != 0) consistent_ = false;
    return false;
}

bool FpEchelon::add_row(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& sparse,
                        std::uint64_t rhs) {
    std::vector<std::uint64_t> dense(cols_, 0);
    for (auto& [c, v] : sparse) dense[c] = (dense[c] + v) % p_;
    return add_row(std::move(dense), rhs);
}

std::vector<std::vector<std::uint64_t>> FpEchelon::kernel_basis() const {
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::uint32_t f = 0; f < cols_; ++f) {
        if (row_of_pivot_[f] >= 0) continue;
        std::vector<std::uint64_t> x(cols_, 0);
        x[f] = 1;
        for (std::size_t t = rows_.size(); t-- > 0;) {
            const auto& row = rows_[t];
            __uint128_t acc = 0;
            for (std::uint32_t k = 0; k < cols_; ++k)
                if (row[k] && x[k]) acc += __uint128_t(row[k]) * x[k];
            std::uint64_t v = std::uint64_t(acc % p_);
            if (v) x[pivot_of_row_[t]] = p_ - v;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<std::uint64_t>> FpEchelon::particular_solution() const {
    if (!consistent_) return std::nullopt;
    std::vector<std::uint64_t> x(cols_, 0);
    for (std::size_t t = rows_.size(); t-- > 0;) {
        const auto& row = rows_[t];
        __uint128_t acc = 0;
        for (std::uint32_t k = 0; k < cols_; ++k)
            if (row[k] && x[k]) acc += __uint128_t(row[k]) * x[k];
        std::uint64_t v = std::uint64_t(acc % p_);
        std::uint64_t want = rhs_[t];
        x[pivot_of_row_[t]] = (want + p_ - v) % p_;
    }
    return x;
}

// ----------------------------------------------------- prime power lifting

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, unsigned>> fs;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        fs.emplace_back(p, e);
    }
    if (m > 1) fs.emplace_back(m, 1);
    return fs;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Kernel generators of A x = 0 (mod p^e) via F_p lifting:
// x = B t + p y with B = ker mod p; then (AB/p) t + A y = 0 (mod p^{e-1}).
struct DenseSystem {
    std::size_t cols;
    std::vector<std::vector<std::int64_t>> rows; // integer representatives
};

std::vector<std::vector<std::uint64_t>> fp_kernel(const DenseSystem& sys, std::uint64_t p) {
    FpEchelon ech(sys.cols, p);
    for (const auto& r : sys.rows) {
        std::vector<std::uint64_t> row(sys.cols);
        for (std::size_t i = 0; i < sys.cols; ++i) {
            std::int64_t v = r[i] % std::int64_t(p);
            if (v < 0) v += p;
            row[i] = std::uint64_t(v);
        }
        ech.add_row(std::move(row));
    }
    return ech.kernel_basis();
}

std::vector<std::vector<std::uint64_t>> ppow_kernel(const DenseSystem& sys, std::uint64_t p,
                                                    unsigned e) {
    const std::uint64_t q = ipow(p, e);
    auto B = fp_kernel(sys, p); // columns: basis over F_p
    if (e == 1) return B;
    const std::size_t nb = B.size(), n = sys.cols;
    // stacked system for (t, y): C t + A y = 0 mod p^{e-1}, C = A*B/p
    DenseSystem nxt;
    nxt.cols = nb + n;
    for (const auto& r : sys.rows) {
        std::vector<std::int64_t> row(nb + n, 0);
        for (std::size_t j = 0; j < nb; ++j) {
            __int128 acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (B[j][i]) acc += __int128(r[i]) * std::int64_t(B[j][i]);
            std::int64_t v = std::int64_t(acc % __int128(q));
            // divisible by p by construction of B
            row[j] = v / std::int64_t(p);
        }
        for (std::size_t i = 0; i < n; ++i) row[nb + i] = r[i];
        nxt.rows.push_back(std::move(row));
    }
    auto sub = ppow_kernel(nxt, p, e - 1);
    // x = B t + p y  (mod p^e)
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& s : sub) {
        std::vector<std::uint64_t> x(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            __uint128_t acc = std::uint64_t(p) * __uint128_t(s[nb + i] % q);
            for (std::size_t j = 0; j < nb; ++j)
                if (s[j] && B[j][i]) acc += __uint128_t(s[j]) * B[j][i];
            x[i] = std::uint64_t(acc % q);
        }
        if (std::any_of(x.begin(), x.end(), [](std::uint64_t v) { return v != 0; }))
            out.push_back(std::move(x));
    }
    // torsion generators p^{e-1} * B as well
    for (const auto& b : B) {
        std::vector<std::uint64_t> x(n, 0);
        for (std::size_t i = 0; i < n; ++i) x[i] = (__uint128_t(b[i]) * (q / p)) % q;
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<std::vector<std::uint64_t>> ppow_solve(const DenseSystem& sys,
                                                     const std::vector<std::int64_t>& rhs,
                                                     std::uint64_t p, unsigned e) {
    const std::uint64_t q = ipow(p, e);
    FpEchelon ech(sys.cols, p);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        std::vector<std::uint64_t> row(sys.cols);
        for (std::size_t i = 0; i < sys.cols; ++i) {
            std::int64_t v = sys.rows[r][i] % std::int64_t(p);
            if (v < 0) v += p;
            row[i] = std::uint64_t(v);
        }
        std::int64_t b = rhs[r] % std::int64_t(p);
        if (b < 0) b += p;
        ech.add_row(std::move(row), std::uint64_t(b));
    }
    auto x0 = ech.particular_solution();
    if (!x0) return std::nullopt;
    if (e == 1) return x0;
    // A(x0 + p y) = b mod p^e  =>  A y = (b - A x0)/p mod p^{e-1}
    std::vector<std::int64_t> rhs2(sys.rows.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        __int128 acc = rhs[r];
        for (std::size_t i = 0; i < sys.cols; ++i)
            if ((*x0)[i]) acc -= __int128(sys.rows[r][i]) * std::int64_t((*x0)[i]);
        std::int64_t v = std::int64_t(((acc % __int128(q)) + __int128(q)) % __int128(q));
        // divisible by p since A x0 = b (mod p)
        rhs2[r] = v / std::int64_t(p);
    }
    auto y = ppow_solve(sys, rhs2, p, e - 1);
    if (!y) return std::nullopt;
    std::vector<std::uint64_t> x(sys.cols);
    for (std::size_t i = 0; i < sys.cols; ++i)
        x[i] = ((*x0)[i] + p * ((*y)[i] % (q / p))) % q;
    return x;
}

DenseSystem densify(std::size_t cols, const std::vector<ZmRow>& rows, std::uint64_t m,
                    std::vector<std::int64_t>* rhs_out) {
    DenseSystem sys;
    sys.cols = cols;
    for (const auto& r : rows) {
        std::vector<std::int64_t> d(cols, 0);
        for (auto& [c, v] : r.terms) d[c] = std::int64_t((d[c] + v) % m);
        sys.rows.push_back(std::move(d));
        if (rhs_out) rhs_out->push_back(std::int64_t(r.rhs % m));
    }
    return sys;
}

} // namespace

std::vector<std::vector<std::uint64_t>> zm_kernel(std::size_t cols, std::uint64_t m,
                                                  const std::vector<ZmRow>& rows) {
    auto fs = factorize(m);
    DenseSystem sys = densify(cols, rows, m, nullptr);
    if (fs.size() == 1)
        return ppow_kernel(sys, fs[0].first, fs[0].second);
    // CRT: generators of the p-part, extended by zero elsewhere
    std::vector<std::vector<std::uint64_t>> out;
    for (auto [p, e] : fs) {
        const std::uint64_t q = ipow(p, e);
        const std::uint64_t rest = m / q;
        // c = rest * (rest^{-1} mod q): 1 mod q, 0 mod rest
        std::int64_t x, y;
        ext_gcd(std::int64_t(rest % q), std::int64_t(q), x, y);
        std::int64_t inv = ((x % std::int64_t(q)) + std::int64_t(q)) % std::int64_t(q);
        const std::uint64_t crt = (__uint128_t(rest) * std::uint64_t(inv)) % m;
        for (auto& g : ppow_kernel(sys, p, e)) {
            std::vector<std::uint64_t> v(cols);
            for (std::size_t i = 0; i < cols; ++i) v[i] = (__uint128_t(g[i]) * crt) % m;
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::optional<std::vector<std::uint64_t>> zm_solve(std::size_t cols, std::uint64_t m,
                                                   const std::vector<ZmRow>& rows) {
    auto fs = factorize(m);
    std::vector<std::int64_t> rhs;
    DenseSystem sys = densify(cols, rows, m, &rhs);
    std::vector<std::uint64_t> x(cols, 0);
    for (auto [p, e] : fs) {
        auto xp = ppow_solve(sys, rhs, p, e);
        if (!xp) return std::nullopt;
        const std::uint64_t q = ipow(p, e);
        const std::uint64_t rest = m / q;
        std::int64_t u, v;
        ext_gcd(std::int64_t(rest % q), std::int64_t(q), u, v);
        std::int64_t inv = ((u % std::int64_t(q)) + std::int64_t(q)) % std::int64_t(q);
        const std::uint64_t crt = (__uint128_t(rest) * std::uint64_t(inv)) % m;
        for (std::size_t i = 0; i < cols; ++i)
            x[i] = (x[i] + (__uint128_t((*xp)[i]) * crt) % m) % m;
    }
    return x;
}

// -------------------------------------------------------------- Smith form

std::vector<BigInt> snf_cokernel_divisors(std::size_t n, std::vector<std::vector<BigInt>> cols) {
    // dense SNF on the n x k matrix whose columns generate the subgroup
    const std::size_t k = cols.size();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(k, BigInt(0)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n && i < cols[j].size(); ++i) a[i][j] = cols[j][i];

    std::vector<BigInt> divisors;
    std::size_t top = 0;
    while (top < n && top < k) {
        // find smallest nonzero |entry| in the remaining block
        std::size_t pi = SIZE_MAX, pj = SIZE_MAX;
        BigInt best;
        for (std::size_t i = top; i < n; ++i)
            for (std::size_t j = top; j < k; ++j)
                if (a[i][j] != 0 && (pi == SIZE_MAX || abs(a[i][j]) < abs(best))) {
                    best = a[i][j];
                    pi = i;
                    pj = j;
                }
        if (pi == SIZE_MAX) break;
        std::swap(a[top], a[pi]);
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i][top], a[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < n; ++i) {
                if (a[i][top] == 0) continue;
                BigInt f = a[i][top] / a[top][top];
                for (std::size_t j = top; j < k; ++j) a[i][j] -= f * a[top][j];
                if (a[i][top] != 0) { // remainder smaller than pivot: swap up
                    std::swap(a[top], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = top + 1; j < k; ++j) {
                if (a[top][j] == 0) continue;
                BigInt f = a[top][j] / a[top][top];
                for (std::size_t i = 0; i < n; ++i) a[i][j] -= f * a[i][top];
                if (a[top][j] != 0) {
                    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][top], a[i][j]);
                    clean = false;
                }
            }
        }
        divisors.push_back(abs(a[top][top]));
        ++top;
    }
    // normalize divisibility chain d1 | d2 | ...
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            BigInt g = gcd(divisors[i], divisors[j]);
            BigInt l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    std::sort(divisors.begin(), divisors.end());
    std::vector<BigInt> out;
    for (auto& d : divisors)
        if (d > 1) out.push_back(d);
    return out;
}

} // namespace cotwist
