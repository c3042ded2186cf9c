#include "cotwist/perm.hpp"

#include <algorithm>
#include <sstream>

namespace cotwist {

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v]) throw InvalidInputError("not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(unsigned n) {
    std::vector<std::uint8_t> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(i);
    return Perm(std::move(v));
}

Perm Perm::transposition(unsigned n, unsigned i, unsigned j) {
    if (i >= n || j >= n || i == j) throw InvalidInputError("bad transposition");
    Perm p = identity(n);
    std::swap(p.img_[i], p.img_[j]);
    return p;
}

Perm Perm::simple(unsigned n, unsigned i) {
    if (i < 1 || i >= n) throw InvalidInputError("generator index out of range");
    return transposition(n, i - 1, i);
}

Perm Perm::operator*(const Perm& q) const {
    if (degree() != q.degree()) throw InvalidInputError("permutation degree mismatch");
    std::vector<std::uint8_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[q.img_[i]];
    Perm r;
    r.img_ = std::move(v);
    return r;
}

Perm Perm::inverse() const {
    std::vector<std::uint8_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint8_t>(i);
    Perm r;
    r.img_ = std::move(v);
    return r;
}

Perm Perm::conjugate(const Perm& q) const { return *this * q * inverse(); }

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

unsigned Perm::length() const {
    unsigned count = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

std::uint64_t Perm::key() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) k |= std::uint64_t(img_[i]) << (8 * i);
    return k;
}

std::string Perm::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ',';
        os << unsigned(img_[i]);
    }
    return os.str();
}

std::string Perm::cycle_str() const {
    std::ostringstream os;
    std::vector<bool> done(img_.size(), false);
    bool any = false;
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (done[start] || img_[start] == start) {
            done[start] = true;
            continue;
        }
        os << '(';
        std::size_t x = start;
        bool first = true;
        while (!done[x]) {
            if (!first) os << ' ';
            os << (x + 1);
            done[x] = true;
            x = img_[x];
            first = false;
        }
        os << ')';
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

std::vector<std::uint8_t> greedy_reduced_word(const Perm& p) {
    // At each step take the smallest i with a left descent, i.e.
    // l(s_i * q) = l(q) - 1, which holds iff q^{-1}(i-1) > q^{-1}(i).
    std::vector<std::uint8_t> word;
    Perm q = p;
    const unsigned n = p.degree();
    while (!q.is_identity()) {
        Perm qi = q.inverse();
        for (unsigned i = 1; i < n; ++i) {
            if (qi(static_cast<std::uint8_t>(i - 1)) > qi(static_cast<std::uint8_t>(i))) {
                word.push_back(static_cast<std::uint8_t>(i));
                q = Perm::simple(n, i) * q;
                break;
            }
        }
    }
    return word;
}

} // namespace cotwist
