#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cotwist/errors.hpp"

namespace cotwist {

/// Permutation of {0..n-1} in one-line notation: images[i] = image of i.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> images);
    static Perm identity(unsigned n);
    /// The transposition (i j), 0-based.
    static Perm transposition(unsigned n, unsigned i, unsigned j);
    /// Adjacent transposition s_i = (i-1, i) for 1-based generator index i.
    static Perm simple(unsigned n, unsigned i);

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    std::uint8_t operator()(std::uint8_t x) const { return img_[x]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    /// Composition: (p*q)(x) = p(q(x)).
    Perm operator*(const Perm& q) const;
    Perm inverse() const;
    /// p * q * p^{-1}.
    Perm conjugate(const Perm& q) const;

    bool is_identity() const;
    /// Number of inversions.
    unsigned length() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    /// Packs into one machine word; valid for degree <= 8.
    std::uint64_t key() const;
    /// One-line notation, e.g. "2,0,1".
    std::string str() const;
    /// Cycle notation with 1-based points, e.g. "(1 3)".
    std::string cycle_str() const;

private:
    std::vector<std::uint8_t> img_;
};

/// Lex-smallest reduced word in generators s_1..s_{n-1} (1-based indices),
/// computed by greedy left-descent. Used as the independent cross-check for
/// the BFS word table in SymmetricGroup.
std::vector<std::uint8_t> greedy_reduced_word(const Perm& p);

} // namespace cotwist
