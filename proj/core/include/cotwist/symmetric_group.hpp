#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "cotwist/finite_group.hpp"
#include "cotwist/perm.hpp"

namespace cotwist {

/// The conjugacy class X_n of all transpositions, ordered lexicographically
/// as pairs (i, j), i < j (0-based).
class TranspositionClass {
public:
    explicit TranspositionClass(unsigned n);

    unsigned n() const { return n_; }
    std::size_t size() const { return pairs_.size(); }
    std::pair<std::uint8_t, std::uint8_t> pair(std::size_t k) const { return pairs_[k]; }
    std::size_t index(unsigned i, unsigned j) const; // i != j, any order
    Perm perm(std::size_t k) const;
    /// Index of sigma (i j) sigma^{-1}.
    std::size_t conjugate(const Perm& sigma, std::size_t k) const;

private:
    unsigned n_;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs_;
    std::vector<std::size_t> lookup_; // n*n -> index
};

/// S_n with elements in lexicographic one-line order, inversion lengths, and
/// lex-min reduced words (BFS table, built eagerly, cross-checked against the
/// greedy descent oracle elsewhere).
class SymmetricGroup {
public:
    explicit SymmetricGroup(unsigned n);

    static std::shared_ptr<const SymmetricGroup> get(unsigned n); // cached

    unsigned n() const { return n_; }
    std::uint32_t order() const { return static_cast<std::uint32_t>(elems_.size()); }
    const Perm& perm(std::uint32_t i) const { return elems_[i]; }
    std::uint32_t index(const Perm& p) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t identity_index() const { return id_index_; }
    unsigned length(std::uint32_t i) const { return lengths_[i]; }
    /// Lex-min reduced word, 1-based generator indices.
    const std::vector<std::uint8_t>& reduced_word(std::uint32_t i) const { return words_[i]; }

    /// Multiplication-table view (memoised; order <= 5040).
    GroupPtr finite_group() const;

private:
    unsigned n_;
    std::vector<Perm> elems_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<unsigned> lengths_;
    std::vector<std::vector<std::uint8_t>> words_;
    std::uint32_t id_index_ = 0;
    mutable GroupPtr table_;

    void build_words();
};

using SymPtr = std::shared_ptr<const SymmetricGroup>;

} // namespace cotwist
