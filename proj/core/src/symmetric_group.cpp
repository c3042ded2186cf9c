#include "cotwist/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cotwist {

TranspositionClass::TranspositionClass(unsigned n) : n_(n), lookup_(std::size_t(n) * n, SIZE_MAX) {
    if (n < 2) throw InvalidInputError("transposition class needs n >= 2");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            lookup_[std::size_t(i) * n + j] = pairs_.size();
            lookup_[std::size_t(j) * n + i] = pairs_.size();
            pairs_.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
        }
}

std::size_t TranspositionClass::index(unsigned i, unsigned j) const {
    if (i >= n_ || j >= n_ || i == j) throw InvalidInputError("bad transposition pair");
    return lookup_[std::size_t(i) * n_ + j];
}

Perm TranspositionClass::perm(std::size_t k) const {
    return Perm::transposition(n_, pairs_[k].first, pairs_[k].second);
}

std::size_t TranspositionClass::conjugate(const Perm& sigma, std::size_t k) const {
    return index(sigma(pairs_[k].first), sigma(pairs_[k].second));
}

SymmetricGroup::SymmetricGroup(unsigned n) : n_(n) {
    if (n < 1 || n > 7) throw BudgetError("symmetric group supported for 1 <= n <= 7");
    std::vector<std::uint8_t> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(i);
    do {
        elems_.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    // next_permutation from sorted start yields lex order
    index_.reserve(elems_.size() * 2);
    for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i].key(), i);
    id_index_ = index(Perm::identity(n));
    lengths_.resize(elems_.size());
    for (std::uint32_t i = 0; i < elems_.size(); ++i) lengths_[i] = elems_[i].length();
    build_words();
}

std::uint32_t SymmetricGroup::index(const Perm& p) const {
    auto it = index_.find(p.key());
    if (it == index_.end()) throw InvalidInputError("permutation degree mismatch");
    return it->second;
}

std::uint32_t SymmetricGroup::mul(std::uint32_t a, std::uint32_t b) const {
    return index(elems_[a] * elems_[b]);
}

std::uint32_t SymmetricGroup::inv(std::uint32_t a) const { return index(elems_[a].inverse()); }

void SymmetricGroup::build_words() {
    // Lex-min reduced word of q = min over predecessors p (with a length
    // drop) of word(p) + [i]; BFS by length makes predecessors final.
    const std::uint32_t N = order();
    words_.assign(N, {});
    std::vector<bool> assigned(N, false);
    assigned[id_index_] = true;
    std::vector<std::uint32_t> layer{id_index_};
    while (!layer.empty()) {
        std::vector<std::uint32_t> next;
        std::map<std::uint32_t, std::vector<std::uint8_t>> best;
        for (std::uint32_t pi : layer) {
            for (unsigned i = 1; i < n_; ++i) {
                const Perm q = elems_[pi] * Perm::simple(n_, i);
                const std::uint32_t qi = index(q);
                if (assigned[qi] || lengths_[qi] != lengths_[pi] + 1) continue;
                std::vector<std::uint8_t> w = words_[pi];
                w.push_back(static_cast<std::uint8_t>(i));
                auto it = best.find(qi);
                if (it == best.end() || w < it->second) best[qi] = std::move(w);
            }
        }
        for (auto& [qi, w] : best) {
            words_[qi] = std::move(w);
            assigned[qi] = true;
            next.push_back(qi);
        }
        layer = std::move(next);
    }
}

GroupPtr SymmetricGroup::finite_group() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (table_) return table_;
    const std::uint32_t N = order();
    std::vector<std::string> labels(N);
    std::vector<FiniteGroup::Index> table(std::size_t(N) * N);
    for (std::uint32_t i = 0; i < N; ++i) labels[i] = elems_[i].cycle_str();
    for (std::uint32_t a = 0; a < N; ++a)
        for (std::uint32_t b = 0; b < N; ++b) table[std::size_t(a) * N + b] = mul(a, b);
    table_ = std::make_shared<FiniteGroup>("S" + std::to_string(n_), std::move(labels),
                                           std::move(table));
    return table_;
}

std::shared_ptr<const SymmetricGroup> SymmetricGroup::get(unsigned n) {
    static std::map<unsigned, std::shared_ptr<const SymmetricGroup>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<SymmetricGroup>(n);
    return slot;
}

} // namespace cotwist
