#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cotwist/errors.hpp"

namespace cotwist {

class ZmCocycle;

/// A finite group as a multiplication table over a canonically ordered
/// element list. Group axioms are verified on construction: exhaustively for
/// order <= 256, by deterministic sampling above that.
class FiniteGroup {
public:
    using Index = std::uint32_t;

    FiniteGroup(std::string id, std::vector<std::string> labels,
                std::vector<Index> table);

    static std::shared_ptr<const FiniteGroup> cyclic(unsigned m);
    /// C_p^k with elements ordered as base-p digit vectors.
    static std::shared_ptr<const FiniteGroup> elementary_abelian(unsigned p, unsigned k);
    static std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a,
                                                             const FiniteGroup& b);
    /// Same group with elements listed in a new order; for relabeling
    /// invariance tests. perm[new_index] = old_index.
    std::shared_ptr<const FiniteGroup> relabeled(const std::vector<Index>& perm,
                                                 const std::string& new_id) const;

    const std::string& id() const { return id_; }
    Index order() const { return static_cast<Index>(labels_.size()); }
    Index identity() const { return identity_; }
    Index mul(Index a, Index b) const { return table_[std::size_t(a) * order() + b]; }
    Index inv(Index a) const { return inverse_[a]; }
    Index conj(Index a, Index b) const { return mul(mul(a, b), inv(a)); }
    const std::string& label(Index i) const { return labels_[i]; }
    const std::vector<Index>& table() const { return table_; }

    unsigned element_order(Index a) const;
    bool is_abelian() const;

private:
    std::string id_;
    std::vector<std::string> labels_;
    std::vector<Index> table_;
    std::vector<Index> inverse_;
    Index identity_ = 0;

    void verify();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// The group C_m x G with multiplication twisted by a verified cocycle:
/// (z^a, g) * (z^b, h) = (z^{a+b+mu(g,h)}, gh). Element (a, g) sits at index
/// a * |G| + g. Throws if mu fails the cocycle check.
GroupPtr central_extension(const GroupPtr& g, const ZmCocycle& mu);

} // namespace cotwist
