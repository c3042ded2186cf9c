#include "cotwist/finite_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cotwist/cocycle.hpp"
#include "cotwist/symmetric_group.hpp"

namespace cotwist {

FiniteGroup::FiniteGroup(std::string id, std::vector<std::string> labels,
                         std::vector<Index> table)
    : id_(std::move(id)), labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0 || table_.size() != n * n) throw InvalidInputError("bad multiplication table size");
    verify();
}

void FiniteGroup::verify() {
    const Index n = order();
    for (Index v : table_)
        if (v >= n) throw InvalidInputError("multiplication table entry out of range");

    // identity: two-sided
    bool found = false;
    for (Index e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Index g = 0; g < n; ++g)
            if (mul(e, g) != g || mul(g, e) != g) { ok = false; break; }
        if (ok) { identity_ = e; found = true; }
    }
    if (!found) throw InvalidInputError("group has no identity element");

    inverse_.assign(n, 0);
    for (Index g = 0; g < n; ++g) {
        bool has = false;
        for (Index h = 0; h < n; ++h)
            if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                inverse_[g] = h;
                has = true;
                break;
            }
        if (!has) throw InvalidInputError("group element without inverse: " + labels_[g]);
    }

    auto check = [&](Index a, Index b, Index c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InvalidInputError("associativity fails in " + id_);
    };
    if (n <= 256) {
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int t = 0; t < 2'000'000; ++t)
            check(Index(next() % n), Index(next() % n), Index(next() % n));
    }
}

unsigned FiniteGroup::element_order(Index a) const {
    unsigned k = 1;
    Index x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    const Index n = order();
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupPtr FiniteGroup::cyclic(unsigned m) {
    if (m == 0) throw InvalidInputError("cyclic group order must be positive");
    std::vector<std::string> labels(m);
    std::vector<Index> table(std::size_t(m) * m);
    for (unsigned i = 0; i < m; ++i) {
        labels[i] = i == 0 ? "1" : (i == 1 ? "z" : "z^" + std::to_string(i));
        for (unsigned j = 0; j < m; ++j) table[std::size_t(i) * m + j] = (i + j) % m;
    }
    return std::make_shared<FiniteGroup>("C" + std::to_string(m), std::move(labels),
                                         std::move(table));
}

GroupPtr FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const Index na = a.order(), nb = b.order();
    const std::size_t n = std::size_t(na) * nb;
    std::vector<std::string> labels(n);
    std::vector<Index> table(n * n);
    auto idx = [&](Index x, Index y) { return Index(x * nb + y); };
    for (Index x = 0; x < na; ++x)
        for (Index y = 0; y < nb; ++y)
            labels[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
    for (Index x1 = 0; x1 < na; ++x1)
        for (Index y1 = 0; y1 < nb; ++y1)
            for (Index x2 = 0; x2 < na; ++x2)
                for (Index y2 = 0; y2 < nb; ++y2)
                    table[std::size_t(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    return std::make_shared<FiniteGroup>(a.id() + "x" + b.id(), std::move(labels),
                                         std::move(table));
}

GroupPtr FiniteGroup::elementary_abelian(unsigned p, unsigned k) {
    GroupPtr g = cyclic(p);
    for (unsigned i = 1; i < k; ++i) g = direct_product(*g, *cyclic(p));
    auto labels = std::vector<std::string>();
    // rebuild with a compact id
    return std::make_shared<FiniteGroup>("C" + std::to_string(p) + "^" + std::to_string(k),
                                         std::vector<std::string>([&] {
                                             std::vector<std::string> ls;
                                             for (Index i = 0; i < g->order(); ++i)
                                                 ls.push_back(g->label(i));
                                             return ls;
                                         }()),
                                         g->table());
}

GroupPtr FiniteGroup::relabeled(const std::vector<Index>& perm, const std::string& new_id) const {
    const Index n = order();
    if (perm.size() != n) throw InvalidInputError("relabeling permutation size mismatch");
    std::vector<Index> where(n); // old index -> new index
    for (Index i = 0; i < n; ++i) where[perm[i]] = i;
    std::vector<std::string> labels(n);
    std::vector<Index> table(std::size_t(n) * n);
    for (Index i = 0; i < n; ++i) labels[i] = label(perm[i]);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            table[std::size_t(i) * n + j] = where[mul(perm[i], perm[j])];
    return std::make_shared<FiniteGroup>(new_id, std::move(labels), std::move(table));
}

GroupPtr central_extension(const GroupPtr& g, const ZmCocycle& mu) {
    auto diag = is_cocycle(mu);
    if (!diag.ok)
        throw InvalidInputError("central_extension: table fails the cocycle identity at (" +
                                g->label(diag.g) + "," + g->label(diag.h) + "," +
                                g->label(diag.k) + ")");
    const FiniteGroup::Index n = g->order();
    const unsigned m = mu.modulus();
    const std::size_t big = std::size_t(m) * n;
    std::vector<std::string> labels(big);
    std::vector<FiniteGroup::Index> table(big * big);
    auto idx = [&](unsigned a, FiniteGroup::Index x) { return FiniteGroup::Index(a * n + x); };
    for (unsigned a = 0; a < m; ++a)
        for (FiniteGroup::Index x = 0; x < n; ++x)
            labels[idx(a, x)] =
                (a == 0 ? "" : (a == 1 ? "z*" : "z^" + std::to_string(a) + "*")) + g->label(x);
    for (unsigned a = 0; a < m; ++a)
        for (FiniteGroup::Index x = 0; x < n; ++x)
            for (unsigned b = 0; b < m; ++b)
                for (FiniteGroup::Index y = 0; y < n; ++y)
                    table[std::size_t(idx(a, x)) * big + idx(b, y)] =
                        idx((a + b + mu.exponent(x, y)) % m, g->mul(x, y));
    return std::make_shared<FiniteGroup>("ext[" + g->id() + ",C" + std::to_string(m) + "]",
                                         std::move(labels), std::move(table));
}

} // namespace cotwist
