#include "cotwist/cohomology.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <tuple>

#include "cotwist/modm.hpp"

namespace cotwist {

namespace {

using Index = FiniteGroup::Index;

// Unknown layout for normalized tables: mu(g,h) with g,h != 1 flattened to
// (g'-index)*(n-1) + (h'-index).
struct UnknownMap {
    std::vector<std::int64_t> of_pair; // n*n -> unknown or -1
    std::size_t count = 0;

    explicit UnknownMap(const FiniteGroup& G) {
        const Index n = G.order();
        of_pair.assign(std::size_t(n) * n, -1);
        for (Index g = 0; g < n; ++g)
            for (Index h = 0; h < n; ++h)
                if (g != G.identity() && h != G.identity())
                    of_pair[std::size_t(g) * n + h] = std::int64_t(count++);
    }
    std::int64_t operator()(Index g, Index h, Index n) const {
        return of_pair[std::size_t(g) * n + h];
    }
};

// Support (with multiplicity cancelled mod 2) of the cocycle equation at
// (g,h,k): mu(g,h) + mu(gh,k) - mu(g,hk) - mu(h,k) = 0.
void equation_support(const FiniteGroup& G, const UnknownMap& um, Index g, Index h, Index k,
                      std::vector<std::uint32_t>& out) {
    out.clear();
    const Index n = G.order();
    auto push = [&](Index a, Index b) {
        const auto u = um(a, b, n);
        if (u >= 0) out.push_back(std::uint32_t(u));
    };
    push(g, h);
    push(G.mul(g, h), k);
    push(g, G.mul(h, k));
    push(h, k);
    std::sort(out.begin(), out.end());
    // cancel duplicate pairs (coefficients +1,-1 collapse mod 2; for general
    // m the caller builds signed rows instead)
    std::vector<std::uint32_t> dedup;
    for (std::size_t i = 0; i < out.size();) {
        if (i + 1 < out.size() && out[i] == out[i + 1]) {
            i += 2;
            continue;
        }
        dedup.push_back(out[i]);
        ++i;
    }
    out = std::move(dedup);
}

std::size_t coboundary_rank_f2(const FiniteGroup& G, const UnknownMap& um) {
    const Index n = G.order();
    F2Echelon ech(um.count);
    std::vector<std::uint32_t> support;
    for (Index a = 0; a < n; ++a) {
        if (a == G.identity()) continue;
        // d(indicator_a): entries phi(g)+phi(h)-phi(gh) with phi = e_a
        support.clear();
        for (Index g = 0; g < n; ++g)
            for (Index h = 0; h < n; ++h) {
                const auto u = um(g, h, n);
                if (u < 0) continue;
                unsigned c = (g == a) + (h == a) + (G.mul(g, h) == a ? 1u : 0u);
                if (c & 1) support.push_back(std::uint32_t(u));
            }
        ech.add_row(support);
    }
    return ech.rank();
}

std::vector<unsigned> h2_f2(const GroupPtr& group) {
    const FiniteGroup& G = *group;
    const Index n = G.order();
    const UnknownMap um(G);
    std::vector<Index> gs;
    for (Index g = 0; g < n; ++g)
        if (g != G.identity()) gs.push_back(g);

    F2Echelon ech(um.count);
    std::vector<std::uint32_t> support;

    // seed: all equations with k in a small prefix
    const std::size_t prefix = std::min<std::size_t>(gs.size(), 12);
    for (Index g : gs)
        for (Index h : gs)
            for (std::size_t t = 0; t < prefix; ++t) {
                equation_support(G, um, g, h, gs[t], support);
                if (!support.empty()) ech.add_row(support);
            }

    // verify against all equations; feed back violations until stable
    for (;;) {
        auto kernel = ech.kernel_basis();
        const unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::vector<std::tuple<Index, Index, Index>>> violated(nthreads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                std::vector<std::uint32_t> sup;
                for (std::size_t gi = t; gi < gs.size(); gi += nthreads) {
                    const Index g = gs[gi];
                    for (Index h : gs)
                        for (Index k : gs) {
                            equation_support(G, um, g, h, k, sup);
                            if (sup.empty()) continue;
                            for (const auto& v : kernel)
                                if (F2Echelon::dot(v, sup)) {
                                    violated[t].emplace_back(g, h, k);
                                    break;
                                }
                        }
                }
            });
        }
        for (auto& th : pool) th.join();
        std::size_t added = 0;
        for (const auto& vs : violated)
            for (const auto& [g, h, k] : vs) {
                equation_support(G, um, g, h, k, support);
                if (ech.add_row(support)) ++added;
            }
        if (added == 0) {
            const std::size_t zdim = um.count - ech.rank();
            const std::size_t bdim = coboundary_rank_f2(G, um);
            return std::vector<unsigned>(zdim - bdim, 2u);
        }
    }
}

std::vector<unsigned> h2_general(const GroupPtr& group, unsigned m) {
    const FiniteGroup& G = *group;
    const Index n = G.order();
    if (std::size_t(n) > 48)
        throw BudgetError("h2_structure: resource limit exceeded for |G| > 48 with m != 2");
    const UnknownMap um(G);
    std::vector<ZmRow> rows;
    for (Index g = 0; g < n; ++g)
        for (Index h = 0; h < n; ++h)
            for (Index k = 0; k < n; ++k) {
                ZmRow row;
                auto push = [&](Index a, Index b, std::uint64_t c) {
                    const auto u = um(a, b, n);
                    if (u >= 0) row.terms.emplace_back(std::uint32_t(u), c);
                };
                push(g, h, 1);
                push(G.mul(g, h), k, 1);
                push(g, G.mul(h, k), m - 1);
                push(h, k, m - 1);
                if (!row.terms.empty()) rows.push_back(std::move(row));
            }
    auto K = zm_kernel(um.count, m, rows); // generators of Z^2
    // coboundary generators in unknown coordinates
    std::vector<std::vector<std::uint64_t>> D;
    for (Index a = 0; a < n; ++a) {
        if (a == G.identity()) continue;
        std::vector<std::uint64_t> d(um.count, 0);
        for (Index g = 0; g < n; ++g)
            for (Index h = 0; h < n; ++h) {
                const auto u = um(g, h, n);
                if (u < 0) continue;
                std::uint64_t v = 0;
                if (g == a) v += 1;
                if (h == a) v += 1;
                if (G.mul(g, h) == a) v += m - 1;
                d[std::size_t(u)] = v % m;
            }
        D.push_back(std::move(d));
    }
    // express D in the K generators: K x = d (mod m), and the relation
    // module of K; quotient = coker_Z [X | R | mI]
    const std::size_t s = K.size();
    std::vector<ZmRow> ksys; // rows indexed by unknowns, cols by generators
    for (std::size_t u = 0; u < um.count; ++u) {
        ZmRow row;
        for (std::size_t j = 0; j < s; ++j)
            if (K[j][u]) row.terms.emplace_back(std::uint32_t(j), K[j][u]);
        ksys.push_back(std::move(row));
    }
    std::vector<std::vector<BigInt>> cols;
    for (const auto& d : D) {
        auto sys = ksys;
        for (std::size_t u = 0; u < um.count; ++u) sys[u].rhs = d[u];
        auto x = zm_solve(s, m, sys);
        if (!x) throw InternalError("coboundary not inside Z^2");
        std::vector<BigInt> c(s);
        for (std::size_t j = 0; j < s; ++j) c[j] = BigInt(long((*x)[j]));
        cols.push_back(std::move(c));
    }
    for (const auto& r : zm_kernel(s, m, ksys)) {
        std::vector<BigInt> c(s);
        for (std::size_t j = 0; j < s; ++j) c[j] = BigInt(long(r[j]));
        cols.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<BigInt> c(s, BigInt(0));
        c[j] = BigInt(long(m));
        cols.push_back(std::move(c));
    }
    auto divisors = snf_cokernel_divisors(s, std::move(cols));
    std::vector<unsigned> out;
    for (const auto& d : divisors) out.push_back(unsigned(d.get_ui()));
    return out;
}

} // namespace

std::vector<unsigned> h2_structure(const GroupPtr& group, unsigned m) {
    if (m == 0) throw InvalidInputError("coefficient modulus must be positive");
    if (m == 1 || group->order() == 1) return {};
    if (group->order() > 120) throw BudgetError("h2_structure: desk scale is |G| <= 120");
    if (m == 2) return h2_f2(group);
    return h2_general(group, m);
}

std::vector<unsigned> schur_multiplier_abelian(const GroupPtr& group, unsigned p) {
    const FiniteGroup& G = *group;
    const Index n = G.order();
    if (!G.is_abelian()) throw InvalidInputError("schur_multiplier_abelian: group is not abelian");
    for (Index g = 0; g < n; ++g)
        if (g != G.identity() && G.element_order(g) != p)
            throw InvalidInputError("schur_multiplier_abelian: not elementary abelian of exponent " +
                                    std::to_string(p));
    // dimension k from |G| = p^k
    unsigned k = 0;
    std::size_t pw = 1;
    while (pw < n) {
        pw *= p;
        ++k;
    }
    if (pw != n) throw InvalidInputError("schur_multiplier_abelian: order is not a power of p");

    // F_p coordinates via a greedy basis: rebuild the span map each time a
    // new independent generator is found
    std::map<Index, std::vector<std::uint64_t>> coords{{G.identity(), {}}};
    for (Index g = 0; g < n; ++g) {
        if (coords.count(g)) continue;
        std::map<Index, std::vector<std::uint64_t>> next;
        for (const auto& [x, c] : coords) {
            Index y = x;
            for (unsigned e = 0; e < p; ++e) {
                auto c2 = c;
                c2.push_back(e);
                next.emplace(y, std::move(c2));
                y = G.mul(y, g);
            }
        }
        coords = std::move(next);
    }

    // bicharacters modulo symmetric: k^2 - dim span{v (x) v}
    FpEchelon ech(std::size_t(k) * k, p);
    for (Index g = 0; g < n; ++g) {
        const auto& v = coords.at(g);
        std::vector<std::uint64_t> row(std::size_t(k) * k, 0);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) row[std::size_t(i) * k + j] = (v[i] * v[j]) % p;
        ech.add_row(std::move(row));
    }
    const std::size_t dim = std::size_t(k) * k - ech.rank();
    return std::vector<unsigned>(dim, p);
}

} // namespace cotwist
