#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cotwist/rational.hpp"

namespace cotwist {

/// Incremental row echelon over F_2 with bitset rows. Built for the cocycle
/// constraint systems, where millions of 4-term equations reduce against at
/// most a few thousand pivots.
class F2Echelon {
public:
    explicit F2Echelon(std::size_t cols);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    bool consistent() const { return consistent_; }

    /// Reduces the row and inserts it if independent. Returns true if the
    /// rank grew. An inconsistent reduced row (0 = 1) clears consistent().
    bool add_row(const std::vector<std::uint32_t>& support, bool rhs = false);

    /// Evaluates a sparse row against a candidate solution vector.
    static bool dot(const std::vector<std::uint64_t>& x, const std::vector<std::uint32_t>& support);

    /// Basis of the solution space of the homogeneous system (rhs ignored),
    /// one bitset per free column.
    std::vector<std::vector<std::uint64_t>> kernel_basis() const;

    /// Particular solution with all free variables zero, if consistent.
    std::optional<std::vector<std::uint64_t>> particular_solution() const;

    static bool get_bit(const std::vector<std::uint64_t>& bits, std::uint32_t i) {
        return (bits[i >> 6] >> (i & 63)) & 1;
    }

private:
    std::size_t cols_, words_;
    std::vector<std::vector<std::uint64_t>> rows_; // creation order
    std::vector<bool> rhs_;
    std::vector<std::uint32_t> pivot_of_row_;
    std::vector<std::int32_t> row_of_pivot_; // -1 if free
    bool consistent_ = true;

    void back_substitute(std::vector<std::uint64_t>& x, const std::vector<bool>* rhs) const;
};

/// Incremental row echelon over F_p (odd primes; p = 2 has the bitset path).
class FpEchelon {
public:
    FpEchelon(std::size_t cols, std::uint64_t p);

    std::size_t rank() const { return rows_.size(); }
    bool consistent() const { return consistent_; }
    bool add_row(std::vector<std::uint64_t> dense, std::uint64_t rhs = 0);
    bool add_row(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& sparse,
                 std::uint64_t rhs = 0);
    std::vector<std::vector<std::uint64_t>> kernel_basis() const;
    std::optional<std::vector<std::uint64_t>> particular_solution() const;

private:
    std::size_t cols_;
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::uint64_t> rhs_;
    std::vector<std::uint32_t> pivot_of_row_;
    std::vector<std::int32_t> row_of_pivot_;
    bool consistent_ = true;

    void reduce(std::vector<std::uint64_t>& row, std::uint64_t& rhs) const;
};

/// Sparse row of a linear system over Z/m.
struct ZmRow {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
    std::uint64_t rhs = 0;
};

/// Generators of {x : Ax = 0 over Z/m}; not necessarily a minimal set.
/// Prime-power moduli are handled by F_p lifting, composite m by CRT.
std::vector<std::vector<std::uint64_t>> zm_kernel(std::size_t cols, std::uint64_t m,
                                                  const std::vector<ZmRow>& rows);

/// One solution of Ax = b over Z/m, if any.
std::optional<std::vector<std::uint64_t>> zm_solve(std::size_t cols, std::uint64_t m,
                                                   const std::vector<ZmRow>& rows);

/// Elementary divisors (> 1, in divisibility order) of the cokernel of the
/// integer matrix with the given columns, i.e. of Z^n / <columns>.
/// Dense Smith normal form; small matrices only.
std::vector<BigInt> snf_cokernel_divisors(std::size_t n, std::vector<std::vector<BigInt>> columns);

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

} // namespace cotwist
