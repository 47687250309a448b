#pragma once

#include "kron/ints.hpp"

#include <optional>
#include <vector>

namespace kron {

/// Dense exact integer matrix, row major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Exact rank by fraction-free (Bareiss) elimination.
int rank_exact(IntMatrix m);

/// Rank modulo several random 31-bit primes; all must agree, otherwise falls
/// back to the exact path. Seeded deterministically from the matrix shape.
int rank_modular(const IntMatrix& m, int num_primes = 3);

/// Primitive integer basis of the right kernel {v : M v = 0}. Vectors are
/// gcd-normalized with a positive leading entry. `pivot_order`, when given,
/// permutes the column elimination order (the spanned kernel is unchanged).
std::vector<std::vector<Int>> kernel_exact(const IntMatrix& m,
                                           const std::vector<int>* pivot_order = nullptr);

/// Exact solve A x = b for several right-hand sides at once.
/// Returns one rational solution per column of `rhs`, or nullopt where the
/// system is inconsistent.
std::vector<std::optional<std::vector<Rat>>> solve_exact(const IntMatrix& a,
                                                         const std::vector<std::vector<Int>>& rhs);

/// Rank of a rational matrix given as integer columns with separate
/// denominators; equals the rank of the integerized matrix.
int rank_exact_columns(const std::vector<std::vector<Int>>& columns);

}  // namespace kron
