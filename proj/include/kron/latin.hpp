#pragma once

#include "kron/cube.hpp"
#include "kron/ints.hpp"

#include <functional>
#include <vector>

namespace kron {

/// Assignment of values [1..n] to the cells of a magic type T, bijective on
/// every slice. values[i] belongs to T.cells[i] (lex order).
struct PartialLatinHypercube {
    CubeSet type;
    std::vector<int> values;

    bool valid() const;
};

/// Signed count of partial Latin hypercubes; at = positive - negative.
struct SignedCount {
    Int positive = 0;
    Int negative = 0;
    Int at() const { return positive - negative; }
};

/// Sign of C: product over all dk slices of the sign of the S-permutation,
/// cells of each slice read in lexicographic order.
int latin_sign(const PartialLatinHypercube& C);

/// Every partial Latin hypercube of type T exactly once, cells filled in lex
/// order and values tried ascending. Returning false from the visitor stops.
void enumerate_latin(const CubeSet& T,
                     const std::function<bool(const PartialLatinHypercube&)>& visit);
std::vector<PartialLatinHypercube> enumerate_latin(const CubeSet& T, long long budget = -1);

/// Default cell budget for AT enumeration; larger types are refused.
inline constexpr int kAtCellBudget = 32;

/// AT(T), exact. Serial reference implementation.
SignedCount at_number_serial(const CubeSet& T, int cell_budget = kAtCellBudget);
/// AT(T), exact; OpenMP over the value branches of the first cells.
SignedCount at_number(const CubeSet& T, int cell_budget = kAtCellBudget);

/// AT_d(k) = AT([k]^d).
SignedCount at_full_cube(int d, int k, int cell_budget = kAtCellBudget);

}  // namespace kron
