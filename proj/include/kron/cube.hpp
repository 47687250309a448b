#pragma once

#include "kron/ints.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kron {

/// Thrown when an enumeration or kernel computation exceeds its size budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The cube [k]^d. Cells are identified with their mixed-radix lexicographic
/// rank in [0, k^d): rank(x) = sum (x_i - 1) k^{d-i}, so rank order == lex order.
struct Cube {
    int d = 0;
    int k = 0;

    Cube() = default;
    Cube(int d_, int k_);

    long long num_cells() const { return ncells_; }
    bool has_mask() const { return ncells_ <= 64; }

    uint32_t rank(const std::vector<int>& coords) const;
    std::vector<int> coords(uint32_t rank) const;
    /// 1-based coordinate in direction dir (1..d) of the given cell.
    int coord(uint32_t rank, int dir) const;

    bool operator==(const Cube&) const = default;

private:
    long long ncells_ = 0;
};

/// Per-direction slice-count vectors s_l(X).
struct Marginals {
    std::vector<std::vector<int>> s;  // s[l-1][i-1] = #cells with coordinate l equal to i

    bool all_equal(int n) const;
    bool operator==(const Marginals&) const = default;
};

/// Sorted subset of the cube, the index X of a basis vector e_X.
struct CubeSet {
    Cube cube;
    std::vector<uint32_t> cells;  // strictly increasing ranks

    CubeSet() = default;
    CubeSet(Cube c, std::vector<uint32_t> cells_sorted);

    int cardinality() const { return static_cast<int>(cells.size()); }
    uint64_t mask() const;  // requires cube.has_mask()
    CubeSet complement() const;

    bool operator==(const CubeSet&) const = default;
    auto operator<=>(const CubeSet&) const = default;

    /// Digit-string text form "111,222"; requires k <= 9.
    std::string to_string() const;
    static CubeSet parse(const Cube& cube, const std::string& text);
};

Marginals marginals(const CubeSet& X);
bool is_magic(const CubeSet& X, int* magnitude = nullptr);

/// Full cube [k]^d as a CubeSet.
CubeSet full_cube(const Cube& cube);

/// All cardinality-m subsets with the given marginals, in lexicographic order
/// of their cell-rank sequences. target[l-1] is a length-k vector; its sums
/// must agree across directions. Throws BudgetError past `budget` results.
std::vector<CubeSet> enumerate_with_marginals(const Cube& cube,
                                              const std::vector<std::vector<int>>& target,
                                              long long budget = -1);

/// B_{d,k}(n): all magic sets of magnitude n, canonical (lex) order.
std::vector<CubeSet> enumerate_magic_sets(int d, int k, int n, long long budget = -1);

/// Count of B_{d,k}(n) without materializing.
Int count_magic_sets(int d, int k, int n);

/// Direct sum of magic sets of a common magnitude, in [k1+k2]^d.
CubeSet direct_sum(const CubeSet& t1, const CubeSet& t2);

}  // namespace kron
