#pragma once

#include "kron/cube.hpp"
#include "kron/exterior.hpp"
#include "kron/linalg.hpp"
#include "kron/partition.hpp"

#include <map>
#include <vector>

namespace kron {

/// Enumerated basis {e_X} of one weight space, canonically ordered.
struct WeightSpaceBasis {
    Cube cube;
    std::vector<std::vector<int>> weight;  // per direction, length k
    std::vector<CubeSet> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    /// Index of a key in the basis list, -1 if absent.
    int index_of(const std::vector<uint32_t>& key) const;

private:
    mutable std::map<std::vector<uint32_t>, int> index_;
};

/// Exact basis of the highest weight vector subspace inside a weight space.
/// Vectors are primitive integer coordinate vectors over `ambient.basis`.
struct HwvBasis {
    WeightSpaceBasis ambient;
    std::vector<std::vector<Int>> vectors;

    int dim() const { return static_cast<int>(vectors.size()); }
    Multivector to_multivector(const std::vector<Int>& coords) const;
    Multivector to_multivector(int index) const { return to_multivector(vectors.at(index)); }
};

inline constexpr long long kDefaultWeightBudget = 200000;
/// Kernel computations refuse weight spaces above this size.
inline constexpr long long kDefaultKernelBudget = 3000;

WeightSpaceBasis enumerate_weight_basis(const Cube& cube,
                                        const std::vector<std::vector<int>>& weight,
                                        long long budget = kDefaultWeightBudget);

/// Matrix of the raising operator E_{i,i+1} in direction dir from `basis` to
/// the raised weight space; rows indexed by the returned target basis.
struct RaisingMatrix {
    WeightSpaceBasis target;
    IntMatrix matrix;
};
RaisingMatrix raising_matrix(const WeightSpaceBasis& basis, int dir, int i);

/// Weight of the HWV space attached to a Kronecker label: the tuple of
/// conjugate partitions, padded to length k. Validates parts <= k,
/// lengths <= k^{d-1}, equal sizes.
std::vector<std::vector<int>> hwv_weight(const PartitionTuple& lambda, int d, int k);

/// Exact HWV basis: joint kernel of all d(k-1) raising matrices on the
/// weight space of the conjugate weight. dim == g(lambda).
HwvBasis hwv_basis(const PartitionTuple& lambda, int d, int k,
                   long long kernel_budget = kDefaultKernelBudget);

/// g(lambda) via the HWV dimension; rank over random primes with exact
/// fallback, so cheaper than hwv_basis when only the dimension is needed.
Int kronecker_hwv(const PartitionTuple& lambda, int d, int k,
                  long long kernel_budget = kDefaultKernelBudget);

}  // namespace kron
