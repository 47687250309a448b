#include "kron/hwv.hpp"

#include <algorithm>
#include <stdexcept>

namespace kron {

int WeightSpaceBasis::index_of(const std::vector<uint32_t>& key) const {
    if (index_.empty() && !basis.empty()) {
        for (size_t i = 0; i < basis.size(); ++i) index_[basis[i].cells] = static_cast<int>(i);
    }
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

Multivector HwvBasis::to_multivector(const std::vector<Int>& coords) const {
    if (coords.size() != ambient.basis.size())
        throw std::invalid_argument("coordinate length does not match the weight basis");
    Multivector out(ambient.cube);
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) out.add_term(ambient.basis[i].cells, coords[i]);
    return out;
}

WeightSpaceBasis enumerate_weight_basis(const Cube& cube,
                                        const std::vector<std::vector<int>>& weight,
                                        long long budget) {
    WeightSpaceBasis out;
    out.cube = cube;
    out.weight = weight;
    out.basis = enumerate_with_marginals(cube, weight, budget);
    return out;
}

RaisingMatrix raising_matrix(const WeightSpaceBasis& basis, int dir, int i) {
    const Cube& cube = basis.cube;
    if (dir < 1 || dir > cube.d) throw std::out_of_range("raising direction out of range");
    if (i < 1 || i > cube.k - 1) throw std::out_of_range("raising index out of range");
    auto target_weight = basis.weight;
    target_weight[dir - 1][i - 1] += 1;
    target_weight[dir - 1][i] -= 1;

    RaisingMatrix out;
    if (target_weight[dir - 1][i] < 0) {
        // raised weight space is empty
        out.target.cube = cube;
        out.target.weight = target_weight;
        out.matrix = IntMatrix(0, basis.dim());
        return out;
    }
    out.target = enumerate_weight_basis(cube, target_weight, -1);
    out.matrix = IntMatrix(out.target.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        Multivector image = raising_apply(Multivector::basis(basis.basis[col]), dir, i);
        for (const auto& [key, c] : image.terms()) {
            int row = out.target.index_of(key);
            if (row < 0) throw std::logic_error("raising image left the expected weight space");
            out.matrix.at(row, col) = c;
        }
    }
    return out;
}

std::vector<std::vector<int>> hwv_weight(const PartitionTuple& lambda, int d, int k) {
    if (lambda.d() != d) throw std::invalid_argument("tuple length does not match d");
    Cube cube(d, k);
    std::vector<std::vector<int>> weight;
    for (const Partition& p : lambda.entries()) {
        if (p.part(1) > k) throw std::invalid_argument("partition part exceeds k");
        // lengths above k^{d-1} ask for more cells than a slice holds; the
        // weight space then enumerates empty and the dimension is 0
        Partition conj = p.conjugate();
        std::vector<int> w(k, 0);
        for (int i = 0; i < conj.length(); ++i) w[i] = conj.parts()[i];
        weight.push_back(std::move(w));
    }
    return weight;
}

namespace {

IntMatrix stacked_raising(const WeightSpaceBasis& basis) {
    std::vector<RaisingMatrix> mats;
    int total_rows = 0;
    for (int dir = 1; dir <= basis.cube.d; ++dir)
        for (int i = 1; i <= basis.cube.k - 1; ++i) {
            mats.push_back(raising_matrix(basis, dir, i));
            total_rows += mats.back().matrix.rows;
        }
    IntMatrix stacked(total_rows, basis.dim());
    int r0 = 0;
    for (const auto& rm : mats) {
        for (int r = 0; r < rm.matrix.rows; ++r)
            for (int c = 0; c < rm.matrix.cols; ++c) stacked.at(r0 + r, c) = rm.matrix.at(r, c);
        r0 += rm.matrix.rows;
    }
    return stacked;
}

}  // namespace

HwvBasis hwv_basis(const PartitionTuple& lambda, int d, int k, long long kernel_budget) {
    auto weight = hwv_weight(lambda, d, k);
    HwvBasis out;
    out.ambient = enumerate_weight_basis(Cube(d, k), weight, kernel_budget);
    if (out.ambient.dim() == 0) return out;
    IntMatrix stacked = stacked_raising(out.ambient);
    if (out.ambient.dim() > 200) {
        // a trivial kernel is the common case on big weight spaces; the
        // multi-modular rank settles it without exact elimination
        if (rank_modular(stacked) == out.ambient.dim()) return out;
    }
    out.vectors = kernel_exact(stacked);
    return out;
}

Int kronecker_hwv(const PartitionTuple& lambda, int d, int k, long long kernel_budget) {
    auto weight = hwv_weight(lambda, d, k);
    WeightSpaceBasis basis = enumerate_weight_basis(Cube(d, k), weight, kernel_budget);
    if (basis.dim() == 0) return 0;
    IntMatrix stacked = stacked_raising(basis);
    return basis.dim() - rank_modular(stacked);
}

}  // namespace kron
