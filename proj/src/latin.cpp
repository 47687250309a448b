#include "kron/latin.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kron {

namespace {

// Per-type backtracking scaffold: cells in lex order, one slice id per
// direction per cell, used-value bitmasks per slice.
struct LatinContext {
    int n = 0;  // magnitude
    int d = 0;
    std::vector<std::array<int, 8>> cell_slices;  // d slice ids per cell
    int num_slices = 0;

    explicit LatinContext(const CubeSet& T) {
        if (!is_magic(T, &n)) throw std::invalid_argument("type is not a magic set");
        d = T.cube.d;
        if (d > 8) throw std::invalid_argument("latin enumeration supports d <= 8");
        num_slices = d * T.cube.k;
        cell_slices.resize(T.cells.size());
        for (size_t i = 0; i < T.cells.size(); ++i)
            for (int l = 1; l <= d; ++l)
                cell_slices[i][l - 1] = (l - 1) * T.cube.k + (T.cube.coord(T.cells[i], l) - 1);
    }
};

struct LatinDfs {
    const LatinContext& ctx;
    std::vector<uint64_t> used;  // per slice, bit v-1 set if value v placed
    std::vector<int> values;
    const std::function<bool(const std::vector<int>&, int)>& leaf;  // (values, parity)
    bool stopped = false;

    LatinDfs(const LatinContext& c, const std::function<bool(const std::vector<int>&, int)>& f)
        : ctx(c), used(c.num_slices, 0), values(c.cell_slices.size(), 0), leaf(f) {}

    void run(size_t i, int parity) {
        if (stopped) return;
        if (i == ctx.cell_slices.size()) {
            if (!leaf(values, parity)) stopped = true;
            return;
        }
        const auto& sl = ctx.cell_slices[i];
        uint64_t blocked = 0;
        for (int l = 0; l < ctx.d; ++l) blocked |= used[sl[l]];
        uint64_t avail = ~blocked & ((ctx.n >= 64) ? ~uint64_t(0) : ((uint64_t(1) << ctx.n) - 1));
        while (avail) {
            int v = std::countr_zero(avail);  // value v+1
            avail &= avail - 1;
            int dpar = 0;
            // earlier cells of each slice precede this one in lex order, so
            // the S-permutation gains inversions for placed values above v+1
            for (int l = 0; l < ctx.d; ++l)
                dpar ^= std::popcount(used[sl[l]] >> (v + 1)) & 1;
            for (int l = 0; l < ctx.d; ++l) used[sl[l]] |= uint64_t(1) << v;
            values[i] = v + 1;
            run(i + 1, parity ^ dpar);
            for (int l = 0; l < ctx.d; ++l) used[sl[l]] &= ~(uint64_t(1) << v);
            if (stopped) return;
        }
    }
};

}  // namespace

bool PartialLatinHypercube::valid() const {
    int n = 0;
    if (!is_magic(type, &n)) return false;
    if (values.size() != type.cells.size()) return false;
    std::vector<uint64_t> used(type.cube.d * type.cube.k, 0);
    for (size_t i = 0; i < values.size(); ++i) {
        int v = values[i];
        if (v < 1 || v > n) return false;
        for (int l = 1; l <= type.cube.d; ++l) {
            int s = (l - 1) * type.cube.k + (type.cube.coord(type.cells[i], l) - 1);
            if (used[s] >> (v - 1) & 1) return false;
            used[s] |= uint64_t(1) << (v - 1);
        }
    }
    return true;
}

int latin_sign(const PartialLatinHypercube& C) {
    if (!C.valid()) throw std::invalid_argument("invalid partial Latin hypercube");
    int parity = 0;
    for (int l = 1; l <= C.type.cube.d; ++l) {
        for (int slice = 1; slice <= C.type.cube.k; ++slice) {
            std::vector<int> perm;
            for (size_t i = 0; i < C.type.cells.size(); ++i)
                if (C.type.cube.coord(C.type.cells[i], l) == slice) perm.push_back(C.values[i]);
            for (size_t a = 0; a < perm.size(); ++a)
                for (size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b]) parity ^= 1;
        }
    }
    return parity ? -1 : 1;
}

void enumerate_latin(const CubeSet& T,
                     const std::function<bool(const PartialLatinHypercube&)>& visit) {
    LatinContext ctx(T);
    if (ctx.n > 64) throw std::invalid_argument("latin enumeration supports magnitude <= 64");
    std::function<bool(const std::vector<int>&, int)> leaf =
        [&](const std::vector<int>& values, int) {
            return visit(PartialLatinHypercube{T, values});
        };
    LatinDfs dfs(ctx, leaf);
    dfs.run(0, 0);
}

std::vector<PartialLatinHypercube> enumerate_latin(const CubeSet& T, long long budget) {
    std::vector<PartialLatinHypercube> out;
    enumerate_latin(T, [&](const PartialLatinHypercube& c) {
        if (budget >= 0 && static_cast<long long>(out.size()) >= budget)
            throw BudgetError("latin enumeration exceeded budget");
        out.push_back(c);
        return true;
    });
    return out;
}

SignedCount at_number_serial(const CubeSet& T, int cell_budget) {
    if (T.cardinality() > cell_budget)
        throw BudgetError("type has " + std::to_string(T.cardinality()) +
                          " cells, over the AT budget of " + std::to_string(cell_budget));
    LatinContext ctx(T);
    SignedCount out;
    std::function<bool(const std::vector<int>&, int)> leaf = [&](const std::vector<int>&, int par) {
        if (par) ++out.negative;
        else ++out.positive;
        return true;
    };
    LatinDfs dfs(ctx, leaf);
    dfs.run(0, 0);
    return out;
}

SignedCount at_number(const CubeSet& T, int cell_budget) {
    if (T.cardinality() > cell_budget)
        throw BudgetError("type has " + std::to_string(T.cardinality()) +
                          " cells, over the AT budget of " + std::to_string(cell_budget));
    LatinContext ctx(T);
    if (ctx.n < 2 || T.cardinality() < 6) return at_number_serial(T, cell_budget);

    // expand the first cells serially into independent tasks
    struct Task {
        std::vector<int> values;
        int parity;
    };
    size_t depth = std::min<size_t>(3, ctx.cell_slices.size());
    std::vector<Task> tasks;
    {
        std::function<bool(const std::vector<int>&, int)> leaf =
            [&](const std::vector<int>& values, int par) {
                tasks.push_back({std::vector<int>(values.begin(), values.begin() + depth), par});
                return true;
            };
        LatinContext prefix_ctx = ctx;
        prefix_ctx.cell_slices.resize(depth);
        LatinDfs dfs(prefix_ctx, leaf);
        dfs.run(0, 0);
    }

    std::vector<SignedCount> partial(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t t = 0; t < tasks.size(); ++t) {
        SignedCount local;
        std::function<bool(const std::vector<int>&, int)> leaf =
            [&](const std::vector<int>&, int par) {
                if (par) ++local.negative;
                else ++local.positive;
                return true;
            };
        LatinDfs full(ctx, leaf);
        // replay the task prefix, then search below it
        int parity = tasks[t].parity;
        for (size_t i = 0; i < depth; ++i) {
            int v = tasks[t].values[i];
            const auto& sl = ctx.cell_slices[i];
            for (int l = 0; l < ctx.d; ++l) full.used[sl[l]] |= uint64_t(1) << (v - 1);
            full.values[i] = v;
        }
        full.run(depth, parity);
        partial[t] = local;
    }
    SignedCount out;
    for (const auto& p : partial) {
        out.positive += p.positive;
        out.negative += p.negative;
    }
    return out;
}

SignedCount at_full_cube(int d, int k, int cell_budget) {
    return at_number(full_cube(Cube(d, k)), cell_budget);
}

}  // namespace kron
