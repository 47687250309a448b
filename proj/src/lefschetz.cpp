#include "kron/lefschetz.hpp"

#include "kron/latin.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace kron {

namespace {

// Coordinates of an ambient multivector over a weight-space basis; throws if
// some term falls outside (weight bookkeeping rules that out for wedges by
// omega, so it signals a bug).
std::vector<Int> ambient_coords(const WeightSpaceBasis& basis, const Multivector& v) {
    std::vector<Int> y(basis.dim(), 0);
    for (const auto& [key, c] : v.terms()) {
        int row = basis.index_of(key);
        if (row < 0) throw std::logic_error("image term left the expected weight space");
        y[row] = c;
    }
    return y;
}

IntMatrix hwv_matrix_of(const HwvBasis& basis) {
    IntMatrix h(basis.ambient.dim(), basis.dim());
    for (int c = 0; c < basis.dim(); ++c)
        for (int r = 0; r < basis.ambient.dim(); ++r) h.at(r, c) = basis.vectors[c][r];
    return h;
}

int rank_of_rat_columns(const std::vector<std::vector<Rat>>& columns) {
    if (columns.empty()) return 0;
    std::vector<std::vector<Int>> cols(columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        Int lcm = 1;
        for (const Rat& x : columns[c])
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
        cols[c].resize(columns[c].size());
        for (size_t r = 0; r < columns[c].size(); ++r)
            cols[c][r] = boost::multiprecision::numerator(columns[c][r] * Rat(lcm));
    }
    return rank_exact_columns(cols);
}

}  // namespace

StepMatrix lefschetz_step(const HwvBasis& source, const HwvBasis& target,
                          const Multivector& omega) {
    StepMatrix out;
    out.columns.assign(source.dim(), std::vector<Rat>(target.dim(), Rat(0)));
    if (source.dim() == 0) return out;

    std::vector<std::vector<Int>> images;
    std::vector<int> live;
    for (int c = 0; c < source.dim(); ++c) {
        Multivector img = wedge(omega, source.to_multivector(c));
        if (img.is_zero()) continue;
        if (target.ambient.dim() == 0)
            throw std::runtime_error("target-membership failure: nonzero image in empty space");
        images.push_back(ambient_coords(target.ambient, img));
        live.push_back(c);
    }
    if (!images.empty()) {
        auto sols = solve_exact(hwv_matrix_of(target), images);
        for (size_t t = 0; t < live.size(); ++t) {
            if (!sols[t])
                throw std::runtime_error(
                    "target-membership failure: image outside the HWV span (sign bug)");
            out.columns[live[t]] = std::move(*sols[t]);
        }
    }
    out.rank = rank_of_rat_columns(out.columns);
    return out;
}

LefschetzMapMatrix lefschetz_matrix(const PartitionTuple& lambda, int d, int k, long long budget) {
    LefschetzMapMatrix out;
    out.source = hwv_basis(lambda, d, k, budget);
    out.target = hwv_basis(rho(lambda, k, 1), d, k, budget);
    Multivector omega = build_cayley(d, k).body;
    StepMatrix step = lefschetz_step(out.source, out.target, omega);
    out.columns = std::move(step.columns);
    out.rank = step.rank;
    return out;
}

namespace {

std::vector<HwvBasis> hwv_chain(const PartitionTuple& lambda, int d, int k, SequenceRange range,
                                long long budget) {
    std::vector<HwvBasis> chain;
    for (int n = range.lo; n <= range.hi; ++n)
        chain.push_back(hwv_basis(rho(lambda, k, n), d, k, budget));
    return chain;
}

}  // namespace

LpVerdict check_lp(const PartitionTuple& lambda, int d, int k, long long budget) {
    LpVerdict v;
    v.base = lambda;
    v.d = d;
    v.k = k;
    v.range = sequence_range(lambda, d, k);
    auto chain = hwv_chain(lambda, d, k, v.range, budget);
    Multivector omega = build_cayley(d, k).body;
    for (const auto& basis : chain) v.dims.push_back(basis.dim());
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        v.ranks.push_back(lefschetz_step(chain[i], chain[i + 1], omega).rank);

    // smallest pivot after which every map is surjective
    int count = static_cast<int>(chain.size());
    int pivot_idx = count - 1;
    for (int i = count - 2; i >= 0; --i) {
        if (v.ranks[i] == chain[i + 1].dim()) pivot_idx = i;
        else break;
    }
    v.pivot = v.range.lo + pivot_idx;
    v.holds = true;
    for (int i = 0; i < pivot_idx; ++i)
        if (v.ranks[i] != chain[i].dim()) v.holds = false;
    return v;
}

HlpVerdict check_hlp(const PartitionTuple& lambda, int d, int k, long long budget) {
    if (k % 2 != 0) throw std::invalid_argument("HLP needs even k");
    if (!k_complementary(lambda, k))
        throw std::invalid_argument("HLP is defined for k-complementary tuples");
    HlpVerdict v;
    v.base = lambda;
    v.d = d;
    v.k = k;
    SequenceRange range = sequence_range(lambda, d, k);
    int m = lambda.size();
    long long slice = 1;
    for (int i = 0; i < d - 1; ++i) slice *= k;
    int pair_sum = static_cast<int>(slice) - 2 * m / k;
    if (range.lo + range.hi != pair_sum)
        throw std::logic_error("HLP range endpoints disagree with the complement pairing");

    auto chain = hwv_chain(lambda, d, k, range, budget);
    Multivector omega = build_cayley(d, k).body;
    v.holds = true;
    for (int n = range.lo; 2 * n <= pair_sum; ++n) {
        int nstar = pair_sum - n;
        HlpPair pair;
        pair.n = n;
        pair.nstar = nstar;
        pair.dim_low = chain[n - range.lo].dim();
        pair.dim_high = chain[nstar - range.lo].dim();
        if (n == nstar) {
            pair.rank = static_cast<int>(chain[n - range.lo].dim());
            pair.isomorphism = true;  // L^0 = id
        } else {
            // iterate single steps, staying in HWV coordinates throughout
            std::vector<std::vector<Rat>> acc;  // columns over current basis
            acc.assign(chain[n - range.lo].dim(), {});
            for (int c = 0; c < chain[n - range.lo].dim(); ++c) {
                acc[c].assign(chain[n - range.lo].dim(), Rat(0));
                acc[c][c] = 1;
            }
            for (int t = n; t < nstar; ++t) {
                StepMatrix step =
                    lefschetz_step(chain[t - range.lo], chain[t + 1 - range.lo], omega);
                std::vector<std::vector<Rat>> next(acc.size());
                int dst_dim = chain[t + 1 - range.lo].dim();
                for (size_t c = 0; c < acc.size(); ++c) {
                    next[c].assign(dst_dim, Rat(0));
                    for (size_t mid = 0; mid < acc[c].size(); ++mid) {
                        if (acc[c][mid] == 0) continue;
                        for (int r = 0; r < dst_dim; ++r)
                            next[c][r] += step.columns[mid][r] * acc[c][mid];
                    }
                }
                acc = std::move(next);
            }
            pair.rank = rank_of_rat_columns(acc);
            pair.isomorphism =
                (pair.dim_low == pair.dim_high) && (Int(pair.rank) == pair.dim_low);
        }
        if (!(pair.dim_low == pair.dim_high) || !pair.isomorphism) v.holds = false;
        v.pairs.push_back(std::move(pair));
    }
    return v;
}

std::vector<std::vector<uint32_t>> grade_basis(const Cube& cube, int n) {
    std::vector<std::vector<uint32_t>> out;
    long long total = cube.num_cells();
    if (n < 0 || n > total) return out;
    if (n == 0) {
        out.assign(1, {});
        return out;
    }
    std::vector<uint32_t> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == total - n + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

Int binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    Int out = 1;
    for (long long i = 0; i < r; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

// matrix of v -> omega ^ v between full grade bases
IntMatrix full_grade_matrix(const Cube& cube, const Multivector& omega,
                            const std::vector<std::vector<uint32_t>>& src,
                            const std::vector<std::vector<uint32_t>>& dst) {
    std::map<std::vector<uint32_t>, int> index;
    for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
        Multivector img = wedge(omega, Multivector::basis(CubeSet(cube, src[c])));
        for (const auto& [key, coeff] : img.terms()) {
            auto it = index.find(key);
            if (it == index.end()) throw std::logic_error("wedge image left the grade basis");
            m.at(it->second, static_cast<int>(c)) = coeff;
        }
    }
    return m;
}

}  // namespace

LpFullVerdict check_lp_full(int d, int k, long long ambient_budget) {
    LpFullVerdict v;
    v.d = d;
    v.k = k;
    Cube cube(d, k);
    long long ambient = cube.num_cells();
    if (ambient <= ambient_budget) {
        v.mode = "exhaustive";
        Multivector omega = build_cayley(d, k).body;
        v.holds = true;
        for (int n = 0; n <= ambient - k; ++n) {
            auto src = grade_basis(cube, n);
            auto dst = grade_basis(cube, n + k);
            IntMatrix m = full_grade_matrix(cube, omega, src, dst);
            LpFullDegree deg;
            deg.n = n;
            deg.dim_src = binomial(ambient, n);
            deg.dim_dst = binomial(ambient, n + k);
            deg.rank = rank_modular(m);
            deg.full = deg.rank == std::min(deg.dim_src, deg.dim_dst);
            if (!deg.full) v.holds = false;
            v.degrees.push_back(deg);
        }
        return v;
    }
    if (k == 2)
        throw BudgetError("LP_{d,2} ambient too large for exhaustive ranks (holds by theory)");
    v.mode = "witness";
    Multivector omega = build_cayley(d, k).body;
    if (k % 2 == 1) {
        // omega ^ omega = 0 in grade k, far below the middle
        Multivector sq = wedge(omega, omega);
        if (!sq.is_zero()) throw std::logic_error("expected omega^2 = 0 for odd k");
        v.witness = "omega: L(omega) = omega^2 = 0 at grade " + std::to_string(k);
        v.holds = false;
        return v;
    }
    // even k > 2: the slice vector dies under L
    std::vector<uint32_t> slice_cells;
    for (uint32_t c = 0; c < ambient; ++c)
        if (cube.coord(c, 1) == 1) slice_cells.push_back(c);
    Multivector vslice = Multivector::basis(CubeSet(cube, slice_cells));
    Multivector img = wedge(omega, vslice);
    if (!img.is_zero()) throw std::logic_error("expected omega ^ slice vector = 0");
    v.witness = "slice vector: L(v) = 0 at grade " + std::to_string(ambient / k);
    v.holds = false;
    return v;
}

Multivector sl2_h(const Multivector& v) {
    long long half = v.cube().num_cells() / 2;
    Multivector out(v.cube());
    for (const auto& [key, c] : v.terms())
        out.add_term(key, c * Int(static_cast<long long>(key.size()) - half));
    return out;
}

Multivector sl2_commutator(int d, int k, const CubeSet& T) {
    Multivector omega = build_cayley(d, k).body;
    Multivector e = Multivector::basis(T);
    Multivector xy = wedge(omega, interior(omega, e));
    Multivector yx = interior(omega, wedge(omega, e));
    return xy + (-yx);
}

Sl2Report sl2_check(int d, int samples, uint64_t seed) {
    if (d % 2 == 0) throw std::invalid_argument("sl2 structure needs odd d");
    Sl2Report rep;
    rep.d = d;
    rep.holds = true;
    Cube cube(d, 2);
    Multivector omega = build_cayley(d, 2).body;
    long long ambient = cube.num_cells();

    auto check_one = [&](const std::vector<uint32_t>& cells) {
        Multivector e = Multivector::basis(CubeSet(cube, cells));
        Multivector xy = wedge(omega, interior(omega, e));
        Multivector yx = interior(omega, wedge(omega, e));
        Multivector comm = xy + (-yx);
        bool ok = comm == sl2_h(e);
        // [H,X] = 2X and [H,Y] = -2Y
        Multivector xe = wedge(omega, e);
        Multivector hx = sl2_h(xe) + (-wedge(omega, sl2_h(e)));
        if (!(hx == xe * 2)) ok = false;
        Multivector ye = interior(omega, e);
        Multivector hy = sl2_h(ye) + (-interior(omega, sl2_h(e)));
        if (!(hy == ye * Int(-2))) ok = false;
        ++rep.checked;
        if (!ok) {
            rep.holds = false;
            if (rep.failures.size() < 8)
                rep.failures.push_back(CubeSet(cube, cells).to_string());
        }
    };

    if (ambient <= 8) {
        for (uint64_t bits = 0; bits < (uint64_t(1) << ambient); ++bits) {
            std::vector<uint32_t> cells;
            for (long long i = 0; i < ambient; ++i)
                if (bits >> i & 1) cells.push_back(static_cast<uint32_t>(i));
            check_one(cells);
        }
        return rep;
    }

    // larger d: all magic-weight vectors (budgeted), then random subsets
    for (int n = 0; n <= ambient / 2; ++n) {
        try {
            for (const CubeSet& t : enumerate_magic_sets(d, 2, n, 5000)) check_one(t.cells);
        } catch (const BudgetError&) {
            break;  // remaining magnitudes are covered by sampling below
        }
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        uint64_t bits = rng();
        if (ambient < 64) bits &= (uint64_t(1) << ambient) - 1;
        std::vector<uint32_t> cells;
        for (long long i = 0; i < ambient; ++i)
            if (bits >> i & 1) cells.push_back(static_cast<uint32_t>(i));
        check_one(cells);
    }
    return rep;
}

std::vector<std::vector<Int>> primitive_basis(int d, int n) {
    Cube cube(d, 2);
    if (n < 0 || n > cube.num_cells()) throw std::invalid_argument("grade out of range");
    Multivector omega = build_cayley(d, 2).body;
    auto src = grade_basis(cube, n);
    auto dst = grade_basis(cube, n - 2);
    std::map<std::vector<uint32_t>, int> index;
    for (size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
        Multivector img = interior(omega, Multivector::basis(CubeSet(cube, src[c])));
        for (const auto& [key, coeff] : img.terms())
            m.at(index.at(key), static_cast<int>(c)) = coeff;
    }
    return kernel_exact(m);
}

std::vector<Int> lefschetz_decomposition_dims(int d, int n) {
    Cube cube(d, 2);
    Multivector omega = build_cayley(d, 2).body;
    std::vector<Int> dims;
    for (int i = 0; 2 * i <= n; ++i) {
        int g = n - 2 * i;
        auto prim = primitive_basis(d, g);
        if (prim.empty()) {
            dims.push_back(0);
            continue;
        }
        auto src = grade_basis(cube, g);
        // images X^i v for each primitive vector
        std::vector<std::vector<Int>> cols;
        std::map<std::vector<uint32_t>, int> index;
        auto dst = grade_basis(cube, g + 2 * i);
        for (size_t t = 0; t < dst.size(); ++t) index[dst[t]] = static_cast<int>(t);
        for (const auto& vec : prim) {
            Multivector v(cube);
            for (size_t t = 0; t < src.size(); ++t)
                if (vec[t] != 0) v.add_term(src[t], vec[t]);
            for (int e = 0; e < i; ++e) v = wedge(omega, v);
            std::vector<Int> col(dst.size(), 0);
            for (const auto& [key, coeff] : v.terms()) col[index.at(key)] = coeff;
            cols.push_back(std::move(col));
        }
        dims.push_back(rank_exact_columns(cols));
    }
    return dims;
}

StableInjectivityReport stable_injectivity_check(const PartitionTuple& lambda, int k, int l,
                                                 long long budget) {
    if (l <= k) throw std::invalid_argument("stable injectivity needs l > k");
    int d = lambda.d();
    StableInjectivityReport rep;
    rep.base = lambda;
    rep.k = k;
    rep.l = l;

    LefschetzMapMatrix small = lefschetz_matrix(lambda, d, k, budget);
    rep.dim = small.source.dim();
    rep.small_injective = small.rank == small.source.dim();

    // embed the HWV basis of Lambda V_k into Lambda V_l (same coordinates,
    // larger alphabet) and wedge with omega_{d,l}
    Cube small_cube(d, k), big_cube(d, l);
    Multivector omega_l = build_cayley(d, l).body;
    std::vector<Multivector> images;
    for (int c = 0; c < small.source.dim(); ++c) {
        Multivector v = small.source.to_multivector(c);
        Multivector embedded(big_cube);
        for (const auto& [key, coeff] : v.terms()) {
            std::vector<uint32_t> mapped;
            mapped.reserve(key.size());
            for (uint32_t r : key) mapped.push_back(big_cube.rank(small_cube.coords(r)));
            std::sort(mapped.begin(), mapped.end());
            embedded.add_term(mapped, coeff);
        }
        images.push_back(wedge(omega_l, embedded));
    }
    // linear independence of the images over the ambient basis
    std::map<std::vector<uint32_t>, int> index;
    for (const auto& img : images)
        for (const auto& [key, c] : img.terms()) index.emplace(key, 0);
    int row = 0;
    for (auto& [key, idx] : index) idx = row++;
    std::vector<std::vector<Int>> cols;
    for (const auto& img : images) {
        std::vector<Int> col(index.size(), 0);
        for (const auto& [key, c] : img.terms()) col[index.at(key)] = c;
        cols.push_back(std::move(col));
    }
    int rank = cols.empty() ? 0 : rank_exact_columns(cols);
    rep.embedded_injective = rank == small.source.dim();

    rep.g_small = kronecker_characters(lambda);
    rep.g_raised = kronecker_characters(rho(lambda, l, 1));
    rep.holds = (!rep.small_injective || rep.embedded_injective) && rep.g_small <= rep.g_raised;
    return rep;
}

}  // namespace kron
