#include "kron/cube.hpp"

#include <algorithm>
#include <stdexcept>

namespace kron {

Cube::Cube(int d_, int k_) : d(d_), k(k_) {
    if (d < 1 || k < 1) throw std::invalid_argument("cube needs d >= 1, k >= 1");
    ncells_ = 1;
    for (int i = 0; i < d; ++i) {
        ncells_ *= k;
        if (ncells_ > (1LL << 31)) throw std::invalid_argument("cube too large");
    }
}

uint32_t Cube::rank(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != d) throw std::invalid_argument("bad coordinate count");
    uint32_t r = 0;
    for (int c : coords) {
        if (c < 1 || c > k) throw std::invalid_argument("coordinate out of [1,k]");
        r = r * k + static_cast<uint32_t>(c - 1);
    }
    return r;
}

std::vector<int> Cube::coords(uint32_t rank) const {
    std::vector<int> out(d);
    for (int i = d - 1; i >= 0; --i) {
        out[i] = static_cast<int>(rank % k) + 1;
        rank /= k;
    }
    return out;
}

int Cube::coord(uint32_t rank, int dir) const {
    for (int i = d; i > dir; --i) rank /= k;
    return static_cast<int>(rank % k) + 1;
}

bool Marginals::all_equal(int n) const {
    for (const auto& row : s)
        for (int v : row)
            if (v != n) return false;
    return true;
}

CubeSet::CubeSet(Cube c, std::vector<uint32_t> cells_sorted)
    : cube(c), cells(std::move(cells_sorted)) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] >= cube.num_cells()) throw std::invalid_argument("cell rank out of range");
        if (i && cells[i - 1] >= cells[i])
            throw std::invalid_argument("cube set cells must be strictly increasing");
    }
}

uint64_t CubeSet::mask() const {
    if (!cube.has_mask()) throw std::logic_error("cube too large for 64-bit mask");
    uint64_t m = 0;
    for (uint32_t c : cells) m |= uint64_t(1) << c;
    return m;
}

CubeSet CubeSet::complement() const {
    std::vector<uint32_t> out;
    out.reserve(cube.num_cells() - cells.size());
    size_t j = 0;
    for (uint32_t c = 0; c < cube.num_cells(); ++c) {
        if (j < cells.size() && cells[j] == c) ++j;
        else out.push_back(c);
    }
    return CubeSet(cube, std::move(out));
}

std::string CubeSet::to_string() const {
    if (cube.k > 9) throw std::invalid_argument("digit-string form only valid for k <= 9");
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        for (int c : cube.coords(cells[i])) out += static_cast<char>('0' + c);
    }
    return out;
}

CubeSet CubeSet::parse(const Cube& cube, const std::string& text) {
    if (cube.k > 9) throw std::invalid_argument("digit-string form only valid for k <= 9");
    std::vector<uint32_t> cells;
    std::string cur;
    auto flush = [&] {
        size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) {
            cur.clear();
            return;
        }
        size_t b = cur.find_last_not_of(" \t");
        std::string digits = cur.substr(a, b - a + 1);
        if (static_cast<int>(digits.size()) != cube.d)
            throw std::invalid_argument("cell digit string must have d digits");
        std::vector<int> coords;
        for (char ch : digits) coords.push_back(ch - '0');
        cells.push_back(cube.rank(coords));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    std::sort(cells.begin(), cells.end());
    return CubeSet(cube, std::move(cells));
}

Marginals marginals(const CubeSet& X) {
    Marginals m;
    m.s.assign(X.cube.d, std::vector<int>(X.cube.k, 0));
    for (uint32_t c : X.cells)
        for (int l = 1; l <= X.cube.d; ++l) m.s[l - 1][X.cube.coord(c, l) - 1]++;
    return m;
}

bool is_magic(const CubeSet& X, int* magnitude) {
    Marginals m = marginals(X);
    if (X.cells.empty()) {
        if (magnitude) *magnitude = 0;
        return true;
    }
    int n = m.s[0][0];
    if (!m.all_equal(n)) return false;
    if (magnitude) *magnitude = n;
    return true;
}

CubeSet full_cube(const Cube& cube) {
    std::vector<uint32_t> cells(cube.num_cells());
    for (size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<uint32_t>(i);
    return CubeSet(cube, std::move(cells));
}

namespace {

// Shared DFS over cells in lex order with per-slice feasibility pruning.
// visit() gets each admissible set; returning false aborts the walk.
struct MarginalDfs {
    const Cube& cube;
    const std::vector<std::vector<int>>& target;
    int m;                                   // required cardinality
    std::vector<int> have;                   // chosen count per (dir,slice)
    std::vector<int> remain;                 // cells not yet decided per (dir,slice)
    std::vector<uint32_t> chosen;
    const std::function<bool(const std::vector<uint32_t>&)>& visit;
    bool aborted = false;

    MarginalDfs(const Cube& c, const std::vector<std::vector<int>>& t, int m_,
                const std::function<bool(const std::vector<uint32_t>&)>& v)
        : cube(c), target(t), m(m_), visit(v) {
        have.assign(c.d * c.k, 0);
        remain.assign(c.d * c.k, 0);
        for (uint32_t cell = 0; cell < c.num_cells(); ++cell)
            for (int l = 1; l <= c.d; ++l) remain[idx(l, c.coord(cell, l))]++;
    }

    int idx(int dir, int val) const { return (dir - 1) * cube.k + (val - 1); }

    bool feasible() const {
        for (int l = 1; l <= cube.d; ++l)
            for (int i = 1; i <= cube.k; ++i) {
                int id = idx(l, i);
                if (have[id] > target[l - 1][i - 1]) return false;
                if (have[id] + remain[id] < target[l - 1][i - 1]) return false;
            }
        return true;
    }

    void run(uint32_t cell) {
        if (aborted) return;
        if (static_cast<int>(chosen.size()) == m) {
            // remaining targets must all be met already
            if (!visit(chosen)) aborted = true;
            return;
        }
        if (cell >= cube.num_cells()) return;
        // pruning state update for the cell leaving the undecided pool
        std::vector<int> ids(cube.d);
        for (int l = 1; l <= cube.d; ++l) ids[l - 1] = idx(l, cube.coord(cell, l));
        for (int id : ids) remain[id]--;

        // include first: yields lexicographically increasing output
        bool can_take = true;
        for (int l = 0; l < cube.d; ++l)
            if (have[ids[l]] + 1 > target[l][(ids[l] % cube.k)]) can_take = false;
        if (can_take) {
            for (int id : ids) have[id]++;
            chosen.push_back(cell);
            if (feasible()) run(cell + 1);
            chosen.pop_back();
            for (int id : ids) have[id]--;
        }
        if (!aborted && feasible()) run(cell + 1);
        for (int id : ids) remain[id]++;
    }
};

std::vector<std::vector<int>> uniform_target(const Cube& cube, int n) {
    return std::vector<std::vector<int>>(cube.d, std::vector<int>(cube.k, n));
}

}  // namespace

std::vector<CubeSet> enumerate_with_marginals(const Cube& cube,
                                              const std::vector<std::vector<int>>& target,
                                              long long budget) {
    if (static_cast<int>(target.size()) != cube.d)
        throw std::invalid_argument("need one marginal vector per direction");
    long long m = -1;
    for (const auto& row : target) {
        if (static_cast<int>(row.size()) != cube.k)
            throw std::invalid_argument("marginal vectors must have length k");
        long long s = 0;
        for (int v : row) {
            if (v < 0) throw std::invalid_argument("marginals must be nonnegative");
            s += v;
        }
        if (m >= 0 && s != m) throw std::invalid_argument("marginal sums differ across directions");
        m = s;
    }
    std::vector<CubeSet> out;
    std::function<bool(const std::vector<uint32_t>&)> visit =
        [&](const std::vector<uint32_t>& cells) {
            if (budget >= 0 && static_cast<long long>(out.size()) >= budget)
                throw BudgetError("weight-space enumeration exceeded budget of " +
                                  std::to_string(budget));
            out.emplace_back(cube, cells);
            return true;
        };
    MarginalDfs dfs(cube, target, static_cast<int>(m), visit);
    if (dfs.feasible()) dfs.run(0);
    return out;
}

std::vector<CubeSet> enumerate_magic_sets(int d, int k, int n, long long budget) {
    Cube cube(d, k);
    long long slice = cube.num_cells() / k;
    if (n < 0 || n > slice) throw std::invalid_argument("magic magnitude out of [0, k^{d-1}]");
    return enumerate_with_marginals(cube, uniform_target(cube, n), budget);
}

Int count_magic_sets(int d, int k, int n) {
    Cube cube(d, k);
    long long slice = cube.num_cells() / k;
    if (n < 0 || n > slice) throw std::invalid_argument("magic magnitude out of [0, k^{d-1}]");
    Int count = 0;
    std::function<bool(const std::vector<uint32_t>&)> visit =
        [&](const std::vector<uint32_t>&) {
            ++count;
            return true;
        };
    auto target = uniform_target(cube, n);
    MarginalDfs dfs(cube, target, n * k, visit);
    if (dfs.feasible()) dfs.run(0);
    return count;
}

CubeSet direct_sum(const CubeSet& t1, const CubeSet& t2) {
    if (t1.cube.d != t2.cube.d) throw std::invalid_argument("direct sum needs equal dimension");
    int n1 = 0, n2 = 0;
    if (!is_magic(t1, &n1) || !is_magic(t2, &n2))
        throw std::invalid_argument("direct sum is defined on magic sets");
    if (n1 != n2) throw std::invalid_argument("direct sum needs equal magnitudes");
    int d = t1.cube.d;
    Cube big(d, t1.cube.k + t2.cube.k);
    std::vector<uint32_t> cells;
    cells.reserve(t1.cells.size() + t2.cells.size());
    for (uint32_t c : t1.cells) cells.push_back(big.rank(t1.cube.coords(c)));
    for (uint32_t c : t2.cells) {
        auto coords = t2.cube.coords(c);
        for (int& x : coords) x += t1.cube.k;
        cells.push_back(big.rank(coords));
    }
    std::sort(cells.begin(), cells.end());
    return CubeSet(big, std::move(cells));
}

}  // namespace kron
