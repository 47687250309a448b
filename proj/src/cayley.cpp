#include "kron/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kron {

namespace {

int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

std::vector<std::vector<int>> all_perms(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Accumulate the wedge of the k cells given by one permutation tuple.
void add_tuple_term(Multivector& acc, const Cube& cube,
                    const std::vector<const std::vector<int>*>& tuple, int sgn) {
    int d = cube.d, k = cube.k;
    std::vector<uint32_t> cells(k);
    std::vector<int> coords(d);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < d; ++j) coords[j] = (*tuple[j])[i];
        cells[i] = cube.rank(coords);
    }
    int sort_sign = 1;  // bubble sort; k is tiny
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i] > cells[j]) {
                std::swap(cells[i], cells[j]);
                sort_sign = -sort_sign;
            }
    acc.add_term(cells, Int(sgn * sort_sign));
}

}  // namespace

Multivector build_cayley_definition(int d, int k) {
    Cube cube(d, k);
    auto perms = all_perms(k);
    std::vector<int> signs(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) signs[i] = perm_sign(perms[i]);

    Multivector acc(cube);
    std::vector<size_t> choice(d, 0);
    std::vector<const std::vector<int>*> tuple(d);
    while (true) {
        int sgn = 1;
        for (int j = 0; j < d; ++j) {
            tuple[j] = &perms[choice[j]];
            sgn *= signs[choice[j]];
        }
        add_tuple_term(acc, cube, tuple, sgn);
        int j = d - 1;
        while (j >= 0 && ++choice[j] == perms.size()) choice[j--] = 0;
        if (j < 0) break;
    }
    Int kfact = factorial(static_cast<unsigned>(k));
    Multivector out(cube);
    for (const auto& [key, c] : acc.terms()) {
        if (c % kfact != 0) throw std::logic_error("cayley normalization: non-exact division");
        out.add_term(key, c / kfact);
    }
    return out;
}

Multivector build_cayley_pairing(int d) {
    Cube cube(d, 2);
    Multivector out(cube);
    std::vector<int> coords(d), anti(d);
    for (uint32_t r = 0; r < cube.num_cells(); ++r) {
        coords = cube.coords(r);
        int weight = 0;
        for (int j = 0; j < d; ++j) {
            weight += coords[j] - 1;
            anti[j] = 3 - coords[j];
        }
        if (weight & 1) continue;  // i in I+ only
        uint32_t rbar = cube.rank(anti);
        std::vector<uint32_t> key = {r, rbar};
        int sign = 1;
        if (key[0] > key[1]) {
            std::swap(key[0], key[1]);
            sign = -1;
        }
        out.add_term(key, Int(sign));
    }
    return out;
}

CayleyForm build_cayley(int d, int k) {
    Cube cube(d, k);
    auto perms = all_perms(k);
    std::vector<int> signs(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) signs[i] = perm_sign(perms[i]);

    // pi_1 = id picks one representative per reparametrization orbit
    Multivector body(cube);
    std::vector<size_t> choice(d - 1, 0);
    std::vector<const std::vector<int>*> tuple(d);
    tuple[0] = &perms[0];
    while (true) {
        int sgn = 1;
        for (int j = 1; j < d; ++j) {
            tuple[j] = &perms[choice[j - 1]];
            sgn *= signs[choice[j - 1]];
        }
        add_tuple_term(body, cube, tuple, sgn);
        int j = d - 2;
        while (j >= 0 && ++choice[j] == perms.size()) choice[j--] = 0;
        if (j < 0) break;
    }
    return CayleyForm{d, k, std::move(body)};
}

Multivector omega_power(int d, int k, int n) {
    if (n < 0) throw std::invalid_argument("omega power needs n >= 0");
    Cube cube(d, k);
    if (n == 0) return Multivector::scalar(cube, 1);
    long long top = cube.num_cells() / k;  // k^{d-1}
    if (n > top) return Multivector(cube);
    Multivector omega = build_cayley(d, k).body;
    Multivector acc = omega;
    for (int i = 1; i < n; ++i) acc = wedge(acc, omega);
    return acc;
}

Multivector embed_omega(int d, int l, const std::vector<std::vector<int>>& I) {
    if (static_cast<int>(I.size()) != d)
        throw std::invalid_argument("embed_omega needs one index set per direction");
    int k = static_cast<int>(I[0].size());
    for (const auto& ij : I) {
        if (static_cast<int>(ij.size()) != k)
            throw std::invalid_argument("index sets must share one cardinality");
        for (size_t t = 0; t < ij.size(); ++t) {
            if (ij[t] < 1 || ij[t] > l) throw std::invalid_argument("index set entry out of [1,l]");
            if (t && ij[t - 1] >= ij[t])
                throw std::invalid_argument("index sets must be strictly increasing");
        }
    }
    Cube small(d, k), big(d, l);
    Multivector omega = build_cayley(d, k).body;
    Multivector out(big);
    for (const auto& [key, c] : omega.terms()) {
        std::vector<uint32_t> mapped;
        mapped.reserve(key.size());
        for (uint32_t r : key) {
            auto coords = small.coords(r);
            for (int j = 0; j < d; ++j) coords[j] = I[j][coords[j] - 1];
            mapped.push_back(big.rank(coords));
        }
        // order-preserving per-coordinate maps preserve lex order of cells
        out.add_term(mapped, c);
    }
    return out;
}

}  // namespace kron
