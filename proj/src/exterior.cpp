#include "kron/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kron {

Multivector Multivector::scalar(Cube cube, Int value) {
    Multivector out(cube);
    if (value != 0) out.terms_[{}] = std::move(value);
    return out;
}

Multivector Multivector::basis(const CubeSet& X, Int coeff) {
    Multivector out(X.cube);
    if (coeff != 0) out.terms_[X.cells] = std::move(coeff);
    return out;
}

std::optional<int> Multivector::grade() const {
    std::optional<int> g;
    for (const auto& [key, c] : terms_) {
        int n = static_cast<int>(key.size());
        if (!g) g = n;
        else if (*g != n) return std::nullopt;
    }
    return g;
}

Int Multivector::coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

void Multivector::add_term(const Key& key, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Multivector& Multivector::operator+=(const Multivector& other) {
    if (!(cube_ == other.cube_)) throw std::invalid_argument("dimension mismatch");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

Multivector Multivector::operator+(const Multivector& other) const {
    Multivector out = *this;
    out += other;
    return out;
}

Multivector Multivector::operator-() const {
    Multivector out(cube_);
    for (const auto& [key, c] : terms_) out.terms_[key] = -c;
    return out;
}

Multivector Multivector::operator*(const Int& scalar) const {
    Multivector out(cube_);
    if (scalar == 0) return out;
    for (const auto& [key, c] : terms_) out.terms_[key] = c * scalar;
    return out;
}

int wedge_sign_serial(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    long long inv = 0;
    size_t i = 0;
    for (uint32_t x : b) {
        while (i < a.size() && a[i] < x) ++i;
        inv += static_cast<long long>(a.size() - i);
    }
    return (inv & 1) ? -1 : 1;
}

int wedge_sign(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    return wedge_sign_serial(a, b);
}

namespace {

// mask-accelerated term product; valid when the cube has <= 64 cells
inline bool masked_wedge_term(uint64_t ma, const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b, uint64_t mb, int& sign,
                              std::vector<uint32_t>& key) {
    if (ma & mb) return false;
    int inv = 0;
    for (uint32_t x : b) inv += std::popcount(ma >> x);  // elements of a above x
    sign = (inv & 1) ? -1 : 1;
    key.resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), key.begin());
    return true;
}

inline uint64_t key_mask(const std::vector<uint32_t>& key) {
    uint64_t m = 0;
    for (uint32_t c : key) m |= uint64_t(1) << c;
    return m;
}

}  // namespace

Multivector wedge(const Multivector& u, const Multivector& v) {
    if (!(u.cube() == v.cube())) throw std::invalid_argument("dimension mismatch");
    Multivector out(u.cube());
    const bool use_mask = u.cube().has_mask();
    std::vector<uint32_t> key;
    for (const auto& [a, ca] : u.terms()) {
        const uint64_t ma = use_mask ? key_mask(a) : 0;
        for (const auto& [b, cb] : v.terms()) {
            if (use_mask) {
                int sign;
                if (!masked_wedge_term(ma, a, b, key_mask(b), sign, key)) continue;
                out.add_term(key, sign < 0 ? Int(-ca * cb) : Int(ca * cb));
            } else {
                bool disjoint = true;
                size_t i = 0, j = 0;
                while (i < a.size() && j < b.size()) {
                    if (a[i] == b[j]) { disjoint = false; break; }
                    if (a[i] < b[j]) ++i;
                    else ++j;
                }
                if (!disjoint) continue;
                int sign = wedge_sign_serial(a, b);
                key.resize(a.size() + b.size());
                std::merge(a.begin(), a.end(), b.begin(), b.end(), key.begin());
                out.add_term(key, sign < 0 ? Int(-ca * cb) : Int(ca * cb));
            }
        }
    }
    return out;
}

Multivector interior(const Multivector& u_dual, const Multivector& v) {
    if (!(u_dual.cube() == v.cube())) throw std::invalid_argument("dimension mismatch");
    Multivector out(v.cube());
    std::vector<uint32_t> rest;
    for (const auto& [a, ca] : u_dual.terms()) {
        for (const auto& [b, cb] : v.terms()) {
            if (a.size() > b.size()) continue;
            rest.clear();
            // rest = b \ a, bailing out unless a is a subset of b
            size_t i = 0;
            bool subset = true;
            for (uint32_t x : b) {
                if (i < a.size() && a[i] == x) ++i;
                else rest.push_back(x);
            }
            if (i != a.size()) subset = false;
            if (!subset) continue;
            int sign = wedge_sign_serial(a, rest);
            out.add_term(rest, sign < 0 ? Int(-ca * cb) : Int(ca * cb));
        }
    }
    return out;
}

Multivector hodge_star(const Multivector& v) {
    if (!v.grade()) throw std::invalid_argument("hodge star needs a homogeneous input");
    Multivector out(v.cube());
    for (const auto& [a, ca] : v.terms()) {
        CubeSet X(v.cube(), a);
        CubeSet Xc = X.complement();
        int sign = wedge_sign_serial(a, Xc.cells);
        out.add_term(Xc.cells, sign < 0 ? Int(-ca) : ca);
    }
    return out;
}

Multivector raising_apply(const Multivector& v, int dir, int i) {
    const Cube& cube = v.cube();
    if (dir < 1 || dir > cube.d) throw std::out_of_range("raising direction out of range");
    if (i < 1 || i > cube.k - 1) throw std::out_of_range("raising index out of range");
    // E_{i,i+1} lowers coordinate i+1 to i in one tensor factor; on e_X this
    // moves one cell downward in lex order, with the resort sign.
    long long step = 1;
    for (int t = cube.d; t > dir; --t) step *= cube.k;
    Multivector out(cube);
    std::vector<uint32_t> key;
    for (const auto& [cells, c] : v.terms()) {
        for (size_t t = 0; t < cells.size(); ++t) {
            if (cube.coord(cells[t], dir) != i + 1) continue;
            uint32_t moved = cells[t] - static_cast<uint32_t>(step);
            if (std::binary_search(cells.begin(), cells.end(), moved)) continue;
            key = cells;
            key.erase(key.begin() + t);
            auto pos = std::lower_bound(key.begin(), key.end(), moved);
            int jumps = static_cast<int>((key.begin() + t) - pos);
            key.insert(pos, moved);
            out.add_term(key, (jumps & 1) ? Int(-c) : c);
        }
    }
    return out;
}

Multivector lowering_apply(const Multivector& v, int dir, int i) {
    const Cube& cube = v.cube();
    if (dir < 1 || dir > cube.d) throw std::out_of_range("lowering direction out of range");
    if (i < 1 || i > cube.k - 1) throw std::out_of_range("lowering index out of range");
    long long step = 1;
    for (int t = cube.d; t > dir; --t) step *= cube.k;
    Multivector out(cube);
    std::vector<uint32_t> key;
    for (const auto& [cells, c] : v.terms()) {
        for (size_t t = 0; t < cells.size(); ++t) {
            if (cube.coord(cells[t], dir) != i) continue;
            uint32_t moved = cells[t] + static_cast<uint32_t>(step);
            if (std::binary_search(cells.begin(), cells.end(), moved)) continue;
            key = cells;
            key.erase(key.begin() + t);
            auto pos = std::lower_bound(key.begin(), key.end(), moved);
            int jumps = static_cast<int>(pos - (key.begin() + t));
            key.insert(pos, moved);
            out.add_term(key, (jumps & 1) ? Int(-c) : c);
        }
    }
    return out;
}

Multivector mirror(const Multivector& v) {
    const Cube& cube = v.cube();
    uint32_t top = static_cast<uint32_t>(cube.num_cells() - 1);
    Multivector out(cube);
    for (const auto& [cells, c] : v.terms()) {
        // digitwise reversal is total order reversal on ranks
        std::vector<uint32_t> key(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) key[cells.size() - 1 - i] = top - cells[i];
        size_t n = cells.size();
        bool flip = (n * (n - 1) / 2) & 1;
        out.add_term(key, flip ? Int(-c) : c);
    }
    return out;
}

Marginals weight_of(const Multivector& v) {
    if (v.is_zero()) throw std::invalid_argument("zero vector has no weight");
    std::optional<Marginals> w;
    for (const auto& [key, c] : v.terms()) {
        Marginals m = marginals(CubeSet(v.cube(), key));
        if (!w) w = m;
        else if (!(*w == m)) throw std::invalid_argument("not a weight vector");
    }
    return *w;
}

}  // namespace kron
