#include "kron/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace kron {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 7ull, 61ull}) {  // exact for n < 2^32
        uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

int rank_mod_p(const IntMatrix& m, uint32_t p) {
    std::vector<std::vector<uint64_t>> a(m.rows, std::vector<uint64_t>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            Int v = m.at(r, c) % p;
            if (v < 0) v += p;
            a[r][c] = static_cast<uint64_t>(v);
        }
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        // normalize pivot row, then forward-eliminate below it
        uint64_t inv = 1, base = a[rank][col], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int c = col; c < m.cols; ++c) a[rank][c] = a[rank][c] * inv % p;
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][col] == 0) continue;
            uint64_t f = a[r][col];
            for (int c = col; c < m.cols; ++c)
                a[r][c] = (a[r][c] + (p - f) * a[rank][c]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_exact(IntMatrix m) {
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                Int num = m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c);
                m.at(r, c) = num / prev;  // Bareiss: exact division
            }
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

int rank_modular(const IntMatrix& m, int num_primes) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::mt19937 rng(0xC0FFEEu ^ (static_cast<uint32_t>(m.rows) * 2654435761u) ^
                     static_cast<uint32_t>(m.cols));
    std::uniform_int_distribution<uint32_t> dist(1u << 30, (1u << 31) - 1);
    std::vector<uint32_t> primes;
    while (static_cast<int>(primes.size()) < num_primes) {
        uint32_t cand = dist(rng) | 1;
        if (is_prime_u32(cand) && std::find(primes.begin(), primes.end(), cand) == primes.end())
            primes.push_back(cand);
    }
    int rank = rank_mod_p(m, primes[0]);
    for (size_t i = 1; i < primes.size(); ++i) {
        if (rank_mod_p(m, primes[i]) != rank) return rank_exact(m);
    }
    return rank;
}

namespace {

// Rational row echelon with full bookkeeping: returns pivot columns and the
// reduced rows; used for kernels and for solving.
struct Echelon {
    std::vector<std::vector<Rat>> rows;
    std::vector<int> pivot_col;  // per reduced row
};

Echelon rref(const IntMatrix& m, const std::vector<int>* pivot_order,
             const std::vector<std::vector<Int>>* rhs, std::vector<std::vector<Rat>>* rhs_rows) {
    std::vector<int> order(m.cols);
    if (pivot_order) {
        if (static_cast<int>(pivot_order->size()) != m.cols)
            throw std::invalid_argument("pivot order must list every column");
        order = *pivot_order;
    } else {
        std::iota(order.begin(), order.end(), 0);
    }
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = Rat(m.at(r, c));
    std::vector<std::vector<Rat>> b;
    if (rhs) {
        b.assign(m.rows, std::vector<Rat>(rhs->size()));
        for (size_t j = 0; j < rhs->size(); ++j) {
            if (static_cast<int>((*rhs)[j].size()) != m.rows)
                throw std::invalid_argument("rhs length mismatch");
            for (int r = 0; r < m.rows; ++r) b[r][j] = Rat((*rhs)[j][r]);
        }
    }
    Echelon e;
    int rank = 0;
    for (int oc = 0; oc < m.cols && rank < m.rows; ++oc) {
        int col = order[oc];
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        if (rhs) std::swap(b[rank], b[piv]);
        Rat inv = a[rank][col];
        for (auto& x : a[rank]) x /= inv;
        if (rhs)
            for (auto& x : b[rank]) x /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = 0; c < m.cols; ++c) a[r][c] -= f * a[rank][c];
            if (rhs)
                for (size_t j = 0; j < b[r].size(); ++j) b[r][j] -= f * b[rank][j];
        }
        e.pivot_col.push_back(col);
        ++rank;
    }
    a.resize(rank);
    e.rows = std::move(a);
    if (rhs_rows) *rhs_rows = std::move(b);
    return e;
}

std::vector<Int> clear_denominators(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& x : v) {
        Int den = boost::multiprecision::denominator(x);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        out[i] = boost::multiprecision::numerator(scaled);
    }
    Int g = 0;
    for (const Int& x : out) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : out) x /= g;
    for (const Int& x : out) {
        if (x != 0) {
            if (x < 0)
                for (Int& y : out) y = -y;
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Int>> kernel_exact(const IntMatrix& m,
                                           const std::vector<int>* pivot_order) {
    Echelon e = rref(m, pivot_order, nullptr, nullptr);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Int>> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < e.rows.size(); ++r) v[e.pivot_col[r]] = -e.rows[r][f];
        out.push_back(clear_denominators(v));
    }
    return out;
}

std::vector<std::optional<std::vector<Rat>>> solve_exact(
    const IntMatrix& a, const std::vector<std::vector<Int>>& rhs) {
    std::vector<std::vector<Rat>> b_rows;
    Echelon e = rref(a, nullptr, &rhs, &b_rows);
    std::vector<std::optional<std::vector<Rat>>> out(rhs.size());
    for (size_t j = 0; j < rhs.size(); ++j) {
        // consistency: zero rows of A must carry zero rhs
        bool ok = true;
        for (int r = static_cast<int>(e.rows.size()); r < a.rows && ok; ++r)
            if (b_rows[r][j] != 0) ok = false;
        if (!ok) {
            out[j] = std::nullopt;
            continue;
        }
        std::vector<Rat> x(a.cols, Rat(0));
        for (size_t r = 0; r < e.rows.size(); ++r) x[e.pivot_col[r]] = b_rows[r][j];
        out[j] = std::move(x);
    }
    return out;
}

int rank_exact_columns(const std::vector<std::vector<Int>>& columns) {
    if (columns.empty()) return 0;
    IntMatrix m(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != columns[0].size())
            throw std::invalid_argument("columns must share a length");
        for (size_t r = 0; r < columns[c].size(); ++r)
            m.at(static_cast<int>(r), static_cast<int>(c)) = columns[c][r];
    }
    return rank_exact(std::move(m));
}

}  // namespace kron
