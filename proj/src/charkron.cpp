#include "kron/charkron.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kron {

std::vector<ConjugacyClass> conjugacy_classes(int m) {
    std::vector<ConjugacyClass> out;
    Int mfact = factorial(static_cast<unsigned>(m));
    for (const Partition& mu : partitions_of(m)) {
        Int z = 1;
        int run = 0, prev = 0;
        for (int p : mu.parts()) {
            if (p == prev) ++run;
            else run = 1;
            prev = p;
            z *= Int(p) * run;  // telescopes to prod i^{m_i} m_i!
        }
        out.push_back({mu, mfact / z});
    }
    return out;
}

namespace {

// ---- border strips via beta numbers ---------------------------------------

struct StripMove {
    std::vector<int> shape;
    int sign;  // (-1)^height
};

std::vector<StripMove> strips_of_length(const std::vector<int>& shape, int len) {
    std::vector<StripMove> out;
    int r = static_cast<int>(shape.size());
    if (len <= 0) return out;
    std::vector<long long> beta(r);
    for (int i = 0; i < r; ++i) beta[i] = shape[i] + (r - 1 - i);
    for (int i = 0; i < r; ++i) {
        long long nb = beta[i] - len;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) { clash = true; break; }
            if (beta[j] > nb && beta[j] < beta[i]) ++height;
        }
        if (clash) continue;
        std::vector<long long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nshape(r);
        for (int j = 0; j < r; ++j) nshape[j] = static_cast<int>(nbeta[j] - (r - 1 - j));
        while (!nshape.empty() && nshape.back() == 0) nshape.pop_back();
        out.push_back({std::move(nshape), (height & 1) ? -1 : 1});
    }
    return out;
}

// Interned sub-shapes of one lambda with per-length strip transitions.
struct StripTable {
    std::vector<std::vector<int>> shapes;  // id -> shape
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<std::pair<int, int>>> moves;  // (id, len) -> (next id, sign)
    int maxlen = 0;
    int empty_id = -1;
    int root_id = -1;

    int intern(const std::vector<int>& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(shapes.size());
        ids.emplace(s, id);
        shapes.push_back(s);
        return id;
    }

    StripTable(const Partition& lambda, int maxlen_) : maxlen(maxlen_) {
        root_id = intern(lambda.parts());
        empty_id = intern({});
        std::vector<std::vector<std::pair<int, int>>> rows;
        for (size_t id = 0; id < shapes.size(); ++id) {
            std::vector<int> shape = shapes[id];  // copy: shapes grows below
            for (int len = 1; len <= maxlen; ++len) {
                std::vector<std::pair<int, int>> row;
                for (const StripMove& mv : strips_of_length(shape, len))
                    row.emplace_back(intern(mv.shape), mv.sign);
                rows.push_back(std::move(row));
            }
        }
        moves.assign(shapes.size() * (maxlen + 1), {});
        size_t t = 0;
        for (size_t id = 0; id * (static_cast<size_t>(maxlen) + 1) < moves.size(); ++id)
            for (int len = 1; len <= maxlen; ++len)
                moves[id * (maxlen + 1) + len] = std::move(rows[t++]);
    }

    const std::vector<std::pair<int, int>>& at(int id, int len) const {
        return moves[static_cast<size_t>(id) * (maxlen + 1) + len];
    }
};

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu, CharCache* cache) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("character needs |lambda| == |mu|");
    if (lambda.size() == 0) return 1;
    if (cache) {
        if (auto v = cache->get(lambda, mu)) return *v;
    }
    // memo on (shape, remaining cycle parts); parts processed first to last
    std::map<std::pair<std::vector<int>, int>, Int> memo;
    const auto& parts = mu.parts();
    std::function<Int(const std::vector<int>&, int)> eval = [&](const std::vector<int>& shape,
                                                                int pos) -> Int {
        if (pos == static_cast<int>(parts.size())) return shape.empty() ? 1 : 0;
        auto key = std::make_pair(shape, pos);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (const StripMove& mv : strips_of_length(shape, parts[pos]))
            total += mv.sign * eval(mv.shape, pos + 1);
        memo.emplace(std::move(key), total);
        return total;
    };
    Int result = eval(lambda.parts(), 0);
    if (cache) cache->put(lambda, mu, result);
    return result;
}

Int kronecker_characters_exact(const PartitionTuple& tuple, CharCache* cache) {
    int m = tuple.size();
    auto classes = conjugacy_classes(m);
    Int sum = 0;
#ifdef _OPENMP
    if (cache == nullptr) {  // the disk cache is not shareable across workers
#pragma omp parallel
        {
            Int local = 0;
#pragma omp for schedule(dynamic) nowait
            for (size_t i = 0; i < classes.size(); ++i) {
                Int prod = classes[i].size;
                for (const Partition& lam : tuple.entries()) {
                    if (prod == 0) break;
                    prod *= mn_character(lam, classes[i].cycle_type, nullptr);
                }
                local += prod;
            }
#pragma omp critical
            sum += local;
        }
    } else
#endif
    {
        for (const ConjugacyClass& cls : classes) {
            Int prod = cls.size;
            for (const Partition& lam : tuple.entries()) {
                if (prod == 0) break;
                prod *= mn_character(lam, cls.cycle_type, cache);
            }
            sum += prod;
        }
    }
    Int mfact = factorial(static_cast<unsigned>(m));
    if (sum % mfact != 0)
        throw std::logic_error("class sum not divisible by m!: internal character bug");
    Int g = sum / mfact;
    if (g < 0) throw std::logic_error("negative Kronecker coefficient: internal character bug");
    return g;
}

// ---- modular class sum ------------------------------------------------------
//
// Sum over mu of (1/z_mu) prod_i chi^{lambda_i}(mu) is walked as a DFS over
// class prefixes with parts descending. Each distinct factor carries a sparse
// vector over border-strip shapes; a leaf reads off chi at the empty shape.
// Arithmetic is modular over enough 62-bit primes to cover a proven bound on
// the coefficient, then CRT-reconstructed, so the result is exact.

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                       37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic witness set for 64-bit inputs
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                       37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<uint64_t> crt_primes(const Int& bound) {
    std::vector<uint64_t> primes;
    Int prod = 1;
    uint64_t cand = (uint64_t(1) << 62) - 1;
    while (prod <= bound * 2) {
        while (!is_prime_u64(cand)) --cand;
        primes.push_back(cand);
        prod *= cand;
        --cand;
    }
    return primes;
}

Int crt_reconstruct(const std::vector<uint64_t>& residues, const std::vector<uint64_t>& primes) {
    Int x = 0, prod = 1;
    for (size_t i = 0; i < primes.size(); ++i) {
        Int p(primes[i]);
        Int diff = (Int(residues[i]) - x) % p;
        if (diff < 0) diff += p;
        uint64_t prodmod = static_cast<uint64_t>(prod % p);
        uint64_t inv = powmod(prodmod, primes[i] - 2, primes[i]);
        x += prod * ((diff * inv) % p);
        prod *= p;
    }
    return x;
}

// Sparse per-factor state: shape id -> one residue per prime.
struct FactorState {
    std::vector<int> ids;
    std::vector<uint64_t> vals;  // ids.size() * np
};

struct ClassSumContext {
    int m = 0;
    std::vector<uint64_t> primes;
    std::vector<StripTable> tables;  // one per distinct factor
    std::vector<int> multiplicity;
    std::vector<std::vector<uint64_t>> inv_small;  // per prime: inverses of 1..m

    explicit ClassSumContext(const PartitionTuple& tuple) {
        m = tuple.size();
        std::vector<Partition> distinct;
        for (const Partition& lam : tuple.entries()) {
            auto it = std::find(distinct.begin(), distinct.end(), lam);
            if (it == distinct.end()) {
                distinct.push_back(lam);
                multiplicity.push_back(1);
            } else {
                multiplicity[it - distinct.begin()]++;
            }
        }
        Int f_bound = coefficient_bound(tuple);
        primes = crt_primes(f_bound);
        bound = f_bound;
        for (const Partition& lam : distinct) tables.emplace_back(lam, m);
        inv_small.resize(primes.size());
        for (size_t i = 0; i < primes.size(); ++i) {
            inv_small[i].assign(m + 1, 0);
            for (int v = 1; v <= m; ++v)
                inv_small[i][v] = powmod(v % primes[i], primes[i] - 2, primes[i]);
        }
    }

    static Int coefficient_bound(const PartitionTuple& tuple) {
        // g <= (prod f_i) / max f_i: the multiplicity of the largest factor
        // in the tensor product of the others
        Int prod = 1, fmax = 0;
        for (const Partition& lam : tuple.entries()) {
            Int f = lam.dimension_sn();
            prod *= f;
            fmax = std::max(fmax, f);
        }
        return prod / fmax;
    }

    Int bound;
};

void advance(const ClassSumContext& ctx, const StripTable& table, const FactorState& in, int len,
             FactorState& out, std::unordered_map<int, int>& slot) {
    size_t np = ctx.primes.size();
    out.ids.clear();
    out.vals.clear();
    slot.clear();
    for (size_t t = 0; t < in.ids.size(); ++t) {
        for (const auto& [next, sign] : table.at(in.ids[t], len)) {
            auto [it, inserted] = slot.try_emplace(next, static_cast<int>(out.ids.size()));
            if (inserted) {
                out.ids.push_back(next);
                out.vals.resize(out.vals.size() + np, 0);
            }
            uint64_t* dst = out.vals.data() + static_cast<size_t>(it->second) * np;
            const uint64_t* src = in.vals.data() + t * np;
            for (size_t i = 0; i < np; ++i) {
                uint64_t p = ctx.primes[i];
                uint64_t v = sign > 0 ? src[i] : (src[i] ? p - src[i] : 0);
                dst[i] += v;
                if (dst[i] >= p) dst[i] -= p;
            }
        }
    }
}

struct ClassSumDfs {
    const ClassSumContext& ctx;
    std::vector<uint64_t> acc;                   // per prime
    std::vector<std::vector<FactorState>> pool;  // [depth][factor]
    std::vector<std::vector<uint64_t>> zpool;    // [depth] 1/z residues
    std::unordered_map<int, int> slot;

    explicit ClassSumDfs(const ClassSumContext& c) : ctx(c), acc(c.primes.size(), 0) {
        pool.resize(c.m + 1, std::vector<FactorState>(c.tables.size()));
        zpool.assign(c.m + 1, std::vector<uint64_t>(c.primes.size(), 1));
    }

    void seed() {
        for (size_t f = 0; f < ctx.tables.size(); ++f) {
            pool[0][f].ids = {ctx.tables[f].root_id};
            pool[0][f].vals.assign(ctx.primes.size(), 1);
        }
        std::fill(zpool[0].begin(), zpool[0].end(), 1);
    }

    // descend by one part; returns false if some factor state died
    bool step(int depth, int part, int newrun) {
        for (size_t f = 0; f < ctx.tables.size(); ++f) {
            advance(ctx, ctx.tables[f], pool[depth][f], part, pool[depth + 1][f], slot);
            if (pool[depth + 1][f].ids.empty()) return false;
        }
        // appending the newrun-th copy of `part` multiplies z by part*newrun,
        // which never exceeds m
        for (size_t i = 0; i < ctx.primes.size(); ++i)
            zpool[depth + 1][i] =
                mulmod(zpool[depth][i], ctx.inv_small[i][part * newrun], ctx.primes[i]);
        return true;
    }

    void leaf(int depth) {
        size_t np = ctx.primes.size();
        const auto& states = pool[depth];
        std::vector<uint64_t> term = zpool[depth];
        for (size_t f = 0; f < ctx.tables.size(); ++f) {
            const FactorState& st = states[f];
            const uint64_t* chi = nullptr;
            for (size_t t = 0; t < st.ids.size(); ++t)
                if (st.ids[t] == ctx.tables[f].empty_id) chi = st.vals.data() + t * np;
            if (chi == nullptr) return;
            for (int e = 0; e < ctx.multiplicity[f]; ++e)
                for (size_t i = 0; i < np; ++i) term[i] = mulmod(term[i], chi[i], ctx.primes[i]);
        }
        for (size_t i = 0; i < np; ++i) {
            acc[i] += term[i];
            if (acc[i] >= ctx.primes[i]) acc[i] -= ctx.primes[i];
        }
    }

    void run(int depth, int remaining, int last, int runlen) {
        if (remaining == 0) {
            leaf(depth);
            return;
        }
        for (int part = std::min(remaining, last); part >= 1; --part) {
            int newrun = (part == last) ? runlen + 1 : 1;
            if (!step(depth, part, newrun)) continue;
            run(depth + 1, remaining - part, part, newrun);
        }
    }

    // one whole first-part subtree
    void run_first(int first) {
        seed();
        if (step(0, first, 1)) run(1, ctx.m - first, first, 1);
    }
};

}  // namespace

Int kronecker_class_sum_modular_serial(const PartitionTuple& tuple, const CharkronOptions& opts) {
    int m = tuple.size();
    if (m == 0) return 1;
    ClassSumContext ctx(tuple);
    std::string ckpt_key = "modsum|" + tuple.to_string();
    std::vector<uint64_t> total(ctx.primes.size(), 0);
    for (int first = m; first >= 1; --first) {
        std::vector<uint64_t> partial;
        if (opts.partials) {
            if (auto got = opts.partials->get(ckpt_key, first, ctx.primes)) partial = *got;
        }
        if (partial.empty()) {
            ClassSumDfs dfs(ctx);
            dfs.run_first(first);
            partial = dfs.acc;
            if (opts.partials) opts.partials->put(ckpt_key, first, ctx.primes, partial);
        }
        for (size_t i = 0; i < ctx.primes.size(); ++i) {
            total[i] += partial[i];
            if (total[i] >= ctx.primes[i]) total[i] -= ctx.primes[i];
        }
        if (opts.progress && m >= 36)
            std::cerr << "[charkron] m=" << m << " " << tuple.to_string() << " first part "
                      << first << " done\n";
    }
    Int g = crt_reconstruct(total, ctx.primes);
    if (g > ctx.bound) throw std::logic_error("CRT result exceeds the proven bound");
    return g;
}

Int kronecker_class_sum_modular(const PartitionTuple& tuple, const CharkronOptions& opts) {
    // Checkpointed runs keep the serial first-part order so resume is stable.
    if (opts.partials) return kronecker_class_sum_modular_serial(tuple, opts);
#ifndef _OPENMP
    return kronecker_class_sum_modular_serial(tuple, opts);
#else
    int m = tuple.size();
    if (m <= 12) return kronecker_class_sum_modular_serial(tuple, opts);
    ClassSumContext ctx(tuple);
    std::vector<std::vector<uint64_t>> partials(m + 1, std::vector<uint64_t>(ctx.primes.size(), 0));
#pragma omp parallel for schedule(dynamic)
    for (int first = 1; first <= m; ++first) {
        ClassSumDfs dfs(ctx);
        dfs.run_first(first);
        partials[first] = dfs.acc;
    }
    std::vector<uint64_t> total(ctx.primes.size(), 0);
    for (int first = 1; first <= m; ++first)
        for (size_t i = 0; i < ctx.primes.size(); ++i) {
            total[i] += partials[first][i];
            if (total[i] >= ctx.primes[i]) total[i] -= ctx.primes[i];
        }
    Int g = crt_reconstruct(total, ctx.primes);
    if (g > ctx.bound) throw std::logic_error("CRT result exceeds the proven bound");
    return g;
#endif
}

Int kronecker_characters(const PartitionTuple& tuple, const CharkronOptions& opts) {
    if (tuple.size() <= opts.exact_threshold)
        return kronecker_characters_exact(tuple, opts.char_cache);
    return kronecker_class_sum_modular(tuple, opts);
}

}  // namespace kron
