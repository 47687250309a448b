#include "kron/seqlab.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

namespace kron {

Partition rho(const Partition& lambda, int k, int n) {
    if (n == 0) return lambda;
    std::vector<int> parts = lambda.parts();
    if (n > 0) {
        if (!parts.empty() && parts[0] > k)
            throw std::invalid_argument("rho_k needs parts at most k");
        parts.insert(parts.begin(), n, k);
    } else {
        for (int t = 0; t < -n; ++t) {
            if (parts.empty() || parts[0] != k)
                throw std::invalid_argument("rho_k^{-1}: no part equal to k to remove");
            parts.erase(parts.begin());
        }
    }
    return Partition(std::move(parts));
}

PartitionTuple rho(const PartitionTuple& tuple, int k, int n) {
    std::vector<Partition> out;
    out.reserve(tuple.d());
    for (const Partition& p : tuple.entries()) out.push_back(rho(p, k, n));
    return PartitionTuple(std::move(out));
}

SequenceRange sequence_range(const PartitionTuple& tuple, int d, int k) {
    if (tuple.d() != d) throw std::invalid_argument("tuple length does not match d");
    if (tuple.max_part() > k) throw std::invalid_argument("tuple parts must be at most k");
    long long slice = 1;
    for (int i = 0; i < d - 1; ++i) slice *= k;
    int a = 0, b = 1 << 30;
    for (const Partition& p : tuple.entries()) {
        a = std::max(a, p.length());
        b = std::min(b, p.count_parts_equal(k));
    }
    return SequenceRange{-b, static_cast<int>(slice) - a};
}

bool k_complementary(const Partition& lambda, int k, int m) {
    if (k % 2 != 0) throw std::invalid_argument("k-complementarity is defined for even k");
    if ((2 * m) % k != 0) return false;
    int L = 2 * m / k;
    if (lambda.length() > L) return false;
    for (int j = 1; j <= L; ++j)
        if (lambda.part(j) + lambda.part(L + 1 - j) != k) return false;
    return true;
}

bool k_complementary(const PartitionTuple& tuple, int k) {
    if (k % 2 != 0) throw std::invalid_argument("k-complementarity is defined for even k");
    int m = tuple.size();
    if ((2 * m) % k != 0) return false;
    for (const Partition& p : tuple.entries())
        if (!k_complementary(p, k, m)) return false;
    return true;
}

namespace {

// Try the hwv backend under the auto cap; nullopt when over cap.
std::optional<Int> try_hwv(const PartitionTuple& tuple, int d, int k, long long cap) {
    try {
        return kronecker_hwv(tuple, d, k, cap);
    } catch (const BudgetError&) {
        return std::nullopt;
    }
}

}  // namespace

Int kronecker_coefficient(const PartitionTuple& tuple, int d, int k, const SequenceOptions& opts,
                          std::string* backend_used) {
    if (tuple.d() != d) throw std::invalid_argument("tuple length does not match d");
    if (opts.coeff_cache) {
        if (auto v = opts.coeff_cache->get(tuple)) {
            if (backend_used) *backend_used = "cache";
            return *v;
        }
    }
    Int value;
    std::string backend;
    switch (opts.backend) {
        case Backend::kHwv:
            value = kronecker_hwv(tuple, d, k);
            backend = "hwv";
            break;
        case Backend::kCharacters:
            value = kronecker_characters(tuple, opts.charkron);
            backend = "characters";
            break;
        case Backend::kAuto: {
            if (tuple.max_part() <= k) {
                if (auto v = try_hwv(tuple, d, k, opts.hwv_auto_cap)) {
                    value = *v;
                    backend = "hwv";
                    break;
                }
            }
            value = kronecker_characters(tuple, opts.charkron);
            backend = "characters";
            break;
        }
    }
    if (backend_used) *backend_used = backend;
    if (opts.coeff_cache) opts.coeff_cache->put(tuple, value);
    return value;
}

KroneckerSequence build_sequence(const PartitionTuple& tuple, int d, int k,
                                 const SequenceOptions& opts) {
    KroneckerSequence seq;
    seq.base = tuple;
    seq.d = d;
    seq.k = k;
    seq.range = sequence_range(tuple, d, k);
    for (int n = seq.range.lo; n <= seq.range.hi; ++n) {
        PartitionTuple entry = rho(tuple, k, n);
        std::string backend;
        seq.values.push_back(kronecker_coefficient(entry, d, k, opts, &backend));
        seq.backends.push_back(backend);
        if (opts.progress)
            std::cerr << "[sequence] n=" << n << " g=" << to_dec(seq.values.back()) << " ("
                      << backend << ")\n";
    }
    return seq;
}

ShapeReport shape_report(const std::vector<Int>& values) {
    if (values.empty()) throw std::invalid_argument("shape report needs a nonempty sequence");
    ShapeReport rep;
    size_t n = values.size();
    // unimodal: nondecreasing then nonincreasing
    size_t i = 0;
    while (i + 1 < n && values[i] <= values[i + 1]) ++i;
    while (i + 1 < n && values[i] >= values[i + 1]) ++i;
    rep.unimodal = (i + 1 == n) || n == 1;
    rep.symmetric = true;
    for (size_t j = 0; j < n; ++j)
        if (values[j] != values[n - 1 - j]) rep.symmetric = false;
    for (size_t j = 1; j + 1 < n; ++j)
        if (values[j] * values[j] >= values[j - 1] * values[j + 1])
            rep.log_concave_indices.push_back(static_cast<int>(j));
    return rep;
}

ShapeReport shape_report(const KroneckerSequence& seq) { return shape_report(seq.values); }

std::vector<SweepEntry> sweep_sequences(int d, int k, int max_m, const SequenceOptions& opts) {
    std::vector<SweepEntry> out;
    for (int m = 0; m <= max_m; ++m) {
        auto parts = partitions_of(m, k);
        std::vector<Partition> cur;
        std::function<void(int)> rec = [&](int i) {
            if (i == d) {
                PartitionTuple t(cur);
                // sequence bases have b = 0: some entry carries no part k,
                // so each rho_k-sequence is swept exactly once
                if (sequence_range(t, d, k).lo != 0) return;
                SweepEntry e;
                e.seq = build_sequence(t, d, k, opts);
                e.shape = shape_report(e.seq);
                e.complementary = (k % 2 == 0) && k_complementary(t, k);
                out.push_back(std::move(e));
                return;
            }
            for (const Partition& p : parts) {
                cur.push_back(p);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

}  // namespace kron
