#pragma once

#include "kron/charkron.hpp"
#include "kron/hwv.hpp"
#include "kron/partition.hpp"

#include <string>
#include <vector>

namespace kron {

/// rho_k^n: prepend (n > 0) or remove (n < 0) |n| parts of size k in every
/// entry. Removal requires each entry to hold that many parts equal to k.
Partition rho(const Partition& lambda, int k, int n = 1);
PartitionTuple rho(const PartitionTuple& tuple, int k, int n = 1);

/// a = max_i l(lambda_i), b = min_i #{parts of lambda_i equal to k}; the
/// sequence {g(rho_k^n lambda)} is supported on n in [-b, k^{d-1} - a].
struct SequenceRange {
    int lo = 0;
    int hi = 0;
};
SequenceRange sequence_range(const PartitionTuple& tuple, int d, int k);

/// Self-complementarity in the k^{d-1} x k rectangle, phrased d-free:
/// m divisible by k/2, l(lambda) <= L and lambda_j + lambda_{L+1-j} = k for
/// L = 2m/k. Defined for even k only.
bool k_complementary(const PartitionTuple& tuple, int k);
bool k_complementary(const Partition& lambda, int k, int m);

enum class Backend { kAuto, kHwv, kCharacters };

struct SequenceOptions {
    Backend backend = Backend::kAuto;
    /// Auto backend runs hwv only when the weight space stays at or below
    /// this many basis elements.
    long long hwv_auto_cap = 400;
    CharkronOptions charkron;
    CoeffCache* coeff_cache = nullptr;
    bool progress = false;
};

/// The sequence {g(rho_k^n lambda)} over its support range.
struct KroneckerSequence {
    PartitionTuple base;
    int d = 0;
    int k = 0;
    SequenceRange range;
    std::vector<Int> values;           // index 0 is n = range.lo
    std::vector<std::string> backends;  // "hwv" or "characters" per entry
};

KroneckerSequence build_sequence(const PartitionTuple& tuple, int d, int k,
                                 const SequenceOptions& opts = {});

struct ShapeReport {
    bool unimodal = false;
    bool symmetric = false;
    /// Interior offsets i (0-based into values) where v_i^2 >= v_{i-1} v_{i+1}.
    std::vector<int> log_concave_indices;
};

ShapeReport shape_report(const std::vector<Int>& values);
ShapeReport shape_report(const KroneckerSequence& seq);

/// One Kronecker coefficient through the chosen backend.
Int kronecker_coefficient(const PartitionTuple& tuple, int d, int k,
                          const SequenceOptions& opts = {}, std::string* backend_used = nullptr);

/// Bounded sweep over base labels: every d-tuple of partitions of m <= max_m
/// with parts <= k and no removable part k (so each rho_k-sequence appears
/// once). Sequences are built and shape-checked; returns the reports.
struct SweepEntry {
    KroneckerSequence seq;
    ShapeReport shape;
    bool complementary = false;  // meaningful for even k
};
std::vector<SweepEntry> sweep_sequences(int d, int k, int max_m,
                                        const SequenceOptions& opts = {});

}  // namespace kron
