#pragma once

#include "kron/cache.hpp"
#include "kron/ints.hpp"
#include "kron/partition.hpp"

#include <vector>

namespace kron {

/// Conjugacy class of S_m, one per cycle type.
struct ConjugacyClass {
    Partition cycle_type;
    Int size;  // m! / prod_i i^{m_i} m_i!
};

std::vector<ConjugacyClass> conjugacy_classes(int m);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule, memoized on
/// (shape, remaining cycle parts) within the evaluation.
Int mn_character(const Partition& lambda, const Partition& mu, CharCache* cache = nullptr);

struct CharkronOptions {
    bool progress = false;          // stderr lines on long class sums
    CharCache* char_cache = nullptr;
    PartialsCache* partials = nullptr;
    /// Tuples of size above this run through the modular class-sum; at or
    /// below, the exact big-integer sum with the m! divisibility check.
    int exact_threshold = 26;
};

/// g(lambda) = (1/m!) sum over classes of |C| prod_i chi^{lambda_i}(C).
Int kronecker_characters(const PartitionTuple& tuple, const CharkronOptions& opts = {});

/// Reference path: exact big-integer class sum; asserts the sum is divisible
/// by m!. Practical up to m around 32.
Int kronecker_characters_exact(const PartitionTuple& tuple, CharCache* cache = nullptr);

/// Fast path: single pass over class prefixes carrying per-factor sparse
/// border-strip state vectors, in multi-modular arithmetic with a proven
/// prime bound, reconstructed by CRT. Serial reference + OpenMP variant.
Int kronecker_class_sum_modular(const PartitionTuple& tuple, const CharkronOptions& opts = {});
Int kronecker_class_sum_modular_serial(const PartitionTuple& tuple,
                                       const CharkronOptions& opts = {});

}  // namespace kron
