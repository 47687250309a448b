#pragma once

#include "kron/cayley.hpp"
#include "kron/hwv.hpp"
#include "kron/seqlab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kron {

/// Matrix of v -> omega ^ v between two HWV spaces, in HWV coordinates.
/// Construction verifies that every image lies in the span of the target
/// basis; a residual is a sign-convention bug and throws.
struct LefschetzMapMatrix {
    HwvBasis source;
    HwvBasis target;
    std::vector<std::vector<Rat>> columns;  // one coordinate vector per source HWV vector
    int rank = 0;
};

LefschetzMapMatrix lefschetz_matrix(const PartitionTuple& lambda, int d, int k,
                                    long long budget = kDefaultKernelBudget);

/// Step from a prebuilt source HWV basis into a prebuilt target.
struct StepMatrix {
    std::vector<std::vector<Rat>> columns;
    int rank = 0;
};
StepMatrix lefschetz_step(const HwvBasis& source, const HwvBasis& target,
                          const Multivector& omega);

struct LpVerdict {
    PartitionTuple base;
    int d = 0, k = 0;
    SequenceRange range;
    std::vector<Int> dims;   // per n in range
    std::vector<int> ranks;  // rank of U_n -> U_{n+1}
    int pivot = 0;           // chosen n_0
    bool holds = false;
};
LpVerdict check_lp(const PartitionTuple& lambda, int d, int k,
                   long long budget = kDefaultKernelBudget);

struct HlpPair {
    int n = 0, nstar = 0;
    Int dim_low, dim_high;
    int rank = 0;
    bool isomorphism = false;
};
struct HlpVerdict {
    PartitionTuple base;
    int d = 0, k = 0;
    std::vector<HlpPair> pairs;
    bool holds = false;
};
HlpVerdict check_hlp(const PartitionTuple& lambda, int d, int k,
                     long long budget = kDefaultKernelBudget);

struct LpFullDegree {
    int n = 0;
    Int dim_src, dim_dst;
    Int rank;
    bool full = false;
};
struct LpFullVerdict {
    int d = 0, k = 0;
    bool holds = false;
    std::string mode;     // "exhaustive" or "witness"
    std::string witness;  // for witness mode: which kernel vector shows failure
    std::vector<LpFullDegree> degrees;
};
/// Full-exterior-algebra Lefschetz property LP_{d,k}. Exhaustive ranks when
/// k^d fits the ambient budget; otherwise the documented kernel witnesses
/// (omega itself for odd k, the slice vector for even k > 2).
LpFullVerdict check_lp_full(int d, int k, long long ambient_budget = 24);

/// Grade-scaling counting operator H: multiply grade l by (l - 2^{d-1}).
Multivector sl2_h(const Multivector& v);
/// [X, Y] e_T for the operators X = omega ^ ., Y = omega* -| . built from
/// omega_{d,k}; the k = 4 negative control of the sl(2) relations.
Multivector sl2_commutator(int d, int k, const CubeSet& T);

struct Sl2Report {
    int d = 0;
    long long checked = 0;
    bool holds = false;
    std::vector<std::string> failures;  // first few, printable
};
/// Verify [X,Y]=H, [H,X]=2X, [H,Y]=-2Y for k = 2: exhaustively for d = 3,
/// sampled plus all magic-weight vectors for larger odd d.
Sl2Report sl2_check(int d, int samples = 200, uint64_t seed = 1);

/// All n-subsets of the cube's cells in lex order (the grade-n basis).
std::vector<std::vector<uint32_t>> grade_basis(const Cube& cube, int n);

/// Primitive class P^n = ker(Y) in grade n for k = 2: primitive integer
/// coordinate vectors over grade_basis(cube, n).
std::vector<std::vector<Int>> primitive_basis(int d, int n);

/// dim X^i P^{n-2i} for the Lefschetz decomposition of grade n (k = 2).
std::vector<Int> lefschetz_decomposition_dims(int d, int n);

struct StableInjectivityReport {
    PartitionTuple base;
    int k = 0, l = 0;
    Int dim;                    // dim HWV in V_k
    bool small_injective = false;   // L_k injective
    bool embedded_injective = false;  // L_l injective on embedded HWVs
    Int g_small, g_raised;      // g(lambda), g(rho_l lambda) via characters
    bool holds = false;
};
StableInjectivityReport stable_injectivity_check(const PartitionTuple& lambda, int k, int l,
                                                 long long budget = kDefaultKernelBudget);

}  // namespace kron
