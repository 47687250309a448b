#pragma once

#include "kron/cube.hpp"
#include "kron/ints.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kron {

/// Sparse exact-integer element of the exterior algebra over (C^k)^{(x)d},
/// written in the sorted basis e_X. Terms are keyed by the strictly
/// increasing cell-rank sequence of X; map order is the canonical term order.
class Multivector {
public:
    using Key = std::vector<uint32_t>;
    using TermMap = std::map<Key, Int>;

    Multivector() = default;
    explicit Multivector(Cube cube) : cube_(cube) {}

    static Multivector scalar(Cube cube, Int value);
    static Multivector basis(const CubeSet& X, Int coeff = 1);

    const Cube& cube() const { return cube_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    /// Common cardinality of all keys, if any (grade). Empty for 0 or mixed.
    std::optional<int> grade() const;

    Int coefficient(const Key& key) const;
    Int coefficient(const CubeSet& X) const { return coefficient(X.cells); }

    void add_term(const Key& key, const Int& coeff);  // combines, drops zeros
    Multivector& operator+=(const Multivector& other);
    Multivector operator+(const Multivector& other) const;
    Multivector operator-() const;
    Multivector operator*(const Int& scalar) const;

    bool operator==(const Multivector&) const = default;

private:
    Cube cube_;
    TermMap terms_;
};

/// Sign of e_A wedge e_B -> e_{A u B}; A, B sorted and disjoint.
int wedge_sign(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
/// Reference implementation (plain merge count, no mask tricks).
int wedge_sign_serial(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

Multivector wedge(const Multivector& u, const Multivector& v);

/// Interior product u* -| v, the adjoint of left exterior multiplication by u:
/// <u* -| w, x> = <w, u ^ x> in the dual pairing of the sorted basis.
Multivector interior(const Multivector& u_dual, const Multivector& v);

/// Hodge star: contraction against the volume form e_{[k]^d}.
Multivector hodge_star(const Multivector& v);

/// Raising operator E_{i,i+1} acting on tensor factor `dir`, extended as a
/// derivation of the exterior algebra.
Multivector raising_apply(const Multivector& v, int dir, int i);
/// Lowering operator E_{i+1,i} on tensor factor `dir`.
Multivector lowering_apply(const Multivector& v, int dir, int i);

/// Coordinate reversal x -> k+1-x in every direction (the longest Weyl
/// element); swaps highest and lowest weight vectors.
Multivector mirror(const Multivector& v);

/// Marginals common to all terms; throws if v is 0 or not a weight vector.
Marginals weight_of(const Multivector& v);

}  // namespace kron
