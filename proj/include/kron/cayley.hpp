#pragma once

#include "kron/exterior.hpp"

#include <vector>

namespace kron {

/// The Cayley form omega_{d,k} in grade k, normalized so that every index set
/// (a magnitude-1 magic set) carries coefficient +-1. The raw sum over all
/// (S_k)^d permutation tuples produces k! times this vector; the k! is the
/// reparametrization orbit, fixed by taking pi_1 = id.
struct CayleyForm {
    int d = 0;
    int k = 0;
    Multivector body;
};

CayleyForm build_cayley(int d, int k);

/// Literal sum over all (k!)^d permutation tuples, divided by k!.
/// Kept as the reference path; build_cayley fixes pi_1 = id instead.
Multivector build_cayley_definition(int d, int k);

/// k = 2 pairing form: sum over i in I+ of e_i ^ e_{ibar}.
Multivector build_cayley_pairing(int d);

/// omega^n by iterated wedge; zero when n exceeds k^{d-1}.
Multivector omega_power(int d, int k, int n);

/// Image of omega_{d,k} in Lambda V_l under the order-preserving relabeling
/// [k] -> I_j per direction; I_j are strictly increasing k-subsets of [l].
Multivector embed_omega(int d, int l, const std::vector<std::vector<int>>& I);

}  // namespace kron
