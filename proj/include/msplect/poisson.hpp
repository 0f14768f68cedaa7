#pragma once

#include "msplect/plectic.hpp"

#include <vector>

namespace msplect {

// Generalized Poisson bracket {a, b} = (-1)^{|b|} X_b ⌟ X_a ⌟ omega, returned
// as a Hamiltonian pair whose field satisfies the system pairing convention
// (the Schouten bracket of the input fields up to that sign).
HamiltonianPair poisson(const PlecticSystem& sys, const HamiltonianPair& a,
                        const HamiltonianPair& b);

// Element of the Lie n-algebra of observables: level i holds (n-1-i)-forms,
// level 0 additionally carries the Hamiltonian field.
struct Observable {
    int level = 0;
    Form value;
    MultiVec field; // meaningful at level 0 only

    static Observable hamiltonian(const PlecticSystem& sys, const HamiltonianPair& p) {
        return Observable{0, p.alpha, p.field};
    }
    static Observable element(const PlecticSystem& sys, int level, Form value) {
        return Observable{level, std::move(value), MultiVec(value.chart(), 1)};
    }
};

// l_1 = d on positive levels, 0 on level 0; for k > 1,
// l_k = zeta(k) X_{a_k} ⌟ ... ⌟ X_{a_1} ⌟ omega when every argument sits at
// level 0, and 0 otherwise. Throws if a level-0 argument is not Hamiltonian.
Observable observable_bracket(const PlecticSystem& sys, const std::vector<Observable>& args);

// Right side of the iterated-contraction differential lemma:
// d(X_m ⌟ ... ⌟ X_1 ⌟ omega) =
//   (-1)^m sum_{i<j} (-1)^{i+j} X_m ⌟...⌟ X̂_j ⌟...⌟ X̂_i ⌟...⌟ X_1 ⌟ [X_i,X_j] ⌟ omega.
Form iterated_contraction(const PlecticSystem& sys, const std::vector<MultiVec>& fields);
Form iterated_contraction_d_rhs(const PlecticSystem& sys, const std::vector<MultiVec>& fields);

// One (p,q)-unshuffle with its permutation sign and the Koszul sign for the
// given argument degrees.
struct UnshuffleTerm {
    std::vector<int> permutation; // images sigma(1..m), 0-based entries
    int sign;                     // (-1)^sigma
    int koszul;                   // epsilon(sigma) for the supplied degrees
};
std::vector<UnshuffleTerm> unshuffles(int p, int q, const std::vector<int>& degrees);

// The m-th generalized Jacobi identity of the observables complex, evaluated
// on the given elements; returns the residual (zero on success).
Form linfty_identity_check(const PlecticSystem& sys, int m, const std::vector<Observable>& elems);

} // namespace msplect
