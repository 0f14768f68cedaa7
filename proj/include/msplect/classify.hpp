#pragma once

#include "msplect/poisson.hpp"

#include <string>

namespace msplect {

enum class Level { None, Local, Global, Strict };

const char* level_name(Level l);
inline bool at_least(Level have, Level want) { return static_cast<int>(have) >= static_cast<int>(want); }

struct ClassificationResult {
    Level level = Level::None;
    Form lie_value;                 // L_{X_H} alpha, resp. L_X H
    std::optional<Form> primitive;  // witness for the global level
    std::string note;
};

// Conserved-quantity classification of a Hamiltonian pair: tests
// L_{X_H} alpha for zero / exact / closed in that order.
ClassificationResult classify_conserved(const PlecticSystem& sys, const HamiltonianPair& alpha);

// Continuous-symmetry classification of a multivector field X: requires X
// Hamiltonian (X ⌟ omega exact) unless `weak`, which only demands
// L_X omega = 0; then classifies L_X H.
ClassificationResult classify_symmetry(const PlecticSystem& sys, const MultiVec& X,
                                       bool weak = false);

struct NoetherReport {
    Form identity_residual;             // must vanish identically
    ClassificationResult conserved;     // alpha against X_H
    ClassificationResult symmetry;      // X_alpha against H
    bool transfer_ok = false;           // classification levels transfer per the theorem
    std::string note;
};

// Checks the Noether identity
//   L_{X_alpha} H + L_{X_H} alpha - d(X_alpha ⌟ H) - d(X_H ⌟ alpha) = 0
// and that conserved levels transfer to symmetry levels (strict conserved
// implies a global symmetry).
NoetherReport noether_correspondence(const PlecticSystem& sys, const HamiltonianPair& alpha);

} // namespace msplect
