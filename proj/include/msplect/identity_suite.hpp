#pragma once

#include "msplect/action.hpp"
#include "msplect/random_gen.hpp"

#include <functional>
#include <string>
#include <vector>

namespace msplect {

struct IdentityRun {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure; // printed residual of the first failing case
    bool ok() const { return failures == 0 && cases > 0; }
};

// Randomized exact-zero checks of the graded-calculus identities:
//   dL:           d L_X tau - (-1)^{k+1} L_X d tau
//   bracket_hook: [X,Y] ⌟ tau - (-1)^{(k+1)l} L_X(Y ⌟ tau) + Y ⌟ L_X tau
//   L_bracket:    L_{[X,Y]} tau - (-1)^{(k+1)(l+1)} L_X L_Y tau + L_Y L_X tau
//   wedge_rule:   L_{X^Y} tau - (-1)^l Y ⌟ L_X tau - L_Y(X ⌟ tau)
//   interior:     [X,Y] ⌟ tau + Y ⌟ d(X ⌟ tau) - (-1)^l d(Y ⌟ X ⌟ tau)
//                 - (-1)^{kl+k} X ⌟ Y ⌟ d tau + (-1)^{kl+k+l} X ⌟ d(Y ⌟ tau)
//   schouten_antisym, schouten_jacobi, schouten_leibniz
//   homotopy:     d K tau + K d tau - tau   (degree >= 1)
// Each runs `cases` random instances on charts of dimension <= max_dim with
// coefficient degree <= max_poly_degree.
std::vector<IdentityRun> run_identity_suite(unsigned seed, int cases, int max_dim,
                                            int max_poly_degree);

// Lie-theory identities over randomized algebra/action data:
//   extended_cartan: (-1)^k d(V_p ⌟ tau) - V_{@p} ⌟ tau
//                    - sum_i (-1)^i (V_{xi_1}^..^V̂_{xi_i}^..) ⌟ L_{V_{xi_i}} tau
//                    - V_p ⌟ d tau
//   generator_bracket: V_{[p,q]} + [V_p, V_q]
//   ce_square: @(@p)
//   kernel: @(kernel basis) = 0 and rank-nullity
//   lemma_formula: @(p^q) - @p^q - (-1)^k p^@q - (-1)^k [p,q]
std::vector<IdentityRun> run_lie_identity_suite(unsigned seed, int cases);

} // namespace msplect
