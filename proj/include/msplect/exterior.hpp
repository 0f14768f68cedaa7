#pragma once

#include "msplect/alternating.hpp"

#include <optional>
#include <vector>

namespace msplect {

// Graded product. Both arguments must be the same kind and live on the same
// chart; a ^ b = (-1)^{|a||b|} b ^ a.
template <Variance V>
Alternating<V> wedge(const Alternating<V>& a, const Alternating<V>& b) {
    require_same_chart(a.chart(), b.chart());
    Alternating<V> r(a.chart(), a.degree() + b.degree());
    for (const auto& [ia, pa] : a.comps()) {
        for (const auto& [ib, pb] : b.comps()) {
            IndexTuple merged;
            int sign = merge_sign(ia, ib, merged);
            if (sign == 0) continue;
            Polynomial c = pa * pb;
            if (sign < 0) c = -c;
            r.add_term(std::move(merged), c);
        }
    }
    return r;
}

// Contraction X ⌟ tau for a decomposable X = X_1 ^ ... ^ X_k read as
// X_k ⌟ ... ⌟ X_1 ⌟ tau, extended bilinearly. Throws when deg X > deg tau.
Form hook(const MultiVec& X, const Form& tau);

// Same, but degree overflow (and degree-0 X) contract to the zero form.
Form hook_or_zero(const MultiVec& X, const Form& tau);

// Insertion of a 1-form into a multivector:
// beta ⌟ (X_1^...^X_k) = sum_a (-1)^{a-1} beta(X_a) X_1^...^X̂_a^...^X_k.
MultiVec insert_oneform(const Form& beta, const MultiVec& X);

// Exterior derivative.
Form ext_d(const Form& tau);

// L_X tau = d(X ⌟ tau) - (-1)^k X ⌟ d tau.
Form lie_derivative(const MultiVec& X, const Form& tau);

// Schouten bracket, degree k + l - 1; coincides with the Lie bracket of
// vector fields at k = l = 1. Degree-0 arguments act as derivations:
// [X, f] = (-1)^{k-1} df ⌟ X.
MultiVec schouten(const MultiVec& X, const MultiVec& Y);

// Poincare homotopy operator K on a star-shaped chart about `base`:
// d(K tau) + K(d tau) = tau for deg tau >= 1. Radial integrals of polynomials
// stay polynomial, so this is exact. Throws on degree 0.
Form poincare_homotopy(const Form& tau, const std::vector<Rat>& base);
Form poincare_homotopy(const Form& tau); // base = origin

bool is_closed(const Form& tau);

// Degree 0: exact iff identically zero. Degree >= 1 on a star-shaped chart:
// exact iff closed, with primitive K(tau).
struct ExactnessResult {
    bool exact;
    std::optional<Form> primitive;
};
ExactnessResult is_exact(const Form& tau, const std::vector<Rat>& base);
ExactnessResult is_exact(const Form& tau);

} // namespace msplect
