#pragma once

#include "msplect/comomentum.hpp"

#include <string>
#include <vector>

namespace msplect {

// The multisymplectic phase space Lambda^k(T*N): base coordinates q^i plus
// one fibre coordinate p_I per strictly increasing I of length k, with
// theta = sum_I p_I dq^I and omega = -d(theta).
class PhaseSpace {
  public:
    PhaseSpace(ChartPtr base, int k);

    const ChartPtr& base_chart() const { return base_; }
    const ChartPtr& total_chart() const { return total_; }
    int k() const { return k_; }
    const Form& theta() const { return theta_; }
    const Form& omega() const { return omega_; }

    // fibre coordinate index (into the total chart) for base tuple I
    int fibre_index(const IndexTuple& I) const;
    // base coordinate i as a total-chart index (identity embedding)
    int base_index(int i) const { return i; }

    // Complete lift of a base vector field:
    // q-components carried over, p_I-components -sum_a p_{I[a->j]} dY^j/dq^{i_a}.
    MultiVec complete_lift(const MultiVec& Y) const;
    // Wedge-multiplicative lift of a decomposable multivector.
    MultiVec complete_lift(const std::vector<MultiVec>& factors) const;

    // Pullback of a base form along the projection (coordinate relabeling).
    Form position_form(const Form& alpha_base) const;

    // Momentum form by the pointwise definition:
    // P(Y) = -zeta(l+1) * (horizontal relabel of Y) ⌟ theta; linear in Y.
    Form momentum_form(const MultiVec& Y_base) const;

    // Horizontal relabel of a base multivector to the total chart.
    MultiVec horizontal(const MultiVec& Y_base) const;
    // Relabel of a base multivector field that lives on the total chart
    // already (coefficients must only involve q's).
    Form to_total(const Form& alpha_base) const { return position_form(alpha_base); }

  private:
    ChartPtr base_;
    ChartPtr total_;
    int k_;
    std::vector<IndexTuple> fibre_tuples_;
    Form theta_;
    Form omega_;
};

PhaseSpace build_phase_space(ChartPtr base, int k);

struct PhaseBracketReport {
    std::vector<ResidualEntry> entries;
    bool all_zero() const {
        for (const auto& e : entries)
            if (!e.zero) return false;
        return !entries.empty();
    }
};

// The three bracket relations between momentum and position forms, checked
// exactly on the supplied data (decomposable multivectors given by factors,
// base forms):
//   {P(Y1),P(Y2)} + (-1)^{ts+s+t} P([Y1,Y2])
//                 + zeta(s+1)zeta(t+1) d(Y1# ⌟ Y2# ⌟ theta) = 0
//   {pi*alpha, pi*beta} = 0
//   {pi*alpha, P(Y)} + zeta(j) pi*(Y ⌟ d alpha) = 0
// Momentum arguments must be wedges of pairwise commuting fields (sampled
// Lie-kernel elements).
PhaseBracketReport verify_phase_brackets(const PhaseSpace& ps,
                                         const std::vector<std::vector<MultiVec>>& momentum_factors,
                                         const std::vector<Form>& base_forms);

// Randomized driver: samples wedges of commuting polynomial fields (degrees
// <= k) as Lie-kernel inputs plus random base forms, `cases` rounds.
PhaseBracketReport random_phase_bracket_check(const ChartPtr& base, int k, int cases,
                                              unsigned seed);

} // namespace msplect
