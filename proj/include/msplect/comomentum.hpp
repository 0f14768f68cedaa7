#pragma once

#include "msplect/action.hpp"
#include "msplect/classify.hpp"

#include <map>
#include <string>
#include <vector>

namespace msplect {

struct ComomentumComponent {
    WedgePower p;
    Form value;
};

// A (weak) homotopy co-momentum map: per-degree linear maps given by their
// values on a chosen basis (the Lie-kernel basis for weak maps); evaluation
// on other elements is by exact linear extension in that basis.
class ComomentumMap {
  public:
    ComomentumMap(ActionData action, bool weak) : action_(std::move(action)), weak_(weak) {}

    const ActionData& action() const { return action_; }
    bool weak() const { return weak_; }

    void add_component(int k, WedgePower p, Form value);
    const std::map<int, std::vector<ComomentumComponent>>& components() const { return comps_; }
    bool has_degree(int k) const { return comps_.count(k) > 0; }

    // Linear extension; throws when p lies outside the stored span.
    Form evaluate(int k, const WedgePower& p) const;

  private:
    ActionData action_;
    bool weak_;
    std::map<int, std::vector<ComomentumComponent>> comps_;
};

struct ResidualEntry {
    int k = 0;
    std::string label;
    Form residual;
    bool zero = false;
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;
    bool all_zero() const {
        for (const auto& e : entries)
            if (!e.zero) return false;
        return !entries.empty();
    }
};

// Effective comomentum pairing factor: the residual checked is
//   df_k(p) - c_k * (V_p ⌟ omega)   with  c_k = -zeta(k)  (strict)
//                                         c_k = +1        (paper examples).
Rat comomentum_factor(const Convention& conv, int k);

// Full-map check of -f_{k-1}(@p) = d f_k(p) + zeta(k) V_p ⌟ omega on every
// standard basis wedge, k = 1..min(n, dim g). Under the paper convention the
// zeta(k) factor is replaced by -1 (the examples' df_k(p) = +V_p ⌟ omega).
ResidualReport verify_comomentum(const ComomentumMap& map, const PlecticSystem& sys);

// Weak check d f_k(p) = c_k V_p ⌟ omega on the stored (Lie-kernel) basis.
ResidualReport verify_weak_comomentum(const ComomentumMap& map, const PlecticSystem& sys);

// For omega = -d(theta) and a theta-preserving action, the weak map
// f_l(p) = -zeta(l+1) V_p ⌟ theta on each Lie-kernel basis element.
// Checks L_{V_xi} theta = 0 and d(theta) = -omega; the result passes
// verify_weak_comomentum under the strict convention.
ComomentumMap build_exact_comomentum(const PlecticSystem& sys, const ActionData& action,
                                     const Form& theta);

struct PreservationLevel {
    Level level = Level::None;
    std::vector<ClassificationResult> per_generator;
};

// Minimum classification of L_{V_xi} H over the basis generators; requires a
// multisymplectic action (L_{V_xi} omega = 0).
PreservationLevel classify_preservation(const ActionData& action, const PlecticSystem& sys);

struct MomentumConservationEntry {
    int k = 0;
    std::string label;
    ClassificationResult conserved; // of f_k(p)
    ClassificationResult symmetry;  // of V_p
    bool transfer_ok = false;
};

struct MomentumConservationReport {
    PreservationLevel preservation;
    std::vector<MomentumConservationEntry> entries;
    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.transfer_ok) return false;
        return true;
    }
};

// Conservation/symmetry classification of every stored component against the
// H-preservation transfer table (local/global preservation -> at least local;
// strict preservation -> at least global).
MomentumConservationReport momentum_conservation_report(const ComomentumMap& map,
                                                        const PlecticSystem& sys);

struct ClosureDefect {
    Form defect;     // {f_k(p), f_l(q)} - (-1)^{k+l+kl} f_{k+l-1}([p,q])
    bool closed = false;
    Form schouten_residual; // zeta(k)zeta(l)[V_p,V_q] ⌟ omega + d{f_k(p),f_l(q)}
    bool schouten_ok = false;
};

// Bracket-vs-momentum closure defect for Lie-kernel elements p, q.
ClosureDefect closure_defect(const ComomentumMap& map, const PlecticSystem& sys,
                             const WedgePower& p, const WedgePower& q);

} // namespace msplect
