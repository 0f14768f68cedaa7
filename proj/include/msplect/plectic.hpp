#pragma once

#include "msplect/exterior.hpp"
#include "msplect/linear.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msplect {

// zeta(k) = -(-1)^{k(k+1)/2}; the sign governing the observables brackets.
Rat zeta(int k);

// The two pairing conventions the source material mixes. Strict is the formal
// definition d(alpha) = -X ⌟ omega; Paper is the one the worked examples
// satisfy, d(alpha) = +X ⌟ omega (and df_k(p) = +V_p ⌟ omega for co-momentum
// components).
enum class PairingSign { Strict, Paper };

struct Convention {
    PairingSign hamiltonian_sign = PairingSign::Strict;
    PairingSign comomentum_sign = PairingSign::Strict;
    int solve_degree_slack = 2; // extra polynomial degree allowed in field solves
};

inline const char* pairing_name(PairingSign s) { return s == PairingSign::Strict ? "strict" : "paper"; }

// A Hamiltonian form/field pair with a zero residual witness of
// d(alpha) = sign * X ⌟ omega under the system convention.
struct HamiltonianPair {
    Form alpha;
    MultiVec field;
    Form residual; // d(alpha) - sign*(X ⌟ omega); must be zero
};

struct NplecticReport {
    bool closed = false;
    bool nplectic = false;            // injective V -> V ⌟ omega
    bool decided_symbolically = false; // constant-coefficient omega
    std::vector<MultiVec> kernel;      // constant kernel fields (symbolic case)
    std::string note;
};

// An n-plectic chart system: closed (n+1)-form omega, optional Hamiltonian
// form H of degree n-1, and the sign-convention record.
class PlecticSystem {
  public:
    PlecticSystem(ChartPtr chart, Form omega, Convention convention = Convention{});
    PlecticSystem(ChartPtr chart, Form omega, Form hamiltonian, Convention convention = Convention{});

    const ChartPtr& chart() const { return chart_; }
    const Form& omega() const { return omega_; }
    int n() const { return n_; }
    const Convention& convention() const { return convention_; }
    bool has_hamiltonian() const { return hamiltonian_.has_value(); }
    const HamiltonianPair& hamiltonian() const;

    // Pairing sign as a rational: d(alpha) = pairing_sign() * (X ⌟ omega).
    Rat pairing_sign() const {
        return convention_.hamiltonian_sign == PairingSign::Strict ? Rat(-1) : Rat(1);
    }

    NplecticReport check_nplectic(unsigned seed = 1) const;

    // Solves X ⌟ omega = pairing_sign() * d(alpha) exactly. For nplectic
    // omega acting on vector fields the solution is unique; otherwise one
    // representative is returned plus the constant kernel basis.
    // Throws when alpha is not Hamiltonian.
    struct FieldSolution {
        MultiVec field;
        std::vector<MultiVec> kernel; // homogeneous solutions within the ansatz
    };
    FieldSolution hamiltonian_field(const Form& alpha) const;

    // A primitive alpha of pairing_sign()^{-1} * (X ⌟ omega) via the Poincare
    // homotopy; throws when X ⌟ omega is not closed.
    Form hamiltonian_form(const MultiVec& X) const;

    HamiltonianPair pair_from_form(const Form& alpha) const;
    HamiltonianPair pair_from_field(const MultiVec& X) const;
    // Validates d(alpha) = sign * X ⌟ omega for a supplied pair.
    HamiltonianPair make_pair(Form alpha, MultiVec X) const;

    bool is_hamiltonian_form(const Form& alpha) const;
    // X is a Hamiltonian multivector field iff X ⌟ omega is exact.
    bool is_hamiltonian_field(const MultiVec& X) const;

    // Bracket grading |alpha| = n - deg(alpha) + 1.
    int grading(const Form& alpha) const { return n_ - alpha.degree() + 1; }

  private:
    void init();

    ChartPtr chart_;
    Form omega_;
    int n_;
    Convention convention_;
    std::optional<HamiltonianPair> hamiltonian_;
    bool omega_constant_ = false;
};

// True when every coefficient polynomial is constant.
template <Variance V>
bool has_constant_coefficients(const Alternating<V>& a) {
    for (const auto& [i, p] : a.comps())
        if (!p.is_constant()) return false;
    return true;
}

// Degree grading record for the observables complex.
struct Grading {
    int form_degree;      // n - k
    int bracket_grading;  // k + 1
};

} // namespace msplect
