#include "msplect/classify.hpp"

#include <stdexcept>

namespace msplect {

const char* level_name(Level l) {
    switch (l) {
        case Level::Strict: return "strict";
        case Level::Global: return "global";
        case Level::Local: return "local";
        case Level::None: return "none";
    }
    return "?";
}

namespace {

ClassificationResult classify_form(const Form& L) {
    ClassificationResult res;
    res.lie_value = L;
    if (L.is_zero()) {
        res.level = Level::Strict;
        return res;
    }
    ExactnessResult ex = is_exact(L);
    if (ex.exact) {
        res.level = Level::Global;
        res.primitive = ex.primitive;
        if (L.degree() >= 1) res.note = "global = local on a star-shaped chart";
        return res;
    }
    if (is_closed(L)) {
        res.level = Level::Local;
        res.note = L.degree() == 0 ? "closed 0-form (nonzero constant): local only"
                                   : "closed but not exact";
        return res;
    }
    res.level = Level::None;
    return res;
}

} // namespace

ClassificationResult classify_conserved(const PlecticSystem& sys, const HamiltonianPair& alpha) {
    if (!sys.has_hamiltonian()) throw std::logic_error("classify_conserved: system has no Hamiltonian");
    Form L = lie_derivative(sys.hamiltonian().field, alpha.alpha);
    return classify_form(L);
}

ClassificationResult classify_symmetry(const PlecticSystem& sys, const MultiVec& X, bool weak) {
    if (!sys.has_hamiltonian()) throw std::logic_error("classify_symmetry: system has no Hamiltonian");
    if (weak) {
        if (!lie_derivative(X, sys.omega()).is_zero())
            throw std::invalid_argument("classify_symmetry: L_X omega != 0");
    } else if (!sys.is_hamiltonian_field(X)) {
        throw std::invalid_argument("classify_symmetry: X is not Hamiltonian and weak flag is unset");
    }
    Form L = lie_derivative(X, sys.hamiltonian().alpha);
    return classify_form(L);
}

NoetherReport noether_correspondence(const PlecticSystem& sys, const HamiltonianPair& alpha) {
    if (!sys.has_hamiltonian())
        throw std::logic_error("noether_correspondence: system has no Hamiltonian");
    const HamiltonianPair& H = sys.hamiltonian();
    NoetherReport rep;
    rep.identity_residual = lie_derivative(alpha.field, H.alpha) +
                            lie_derivative(H.field, alpha.alpha) -
                            ext_d(hook_or_zero(alpha.field, H.alpha)) -
                            ext_d(hook_or_zero(H.field, alpha.alpha));
    rep.conserved = classify_conserved(sys, alpha);
    rep.symmetry = classify_symmetry(sys, alpha.field);
    switch (rep.conserved.level) {
        case Level::Strict:
            rep.transfer_ok = at_least(rep.symmetry.level, Level::Global);
            rep.note = "strict conserved -> global symmetry";
            break;
        case Level::Global:
            rep.transfer_ok = at_least(rep.symmetry.level, Level::Global);
            break;
        case Level::Local:
            rep.transfer_ok = at_least(rep.symmetry.level, Level::Local);
            break;
        case Level::None:
            rep.transfer_ok = true; // theorem places no constraint
            break;
    }
    return rep;
}

} // namespace msplect
