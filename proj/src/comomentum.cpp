#include "msplect/comomentum.hpp"

#include "msplect/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace msplect {

void ComomentumMap::add_component(int k, WedgePower p, Form value) {
    if (p.degree() != k) throw std::invalid_argument("comomentum component: degree mismatch");
    if (p.is_zero()) throw std::invalid_argument("comomentum component: zero basis element");
    comps_[k].push_back(ComomentumComponent{std::move(p), std::move(value)});
}

Form ComomentumMap::evaluate(int k, const WedgePower& p) const {
    auto it = comps_.find(k);
    if (p.is_zero()) {
        // zero element of Lambda^k maps to the zero form of matching degree
        int deg = 0;
        if (it != comps_.end() && !it->second.empty()) deg = it->second.front().value.degree();
        return Form(action_.chart(), deg);
    }
    if (it == comps_.end()) throw std::invalid_argument("comomentum map: no degree-" + std::to_string(k) + " components");
    const auto& stored = it->second;
    std::vector<IndexTuple> basis;
    for (const auto& comp : stored)
        for (const auto& [idx, c] : comp.p.coeffs())
            if (std::find(basis.begin(), basis.end(), idx) == basis.end()) basis.push_back(idx);
    for (const auto& [idx, c] : p.coeffs())
        if (std::find(basis.begin(), basis.end(), idx) == basis.end()) basis.push_back(idx);

    RatMatrix A(basis.size(), stored.size());
    for (std::size_t c = 0; c < stored.size(); ++c)
        for (std::size_t r = 0; r < basis.size(); ++r) A.at(r, c) = stored[c].p.coeff(basis[r]);
    std::vector<Rat> b(basis.size(), Rat(0));
    for (std::size_t r = 0; r < basis.size(); ++r) b[r] = p.coeff(basis[r]);
    auto sol = solve_exact(A, b);
    if (!sol) throw std::invalid_argument("comomentum map: element outside the stored basis span");
    Form out(action_.chart(), stored.front().value.degree());
    for (std::size_t c = 0; c < stored.size(); ++c)
        if (!msplect::is_zero(sol->particular[c])) out += sol->particular[c] * stored[c].value;
    return out;
}

Rat comomentum_factor(const Convention& conv, int k) {
    return conv.comomentum_sign == PairingSign::Strict ? -zeta(k) : Rat(1);
}

namespace {

std::string wedge_label(const WedgePower& p) {
    if (p.coeffs().size() == 1 && p.coeffs().begin()->second == Rat(1)) {
        std::string s;
        for (int i : p.coeffs().begin()->first) s += (s.empty() ? "e" : "^e") + std::to_string(i + 1);
        return s.empty() ? "1" : s;
    }
    return p.to_string();
}

} // namespace

ResidualReport verify_comomentum(const ComomentumMap& map, const PlecticSystem& sys) {
    if (map.weak()) throw std::invalid_argument("verify_comomentum: map is weak; use the weak checker");
    const LieAlgebraData& g = map.action().algebra();
    ResidualReport rep;
    const int kmax = std::min(sys.n(), g.dim());
    for (int k = 1; k <= kmax; ++k) {
        for (const WedgePower& p : wedge_basis(g.dim(), k)) {
            Form df = ext_d(map.evaluate(k, p));
            MultiVec vp = map.action().infinitesimal_generator(p);
            Form hookterm = hook_or_zero(vp, sys.omega());
            Rat z = sys.convention().comomentum_sign == PairingSign::Strict ? zeta(k) : Rat(-1);
            Form residual = df + z * hookterm;
            if (k >= 2) {
                WedgePower dp = ce_differential(g, p);
                residual += map.evaluate(k - 1, dp);
            }
            ResidualEntry e;
            e.k = k;
            e.label = wedge_label(p);
            e.zero = residual.is_zero();
            e.residual = std::move(residual);
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

ResidualReport verify_weak_comomentum(const ComomentumMap& map, const PlecticSystem& sys) {
    ResidualReport rep;
    for (const auto& [k, comps] : map.components()) {
        Rat ck = comomentum_factor(sys.convention(), k);
        for (const auto& comp : comps) {
            MultiVec vp = map.action().infinitesimal_generator(comp.p);
            Form residual = ext_d(comp.value) - ck * hook_or_zero(vp, sys.omega());
            ResidualEntry e;
            e.k = k;
            e.label = wedge_label(comp.p);
            e.zero = residual.is_zero();
            e.residual = std::move(residual);
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

ComomentumMap build_exact_comomentum(const PlecticSystem& sys, const ActionData& action,
                                     const Form& theta) {
    if (ext_d(theta) != -sys.omega())
        throw std::invalid_argument("build_exact_comomentum: d(theta) != -omega");
    for (const auto& v : action.generators())
        if (!lie_derivative(v, theta).is_zero())
            throw std::invalid_argument("build_exact_comomentum: action does not preserve theta");
    ComomentumMap map(action, /*weak=*/true);
    const LieAlgebraData& g = action.algebra();
    const int lmax = std::min(sys.n(), g.dim());
    for (int l = 1; l <= lmax; ++l) {
        for (const WedgePower& p : lie_kernel(g, l)) {
            MultiVec vp = action.infinitesimal_generator(p);
            Form f = (-zeta(l + 1)) * hook_or_zero(vp, theta);
            map.add_component(l, p, std::move(f));
        }
    }
    return map;
}

PreservationLevel classify_preservation(const ActionData& action, const PlecticSystem& sys) {
    if (!sys.has_hamiltonian())
        throw std::logic_error("classify_preservation: system has no Hamiltonian");
    PreservationLevel out;
    out.level = Level::Strict;
    for (const auto& v : action.generators()) {
        if (!lie_derivative(v, sys.omega()).is_zero())
            throw std::invalid_argument("classify_preservation: action is not multisymplectic");
        ClassificationResult c = classify_symmetry(sys, v, /*weak=*/true);
        if (static_cast<int>(c.level) < static_cast<int>(out.level)) out.level = c.level;
        out.per_generator.push_back(std::move(c));
    }
    return out;
}

namespace {

// Hamiltonian field of a stored component under the system conventions:
// d f_k(p) = c_k V_p ⌟ omega and d alpha = sigma X ⌟ omega give
// X_{f_k(p)} = (c_k / sigma) V_p.
MultiVec component_field(const ComomentumMap& map, const PlecticSystem& sys, int k,
                         const WedgePower& p) {
    Rat c = comomentum_factor(sys.convention(), k) / sys.pairing_sign();
    return c * map.action().infinitesimal_generator(p);
}

} // namespace

MomentumConservationReport momentum_conservation_report(const ComomentumMap& map,
                                                        const PlecticSystem& sys) {
    MomentumConservationReport rep;
    rep.preservation = classify_preservation(map.action(), sys);
    Level expected = at_least(rep.preservation.level, Level::Strict) ? Level::Global : Level::Local;
    for (const auto& [k, comps] : map.components()) {
        for (const auto& comp : comps) {
            MomentumConservationEntry e;
            e.k = k;
            e.label = wedge_label(comp.p);
            HamiltonianPair pair = sys.make_pair(comp.value, component_field(map, sys, k, comp.p));
            e.conserved = classify_conserved(sys, pair);
            MultiVec vp = map.action().infinitesimal_generator(comp.p);
            e.symmetry = vp.is_zero()
                             ? ClassificationResult{Level::Strict, Form(sys.chart(), 0), {}, "zero generator"}
                             : classify_symmetry(sys, vp);
            e.transfer_ok = at_least(e.conserved.level, expected) && at_least(e.symmetry.level, expected);
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

ClosureDefect closure_defect(const ComomentumMap& map, const PlecticSystem& sys,
                             const WedgePower& p, const WedgePower& q) {
    const LieAlgebraData& g = map.action().algebra();
    const int k = p.degree();
    const int l = q.degree();
    if (k + l - 1 > sys.n())
        throw std::invalid_argument("closure_defect: degree k+l-1 exceeds n");
    if (!ce_differential(g, p).is_zero() || !ce_differential(g, q).is_zero())
        throw std::invalid_argument("closure_defect: arguments must lie in the Lie kernels");

    HamiltonianPair pa = sys.make_pair(map.evaluate(k, p), component_field(map, sys, k, p));
    HamiltonianPair pb = sys.make_pair(map.evaluate(l, q), component_field(map, sys, l, q));
    HamiltonianPair bracket = poisson(sys, pa, pb);

    WedgePower pq = wedge_bracket(g, p, q);
    Form fpq = map.evaluate(k + l - 1, pq);
    Rat sign = ((k + l + k * l) % 2 == 0) ? Rat(1) : Rat(-1);

    ClosureDefect out;
    out.defect = bracket.alpha - sign * fpq;
    out.closed = is_closed(out.defect);

    MultiVec vp = map.action().infinitesimal_generator(p);
    MultiVec vq = map.action().infinitesimal_generator(q);
    out.schouten_residual =
        hook_or_zero(zeta(k) * zeta(l) * schouten(vp, vq), sys.omega()) + ext_d(bracket.alpha);
    out.schouten_ok = out.schouten_residual.is_zero();
    return out;
}

} // namespace msplect
