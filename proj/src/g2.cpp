#include "msplect/g2.hpp"

#include "msplect/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace msplect {

namespace {

// sign of the permutation (I, complement of I) of 0..6
int complement_sign(const IndexTuple& I, IndexTuple& comp) {
    comp.clear();
    std::vector<bool> used(7, false);
    for (int i : I) used[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < 7; ++i)
        if (!used[static_cast<std::size_t>(i)]) comp.push_back(i);
    IndexTuple full = I;
    full.insert(full.end(), comp.begin(), comp.end());
    int inv = 0;
    for (std::size_t a = 0; a < full.size(); ++a)
        for (std::size_t b = a + 1; b < full.size(); ++b)
            if (full[a] > full[b]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace

Form phi0(const ChartPtr& chart) {
    if (chart->dim() != 7) throw std::invalid_argument("phi0: chart must be 7-dimensional");
    Form phi(chart, 3);
    const int dim = 7;
    auto one = Polynomial::constant(dim, Rat(1));
    auto minus = Polynomial::constant(dim, Rat(-1));
    phi.add_term({0, 1, 2}, one);
    phi.add_term({0, 3, 4}, one);
    phi.add_term({0, 5, 6}, minus);
    phi.add_term({1, 3, 5}, one);
    phi.add_term({1, 6, 4}, minus);
    phi.add_term({2, 3, 6}, minus);
    phi.add_term({2, 4, 5}, one);
    return phi;
}

G2Data G2Data::standard(ChartPtr chart) {
    G2Data g;
    g.chart_ = std::move(chart);
    g.phi_ = phi0(g.chart_);
    g.finalize();
    return g;
}

G2Data G2Data::standard7() { return standard(standard_chart(7)); }

G2Data G2Data::torus() {
    G2Data g;
    g.chart_ = make_chart({"t", "x1", "x2", "x3", "y1", "y2", "y3"});
    Form phi(g.chart_, 3);
    auto one = Polynomial::constant(7, Rat(1));
    auto minus = Polynomial::constant(7, Rat(-1));
    // Omega_3 - dt ^ omega_3 in real coordinates
    phi.add_term({1, 2, 3}, one);
    phi.add_term({1, 5, 6}, minus);
    phi.add_term({4, 2, 6}, minus);
    phi.add_term({4, 5, 3}, minus);
    phi.add_term({0, 1, 4}, minus);
    phi.add_term({0, 2, 5}, minus);
    phi.add_term({0, 3, 6}, minus);
    g.phi_ = std::move(phi);
    g.finalize();
    return g;
}

void G2Data::finalize() {
    if (chart_->dim() != 7) throw std::invalid_argument("G2 structure requires a 7-dim chart");
    if (!is_closed(phi_)) throw std::invalid_argument("G2: d(phi) != 0");

    // orientation from (e1 ⌟ phi)^(e1 ⌟ phi)^phi = -6 vol
    Form i1 = hook(MultiVec::basis(chart_, {0}), phi_);
    Form top = wedge(wedge(i1, i1), phi_);
    Polynomial c = top.coeff({0, 1, 2, 3, 4, 5, 6});
    if (!c.is_constant() || msplect::is_zero(c.constant_value()))
        throw std::invalid_argument("G2: defining identity degenerate on e1");
    Rat or_rat = c.constant_value() / Rat(-6);
    if (or_rat != Rat(1) && or_rat != Rat(-1))
        throw std::invalid_argument("G2: |e1|^2 != 1 under the defining identity");
    orientation_ = or_rat == Rat(1) ? 1 : -1;
    vol_ = Form::basis(chart_, {0, 1, 2, 3, 4, 5, 6}, Rat(orientation_));

    // metric identity (X ⌟ phi)^(Y ⌟ phi)^phi = -6 delta_ij vol on all pairs
    for (int i = 0; i < 7; ++i) {
        Form hi = hook(MultiVec::basis(chart_, {i}), phi_);
        for (int j = i; j < 7; ++j) {
            Form hj = hook(MultiVec::basis(chart_, {j}), phi_);
            Form lhs = wedge(wedge(hi, hj), phi_);
            Form rhs = (i == j) ? Rat(-6) * vol_ : Form(chart_, 7);
            if (lhs != rhs) throw std::invalid_argument("G2: metric identity fails on basis pair");
        }
    }

    psi_ = star(phi_);
    if (!is_closed(psi_)) throw std::invalid_argument("G2: d(psi) != 0 (structure not torsion-free)");
}

Form G2Data::flat(const MultiVec& X) const {
    Form out(chart_, X.degree());
    for (const auto& [I, p] : X.comps()) out.add_term(I, p);
    return out;
}

MultiVec G2Data::sharp(const Form& a) const {
    MultiVec out(chart_, a.degree());
    for (const auto& [I, p] : a.comps()) out.add_term(I, p);
    return out;
}

Form G2Data::star(const Form& tau) const {
    Form out(chart_, 7 - tau.degree());
    for (const auto& [I, p] : tau.comps()) {
        IndexTuple comp;
        int sign = complement_sign(I, comp) * orientation_;
        out.add_term(std::move(comp), sign > 0 ? p : -p);
    }
    return out;
}

MultiVec G2Data::cross(const MultiVec& X, const MultiVec& Y) const {
    return sharp(hook_or_zero(Y, hook_or_zero(X, phi_)));
}

MultiVec G2Data::curl(const MultiVec& X) const {
    return sharp(star(wedge(ext_d(flat(X)), psi_)));
}

MultiVec G2Data::curl_coordinates(const MultiVec& X) const {
    MultiVec out(chart_, 1);
    for (int l = 0; l < 7; ++l) {
        Polynomial cl(7);
        for (int i = 0; i < 7; ++i) {
            for (int j = 0; j < 7; ++j) {
                if (i == j) continue;
                Polynomial dX = X.coeff(IndexTuple{j}).derivative(i);
                if (dX.is_zero()) continue;
                Polynomial phi_ijl = phi_.coeff(IndexTuple{i, j, l});
                if (phi_ijl.is_zero()) continue;
                cl += dX * phi_ijl;
            }
        }
        if (!cl.is_zero()) out.add_term(IndexTuple{l}, cl);
    }
    return out;
}

G2Data::TwoFormSplit G2Data::split2(const Form& alpha) const {
    if (alpha.degree() != 2) throw std::invalid_argument("split2: needs a 2-form");
    Form sphi = star(wedge(phi_, alpha));
    Rat third(1, 3);
    TwoFormSplit out;
    out.part7 = third * (alpha - sphi);
    out.part14 = third * (Rat(2) * alpha + sphi);
    if (out.part7 + out.part14 != alpha) throw std::logic_error("split2: projections do not sum back");
    if (!wedge(psi_, out.part14).is_zero()) throw std::logic_error("split2: psi ^ pi14 != 0");

    // part7 = X ⌟ phi: constant 21x7 system solved monomial-by-monomial
    std::vector<IndexTuple> cod;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) cod.push_back({a, b});
    RatMatrix M(cod.size(), 7);
    for (int v = 0; v < 7; ++v) {
        Form img = hook(MultiVec::basis(chart_, {v}), phi_);
        for (std::size_t r = 0; r < cod.size(); ++r) M.at(r, static_cast<std::size_t>(v)) = img.coeff(cod[r]).constant_value();
    }
    std::map<Exponents, std::vector<Rat>> rhs_by_monomial;
    for (std::size_t r = 0; r < cod.size(); ++r) {
        Polynomial p = out.part7.coeff(cod[r]);
        for (const auto& [e, c] : p.terms()) {
            auto& v = rhs_by_monomial[e];
            v.resize(cod.size(), Rat(0));
            v[r] = c;
        }
    }
    out.potential = MultiVec(chart_, 1);
    for (auto& [e, v] : rhs_by_monomial) {
        v.resize(cod.size(), Rat(0));
        auto sol = solve_exact(M, v);
        if (!sol) throw std::logic_error("split2: pi7 part is not in the image of ⌟phi");
        for (int c = 0; c < 7; ++c)
            if (!msplect::is_zero(sol->particular[static_cast<std::size_t>(c)]))
                out.potential.add_term(IndexTuple{c},
                                       Polynomial::monomial(7, e, sol->particular[static_cast<std::size_t>(c)]));
    }
    if (hook(out.potential, phi_) != out.part7) throw std::logic_error("split2: potential check failed");
    return out;
}

G2Data::HamiltonianCheck G2Data::hamiltonian_check(const Form& alpha) const {
    if (alpha.degree() != 1) throw std::invalid_argument("hamiltonian_check: needs a 1-form");
    HamiltonianCheck out;
    Form da = ext_d(alpha);
    TwoFormSplit s = split2(da);
    out.hamiltonian = s.part14.is_zero();
    if (out.hamiltonian) out.field = curl(sharp(alpha));
    return out;
}

namespace {

Polynomial re_z1z2z3(const ChartPtr& c) {
    // x1x2x3 - x1y2y3 - y1x2y3 - y1y2x3 on (t,x1,x2,x3,y1,y2,y3)
    auto mono = [&](int a, int b, int d, const Rat& coeff) {
        Exponents e(7, 0);
        e[static_cast<std::size_t>(a)]++;
        e[static_cast<std::size_t>(b)]++;
        e[static_cast<std::size_t>(d)]++;
        return Polynomial::monomial(7, e, coeff);
    };
    Polynomial p(7);
    p += mono(1, 2, 3, Rat(1));
    p += mono(1, 5, 6, Rat(-1));
    p += mono(4, 2, 6, Rat(-1));
    p += mono(4, 5, 3, Rat(-1));
    return p;
}

} // namespace

G2TorusReport g2_torus_example() {
    G2TorusReport rep;
    G2Data g2 = G2Data::torus();
    const ChartPtr& c = g2.chart();
    auto var = [&](int i) { return Polynomial::variable(7, i); };
    Rat half(1, 2), quarter(1, 4);

    // torus generators in real coordinates
    MultiVec A(c, 1);
    A.add_term({1}, -half * var(4));
    A.add_term({3}, half * var(6));
    A.add_term({4}, half * var(1));
    A.add_term({6}, -half * var(3));
    MultiVec B(c, 1);
    B.add_term({2}, -half * var(5));
    B.add_term({3}, half * var(6));
    B.add_term({5}, half * var(2));
    B.add_term({6}, -half * var(3));

    auto push = [&](const std::string& label, Form residual, int k = 0) {
        ResidualEntry e;
        e.k = k;
        e.label = label;
        e.zero = residual.is_zero();
        e.residual = std::move(residual);
        rep.entries.push_back(std::move(e));
    };

    push("[A,B] = 0", g2.flat(schouten(A, B)), 1);
    push("d(phi) = 0", ext_d(g2.phi()));
    push("d(psi) = 0", ext_d(g2.psi()));

    // co-momentum components in expanded real coordinates
    Form f1A(c, 1);
    f1A.add_term({2}, half * (var(1) * var(6) + var(3) * var(4)));
    f1A.add_term({5}, half * (var(1) * var(3) - var(4) * var(6)));
    f1A.add_term({0}, -quarter * (var(1) * var(1) + var(4) * var(4) - var(3) * var(3) - var(6) * var(6)));
    Form f1B(c, 1);
    f1B.add_term({3}, half * (var(1) * var(5) + var(2) * var(4)));
    f1B.add_term({6}, half * (var(1) * var(2) - var(4) * var(5)));
    f1B.add_term({0}, -quarter * (var(1) * var(1) + var(4) * var(4) - var(2) * var(2) - var(5) * var(5)));
    Form f2 = Form::scalar(c, quarter * re_z1z2z3(c));

    // pairing convention resolved by direct expansion: d f1(xi) = + V_xi ⌟ phi
    push("d f1(A) - A ⌟ phi", ext_d(f1A) - hook(A, g2.phi()), 1);
    push("d f1(B) - B ⌟ phi", ext_d(f1B) - hook(B, g2.phi()), 1);
    push("d f2(A^B) - (A^B) ⌟ phi", ext_d(f2) - hook(wedge(A, B), g2.phi()), 2);
    rep.convention_note = "components satisfy d f_k(p) = +V_p ⌟ phi (paper-examples pairing)";

    // B ⌟ A ⌟ phi = 1/4 d Re(z1 z2 z3)
    Form dre = ext_d(Form::scalar(c, re_z1z2z3(c)));
    push("B ⌟ A ⌟ phi - (1/4) d Re(z1z2z3)", hook(B, hook(A, g2.phi())) - quarter * dre, 2);

    // Hamiltonian membership and curl recovery of the generators
    auto checkA = g2.hamiltonian_check(f1A);
    push("pi14(d f1(A))", g2.split2(ext_d(f1A)).part14, 1);
    push("curl(f1(A)#) - A", checkA.hamiltonian ? g2.flat(checkA.field - A) : Form::basis(c, {0}, Rat(1)), 1);
    auto checkB = g2.hamiltonian_check(f1B);
    push("pi14(d f1(B))", g2.split2(ext_d(f1B)).part14, 1);
    push("curl(f1(B)#) - B", checkB.hamiltonian ? g2.flat(checkB.field - B) : Form::basis(c, {0}, Rat(1)), 1);

    // 4 (A x B)^b = d Re(z1 z2 z3)
    push("4(AxB)^b - d Re(z1z2z3)", Rat(4) * g2.flat(g2.cross(A, B)) - dre, 1);

    // weak co-momentum verification under the resolved (paper) convention
    Convention conv;
    conv.comomentum_sign = PairingSign::Paper;
    PlecticSystem sys(c, g2.phi(), conv);
    ActionData action(LieAlgebraData::abelian(2), c, {A, B});
    ComomentumMap map(action, /*weak=*/true);
    map.add_component(1, WedgePower::basis(2, {0}), f1A);
    map.add_component(1, WedgePower::basis(2, {1}), f1B);
    map.add_component(2, WedgePower::basis(2, {0, 1}), f2);
    ResidualReport weak = verify_weak_comomentum(map, sys);
    for (auto& e : weak.entries) {
        e.label = "weak residual f" + std::to_string(e.k) + "(" + e.label + ")";
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace msplect
