#include "msplect/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace msplect {

namespace {

// Contracts the basis multivector @I into the basis form dx^J, in the order
// @_{i_k} ⌟ ... ⌟ @_{i_1} ⌟ dx^J. Returns 0 if some index is missing.
int hook_basis_sign(const IndexTuple& I, const IndexTuple& J, IndexTuple& out) {
    out = J;
    int sign = 1;
    for (int idx : I) {
        auto it = std::find(out.begin(), out.end(), idx);
        if (it == out.end()) return 0;
        auto pos = static_cast<int>(it - out.begin());
        if (pos % 2 != 0) sign = -sign;
        out.erase(it);
    }
    return sign;
}

} // namespace

Form hook(const MultiVec& X, const Form& tau) {
    if (X.degree() > tau.degree())
        throw std::invalid_argument("hook: multivector degree exceeds form degree");
    return hook_or_zero(X, tau);
}

Form hook_or_zero(const MultiVec& X, const Form& tau) {
    require_same_chart(X.chart(), tau.chart());
    if (X.degree() > tau.degree() || X.degree() == 0)
        return Form(tau.chart(), std::max(tau.degree() - X.degree(), 0));
    Form r(tau.chart(), tau.degree() - X.degree());
    for (const auto& [I, f] : X.comps()) {
        for (const auto& [J, g] : tau.comps()) {
            IndexTuple rest;
            int sign = hook_basis_sign(I, J, rest);
            if (sign == 0) continue;
            Polynomial c = f * g;
            if (sign < 0) c = -c;
            r.add_term(std::move(rest), c);
        }
    }
    return r;
}

MultiVec insert_oneform(const Form& beta, const MultiVec& X) {
    require_same_chart(beta.chart(), X.chart());
    if (beta.degree() != 1) throw std::invalid_argument("insert_oneform: needs a 1-form");
    if (X.degree() == 0) return MultiVec(X.chart(), 0);
    MultiVec r(X.chart(), X.degree() - 1);
    for (const auto& [I, f] : X.comps()) {
        for (std::size_t a = 0; a < I.size(); ++a) {
            Polynomial b = beta.coeff(IndexTuple{I[a]});
            if (b.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(I.size() - 1);
            for (std::size_t t = 0; t < I.size(); ++t)
                if (t != a) rest.push_back(I[t]);
            Polynomial c = b * f;
            if (a % 2 != 0) c = -c;
            r.add_term(std::move(rest), c);
        }
    }
    return r;
}

Form ext_d(const Form& tau) {
    const int dim = tau.chart()->dim();
    Form r(tau.chart(), tau.degree() + 1);
    for (const auto& [J, g] : tau.comps()) {
        for (int i = 0; i < dim; ++i) {
            Polynomial dg = g.derivative(i);
            if (dg.is_zero()) continue;
            IndexTuple t;
            t.reserve(J.size() + 1);
            t.push_back(i);
            t.insert(t.end(), J.begin(), J.end());
            r.add_term(std::move(t), dg);
        }
    }
    return r;
}

Form lie_derivative(const MultiVec& X, const Form& tau) {
    Form a = ext_d(hook_or_zero(X, tau));
    Form b = hook_or_zero(X, ext_d(tau));
    if (X.degree() % 2 == 0) return a - b;
    return a + b;
}

namespace {

// One term of the decomposable Schouten formula, already reduced to tuples:
// accumulate coeff * @_{(lead) ++ restI ++ restJ} into r.
void schouten_accumulate(MultiVec& r, int lead, const IndexTuple& I, std::size_t skip_i,
                         const IndexTuple& J, std::size_t skip_j, Polynomial coeff) {
    IndexTuple t;
    t.reserve(I.size() + J.size() - 1);
    t.push_back(lead);
    for (std::size_t s = 0; s < I.size(); ++s)
        if (s != skip_i) t.push_back(I[s]);
    for (std::size_t s = 0; s < J.size(); ++s)
        if (s != skip_j) t.push_back(J[s]);
    r.add_term(std::move(t), coeff);
}

} // namespace

MultiVec schouten(const MultiVec& X, const MultiVec& Y) {
    require_same_chart(X.chart(), Y.chart());
    const int k = X.degree();
    const int l = Y.degree();
    const ChartPtr& chart = X.chart();

    if (k == 0 && l == 0) return MultiVec(chart, 0);
    if (l == 0) {
        // [X, f] = (-1)^{k-1} df ⌟ X
        Polynomial f = Y.coeff(IndexTuple{});
        Form df = ext_d(Form::scalar(chart, f));
        MultiVec r = insert_oneform(df, X);
        if (k % 2 == 0) r = -r;
        return r;
    }
    if (k == 0) {
        // graded antisymmetry against the case above: [f, Y] = -df ⌟ Y
        Polynomial f = X.coeff(IndexTuple{});
        Form df = ext_d(Form::scalar(chart, f));
        return -insert_oneform(df, Y);
    }

    MultiVec r(chart, k + l - 1);
    for (const auto& [I, f] : X.comps()) {
        for (const auto& [J, g] : Y.comps()) {
            // write f@I = (f @_{i_1}) ^ @_{i_2} ^ ... and likewise for g@J;
            // [X_a, Y_b] vanishes unless a carrier slot is involved.
            for (std::size_t a = 0; a < I.size(); ++a) {
                Polynomial dg = g.derivative(I[a]);
                if (dg.is_zero()) continue;
                Polynomial c = f * dg;
                if (a % 2 != 0) c = -c; // (-1)^{a+1}, 1-based
                schouten_accumulate(r, J[0], I, a, J, 0, std::move(c));
            }
            for (std::size_t b = 0; b < J.size(); ++b) {
                Polynomial df = f.derivative(J[b]);
                if (df.is_zero()) continue;
                Polynomial c = g * df;
                if (b % 2 == 0) c = -c; // -(-1)^{b+1}, 1-based
                schouten_accumulate(r, I[0], I, 0, J, b, std::move(c));
            }
        }
    }
    return r;
}

Form poincare_homotopy(const Form& tau) {
    const int m = tau.degree();
    if (m < 1) throw std::invalid_argument("poincare_homotopy: degree must be >= 1");
    Form r(tau.chart(), m - 1);
    for (const auto& [J, g] : tau.comps()) {
        for (const auto& [E, c] : g.terms()) {
            int e = 0;
            for (int x : E) e += x;
            Rat scale = c / Rat(e + m);
            for (std::size_t a = 0; a < J.size(); ++a) {
                Exponents Ea(E);
                Ea[static_cast<std::size_t>(J[a])] += 1;
                Rat coeff = (a % 2 == 0) ? scale : -scale;
                IndexTuple rest;
                rest.reserve(J.size() - 1);
                for (std::size_t t = 0; t < J.size(); ++t)
                    if (t != a) rest.push_back(J[t]);
                r.add_term(std::move(rest),
                           Polynomial::monomial(tau.chart()->dim(), std::move(Ea), coeff));
            }
        }
    }
    return r;
}

namespace {

Form translate_form(const Form& tau, const std::vector<Rat>& shift) {
    Form r(tau.chart(), tau.degree());
    for (const auto& [J, g] : tau.comps()) r.add_term(J, g.translated(shift));
    return r;
}

} // namespace

Form poincare_homotopy(const Form& tau, const std::vector<Rat>& base) {
    bool at_origin = true;
    for (const Rat& b : base)
        if (!msplect::is_zero(b)) at_origin = false;
    if (at_origin) return poincare_homotopy(tau);
    if (static_cast<int>(base.size()) != tau.chart()->dim())
        throw std::invalid_argument("poincare_homotopy: base point has wrong dimension");
    std::vector<Rat> neg(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) neg[i] = -base[i];
    return translate_form(poincare_homotopy(translate_form(tau, base)), neg);
}

bool is_closed(const Form& tau) { return ext_d(tau).is_zero(); }

ExactnessResult is_exact(const Form& tau, const std::vector<Rat>& base) {
    if (tau.degree() == 0) {
        if (tau.is_zero()) return {true, std::nullopt};
        return {false, std::nullopt};
    }
    if (!is_closed(tau)) return {false, std::nullopt};
    return {true, poincare_homotopy(tau, base)};
}

ExactnessResult is_exact(const Form& tau) {
    return is_exact(tau, std::vector<Rat>(static_cast<std::size_t>(tau.chart()->dim()), Rat(0)));
}

} // namespace msplect
