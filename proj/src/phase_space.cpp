#include "msplect/phase_space.hpp"

#include "msplect/random_gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace msplect {

namespace {

std::vector<IndexTuple> subsets_of(int n, int k) {
    std::vector<IndexTuple> out;
    if (k < 0 || k > n) return out;
    IndexTuple idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Polynomial pad_poly(const Polynomial& p, int total_dim) {
    Polynomial out(total_dim);
    for (const auto& [e, c] : p.terms()) {
        Exponents e2(e);
        e2.resize(static_cast<std::size_t>(total_dim), 0);
        out.add_term(std::move(e2), c);
    }
    return out;
}

} // namespace

PhaseSpace::PhaseSpace(ChartPtr base, int k) : base_(std::move(base)), k_(k) {
    const int n = base_->dim();
    if (k_ < 1 || k_ > n) throw std::invalid_argument("phase space: k out of range");
    fibre_tuples_ = subsets_of(n, k_);
    std::vector<std::string> names = base_->names();
    for (const auto& I : fibre_tuples_) {
        std::string nm = "p";
        for (int i : I) nm += std::to_string(i + 1);
        names.push_back(nm);
    }
    total_ = make_chart(std::move(names));

    theta_ = Form(total_, k_);
    for (std::size_t t = 0; t < fibre_tuples_.size(); ++t) {
        Polynomial pI = Polynomial::variable(total_->dim(), n + static_cast<int>(t));
        theta_.add_term(fibre_tuples_[t], pI);
    }
    omega_ = -ext_d(theta_);
}

PhaseSpace build_phase_space(ChartPtr base, int k) { return PhaseSpace(std::move(base), k); }

int PhaseSpace::fibre_index(const IndexTuple& I) const {
    auto it = std::find(fibre_tuples_.begin(), fibre_tuples_.end(), I);
    if (it == fibre_tuples_.end()) throw std::invalid_argument("phase space: unknown fibre tuple");
    return base_->dim() + static_cast<int>(it - fibre_tuples_.begin());
}

MultiVec PhaseSpace::horizontal(const MultiVec& Y_base) const {
    require_same_chart(Y_base.chart(), base_);
    MultiVec out(total_, Y_base.degree());
    for (const auto& [I, f] : Y_base.comps()) out.add_term(I, pad_poly(f, total_->dim()));
    return out;
}

Form PhaseSpace::position_form(const Form& alpha_base) const {
    require_same_chart(alpha_base.chart(), base_);
    Form out(total_, alpha_base.degree());
    for (const auto& [I, f] : alpha_base.comps()) out.add_term(I, pad_poly(f, total_->dim()));
    return out;
}

MultiVec PhaseSpace::complete_lift(const MultiVec& Y) const {
    require_same_chart(Y.chart(), base_);
    if (Y.degree() != 1) throw std::invalid_argument("complete_lift: vector fields only");
    const int n = base_->dim();
    const int N = total_->dim();
    MultiVec out(total_, 1);
    for (const auto& [I, f] : Y.comps()) out.add_term(I, pad_poly(f, N));
    // p-velocities: -sum_a p_{I[a->j]} dY^j/dq^{i_a}
    for (std::size_t t = 0; t < fibre_tuples_.size(); ++t) {
        const IndexTuple& I = fibre_tuples_[t];
        Polynomial coeff(N);
        for (std::size_t a = 0; a < I.size(); ++a) {
            for (int j = 0; j < n; ++j) {
                Polynomial dY = Y.coeff(IndexTuple{j}).derivative(I[a]);
                if (dY.is_zero()) continue;
                IndexTuple replaced(I);
                replaced[a] = j;
                int sign = sort_with_sign(replaced);
                if (sign == 0) continue;
                Polynomial pvar = Polynomial::variable(N, fibre_index(replaced));
                Polynomial term = pvar * pad_poly(dY, N);
                coeff -= sign > 0 ? term : -term;
            }
        }
        if (!coeff.is_zero()) out.add_term(IndexTuple{n + static_cast<int>(t)}, coeff);
    }
    return out;
}

MultiVec PhaseSpace::complete_lift(const std::vector<MultiVec>& factors) const {
    if (factors.empty()) throw std::invalid_argument("complete_lift: empty factor list");
    MultiVec out = complete_lift(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) out = wedge(out, complete_lift(factors[i]));
    return out;
}

Form PhaseSpace::momentum_form(const MultiVec& Y_base) const {
    const int l = Y_base.degree();
    if (l > k_) throw std::invalid_argument("momentum_form: multivector degree exceeds k");
    if (Y_base.is_zero()) return Form(total_, k_ - l);
    return (-zeta(l + 1)) * hook(horizontal(Y_base), theta_);
}

namespace {

MultiVec wedge_all(const std::vector<MultiVec>& factors) {
    MultiVec out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = wedge(out, factors[i]);
    return out;
}

} // namespace

PhaseBracketReport verify_phase_brackets(const PhaseSpace& ps,
                                         const std::vector<std::vector<MultiVec>>& momentum_factors,
                                         const std::vector<Form>& base_forms) {
    PhaseBracketReport rep;
    PlecticSystem sys(ps.total_chart(), ps.omega());
    const int k = ps.k();

    struct Momentum {
        int degree;
        MultiVec base;  // wedge of the factors, on the base chart
        MultiVec lift;  // complete lift on the total chart
        HamiltonianPair pair;
        std::string label;
    };
    std::vector<Momentum> moms;
    for (std::size_t i = 0; i < momentum_factors.size(); ++i) {
        const auto& factors = momentum_factors[i];
        MultiVec Y = wedge_all(factors);
        int s = Y.degree();
        // Lie-kernel precondition: the factors must pairwise commute.
        for (std::size_t a = 0; a < factors.size(); ++a)
            for (std::size_t b = a + 1; b < factors.size(); ++b)
                if (!schouten(factors[a], factors[b]).is_zero())
                    throw std::invalid_argument("verify_phase_brackets: factors do not commute");
        MultiVec lift = ps.complete_lift(factors);
        {
            ResidualEntry e;
            e.k = s;
            e.label = "L_{Y#}theta, Y" + std::to_string(i + 1);
            e.residual = lie_derivative(lift, ps.theta());
            e.zero = e.residual.is_zero();
            rep.entries.push_back(e);
        }
        Form P = ps.momentum_form(Y);
        HamiltonianPair pair = sys.make_pair(P, zeta(s) * lift);
        moms.push_back(Momentum{s, std::move(Y), std::move(lift), std::move(pair),
                                "Y" + std::to_string(i + 1)});
    }

    std::vector<std::pair<Form, HamiltonianPair>> positions; // (base form, pullback pair)
    for (const auto& alpha : base_forms) {
        Form pa = ps.position_form(alpha);
        positions.emplace_back(alpha, sys.pair_from_form(pa));
    }

    // relation 1: {P(Y1),P(Y2)} + (-1)^{ts+s+t} P([Y1,Y2])
    //             + zeta(s+1) zeta(t+1) d(Y1# ⌟ Y2# ⌟ theta) = 0
    for (std::size_t i = 0; i < moms.size(); ++i) {
        for (std::size_t j = i + 1; j < moms.size(); ++j) {
            const Momentum& A = moms[i];
            const Momentum& B = moms[j];
            int s = A.degree, t = B.degree;
            if (k - s < 0 || k - t < 0 || k + 1 - s - t < 0) continue;
            Form bracket = poisson(sys, A.pair, B.pair).alpha;
            Form pcomm = ps.momentum_form(schouten(A.base, B.base));
            Form dterm = ext_d(hook_or_zero(A.lift, hook_or_zero(B.lift, ps.theta())));
            Rat c1 = ((t * s + s + t) % 2 == 0) ? Rat(1) : Rat(-1);
            Form residual = bracket + c1 * pcomm + zeta(s + 1) * zeta(t + 1) * dterm;
            ResidualEntry e;
            e.k = s + t;
            e.label = "relation1(" + A.label + "," + B.label + ")";
            e.zero = residual.is_zero();
            e.residual = std::move(residual);
            rep.entries.push_back(std::move(e));
        }
    }

    // relation 2: {pi*alpha, pi*beta} = 0
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            int di = k - positions[i].second.alpha.degree();
            int dj = k - positions[j].second.alpha.degree();
            if (k + 1 - di - dj < 0) continue;
            Form residual = poisson(sys, positions[i].second, positions[j].second).alpha;
            ResidualEntry e;
            e.k = di + dj;
            e.label = "relation2(a" + std::to_string(i + 1) + ",a" + std::to_string(j + 1) + ")";
            e.zero = residual.is_zero();
            e.residual = std::move(residual);
            rep.entries.push_back(std::move(e));
        }
    }

    // relation 3: {pi*alpha, P(Y)} + zeta(j) pi*(Y ⌟ d alpha) = 0
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t m = 0; m < moms.size(); ++m) {
            int di = k - positions[i].second.alpha.degree();
            int j = moms[m].degree;
            if (k + 1 - di - j < 0) continue;
            Form bracket = poisson(sys, positions[i].second, moms[m].pair).alpha;
            Form hookterm = hook_or_zero(moms[m].base, ext_d(positions[i].first));
            Form residual = bracket + zeta(j) * ps.position_form(hookterm);
            ResidualEntry e;
            e.k = di + j;
            e.label = "relation3(a" + std::to_string(i + 1) + "," + moms[m].label + ")";
            e.zero = residual.is_zero();
            e.residual = std::move(residual);
            rep.entries.push_back(std::move(e));
        }
    }
    return rep;
}

PhaseBracketReport random_phase_bracket_check(const ChartPtr& base, int k, int cases,
                                              unsigned seed) {
    PhaseSpace ps(base, k);
    RandomGen gen(seed);
    PhaseBracketReport all;
    const int n = base->dim();
    for (int round = 0; round < cases; ++round) {
        // wedge of commuting fields: f_i(q_i) @_i on distinct coordinates
        auto sample_factors = [&](int degree) {
            std::vector<int> pool;
            for (int i = 0; i < n; ++i) pool.push_back(i);
            std::vector<MultiVec> factors;
            for (int d = 0; d < degree; ++d) {
                int pick = gen.uniform(0, static_cast<int>(pool.size()) - 1);
                int coord = pool[static_cast<std::size_t>(pick)];
                pool.erase(pool.begin() + pick);
                Polynomial f(n);
                Exponents e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(coord)] = gen.uniform(0, 2);
                f.add_term(e, gen.nonzero_rational());
                MultiVec v(base, 1);
                v.add_term(IndexTuple{coord}, f);
                factors.push_back(std::move(v));
            }
            return factors;
        };
        int s = gen.uniform(1, k);
        int t = gen.uniform(1, k);
        std::vector<std::vector<MultiVec>> momenta;
        momenta.push_back(sample_factors(s));
        momenta.push_back(sample_factors(t));
        std::vector<Form> base_forms;
        base_forms.push_back(gen.form(base, gen.uniform(0, k), 2));
        base_forms.push_back(gen.form(base, gen.uniform(0, k), 2));
        PhaseBracketReport rep = verify_phase_brackets(ps, momenta, base_forms);
        for (auto& e : rep.entries) {
            e.label = "case" + std::to_string(round + 1) + ":" + e.label;
            all.entries.push_back(std::move(e));
        }
    }
    return all;
}

} // namespace msplect
