#include "msplect/identity_suite.hpp"

#include "msplect/exterior.hpp"

namespace msplect {

namespace {

Rat pm(int exponent) { return (exponent % 2 == 0) ? Rat(1) : Rat(-1); }

struct Case {
    ChartPtr chart;
    int k = 1, l = 1, m = 1;
};

Case sample_case(RandomGen& gen, int max_dim, int min_dim = 2) {
    Case c;
    int dim = gen.uniform(min_dim, max_dim);
    c.chart = standard_chart(dim);
    c.k = gen.uniform(1, std::max(1, dim - 1));
    c.l = gen.uniform(1, std::max(1, dim - 1));
    c.m = gen.uniform(0, dim);
    return c;
}

using CaseFn = std::function<Form(RandomGen&)>;

IdentityRun drive(const std::string& name, int cases, RandomGen& gen, const CaseFn& fn) {
    IdentityRun run;
    run.name = name;
    for (int i = 0; i < cases; ++i) {
        Form residual = fn(gen);
        ++run.cases;
        if (!residual.is_zero()) {
            ++run.failures;
            if (run.first_failure.empty()) run.first_failure = residual.to_string();
        }
    }
    return run;
}

} // namespace

std::vector<IdentityRun> run_identity_suite(unsigned seed, int cases, int max_dim,
                                            int max_poly_degree) {
    std::vector<IdentityRun> out;
    RandomGen gen(seed);
    const int pd = max_poly_degree;

    out.push_back(drive("dL", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        MultiVec X = g.multivec(c.chart, c.k, pd);
        Form tau = g.form(c.chart, c.m, pd);
        return ext_d(lie_derivative(X, tau)) - pm(c.k + 1) * lie_derivative(X, ext_d(tau));
    }));

    out.push_back(drive("bracket_hook", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        MultiVec X = g.multivec(c.chart, c.k, pd);
        MultiVec Y = g.multivec(c.chart, c.l, pd);
        Form tau = g.form(c.chart, c.m, pd);
        return hook_or_zero(schouten(X, Y), tau) -
               pm((c.k + 1) * c.l) * lie_derivative(X, hook_or_zero(Y, tau)) +
               hook_or_zero(Y, lie_derivative(X, tau));
    }));

    out.push_back(drive("L_bracket", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        MultiVec X = g.multivec(c.chart, c.k, pd);
        MultiVec Y = g.multivec(c.chart, c.l, pd);
        Form tau = g.form(c.chart, c.m, pd);
        return lie_derivative(schouten(X, Y), tau) -
               pm((c.k + 1) * (c.l + 1)) * lie_derivative(X, lie_derivative(Y, tau)) +
               lie_derivative(Y, lie_derivative(X, tau));
    }));

    out.push_back(drive("wedge_rule", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        MultiVec X = g.multivec(c.chart, c.k, pd);
        MultiVec Y = g.multivec(c.chart, c.l, pd);
        Form tau = g.form(c.chart, c.m, pd);
        return lie_derivative(wedge(X, Y), tau) - pm(c.l) * hook_or_zero(Y, lie_derivative(X, tau)) -
               lie_derivative(Y, hook_or_zero(X, tau));
    }));

    out.push_back(drive("interior", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        MultiVec X = g.multivec(c.chart, c.k, pd);
        MultiVec Y = g.multivec(c.chart, c.l, pd);
        Form tau = g.form(c.chart, c.m, pd);
        return hook_or_zero(schouten(X, Y), tau) + hook_or_zero(Y, ext_d(hook_or_zero(X, tau))) -
               pm(c.l) * ext_d(hook_or_zero(Y, hook_or_zero(X, tau))) -
               pm(c.k * c.l + c.k) * hook_or_zero(X, hook_or_zero(Y, ext_d(tau))) +
               pm(c.k * c.l + c.k + c.l) * hook_or_zero(X, ext_d(hook_or_zero(Y, tau)));
    }));

    out.push_back(drive("schouten_antisym", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        MultiVec X = g.multivec(c.chart, c.k, pd);
        MultiVec Y = g.multivec(c.chart, c.l, pd);
        MultiVec r = schouten(X, Y) + pm((c.k + 1) * (c.l + 1)) * schouten(Y, X);
        Form f(c.chart, r.degree());
        for (const auto& [i, p] : r.comps()) f.add_term(i, p);
        return f;
    }));

    out.push_back(drive("schouten_jacobi", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        int m2 = std::max(1, c.m);
        MultiVec X = g.multivec(c.chart, c.k, pd, 1);
        MultiVec Y = g.multivec(c.chart, c.l, pd, 1);
        MultiVec Z = g.multivec(c.chart, std::min(m2, c.chart->dim() - 1), pd, 1);
        int k = c.k, l = c.l, m = Z.degree();
        MultiVec r = pm((k - 1) * (m - 1)) * schouten(X, schouten(Y, Z)) +
                     pm((l - 1) * (k - 1)) * schouten(Y, schouten(Z, X)) +
                     pm((m - 1) * (l - 1)) * schouten(Z, schouten(X, Y));
        Form f(c.chart, r.degree());
        for (const auto& [i, p] : r.comps()) f.add_term(i, p);
        return f;
    }));

    out.push_back(drive("schouten_leibniz", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        int zdeg = g.uniform(0, std::max(0, c.chart->dim() - c.l));
        MultiVec X = g.multivec(c.chart, c.k, pd, 1);
        MultiVec Y = g.multivec(c.chart, c.l, pd, 1);
        MultiVec Z = g.multivec(c.chart, zdeg, pd, 1);
        MultiVec r = schouten(X, wedge(Y, Z)) - wedge(schouten(X, Y), Z) -
                     pm((c.k - 1) * c.l) * wedge(Y, schouten(X, Z));
        Form f(c.chart, r.degree());
        for (const auto& [i, p] : r.comps()) f.add_term(i, p);
        return f;
    }));

    out.push_back(drive("homotopy", cases, gen, [&](RandomGen& g) {
        Case c = sample_case(g, max_dim);
        int m = std::max(1, c.m);
        Form tau = g.form(c.chart, std::min(m, c.chart->dim()), pd);
        return ext_d(poincare_homotopy(tau)) + poincare_homotopy(ext_d(tau)) - tau;
    }));

    return out;
}

namespace {

// Random polynomial action of an abelian algebra: commuting fields
// f_i(x_i) @_i on distinct coordinates.
ActionData random_abelian_action(RandomGen& gen, const ChartPtr& chart, int gens) {
    std::vector<MultiVec> vs;
    for (int i = 0; i < gens; ++i) {
        MultiVec v(chart, 1);
        Polynomial f(chart->dim());
        int deg = gen.uniform(0, 2);
        Exponents e(static_cast<std::size_t>(chart->dim()), 0);
        e[static_cast<std::size_t>(i)] = deg;
        f.add_term(e, gen.nonzero_rational());
        v.add_term(IndexTuple{i}, f);
        vs.push_back(std::move(v));
    }
    return ActionData(LieAlgebraData::abelian(gens), chart, std::move(vs));
}

// so(3) rotations on R^3.
ActionData so3_action(const ChartPtr& chart) {
    auto var = [&](int i) { return Polynomial::variable(chart->dim(), i); };
    MultiVec L1(chart, 1), L2(chart, 1), L3(chart, 1);
    L1.add_term({2}, var(1));
    L1.add_term({1}, -var(2));
    L2.add_term({0}, var(2));
    L2.add_term({2}, -var(0));
    L3.add_term({1}, var(0));
    L3.add_term({0}, -var(1));
    return ActionData(LieAlgebraData::so3(), chart, {L1, L2, L3});
}

} // namespace

std::vector<IdentityRun> run_lie_identity_suite(unsigned seed, int cases) {
    std::vector<IdentityRun> out;
    RandomGen gen(seed);

    out.push_back(drive("extended_cartan", cases, gen, [&](RandomGen& g) {
        bool nonabelian = g.uniform(0, 1) == 1;
        ChartPtr chart = standard_chart(nonabelian ? 3 : g.uniform(3, 5));
        ActionData action = nonabelian ? so3_action(chart)
                                       : random_abelian_action(g, chart, g.uniform(2, 3));
        const LieAlgebraData& alg = action.algebra();
        int k = g.uniform(1, alg.dim());
        // decomposable p = e_{i1} ^ ... ^ e_{ik}
        std::vector<int> pool;
        for (int i = 0; i < alg.dim(); ++i) pool.push_back(i);
        IndexTuple pidx;
        for (int d = 0; d < k; ++d) {
            int pick = g.uniform(0, static_cast<int>(pool.size()) - 1);
            pidx.push_back(pool[static_cast<std::size_t>(pick)]);
            pool.erase(pool.begin() + pick);
        }
        sort_with_sign(pidx);
        WedgePower p = WedgePower::basis(alg.dim(), pidx);
        Form tau = g.form(chart, g.uniform(static_cast<int>(pidx.size()), chart->dim()), 2);

        MultiVec Vp = action.infinitesimal_generator(p);
        Form lhs = pm(k) * ext_d(hook_or_zero(Vp, tau));
        Form rhs = hook_or_zero(action.infinitesimal_generator(ce_differential(alg, p)), tau);
        for (std::size_t i = 0; i < pidx.size(); ++i) {
            WedgePower rest(alg.dim(), k - 1);
            IndexTuple ridx;
            for (std::size_t t = 0; t < pidx.size(); ++t)
                if (t != i) ridx.push_back(pidx[t]);
            rest.add_term(ridx, Rat(1));
            Form L = lie_derivative(action.generators()[static_cast<std::size_t>(pidx[i])], tau);
            rhs += pm(static_cast<int>(i) + 1) *
                   hook_or_zero(action.infinitesimal_generator(rest), L);
        }
        rhs += hook_or_zero(Vp, ext_d(tau));
        return lhs - rhs;
    }));

    out.push_back(drive("generator_bracket", cases, gen, [&](RandomGen& g) {
        bool nonabelian = g.uniform(0, 1) == 1;
        ChartPtr chart = standard_chart(nonabelian ? 3 : g.uniform(3, 5));
        ActionData action = nonabelian ? so3_action(chart)
                                       : random_abelian_action(g, chart, g.uniform(2, 3));
        const LieAlgebraData& alg = action.algebra();
        auto rand_wp = [&](int deg) {
            WedgePower w(alg.dim(), deg);
            for (const auto& b : wedge_basis(alg.dim(), deg))
                w += g.rational() * b;
            return w;
        };
        int k = g.uniform(1, alg.dim());
        int l = g.uniform(1, alg.dim());
        WedgePower p = rand_wp(k), q = rand_wp(l);
        MultiVec lhs = action.infinitesimal_generator(wedge_bracket(alg, p, q));
        MultiVec rhs = schouten(action.infinitesimal_generator(p), action.infinitesimal_generator(q));
        MultiVec r = lhs + rhs;
        Form f(chart, r.degree());
        for (const auto& [i, pp] : r.comps()) f.add_term(i, pp);
        return f;
    }));

    out.push_back(drive("ce_square", cases, gen, [&](RandomGen& g) {
        const LieAlgebraData alg = g.uniform(0, 1) ? LieAlgebraData::so3() : LieAlgebraData::affine2();
        int k = g.uniform(0, alg.dim());
        WedgePower p(alg.dim(), k);
        for (const auto& b : wedge_basis(alg.dim(), k)) p += g.rational() * b;
        WedgePower dd = ce_differential(alg, ce_differential(alg, p));
        ChartPtr chart = standard_chart(2);
        Form f(chart, 0);
        if (!dd.is_zero()) f = Form::basis(chart, {0, 1}, Rat(1));
        return f;
    }));

    out.push_back(drive("lemma_formula", cases, gen, [&](RandomGen& g) {
        const LieAlgebraData alg = g.uniform(0, 1) ? LieAlgebraData::so3() : LieAlgebraData::affine2();
        int k = g.uniform(1, alg.dim());
        int l = g.uniform(1, alg.dim());
        auto rand_wp = [&](int deg) {
            WedgePower w(alg.dim(), deg);
            for (const auto& b : wedge_basis(alg.dim(), deg)) w += g.rational() * b;
            return w;
        };
        WedgePower p = rand_wp(k), q = rand_wp(l);
        WedgePower lhs = ce_differential(alg, wedge(p, q));
        WedgePower rhs = wedge(ce_differential(alg, p), q);
        rhs += pm(k) * wedge(p, ce_differential(alg, q));
        rhs += pm(k) * wedge_bracket(alg, p, q);
        WedgePower r = lhs - rhs;
        ChartPtr chart = standard_chart(2);
        Form f(chart, 0);
        if (!r.is_zero()) f = Form::basis(chart, {0, 1}, Rat(1));
        return f;
    }));

    out.push_back(drive("kernel", cases, gen, [&](RandomGen& g) {
        const LieAlgebraData alg = g.uniform(0, 1) ? LieAlgebraData::so3() : LieAlgebraData::affine2();
        int k = g.uniform(0, alg.dim());
        auto kernel = lie_kernel(alg, k);
        bool ok = true;
        for (const auto& p : kernel)
            if (!ce_differential(alg, p).is_zero()) ok = false;
        // rank-nullity against the boundary matrix
        if (k >= 2) {
            std::size_t domain = wedge_basis(alg.dim(), k).size();
            std::size_t image_rank = 0;
            {
                auto dom = wedge_basis(alg.dim(), k);
                auto cod = wedge_basis(alg.dim(), k - 1);
                RatMatrix M(cod.size(), dom.size());
                for (std::size_t c = 0; c < dom.size(); ++c) {
                    WedgePower img = ce_differential(alg, dom[c]);
                    for (std::size_t r2 = 0; r2 < cod.size(); ++r2)
                        M.at(r2, c) = img.coeff(cod[r2].coeffs().begin()->first);
                }
                image_rank = M.rank();
            }
            if (kernel.size() + image_rank != domain) ok = false;
        }
        ChartPtr chart = standard_chart(2);
        return ok ? Form(chart, 0) : Form::basis(chart, {0, 1}, Rat(1));
    }));

    return out;
}

} // namespace msplect
