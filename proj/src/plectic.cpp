#include "msplect/plectic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace msplect {

Rat zeta(int k) {
    if (k < 1) throw std::invalid_argument("zeta: k must be >= 1");
    long e = (static_cast<long>(k) * (k + 1)) / 2;
    return (e % 2 == 0) ? Rat(-1) : Rat(1);
}

namespace {

std::vector<IndexTuple> index_subsets(int n, int k) {
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

} // namespace

PlecticSystem::PlecticSystem(ChartPtr chart, Form omega, Convention convention)
    : chart_(std::move(chart)), omega_(std::move(omega)), n_(omega_.degree() - 1),
      convention_(convention) {
    init();
}

PlecticSystem::PlecticSystem(ChartPtr chart, Form omega, Form hamiltonian, Convention convention)
    : chart_(std::move(chart)), omega_(std::move(omega)), n_(omega_.degree() - 1),
      convention_(convention) {
    init();
    if (hamiltonian.degree() != n_ - 1 && !hamiltonian.is_zero())
        throw std::invalid_argument("hamiltonian must be an (n-1)-form");
    hamiltonian_ = pair_from_form(hamiltonian);
}

void PlecticSystem::init() {
    require_same_chart(chart_, omega_.chart());
    if (n_ < 0) throw std::invalid_argument("omega must have degree >= 1");
    if (!is_closed(omega_)) throw std::invalid_argument("omega is not closed");
    omega_constant_ = has_constant_coefficients(omega_);
}

const HamiltonianPair& PlecticSystem::hamiltonian() const {
    if (!hamiltonian_) throw std::logic_error("system has no Hamiltonian form");
    return *hamiltonian_;
}

NplecticReport PlecticSystem::check_nplectic(unsigned seed) const {
    NplecticReport rep;
    rep.closed = true; // enforced at construction
    const int dim = chart_->dim();
    std::vector<IndexTuple> cod = index_subsets(dim, n_);
    if (omega_constant_) {
        rep.decided_symbolically = true;
        RatMatrix M(cod.size(), static_cast<std::size_t>(dim));
        for (int v = 0; v < dim; ++v) {
            Form img = hook(MultiVec::basis(chart_, IndexTuple{v}), omega_);
            for (std::size_t r = 0; r < cod.size(); ++r) M.at(r, static_cast<std::size_t>(v)) = img.coeff(cod[r]).constant_value();
        }
        auto null_basis = M.nullspace();
        for (const auto& vec : null_basis) {
            MultiVec k(chart_, 1);
            for (int v = 0; v < dim; ++v)
                k.add_term(IndexTuple{v}, Polynomial::constant(dim, vec[static_cast<std::size_t>(v)]));
            rep.kernel.push_back(std::move(k));
        }
        rep.nplectic = rep.kernel.empty();
        rep.note = rep.nplectic ? "kernel trivial (symbolic)" : "constant kernel basis attached";
        return rep;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    bool all_trivial = true;
    for (int s = 0; s < 5; ++s) {
        std::vector<Rat> pt(static_cast<std::size_t>(dim));
        for (auto& x : pt) x = rat(num(rng), den(rng));
        RatMatrix M(cod.size(), static_cast<std::size_t>(dim));
        for (int v = 0; v < dim; ++v) {
            Form img = hook(MultiVec::basis(chart_, IndexTuple{v}), omega_);
            for (std::size_t r = 0; r < cod.size(); ++r) M.at(r, static_cast<std::size_t>(v)) = img.coeff(cod[r]).eval(pt);
        }
        if (M.rank() != static_cast<std::size_t>(dim)) all_trivial = false;
    }
    rep.nplectic = all_trivial;
    rep.note = "decided pointwise at 5 random rational points";
    return rep;
}

namespace {

// Collects the distinct coefficient exponents of a form.
std::set<Exponents> form_monomials(const Form& f) {
    std::set<Exponents> out;
    for (const auto& [J, p] : f.comps())
        for (const auto& [e, c] : p.terms()) out.insert(e);
    return out;
}

} // namespace

PlecticSystem::FieldSolution PlecticSystem::hamiltonian_field(const Form& alpha) const {
    require_same_chart(chart_, alpha.chart());
    const int dim = chart_->dim();
    const int k = n_ - alpha.degree();
    if (k < 1)
        throw std::invalid_argument("hamiltonian_field: form degree must be at most n-1");
    Form rhs = pairing_sign() * ext_d(alpha);
    std::vector<IndexTuple> dom = index_subsets(dim, k);
    std::vector<IndexTuple> cod = index_subsets(dim, n_ + 1 - k);

    if (omega_constant_) {
        RatMatrix M(cod.size(), dom.size());
        for (std::size_t c = 0; c < dom.size(); ++c) {
            Form img = hook(MultiVec::basis(chart_, dom[c]), omega_);
            for (std::size_t r = 0; r < cod.size(); ++r) M.at(r, c) = img.coeff(cod[r]).constant_value();
        }
        FieldSolution sol{MultiVec(chart_, k), {}};
        for (const auto& E : form_monomials(rhs)) {
            std::vector<Rat> b(cod.size(), Rat(0));
            for (std::size_t r = 0; r < cod.size(); ++r) {
                Polynomial p = rhs.coeff(cod[r]);
                auto it = p.terms().find(E);
                if (it != p.terms().end()) b[r] = it->second;
            }
            auto lin = solve_exact(M, b);
            if (!lin)
                throw std::invalid_argument("hamiltonian_field: no solution (form is not Hamiltonian)");
            for (std::size_t c = 0; c < dom.size(); ++c)
                if (!msplect::is_zero(lin->particular[c]))
                    sol.field.add_term(dom[c], Polynomial::monomial(dim, E, lin->particular[c]));
        }
        for (const auto& v : M.nullspace()) {
            MultiVec kf(chart_, k);
            for (std::size_t c = 0; c < dom.size(); ++c)
                if (!msplect::is_zero(v[c])) kf.add_term(dom[c], Polynomial::constant(dim, v[c]));
            sol.kernel.push_back(std::move(kf));
        }
        Form residual = hook(sol.field, omega_) - rhs;
        if (!residual.is_zero()) throw std::logic_error("hamiltonian_field: residual check failed");
        return sol;
    }

    // Polynomial-degree ansatz per the design decision: coefficients of X of
    // degree <= deg(d alpha) + deg(omega) + slack, solved monomial-by-monomial
    // as one dense system; the slack cap bounds the search.
    int rhs_deg = 0;
    for (const auto& [J, p] : rhs.comps()) rhs_deg = std::max(rhs_deg, p.total_degree());
    int omega_deg = 0;
    for (const auto& [J, p] : omega_.comps()) omega_deg = std::max(omega_deg, p.total_degree());

    for (int extra = 0; extra <= convention_.solve_degree_slack; ++extra) {
        int D = rhs_deg + omega_deg + extra;
        std::vector<Exponents> monoms;
        {
            // all exponent vectors with |E| <= D
            Exponents e(static_cast<std::size_t>(dim), 0);
            std::function<void(int, int)> gen = [&](int pos, int left) {
                if (pos == dim) {
                    monoms.push_back(e);
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    e[static_cast<std::size_t>(pos)] = v;
                    gen(pos + 1, left - v);
                }
                e[static_cast<std::size_t>(pos)] = 0;
            };
            gen(0, D);
        }
        // row space: (cod tuple, exponent)
        std::map<std::pair<IndexTuple, Exponents>, std::size_t> row_of;
        std::vector<Form> col_images;
        col_images.reserve(dom.size() * monoms.size());
        for (std::size_t c = 0; c < dom.size(); ++c) {
            Form base = hook(MultiVec::basis(chart_, dom[c]), omega_);
            for (const auto& E : monoms) {
                Form img = Polynomial::monomial(dim, E, Rat(1)) * base;
                col_images.push_back(img);
                for (const auto& [J, p] : img.comps())
                    for (const auto& [e, cc] : p.terms()) row_of.emplace(std::make_pair(J, e), row_of.size());
            }
        }
        for (const auto& [J, p] : rhs.comps())
            for (const auto& [e, cc] : p.terms()) row_of.emplace(std::make_pair(J, e), row_of.size());

        RatMatrix A(row_of.size(), col_images.size());
        for (std::size_t c = 0; c < col_images.size(); ++c)
            for (const auto& [J, p] : col_images[c].comps())
                for (const auto& [e, cc] : p.terms()) A.at(row_of.at({J, e}), c) = cc;
        std::vector<Rat> b(row_of.size(), Rat(0));
        for (const auto& [J, p] : rhs.comps())
            for (const auto& [e, cc] : p.terms()) b[row_of.at({J, e})] = cc;

        auto lin = solve_exact(A, b);
        if (!lin) continue;
        FieldSolution sol{MultiVec(chart_, k), {}};
        std::size_t col = 0;
        for (std::size_t c = 0; c < dom.size(); ++c)
            for (const auto& E : monoms) {
                if (!msplect::is_zero(lin->particular[col]))
                    sol.field.add_term(dom[c], Polynomial::monomial(dim, E, lin->particular[col]));
                ++col;
            }
        for (const auto& v : lin->nullspace) {
            MultiVec kf(chart_, k);
            std::size_t cc = 0;
            for (std::size_t c = 0; c < dom.size(); ++c)
                for (const auto& E : monoms) {
                    if (!msplect::is_zero(v[cc])) kf.add_term(dom[c], Polynomial::monomial(dim, E, v[cc]));
                    ++cc;
                }
            sol.kernel.push_back(std::move(kf));
        }
        return sol;
    }
    throw std::invalid_argument("hamiltonian_field: no solution within the degree ansatz cap");
}

Form PlecticSystem::hamiltonian_form(const MultiVec& X) const {
    require_same_chart(chart_, X.chart());
    Form tau = pairing_sign() * hook_or_zero(X, omega_);
    if (tau.is_zero()) return Form(chart_, n_ - X.degree());
    if (!is_closed(tau))
        throw std::invalid_argument("hamiltonian_form: X ⌟ omega is not closed");
    return poincare_homotopy(tau);
}

HamiltonianPair PlecticSystem::pair_from_form(const Form& alpha) const {
    if (alpha.is_zero()) {
        int k = n_ - alpha.degree();
        return HamiltonianPair{alpha, MultiVec(chart_, std::max(k, 1)), Form(chart_, alpha.degree() + 1)};
    }
    FieldSolution sol = hamiltonian_field(alpha);
    return HamiltonianPair{alpha, sol.field, Form(chart_, alpha.degree() + 1)};
}

HamiltonianPair PlecticSystem::pair_from_field(const MultiVec& X) const {
    Form alpha = hamiltonian_form(X);
    return make_pair(std::move(alpha), X);
}

HamiltonianPair PlecticSystem::make_pair(Form alpha, MultiVec X) const {
    Form residual = ext_d(alpha) - pairing_sign() * hook_or_zero(X, omega_);
    if (!residual.is_zero())
        throw std::invalid_argument("hamiltonian pair: d(alpha) = sign * X ⌟ omega fails");
    return HamiltonianPair{std::move(alpha), std::move(X), std::move(residual)};
}

bool PlecticSystem::is_hamiltonian_form(const Form& alpha) const {
    try {
        hamiltonian_field(alpha);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool PlecticSystem::is_hamiltonian_field(const MultiVec& X) const {
    Form tau = hook_or_zero(X, omega_);
    return is_exact(tau).exact;
}

} // namespace msplect
