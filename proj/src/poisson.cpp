#include "msplect/poisson.hpp"

#include <stdexcept>

namespace msplect {

HamiltonianPair poisson(const PlecticSystem& sys, const HamiltonianPair& a,
                        const HamiltonianPair& b) {
    const int gb = sys.grading(b.alpha);
    Form value = hook_or_zero(b.field, hook_or_zero(a.field, sys.omega()));
    if (gb % 2 != 0) value = -value;
    // d{a,b} = -[X_a, X_b] ⌟ omega, so the attached field follows the pairing.
    MultiVec field = schouten(a.field, b.field);
    if (sys.pairing_sign() == Rat(1)) field = -field;
    return sys.make_pair(std::move(value), std::move(field));
}

Observable observable_bracket(const PlecticSystem& sys, const std::vector<Observable>& args) {
    if (args.empty()) throw std::invalid_argument("observable_bracket: needs k >= 1 arguments");
    const int k = static_cast<int>(args.size());
    if (k == 1) {
        const Observable& x = args.front();
        if (x.level == 0) {
            Form z(sys.chart(), x.value.degree());
            return Observable{x.level - 1 < 0 ? 0 : x.level - 1, std::move(z), MultiVec(sys.chart(), 1)};
        }
        return Observable{x.level - 1, ext_d(x.value), MultiVec(sys.chart(), 1)};
    }
    int level_sum = 0;
    for (const auto& x : args) level_sum += x.level;
    int out_level = level_sum + k - 2;
    if (level_sum > 0) {
        // l_k vanishes when any argument has positive degree
        return Observable{out_level, Form(sys.chart(), sys.n() + 1 - k), MultiVec(sys.chart(), 1)};
    }
    Form acc = sys.omega();
    for (const auto& x : args) {
        if (x.value.degree() != sys.n() - 1 && !x.value.is_zero())
            throw std::invalid_argument("observable_bracket: level-0 element of wrong degree");
        acc = hook_or_zero(x.field, acc);
    }
    return Observable{out_level, zeta(k) * acc, MultiVec(sys.chart(), 1)};
}

Form iterated_contraction(const PlecticSystem& sys, const std::vector<MultiVec>& fields) {
    Form acc = sys.omega();
    for (const auto& X : fields) acc = hook_or_zero(X, acc);
    return acc;
}

Form iterated_contraction_d_rhs(const PlecticSystem& sys, const std::vector<MultiVec>& fields) {
    const int m = static_cast<int>(fields.size());
    Form out(sys.chart(), sys.omega().degree() - m + 1 >= 0 ? sys.omega().degree() - m + 1 : 0);
    bool first_set = false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            Form acc = hook_or_zero(schouten(fields[static_cast<std::size_t>(i)],
                                             fields[static_cast<std::size_t>(j)]),
                                    sys.omega());
            for (int t = 0; t < m; ++t) {
                if (t == i || t == j) continue;
                acc = hook_or_zero(fields[static_cast<std::size_t>(t)], acc);
            }
            int sign = ((i + 1 + j + 1) % 2 == 0) ? 1 : -1;
            if (m % 2 != 0) sign = -sign;
            if (!first_set) {
                out = sign > 0 ? acc : -acc;
                first_set = true;
            } else {
                out += sign > 0 ? acc : -acc;
            }
        }
    }
    return out;
}

std::vector<UnshuffleTerm> unshuffles(int p, int q, const std::vector<int>& degrees) {
    const int m = p + q;
    if (static_cast<int>(degrees.size()) != m)
        throw std::invalid_argument("unshuffles: degree list must have p+q entries");
    std::vector<UnshuffleTerm> out;
    // choose which p positions (0-based values) land in the first block
    std::vector<int> pick(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) pick[static_cast<std::size_t>(i)] = i;
    auto emit = [&]() {
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        UnshuffleTerm t;
        t.permutation = pick;
        for (int v : pick) used[static_cast<std::size_t>(v)] = true;
        for (int v = 0; v < m; ++v)
            if (!used[static_cast<std::size_t>(v)]) t.permutation.push_back(v);
        // permutation sign: count inversions
        int inv = 0;
        for (std::size_t a = 0; a < t.permutation.size(); ++a)
            for (std::size_t b = a + 1; b < t.permutation.size(); ++b)
                if (t.permutation[a] > t.permutation[b]) ++inv;
        t.sign = (inv % 2 == 0) ? 1 : -1;
        // Koszul sign: product over inverted pairs of (-1)^{deg_a deg_b}
        int kz = 0;
        for (std::size_t a = 0; a < t.permutation.size(); ++a)
            for (std::size_t b = a + 1; b < t.permutation.size(); ++b)
                if (t.permutation[a] > t.permutation[b])
                    kz += degrees[static_cast<std::size_t>(t.permutation[a])] *
                          degrees[static_cast<std::size_t>(t.permutation[b])];
        t.koszul = (kz % 2 == 0) ? 1 : -1;
        out.push_back(std::move(t));
    };
    if (p == 0) {
        emit();
        return out;
    }
    while (true) {
        emit();
        int i = p - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - p + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Form linfty_identity_check(const PlecticSystem& sys, int m, const std::vector<Observable>& elems) {
    if (m < 1 || m > 3) throw std::invalid_argument("linfty_identity_check: m must be 1, 2 or 3");
    if (static_cast<int>(elems.size()) != m)
        throw std::invalid_argument("linfty_identity_check: need exactly m elements");
    std::vector<int> degrees;
    degrees.reserve(elems.size());
    for (const auto& x : elems) degrees.push_back(x.level);

    Form residual(sys.chart(), 0);
    bool first = true;
    for (int i = 1; i <= m; ++i) {
        const int j = m + 1 - i;
        for (const auto& sh : unshuffles(i, m - i, degrees)) {
            std::vector<Observable> inner;
            inner.reserve(static_cast<std::size_t>(i));
            for (int t = 0; t < i; ++t)
                inner.push_back(elems[static_cast<std::size_t>(sh.permutation[static_cast<std::size_t>(t)])]);
            Observable li = observable_bracket(sys, inner);
            Form term;
            if (j == 1) {
                term = observable_bracket(sys, {li}).value;
            } else {
                std::vector<Observable> outer;
                outer.reserve(static_cast<std::size_t>(j));
                if (li.level == 0 && !li.value.is_zero()) {
                    // attach a Hamiltonian field so the outer bracket can contract
                    outer.push_back(Observable::hamiltonian(sys, sys.pair_from_form(li.value)));
                } else {
                    outer.push_back(li);
                }
                for (int t = i; t < m; ++t)
                    outer.push_back(elems[static_cast<std::size_t>(sh.permutation[static_cast<std::size_t>(t)])]);
                term = observable_bracket(sys, outer).value;
            }
            if (term.is_zero()) continue;
            int sign = sh.sign * sh.koszul;
            if ((i * (j - 1)) % 2 != 0) sign = -sign;
            if (first) {
                residual = sign > 0 ? term : -term;
                first = false;
            } else {
                residual += sign > 0 ? term : -term;
            }
        }
    }
    return residual;
}

} // namespace msplect
