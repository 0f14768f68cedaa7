#pragma once

#include "msplect/alternating.hpp"

#include <random>

namespace msplect {

// Deterministic generators for property cases: sparse polynomials and graded
// elements with small rational coefficients.
class RandomGen {
  public:
    explicit RandomGen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rat rational(int max_abs = 5, int max_den = 3) {
        int num = uniform(-max_abs, max_abs);
        int den = uniform(1, max_den);
        return rat(num, den);
    }

    Rat nonzero_rational(int max_abs = 5, int max_den = 3) {
        Rat r = rational(max_abs, max_den);
        while (is_zero(r)) r = rational(max_abs, max_den);
        return r;
    }

    Polynomial polynomial(int dim, int max_degree, int terms = 2) {
        Polynomial p(dim);
        for (int t = 0; t < terms; ++t) {
            Exponents e(static_cast<std::size_t>(dim), 0);
            int deg = uniform(0, max_degree);
            for (int d = 0; d < deg; ++d) e[static_cast<std::size_t>(uniform(0, dim - 1))] += 1;
            p.add_term(e, rational());
        }
        return p;
    }

    template <Variance V>
    Alternating<V> graded(const ChartPtr& chart, int degree, int max_poly_degree, int terms = 2) {
        Alternating<V> a(chart, degree);
        const int dim = chart->dim();
        for (int t = 0; t < terms; ++t) {
            IndexTuple idx;
            std::vector<int> pool;
            for (int i = 0; i < dim; ++i) pool.push_back(i);
            for (int d = 0; d < degree; ++d) {
                int pick = uniform(0, static_cast<int>(pool.size()) - 1);
                idx.push_back(pool[static_cast<std::size_t>(pick)]);
                pool.erase(pool.begin() + pick);
            }
            a.add_term(std::move(idx), polynomial(dim, max_poly_degree, 1));
        }
        return a;
    }

    Form form(const ChartPtr& chart, int degree, int max_poly_degree, int terms = 2) {
        return graded<Variance::Covariant>(chart, degree, max_poly_degree, terms);
    }
    MultiVec multivec(const ChartPtr& chart, int degree, int max_poly_degree, int terms = 2) {
        return graded<Variance::Contravariant>(chart, degree, max_poly_degree, terms);
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

} // namespace msplect
