#include "msplect/action.hpp"

#include <stdexcept>

namespace msplect {

ActionData::ActionData(LieAlgebraData algebra, ChartPtr chart, std::vector<MultiVec> generators)
    : algebra_(std::move(algebra)), chart_(std::move(chart)), generators_(std::move(generators)) {
    if (static_cast<int>(generators_.size()) != algebra_.dim())
        throw std::invalid_argument("action: one generator per basis element required");
    for (const auto& v : generators_) {
        require_same_chart(v.chart(), chart_);
        if (!v.is_zero() && v.degree() != 1)
            throw std::invalid_argument("action: generators must be vector fields");
    }
    for (int i = 0; i < algebra_.dim(); ++i) {
        for (int j = i + 1; j < algebra_.dim(); ++j) {
            MultiVec lhs = schouten(generators_[static_cast<std::size_t>(i)],
                                    generators_[static_cast<std::size_t>(j)]);
            MultiVec rhs(chart_, 1);
            for (int k = 0; k < algebra_.dim(); ++k)
                rhs += algebra_.c(i, j, k) * generators_[static_cast<std::size_t>(k)];
            if (lhs != -rhs)
                throw std::invalid_argument("action: [V_i,V_j] = -V_{[e_i,e_j]} fails at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

ActionData ActionData::trivial(LieAlgebraData algebra, ChartPtr chart) {
    std::vector<MultiVec> gens(static_cast<std::size_t>(algebra.dim()), MultiVec(chart, 1));
    return ActionData(std::move(algebra), std::move(chart), std::move(gens));
}

MultiVec ActionData::infinitesimal_generator(const WedgePower& p) const {
    if (p.algebra_dim() != algebra_.dim() && !p.is_zero())
        throw std::invalid_argument("infinitesimal_generator: algebra dimension mismatch");
    MultiVec r(chart_, p.degree());
    for (const auto& [I, c] : p.coeffs()) {
        if (I.empty()) {
            r += MultiVec::scalar(chart_, Polynomial::constant(chart_->dim(), c));
            continue;
        }
        MultiVec term = generators_[static_cast<std::size_t>(I[0])];
        for (std::size_t t = 1; t < I.size(); ++t)
            term = wedge(term, generators_[static_cast<std::size_t>(I[t])]);
        r += c * term;
    }
    return r;
}

} // namespace msplect
