#pragma once

#include "msplect/exterior.hpp"
#include "msplect/lie_algebra.hpp"

#include <vector>

namespace msplect {

// A Lie algebra action on a chart: one degree-1 generator per basis element,
// with the sign convention [V_xi, V_eta] = -V_{[xi,eta]} checked exactly at
// construction.
class ActionData {
  public:
    ActionData(LieAlgebraData algebra, ChartPtr chart, std::vector<MultiVec> generators);

    const LieAlgebraData& algebra() const { return algebra_; }
    const ChartPtr& chart() const { return chart_; }
    const std::vector<MultiVec>& generators() const { return generators_; }

    // V_p = V_{xi_1} ^ ... ^ V_{xi_k}, extended linearly in p.
    MultiVec infinitesimal_generator(const WedgePower& p) const;

    // Trivial action (V == 0) of an algebra on a chart.
    static ActionData trivial(LieAlgebraData algebra, ChartPtr chart);

  private:
    LieAlgebraData algebra_;
    ChartPtr chart_;
    std::vector<MultiVec> generators_;
};

} // namespace msplect
