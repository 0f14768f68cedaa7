#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace msplect {

// A coordinate chart: an ordered list of distinct coordinate names on R^dim.
class Chart {
  public:
    explicit Chart(std::vector<std::string> coord_names) : names_(std::move(coord_names)) {
        if (names_.empty()) throw std::invalid_argument("chart: no coordinates");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("chart: duplicate coordinate '" + names_[i] + "'");
    }

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a coordinate name, or -1.
    int index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Chart& o) const { return names_ == o.names_; }
    bool operator!=(const Chart& o) const { return !(*this == o); }

  private:
    std::vector<std::string> names_;
};

using ChartPtr = std::shared_ptr<const Chart>;

inline ChartPtr make_chart(std::vector<std::string> names) {
    return std::make_shared<const Chart>(std::move(names));
}

// R^n chart x1..xn.
inline ChartPtr standard_chart(int n, const std::string& stem = "x") {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return make_chart(std::move(names));
}

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || *a != *b) throw std::invalid_argument("chart mismatch");
}

} // namespace msplect
