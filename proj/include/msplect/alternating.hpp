#pragma once

#include "msplect/chart.hpp"
#include "msplect/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace msplect {

// Strictly increasing index tuple picking out a basis monomial dx^I or @_I.
using IndexTuple = std::vector<int>;

// Sorts t in place; returns the sign of the permutation, or 0 on a repeated
// index (alternation).
inline int sort_with_sign(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && t[j] < t[j - 1]) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

// Concatenation (a, b) sorted; sign 0 when the tuples intersect.
inline int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out = a;
    out.insert(out.end(), b.begin(), b.end());
    return sort_with_sign(out);
}

inline std::string tuple_str(const IndexTuple& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

enum class Variance { Covariant, Contravariant };

// Graded alternating element over the polynomial ring: a Form (covariant) or
// a MultiVec (contravariant) depending on the tag. Zero element = empty map.
template <Variance V>
class Alternating {
  public:
    Alternating() : degree_(0) {}
    Alternating(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
        if (!chart_) throw std::invalid_argument("alternating: null chart");
        if (degree_ < 0) throw std::invalid_argument("alternating: negative degree");
    }

    static Alternating basis(ChartPtr chart, IndexTuple idx, Polynomial coeff) {
        int sign = sort_with_sign(idx);
        Alternating a(chart, static_cast<int>(idx.size()));
        if (sign == 0 || coeff.is_zero()) return a;
        for (int i : idx)
            if (i < 0 || i >= a.chart()->dim()) throw std::invalid_argument("alternating: index out of range");
        if (sign < 0) coeff = -coeff;
        a.comps_[std::move(idx)] = std::move(coeff);
        return a;
    }

    static Alternating basis(ChartPtr chart, IndexTuple idx, const Rat& c = Rat(1)) {
        Polynomial p = Polynomial::constant(chart->dim(), c);
        return basis(std::move(chart), std::move(idx), std::move(p));
    }

    static Alternating scalar(ChartPtr chart, Polynomial p) {
        Alternating a(chart, 0);
        if (!p.is_zero()) a.comps_[IndexTuple{}] = std::move(p);
        return a;
    }

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<IndexTuple, Polynomial>& comps() const { return comps_; }

    Polynomial coeff(IndexTuple idx) const {
        int sign = sort_with_sign(idx);
        if (sign == 0) return Polynomial(chart_ ? chart_->dim() : 0);
        auto it = comps_.find(idx);
        if (it == comps_.end()) return Polynomial(chart_->dim());
        return sign > 0 ? it->second : -it->second;
    }

    // Accumulates coeff * basis(idx); idx is normalized here.
    void add_term(IndexTuple idx, const Polynomial& coeff) {
        if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("add_term: wrong tuple length");
        int sign = sort_with_sign(idx);
        if (sign == 0 || coeff.is_zero()) return;
        auto it = comps_.find(idx);
        if (it == comps_.end()) {
            comps_.emplace(std::move(idx), sign > 0 ? coeff : -coeff);
        } else {
            if (sign > 0)
                it->second += coeff;
            else
                it->second -= coeff;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    Alternating operator-() const {
        Alternating r(chart_, degree_);
        for (const auto& [i, p] : comps_) r.comps_.emplace(i, -p);
        return r;
    }

    Alternating& operator+=(const Alternating& o) {
        if (o.is_zero()) return *this;
        require_same_chart(chart_, o.chart_);
        if (is_zero())
            degree_ = o.degree_;
        else if (degree_ != o.degree_)
            throw std::invalid_argument("graded degree mismatch");
        for (const auto& [i, p] : o.comps_) {
            auto it = comps_.find(i);
            if (it == comps_.end()) {
                comps_.emplace(i, p);
            } else {
                it->second += p;
                if (it->second.is_zero()) comps_.erase(it);
            }
        }
        return *this;
    }
    Alternating& operator-=(const Alternating& o) { return *this += -o; }

    friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
    friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }

    friend Alternating operator*(const Rat& c, const Alternating& a) {
        Alternating r(a.chart_, a.degree_);
        if (msplect::is_zero(c)) return r;
        for (const auto& [i, p] : a.comps_) r.comps_.emplace(i, c * p);
        return r;
    }

    friend Alternating operator*(const Polynomial& f, const Alternating& a) {
        Alternating r(a.chart_, a.degree_);
        if (f.is_zero()) return r;
        for (const auto& [i, p] : a.comps_) {
            Polynomial q = f * p;
            if (!q.is_zero()) r.comps_.emplace(i, std::move(q));
        }
        return r;
    }

    bool operator==(const Alternating& o) const {
        if (is_zero() && o.is_zero()) return true; // zero compares equal across degrees
        return degree_ == o.degree_ && *chart_ == *o.chart_ && comps_ == o.comps_;
    }
    bool operator!=(const Alternating& o) const { return !(*this == o); }

    std::string to_string() const {
        if (comps_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [idx, p] : comps_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << p.to_string(chart_->names()) << ")";
            for (int i : idx) {
                os << (V == Variance::Covariant ? "^d(" : "^@");
                os << chart_->name(i);
                if (V == Variance::Covariant) os << ")";
            }
        }
        return os.str();
    }

  private:
    ChartPtr chart_;
    int degree_;
    std::map<IndexTuple, Polynomial> comps_;
};

using Form = Alternating<Variance::Covariant>;
using MultiVec = Alternating<Variance::Contravariant>;

inline Form zero_form(const ChartPtr& c, int degree) { return Form(c, degree); }
inline MultiVec zero_mv(const ChartPtr& c, int degree) { return MultiVec(c, degree); }

} // namespace msplect
