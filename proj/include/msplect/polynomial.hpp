#pragma once

#include "msplect/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace msplect {

// Exponent multi-index; length equals the chart dimension.
using Exponents = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored; std::map keeps terms in a canonical
// (lexicographic) order, so equality is map comparison.
class Polynomial {
  public:
    Polynomial() : dim_(0) {}
    explicit Polynomial(int dim) : dim_(dim) {}

    static Polynomial constant(int dim, const Rat& c) {
        Polynomial p(dim);
        if (!msplect::is_zero(c)) p.terms_[Exponents(static_cast<std::size_t>(dim), 0)] = c;
        return p;
    }

    static Polynomial variable(int dim, int i, const Rat& c = Rat(1)) {
        Polynomial p(dim);
        if (msplect::is_zero(c)) return p;
        Exponents e(static_cast<std::size_t>(dim), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        p.terms_[std::move(e)] = c;
        return p;
    }

    static Polynomial monomial(int dim, Exponents e, const Rat& c) {
        Polynomial p(dim);
        if (static_cast<int>(e.size()) != dim) throw std::invalid_argument("monomial: bad exponent length");
        if (!msplect::is_zero(c)) p.terms_[std::move(e)] = c;
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        for (int e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = -1; // zero polynomial
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (msplect::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (msplect::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(dim_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_dim(b);
        Polynomial r(a.dim_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend Polynomial operator*(const Rat& c, const Polynomial& p) {
        Polynomial r(p.dim_);
        if (msplect::is_zero(c)) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
        return r;
    }

    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const {
        if (dim_ != o.dim_) return dim_ < o.dim_;
        return terms_ < o.terms_;
    }

    // d/dx_i
    Polynomial derivative(int i) const {
        Polynomial r(dim_);
        for (const auto& [e, c] : terms_) {
            int k = e.at(static_cast<std::size_t>(i));
            if (k == 0) continue;
            Exponents e2(e);
            e2[static_cast<std::size_t>(i)] = k - 1;
            r.add_term(e2, Rat(k) * c);
        }
        return r;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != dim_) throw std::invalid_argument("eval: bad point length");
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Substitute x_i -> x_i + shift_i (used to move the homotopy base point).
    Polynomial translated(const std::vector<Rat>& shift) const {
        if (static_cast<int>(shift.size()) != dim_) throw std::invalid_argument("translated: bad shift length");
        Polynomial r(dim_);
        for (const auto& [e, c] : terms_) {
            Polynomial t = Polynomial::constant(dim_, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                Polynomial xi = Polynomial::variable(dim_, static_cast<int>(i));
                xi.add_term(Exponents(static_cast<std::size_t>(dim_), 0), shift[i]);
                for (int k = 0; k < e[i]; ++k) t = t * xi;
            }
            r += t;
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
            if (!first) {
                os << (sgn(a) < 0 ? " - " : " + ");
                if (sgn(a) < 0) a = -a;
            }
            first = false;
            bool is_const_term = true;
            for (int x : e)
                if (x != 0) is_const_term = false;
            bool unit = (a == Rat(1));
            if (is_const_term || !unit) {
                if (a.get_den() == 1)
                    os << a.get_num().get_str();
                else
                    os << "(" << a.get_str() << ")";
            }
            bool printed = is_const_term || !unit;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << names.at(i);
                if (e[i] > 1) os << "**" << e[i];
                printed = true;
            }
        }
        return os.str();
    }

  private:
    void check_dim(const Polynomial& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    }

    int dim_;
    std::map<Exponents, Rat> terms_;
};

} // namespace msplect
