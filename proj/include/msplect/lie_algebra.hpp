#pragma once

#include "msplect/alternating.hpp"
#include "msplect/rational.hpp"

#include <map>
#include <vector>

namespace msplect {

// Element of Lambda^k g with exact rational coefficients on strictly
// increasing basis tuples.
class WedgePower {
  public:
    WedgePower() : algebra_dim_(0), degree_(0) {}
    WedgePower(int algebra_dim, int degree) : algebra_dim_(algebra_dim), degree_(degree) {}

    static WedgePower basis(int algebra_dim, IndexTuple idx, const Rat& c = Rat(1));

    int algebra_dim() const { return algebra_dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IndexTuple, Rat>& coeffs() const { return coeffs_; }

    void add_term(IndexTuple idx, const Rat& c);
    Rat coeff(IndexTuple idx) const;

    WedgePower operator-() const;
    WedgePower& operator+=(const WedgePower& o);
    WedgePower& operator-=(const WedgePower& o);
    friend WedgePower operator+(WedgePower a, const WedgePower& b) { return a += b; }
    friend WedgePower operator-(WedgePower a, const WedgePower& b) { return a -= b; }
    friend WedgePower operator*(const Rat& c, const WedgePower& p);
    bool operator==(const WedgePower& o) const;
    bool operator!=(const WedgePower& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    int algebra_dim_;
    int degree_;
    std::map<IndexTuple, Rat> coeffs_;
};

WedgePower wedge(const WedgePower& a, const WedgePower& b);

// Finite-dimensional Lie algebra given by structure constants
// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry and the Jacobi identity are
// checked exactly at construction.
class LieAlgebraData {
  public:
    LieAlgebraData(int dim, std::vector<std::vector<std::vector<Rat>>> structure);

    static LieAlgebraData abelian(int dim);
    static LieAlgebraData so3();
    // Non-abelian 2-dim algebra [e1,e2] = e2 (affine line).
    static LieAlgebraData affine2();

    int dim() const { return dim_; }
    const Rat& c(int i, int j, int k) const { return c_[i][j][k]; }
    bool is_abelian() const;

    // [e_i, e_j] as a degree-1 wedge power.
    WedgePower bracket_basis(int i, int j) const;

  private:
    int dim_;
    std::vector<std::vector<std::vector<Rat>>> c_;
};

// Chevalley-Eilenberg boundary: @_k(xi_1^...^xi_k) =
//   sum_{i<j} (-1)^{i+j} [xi_i, xi_j] ^ xi_1 ^...^ x̂i_i ^...^ x̂i_j ^...^ xi_k.
WedgePower ce_differential(const LieAlgebraData& g, const WedgePower& p);

// Exact rational basis of ker @_k (the k-th Lie kernel).
std::vector<WedgePower> lie_kernel(const LieAlgebraData& g, int k);

// Schouten bracket on Lambda^. g extending [.,.], via the decomposable
// formula. Satisfies @(p^q) = @p^q + (-1)^k p^@q + (-1)^k [p,q].
WedgePower wedge_bracket(const LieAlgebraData& g, const WedgePower& p, const WedgePower& q);

// Standard basis of Lambda^k g.
std::vector<WedgePower> wedge_basis(int algebra_dim, int k);

} // namespace msplect
