#include "msplect/lie_algebra.hpp"

#include "msplect/linear.hpp"

#include <sstream>
#include <stdexcept>

namespace msplect {

WedgePower WedgePower::basis(int algebra_dim, IndexTuple idx, const Rat& c) {
    WedgePower p(algebra_dim, static_cast<int>(idx.size()));
    p.add_term(std::move(idx), c);
    return p;
}

void WedgePower::add_term(IndexTuple idx, const Rat& c) {
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("wedge power: wrong tuple length");
    int sign = sort_with_sign(idx);
    if (sign == 0 || msplect::is_zero(c)) return;
    for (int i : idx)
        if (i < 0 || i >= algebra_dim_) throw std::invalid_argument("wedge power: index out of range");
    Rat v = sign > 0 ? c : -c;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(idx), v);
    } else {
        it->second += v;
        if (msplect::is_zero(it->second)) coeffs_.erase(it);
    }
}

Rat WedgePower::coeff(IndexTuple idx) const {
    int sign = sort_with_sign(idx);
    if (sign == 0) return Rat(0);
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return Rat(0);
    return sign > 0 ? it->second : -it->second;
}

WedgePower WedgePower::operator-() const {
    WedgePower r(algebra_dim_, degree_);
    for (const auto& [i, c] : coeffs_) r.coeffs_.emplace(i, -c);
    return r;
}

WedgePower& WedgePower::operator+=(const WedgePower& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (algebra_dim_ != o.algebra_dim_ || degree_ != o.degree_)
        throw std::invalid_argument("wedge power mismatch");
    for (const auto& [i, c] : o.coeffs_) add_term(i, c);
    return *this;
}

WedgePower& WedgePower::operator-=(const WedgePower& o) { return *this += -o; }

WedgePower operator*(const Rat& c, const WedgePower& p) {
    WedgePower r(p.algebra_dim_, p.degree_);
    if (msplect::is_zero(c)) return r;
    for (const auto& [i, v] : p.coeffs_) r.coeffs_.emplace(i, c * v);
    return r;
}

bool WedgePower::operator==(const WedgePower& o) const {
    if (is_zero() && o.is_zero()) return true;
    return algebra_dim_ == o.algebra_dim_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

std::string WedgePower::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        for (int i : idx) os << "^e" << (i + 1);
    }
    return os.str();
}

WedgePower wedge(const WedgePower& a, const WedgePower& b) {
    if (a.algebra_dim() != b.algebra_dim() && !a.is_zero() && !b.is_zero())
        throw std::invalid_argument("wedge power mismatch");
    WedgePower r(a.algebra_dim(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coeffs()) {
        for (const auto& [ib, cb] : b.coeffs()) {
            IndexTuple merged;
            int sign = merge_sign(ia, ib, merged);
            if (sign == 0) continue;
            r.add_term(std::move(merged), sign > 0 ? ca * cb : -(ca * cb));
        }
    }
    return r;
}

LieAlgebraData::LieAlgebraData(int dim, std::vector<std::vector<std::vector<Rat>>> structure)
    : dim_(dim), c_(std::move(structure)) {
    if (dim_ <= 0) throw std::invalid_argument("lie algebra: dimension must be positive");
    if (static_cast<int>(c_.size()) != dim_) throw std::invalid_argument("lie algebra: bad structure shape");
    for (const auto& row : c_) {
        if (static_cast<int>(row.size()) != dim_) throw std::invalid_argument("lie algebra: bad structure shape");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != dim_)
                throw std::invalid_argument("lie algebra: bad structure shape");
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (c_[i][j][k] != -c_[j][i][k])
                    throw std::invalid_argument("lie algebra: structure constants not antisymmetric");
    // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k) {
                for (int t = 0; t < dim_; ++t) {
                    Rat s(0);
                    for (int m = 0; m < dim_; ++m)
                        s += c_[i][j][m] * c_[m][k][t] + c_[j][k][m] * c_[m][i][t] +
                             c_[k][i][m] * c_[m][j][t];
                    if (!msplect::is_zero(s))
                        throw std::invalid_argument("lie algebra: Jacobi identity fails");
                }
            }
        }
    }
}

LieAlgebraData LieAlgebraData::abelian(int dim) {
    std::vector zeros(static_cast<std::size_t>(dim),
                      std::vector(static_cast<std::size_t>(dim),
                                  std::vector(static_cast<std::size_t>(dim), Rat(0))));
    return LieAlgebraData(dim, std::move(zeros));
}

LieAlgebraData LieAlgebraData::so3() {
    std::vector c(3u, std::vector(3u, std::vector(3u, Rat(0))));
    // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
    c[0][1][2] = Rat(1);
    c[1][0][2] = Rat(-1);
    c[1][2][0] = Rat(1);
    c[2][1][0] = Rat(-1);
    c[2][0][1] = Rat(1);
    c[0][2][1] = Rat(-1);
    return LieAlgebraData(3, std::move(c));
}

LieAlgebraData LieAlgebraData::affine2() {
    std::vector c(2u, std::vector(2u, std::vector(2u, Rat(0))));
    c[0][1][1] = Rat(1);
    c[1][0][1] = Rat(-1);
    return LieAlgebraData(2, std::move(c));
}

bool LieAlgebraData::is_abelian() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!msplect::is_zero(c_[i][j][k])) return false;
    return true;
}

WedgePower LieAlgebraData::bracket_basis(int i, int j) const {
    WedgePower r(dim_, 1);
    for (int k = 0; k < dim_; ++k) r.add_term(IndexTuple{k}, c_[i][j][k]);
    return r;
}

WedgePower ce_differential(const LieAlgebraData& g, const WedgePower& p) {
    WedgePower r(g.dim(), p.degree() >= 1 ? p.degree() - 1 : 0);
    if (p.degree() < 2) return r; // @_0 and @_1 are zero maps
    for (const auto& [I, c] : p.coeffs()) {
        for (std::size_t a = 0; a < I.size(); ++a) {
            for (std::size_t b = a + 1; b < I.size(); ++b) {
                WedgePower br = g.bracket_basis(I[a], I[b]);
                if (br.is_zero()) continue;
                int sign = ((a + 1 + b + 1) % 2 == 0) ? 1 : -1; // (-1)^{i+j}, 1-based
                IndexTuple rest;
                rest.reserve(I.size() - 2);
                for (std::size_t t = 0; t < I.size(); ++t)
                    if (t != a && t != b) rest.push_back(I[t]);
                for (const auto& [m, cm] : br.coeffs()) {
                    IndexTuple full;
                    full.reserve(rest.size() + 1);
                    full.push_back(m[0]);
                    full.insert(full.end(), rest.begin(), rest.end());
                    r.add_term(std::move(full), sign > 0 ? c * cm : -(c * cm));
                }
            }
        }
    }
    return r;
}

std::vector<WedgePower> wedge_basis(int algebra_dim, int k) {
    std::vector<WedgePower> basis;
    if (k < 0 || k > algebra_dim) return basis;
    if (k == 0) {
        basis.push_back(WedgePower::basis(algebra_dim, IndexTuple{}));
        return basis;
    }
    IndexTuple idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        basis.push_back(WedgePower::basis(algebra_dim, idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == algebra_dim - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return basis;
}

std::vector<WedgePower> lie_kernel(const LieAlgebraData& g, int k) {
    if (k < 0 || k > g.dim()) throw std::invalid_argument("lie_kernel: degree out of range");
    std::vector<WedgePower> dom = wedge_basis(g.dim(), k);
    if (k <= 1) return dom; // @_0, @_1 vanish
    std::vector<WedgePower> cod = wedge_basis(g.dim(), k - 1);
    RatMatrix M(cod.size(), dom.size());
    for (std::size_t c = 0; c < dom.size(); ++c) {
        WedgePower img = ce_differential(g, dom[c]);
        for (std::size_t r = 0; r < cod.size(); ++r)
            M.at(r, c) = img.coeff(cod[r].coeffs().begin()->first);
    }
    std::vector<WedgePower> out;
    for (const auto& v : M.nullspace()) {
        WedgePower p(g.dim(), k);
        for (std::size_t c = 0; c < dom.size(); ++c)
            p.add_term(dom[c].coeffs().begin()->first, v[c]);
        out.push_back(std::move(p));
    }
    return out;
}

WedgePower wedge_bracket(const LieAlgebraData& g, const WedgePower& p, const WedgePower& q) {
    const int k = p.degree();
    const int l = q.degree();
    WedgePower r(g.dim(), k + l - 1 >= 0 ? k + l - 1 : 0);
    if (k == 0 || l == 0) return r; // bracket with Lambda^0 vanishes on constants
    for (const auto& [I, cp] : p.coeffs()) {
        for (const auto& [J, cq] : q.coeffs()) {
            for (std::size_t a = 0; a < I.size(); ++a) {
                for (std::size_t b = 0; b < J.size(); ++b) {
                    WedgePower br = g.bracket_basis(I[a], J[b]);
                    if (br.is_zero()) continue;
                    int sign = ((a + b) % 2 == 0) ? 1 : -1; // (-1)^{a+b}, 1-based
                    IndexTuple rest;
                    rest.reserve(I.size() + J.size() - 2);
                    for (std::size_t t = 0; t < I.size(); ++t)
                        if (t != a) rest.push_back(I[t]);
                    for (std::size_t t = 0; t < J.size(); ++t)
                        if (t != b) rest.push_back(J[t]);
                    for (const auto& [m, cm] : br.coeffs()) {
                        IndexTuple full;
                        full.reserve(rest.size() + 1);
                        full.push_back(m[0]);
                        full.insert(full.end(), rest.begin(), rest.end());
                        Rat coeff = cp * cq * cm;
                        r.add_term(std::move(full), sign > 0 ? coeff : -coeff);
                    }
                }
            }
        }
    }
    return r;
}

} // namespace msplect
