#include "msplect/linear.hpp"

namespace msplect {

std::vector<std::size_t> RatMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && is_zero(at(piv, col))) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(row, c));
        Rat inv = Rat(1) / at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || is_zero(at(r, col))) continue;
            Rat factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RatMatrix::rank() const {
    RatMatrix copy(*this);
    return copy.rref().size();
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
    RatMatrix copy(*this);
    std::vector<std::size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -copy.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solve_exact(const RatMatrix& A, const std::vector<Rat>& b) {
    RatMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = aug.rref();
    for (std::size_t p : pivots)
        if (p == A.cols()) return std::nullopt; // pivot in the rhs column

    LinearSolution sol;
    sol.particular.assign(A.cols(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug.at(r, A.cols());
    sol.nullspace = A.nullspace();
    return sol;
}

} // namespace msplect
