#pragma once

#include "msplect/rational.hpp"

#include <optional>
#include <vector>

namespace msplect {

// Dense matrix over Q with exact Gauss-Jordan elimination. Row/column counts
// here stay small (basis-indexed systems), so no pivoting heuristics beyond
// first-nonzero are needed.
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Reduced row echelon form in place; returns pivot column per pivot row.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Basis of the right nullspace, one vector per free column; canonical
    // (RREF-derived) and deterministic.
    std::vector<std::vector<Rat>> nullspace() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

struct LinearSolution {
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> nullspace;
};

// Solves A x = b exactly; nullopt when inconsistent.
std::optional<LinearSolution> solve_exact(const RatMatrix& A, const std::vector<Rat>& b);

} // namespace msplect
