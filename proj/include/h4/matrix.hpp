#pragma once

#include <cstddef>
#include <vector>

#include "h4/scalar.hpp"

namespace h4 {

// Dense matrix over the exact scalar tower. All entries of one matrix are
// expected to share a scalar kind; rref promotes polynomial entries to
// rational functions so that elimination happens over a field.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const;

    // substitute t := x in every entry; throws PoleError naming the entry
    ExactMatrix evaluate(const Rational& x) const;

    // rows of a stacked on top of rows of b (column counts must agree)
    static ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    size_t rank = 0;
    std::vector<size_t> pivots;  // pivot column indices, increasing
    ExactMatrix kernel;          // columns form a right kernel basis
    ExactMatrix echelon;         // the reduced row echelon form
};

// Deterministic reduced row echelon form over the entry field: columns are
// scanned left to right and the pivot is the first remaining row with a
// nonzero entry (no pivoting heuristics). Polynomial matrices are promoted
// to rational functions first.
RrefResult rref(const ExactMatrix& m);

// forward elimination only, no kernel basis
size_t rank(const ExactMatrix& m);

// right kernel of m as a list of coefficient vectors (cols() entries each)
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace h4
