#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankpert/matrix.hpp"
#include "rankpert/poly.hpp"

/// Rectangular matrices over the polynomial ring F[x]; just enough structure
/// for unimodular row/column reduction of xI - A.

namespace rankpert {

class PolyMat {
  public:
    PolyMat(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, Poly(field_)) {}

    static PolyMat identity(const FieldSpec& f, std::size_t n) {
        PolyMat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
        return m;
    }

    /// xI - A for square A.
    static PolyMat char_matrix(const Mat& a) {
        if (!a.is_square()) throw std::invalid_argument("PolyMat: char_matrix needs square input");
        const FieldSpec& f = a.field();
        PolyMat m(f, a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                m.at(i, j) = (i == j ? Poly::x(f) : Poly::zero(f)) - Poly::constant(a.at(i, j));
        return m;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }

    /// row_i += q * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Poly& q) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
    }
    /// col_i += q * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Poly& q) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, i) += q * at(r, j);
    }
    void scale_row(std::size_t i, const Scalar& u) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) = at(i, c) * u;
    }
    void scale_col(std::size_t j, const Scalar& u) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, j) = at(r, j) * u;
    }

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Poly> a_;
};

}  // namespace rankpert
