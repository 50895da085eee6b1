#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankpert/poly.hpp"

/// Exact dense matrices over a field: arithmetic, rank, inverse,
/// characteristic polynomial, principal-minor sums, companion matrices.

namespace rankpert {

class Mat {
  public:
    Mat(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols),
          a_(rows * cols, Scalar::zero(field_)) {}

    static Mat zero(const FieldSpec& f, std::size_t n) { return Mat(f, n, n); }

    static Mat identity(const FieldSpec& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    /// Test/fixture convenience: row-major integer entries.
    static Mat from_ints(const FieldSpec& f, std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Mat m(f, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("Mat: ragged rows");
            std::size_t j = 0;
            for (long v : row) m.at(i, j++) = Scalar::of(f, v);
            ++i;
        }
        return m;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Scalar& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const Scalar& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (field_ != o.field_) throw std::invalid_argument("Mat: field mismatch");
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& bkj = o.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    Mat operator*(const Scalar& c) const {
        Mat r = *this;
        for (Scalar& v : r.a_) v *= c;
        return r;
    }

    Mat pow(std::size_t e) const {
        require_square("pow");
        Mat r = identity(field_, rows_);
        Mat b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Mat& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    /// Row-echelon rank; pivots are the first nonzero entry in column order.
    std::size_t rank() const {
        Mat w = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && w.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            w.swap_rows(piv, r);
            Scalar inv = w.at(r, col).inverse();
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (w.at(i, col).is_zero()) continue;
                Scalar factor = w.at(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    w.at(i, j) -= factor * w.at(r, j);
            }
            ++r;
        }
        return r;
    }

    std::size_t nullity() const { return cols_ - rank(); }

    Scalar det() const {
        require_square("det");
        Mat w = *this;
        Scalar result = Scalar::one(field_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && w.at(piv, col).is_zero()) ++piv;
            if (piv == rows_) return Scalar::zero(field_);
            if (piv != col) {
                w.swap_rows(piv, col);
                result = -result;
            }
            result *= w.at(col, col);
            Scalar inv = w.at(col, col).inverse();
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (w.at(i, col).is_zero()) continue;
                Scalar factor = w.at(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    w.at(i, j) -= factor * w.at(col, j);
            }
        }
        return result;
    }

    Mat inverse() const {
        require_square("inverse");
        const std::size_t n = rows_;
        Mat w = *this;
        Mat inv = identity(field_, n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && w.at(piv, col).is_zero()) ++piv;
            if (piv == n) throw std::domain_error("Mat: singular matrix has no inverse");
            w.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            Scalar s = w.at(col, col).inverse();
            for (std::size_t j = 0; j < n; ++j) {
                w.at(col, j) *= s;
                inv.at(col, j) *= s;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || w.at(i, col).is_zero()) continue;
                Scalar factor = w.at(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    w.at(i, j) -= factor * w.at(col, j);
                    inv.at(i, j) -= factor * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Monic det(xI - M), by similarity reduction to Hessenberg form and the
    /// leading-submatrix recurrence.  Exact over any field.
    Poly charpoly() const {
        require_square("charpoly");
        const std::size_t n = rows_;
        const FieldSpec& f = field_;
        if (n == 0) return Poly::one(f);

        Mat h = *this;
        for (std::size_t j = 0; j + 2 < n; ++j) {
            std::size_t piv = j + 1;
            while (piv < n && h.at(piv, j).is_zero()) ++piv;
            if (piv == n) continue;
            if (piv != j + 1) {
                h.swap_rows(piv, j + 1);
                h.swap_cols(piv, j + 1);
            }
            Scalar inv = h.at(j + 1, j).inverse();
            for (std::size_t i = j + 2; i < n; ++i) {
                if (h.at(i, j).is_zero()) continue;
                Scalar factor = h.at(i, j) * inv;
                for (std::size_t col = j; col < n; ++col)
                    h.at(i, col) -= factor * h.at(j + 1, col);
                for (std::size_t row = 0; row < n; ++row)
                    h.at(row, j + 1) += factor * h.at(row, i);
            }
        }

        // p_k = (x - h_kk) p_{k-1} - sum_m h_mk (prod subdiagonals) p_{m-1}
        std::vector<Poly> p;
        p.push_back(Poly::one(f));
        for (std::size_t k = 1; k <= n; ++k) {
            Poly pk = (Poly::x(f) - Poly::constant(h.at(k - 1, k - 1))) * p[k - 1];
            Scalar subprod = Scalar::one(f);
            for (std::size_t m = k - 1; m-- > 0;) {
                subprod *= h.at(m + 1, m);
                if (subprod.is_zero()) break;
                Scalar c = h.at(m, k - 1) * subprod;
                if (!c.is_zero()) pk -= p[m] * c;
            }
            p.push_back(std::move(pk));
        }
        return p[n];
    }

    /// Sum of all k x k principal minors (1 for k = 0).  Enumerates index
    /// subsets directly; meant for desk-scale cross-checks.
    Scalar principal_minor_sum(std::size_t k) const {
        require_square("principal_minor_sum");
        const std::size_t n = rows_;
        if (k > n) throw std::invalid_argument("principal_minor_sum: k exceeds dimension");
        if (k == 0) return Scalar::one(field_);

        Scalar total = Scalar::zero(field_);
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Mat sub(field_, k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(idx[i], idx[j]);
            total += sub.det();

            // next k-subset in lexicographic order
            std::size_t i = k;
            while (i-- > 0) {
                if (idx[i] != i + n - k) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) return total;
            }
        }
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }

    /// Column vector as an n x 1 matrix.
    Mat col(std::size_t j) const {
        Mat v(field_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) v.at(i, 0) = at(i, j);
        return v;
    }

    void set_col(std::size_t j, const Mat& v) {
        assert(v.rows() == rows_ && v.cols() == 1);
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
    }

  private:
    void check_same_shape(const Mat& o) const {
        if (field_ != o.field_) throw std::invalid_argument("Mat: field mismatch");
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: dimension mismatch");
    }

    void require_square(const char* op) const {
        if (!is_square())
            throw std::invalid_argument(std::string("Mat: ") + op + " requires a square matrix");
    }

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Companion matrix of a monic p of degree d >= 1: subdiagonal ones, last
/// column -a_0 ... -a_{d-1}.
inline Mat companion(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("companion: need a monic polynomial of degree >= 1");
    const std::size_t d = static_cast<std::size_t>(p.degree());
    Mat m(p.field(), d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) m.at(i + 1, i) = Scalar::one(p.field());
    for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = -p.coeff(i);
    return m;
}

/// Evaluate a polynomial at a square matrix (Horner).
inline Mat poly_eval_matrix(const Poly& p, const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("poly_eval_matrix: matrix must be square");
    if (p.field() != m.field()) throw std::invalid_argument("poly_eval_matrix: field mismatch");
    Mat r = Mat::zero(m.field(), m.rows());
    for (int i = p.degree(); i >= 0; --i) {
        r = r * m;
        Scalar c = p.coeff(static_cast<std::size_t>(i));
        for (std::size_t d = 0; d < m.rows(); ++d) r.at(d, d) += c;
    }
    return r;
}

}  // namespace rankpert
