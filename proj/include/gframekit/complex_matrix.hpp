#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gframekit/errors.hpp"

namespace gframekit {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Dense row-major complex matrix, value semantics throughout.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatch("ComplexMatrix: entry count does not match rows*cols");
    }

    /// Row-major list construction, e.g. ComplexMatrix::from_rows(2, 2, {1, 0, 0, 1}).
    static ComplexMatrix from_rows(std::size_t rows, std::size_t cols,
                                   std::initializer_list<cplx> entries) {
        return ComplexMatrix(rows, cols, std::vector<cplx>(entries));
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    /// Returns row i as a vector.
    ComplexVector row(std::size_t i) const {
        return ComplexVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    ComplexVector col(std::size_t j) const {
        ComplexVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& v : data_) s += std::norm(v);
        return std::sqrt(s);
    }

    cplx trace() const {
        cplx t = 0.0;
        const std::size_t n = std::min(rows_, cols_);
        for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
        return t;
    }

    bool all_finite() const {
        for (const cplx& v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o, "operator+=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o, "operator-=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    ComplexMatrix& operator*=(cplx a) {
        for (cplx& v : data_) v *= a;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product: inner dimensions differ");
        ComplexMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const ComplexMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(std::string(op) + ": shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// ---- vector helpers ----------------------------------------------------

/// Inner product, linear in the first argument: <x, y> = sum x_i * conj(y_i).
inline cplx dot(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot: vector sizes differ");
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

inline double norm_sq(const ComplexVector& x) {
    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    return s;
}

inline double norm(const ComplexVector& x) { return std::sqrt(norm_sq(x)); }

inline ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& x) {
    if (m.cols() != x.size())
        throw DimensionMismatch("matrix-vector product: sizes differ");
    ComplexVector y(m.rows(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

/// y = m* x without forming the adjoint.
inline ComplexVector apply_adjoint(const ComplexMatrix& m, const ComplexVector& x) {
    if (m.rows() != x.size()) throw DimensionMismatch("apply_adjoint: sizes differ");
    ComplexVector y(m.cols(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const cplx xi = x[i];
        for (std::size_t j = 0; j < m.cols(); ++j) y[j] += std::conj(m(i, j)) * xi;
    }
    return y;
}

inline ComplexVector operator+(ComplexVector a, const ComplexVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector +: sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline ComplexVector operator-(ComplexVector a, const ComplexVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector -: sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline ComplexVector operator*(cplx s, ComplexVector a) {
    for (cplx& v : a) v *= s;
    return a;
}

/// ||m - m*||_F, the deviation from being Hermitian.
inline double hermitian_residual(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("hermitian_residual: matrix not square");
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += std::norm(m(i, j) - std::conj(m(j, i)));
    return std::sqrt(s);
}

/// (m + m*)/2; removes rounding-level asymmetry before spectral work.
inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("hermitian_part: matrix not square");
    ComplexMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return r;
}

} // namespace gframekit
