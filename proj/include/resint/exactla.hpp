#pragma once

// Dense exact linear algebra over a coefficient field.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "resint/field.hpp"

namespace resint {

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <CoefficientField F>
class FieldMatrix {
public:
    using value_type = typename F::value_type;

    FieldMatrix() = default;
    FieldMatrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static FieldMatrix identity(const F& field, std::size_t n) {
        FieldMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }
    static FieldMatrix from_ints(const F& field, const std::vector<std::vector<long long>>& rows) {
        const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        FieldMatrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ShapeError("ragged matrix literal");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

    FieldMatrix transpose() const {
        FieldMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    FieldMatrix operator*(const FieldMatrix& o) const {
        if (cols_ != o.rows_)
            throw ShapeError("cannot multiply " + shape() + " by " + o.shape());
        FieldMatrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& a = (*this)(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
            }
        return r;
    }

    std::vector<value_type> apply(const std::vector<value_type>& v) const {
        if (v.size() != cols_) throw ShapeError("vector length does not match matrix columns");
        std::vector<value_type> out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
        return out;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

/// Reduced row echelon form: `rows` holds the rank nonzero rows, each with a
/// unit entry at its pivot column and zeros in every other pivot column.
template <CoefficientField F>
struct EchelonForm {
    FieldMatrix<F> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

// In-place Gauss-Jordan elimination; returns pivot columns. When `reduced`
// is false only entries below pivots are cleared (enough for the rank).
template <CoefficientField F>
std::vector<std::size_t> eliminate(FieldMatrix<F>& m, bool reduced) {
    const F& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && k.is_zero(m(sel, c))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        const auto inv = k.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), inv);
        const std::size_t start = reduced ? 0 : r + 1;
        for (std::size_t i = start; i < m.rows(); ++i) {
            if (i == r || k.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (k.is_zero(m(r, j))) continue;
                m(i, j) = k.sub(m(i, j), k.mul(factor, m(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <CoefficientField F>
EchelonForm<F> echelon(FieldMatrix<F> m) {
    auto pivots = detail::eliminate(m, true);
    FieldMatrix<F> rows(m.field(), pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows(i, j) = m(i, j);
    return {std::move(rows), std::move(pivots)};
}

template <CoefficientField F>
std::size_t rank(FieldMatrix<F> m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::eliminate(m, false).size();
}

/// Basis of {v : M v = 0}, one vector per free column.
template <CoefficientField F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const FieldMatrix<F>& m) {
    const F& k = m.field();
    const auto ech = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::value_type> v(m.cols(), k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = k.neg(ech.rows(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

class ComplexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// dim ker(A) - rank(B) for a composable pair V --B--> W --A--> U with A B = 0.
template <CoefficientField F>
std::size_t homology_dim(const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("homology_dim: " + a.shape() + " and " + b.shape() + " are not composable");
    if (!(a * b).is_zero()) throw ComplexError("homology_dim: consecutive maps do not compose to zero");
    const std::size_t ker = a.cols() - rank(a);
    return ker - rank(b);
}

}  // namespace resint
