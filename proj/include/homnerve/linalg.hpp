#ifndef HOMNERVE_LINALG_HPP
#define HOMNERVE_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace homnerve {

/// Dense row-major matrix over the field model F.
template <class F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          entries_(rows * cols, field_.zero()) {}

    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw InvalidInput("matrix entry count does not match its shape");
    }

    /// Builds a matrix from integer entries reduced into the field.
    static Matrix from_ints(F field, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& values) {
        if (values.size() != rows * cols)
            throw InvalidInput("matrix entry count does not match its shape");
        Matrix m(field, rows, cols);
        for (std::size_t i = 0; i < values.size(); ++i) m.entries_[i] = field.from_int(values[i]);
        return m;
    }

    /// Builds a matrix from (numerator, denominator) pairs; throws InvalidInput
    /// when a denominator is not invertible in the field.
    static Matrix from_rationals(F field, std::size_t rows, std::size_t cols,
                                 const std::vector<std::pair<BigInt, BigInt>>& values) {
        if (values.size() != rows * cols)
            throw InvalidInput("matrix entry count does not match its shape");
        Matrix m(field, rows, cols);
        for (std::size_t i = 0; i < values.size(); ++i)
            m.entries_[i] = field.from_rational(values[i].first, values[i].second);
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const value_type> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::vector<value_type> column(std::size_t c) const {
        std::vector<value_type> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }
    std::vector<std::vector<value_type>> columns() const {
        std::vector<std::vector<value_type>> out;
        out.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
        return out;
    }

    bool is_zero() const {
        for (const auto& v : entries_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

    Matrix with_column(std::span<const value_type> col) const {
        if (col.size() != rows_) throw InvalidInput("column length does not match row count");
        Matrix out(field_, rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
            out(r, cols_) = col[r];
        }
        return out;
    }

    Matrix with_zero_row() const {
        Matrix out(field_, rows_ + 1, cols_);
        std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> entries_;
};

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product shape mismatch");
    const F& f = a.field();
    Matrix<F> out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!f.is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    return out;
}

template <class F>
std::vector<typename F::value_type> matvec(const Matrix<F>& m,
                                          std::span<const typename F::value_type> v) {
    if (v.size() != m.cols()) throw InvalidInput("vector length does not match column count");
    const F& f = m.field();
    std::vector<typename F::value_type> out(m.rows(), f.zero());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!f.is_zero(m(r, c)) && !f.is_zero(v[c])) out[r] = f.add(out[r], f.mul(m(r, c), v[c]));
    return out;
}

/// Reduced row echelon form together with its pivot columns.
template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. Columns are scanned left to right; the pivot of
/// each column is the first row (at or below the current one) holding a
/// nonzero entry.
template <class F>
RowEchelon<F> row_echelon(Matrix<F> m) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        const auto scale = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || f.is_zero(m(r, col))) continue;
            const auto factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

/// Dimension of the row space. Forward elimination only; same pivot rule as
/// row_echelon.
template <class F>
std::size_t rank(Matrix<F> m) {
    const F& f = m.field();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        const auto scale = f.inv(m(row, col));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (f.is_zero(m(r, col))) continue;
            const auto factor = f.mul(m(r, col), scale);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        ++row;
    }
    return row;
}

/// Basis of {v : m v = 0}, one vector per free column of the echelon form.
template <class F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    const auto ech = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_columns) is_pivot[c] = true;

    std::vector<std::vector<typename F::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::value_type> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i)
            v[ech.pivot_columns[i]] = f.neg(ech.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incrementally maintained echelon basis of a subspace of F^n.
///
/// Stored vectors are normalized to 1 at their pivot and vanish at the
/// pivots of every earlier vector, so one pass in insertion order reduces
/// any vector.
template <class F>
class EchelonBasis {
public:
    using value_type = typename F::value_type;
    using Vector = std::vector<value_type>;

    EchelonBasis(F field, std::size_t length) : field_(std::move(field)), length_(length) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t length() const { return length_; }

    Vector reduce(Vector v) const {
        if (v.size() != length_) throw InvalidInput("vector length mismatch in echelon basis");
        for (const auto& [pivot, row] : rows_) {
            if (field_.is_zero(v[pivot])) continue;
            const auto factor = v[pivot];
            for (std::size_t i = 0; i < length_; ++i)
                if (!field_.is_zero(row[i])) v[i] = field_.sub(v[i], field_.mul(factor, row[i]));
        }
        return v;
    }

    bool contains(const Vector& v) const { return is_zero(reduce(v)); }

    /// Adds v to the spanned subspace. Returns false when v was already in it.
    bool insert(const Vector& v) {
        Vector r = reduce(v);
        std::size_t pivot = 0;
        while (pivot < length_ && field_.is_zero(r[pivot])) ++pivot;
        if (pivot == length_) return false;
        const auto scale = field_.inv(r[pivot]);
        for (auto& x : r) x = field_.mul(x, scale);
        rows_.emplace_back(pivot, std::move(r));
        return true;
    }

private:
    bool is_zero(const Vector& v) const {
        for (const auto& x : v)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    F field_;
    std::size_t length_;
    std::vector<std::pair<std::size_t, Vector>> rows_;
};

/// Vectors of `ambient` that, together with any basis of span(inside), form a
/// basis of span(ambient). Throws InvalidInput unless span(inside) is
/// contained in span(ambient).
template <class F>
std::vector<std::vector<typename F::value_type>> extend_to_complement(
    const std::vector<std::vector<typename F::value_type>>& inside,
    const std::vector<std::vector<typename F::value_type>>& ambient, const F& field,
    std::size_t length) {
    EchelonBasis<F> ambient_span(field, length);
    for (const auto& v : ambient) ambient_span.insert(v);
    for (const auto& v : inside)
        if (!ambient_span.contains(v))
            throw InvalidInput("extend_to_complement: inside vector outside the ambient span");

    EchelonBasis<F> span(field, length);
    for (const auto& v : inside) span.insert(v);
    std::vector<std::vector<typename F::value_type>> out;
    for (const auto& v : ambient)
        if (span.insert(v)) out.push_back(v);
    return out;
}

}  // namespace homnerve

#endif
