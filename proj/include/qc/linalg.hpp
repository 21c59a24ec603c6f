#pragma once

#include "qc/field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

/// Thrown when an operator is restricted to a subspace it does not preserve.
struct subspace_stability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense exact matrix, row-major.
template <Field F>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = F::one();
        return m;
    }
    static Mat from_rows(const std::vector<std::vector<F>>& rows) {
        Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("Mat: ragged rows");
            for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const F& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::vector<F> row(size_t r) const {
        return std::vector<F>(a_.begin() + static_cast<long>(r * cols_),
                              a_.begin() + static_cast<long>((r + 1) * cols_));
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
        std::vector<F> out(rows_, F::zero());
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c)
                if (!a_[r * cols_ + c].is_zero()) out[r] += a_[r * cols_ + c] * v[c];
        return out;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::string to_string() const {
        std::string s;
        for (size_t r = 0; r < rows_; ++r) {
            s += "[";
            for (size_t c = 0; c < cols_; ++c) s += (c ? " " : "") + at(r, c).to_string();
            s += "]\n";
        }
        return s;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

/// In-place reduced row echelon form; returns pivot column indices.
/// Pivoting picks the first row with a nonzero entry.
template <Field F>
std::vector<size_t> rref_in_place(Mat<F>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        F inv = m.at(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            F f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <Field F>
size_t rank(Mat<F> m) {
    return rref_in_place(m).size();
}

/// Basis of the right kernel {v : m v = 0}, normalized so that the basis
/// vectors, stacked as rows, are in reduced row echelon form. Size is
/// cols - rank.
template <Field F>
std::vector<std::vector<F>> kernel_basis(const Mat<F>& m) {
    Mat<F> red = m;
    std::vector<size_t> pivots = rref_in_place(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(m.cols(), F::zero());
        v[c] = F::one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, c);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    Mat<F> k = Mat<F>::from_rows(basis);
    rref_in_place(k);
    for (size_t r = 0; r < basis.size(); ++r) basis[r] = k.row(r);
    return basis;
}

/// One solution of m x = b (free variables set to zero), or nullopt if the
/// system is inconsistent.
template <Field F>
std::optional<std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    Mat<F> aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<size_t> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<F> x(m.cols(), F::zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

/// True iff v is a linear combination of the given vectors.
template <Field F>
bool in_span(const std::vector<F>& v, const std::vector<std::vector<F>>& basis) {
    if (basis.empty()) {
        for (const F& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    size_t n = basis[0].size();
    if (v.size() != n) throw std::invalid_argument("in_span: size mismatch");
    Mat<F> cols(n, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].size() != n) throw std::invalid_argument("in_span: ragged basis");
        for (size_t i = 0; i < n; ++i) cols.at(i, j) = basis[j][i];
    }
    return solve(cols, v).has_value();
}

/// Trace of op restricted to span(basis). Solves op b_i = sum_j c_ij b_j and
/// returns sum_i c_ii; throws subspace_stability_error if any image leaves
/// the span.
template <Field F>
F operator_trace_on_subspace(const Mat<F>& op, const std::vector<std::vector<F>>& basis) {
    size_t k = basis.size();
    if (k == 0) return F::zero();
    size_t n = basis[0].size();
    if (op.rows() != n || op.cols() != n)
        throw std::invalid_argument("operator_trace_on_subspace: dimension mismatch");

    // [B | op B], reduced once; coordinates of all images read off together.
    Mat<F> aug(n, 2 * k);
    for (size_t j = 0; j < k; ++j) {
        std::vector<F> img = op.apply(basis[j]);
        for (size_t i = 0; i < n; ++i) {
            aug.at(i, j) = basis[j][i];
            aug.at(i, k + j) = img[i];
        }
    }
    std::vector<size_t> pivots = rref_in_place(aug);
    size_t lead = 0;
    for (size_t c : pivots)
        if (c < k) ++lead;
    if (lead != k)
        throw std::invalid_argument("operator_trace_on_subspace: basis is not independent");
    if (pivots.size() != k)
        throw subspace_stability_error(
            "operator_trace_on_subspace: operator image leaves the subspace");

    F tr = F::zero();
    for (size_t r = 0; r < k; ++r) tr += aug.at(r, k + pivots[r]);
    return tr;
}

/// Exact determinant of a square matrix via fraction-preserving elimination.
template <Field F>
F determinant(Mat<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    size_t n = m.rows();
    F det = F::one();
    for (size_t c = 0; c < n; ++c) {
        size_t pr = c;
        while (pr < n && m.at(pr, c).is_zero()) ++pr;
        if (pr == n) return F::zero();
        if (pr != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        F inv = m.at(c, c).inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            F f = m.at(i, c) * inv;
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

}  // namespace qc
