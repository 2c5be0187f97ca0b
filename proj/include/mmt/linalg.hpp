#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <optional>
#include <vector>

#include "mmt/rational.hpp"

namespace mmt {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using RatMat = Mat<Rat>;
using RealMat = Mat<double>;
using RatVec = Vec<Rat>;
using RealVec = Vec<double>;

// ---- exact elimination kernels (rationals) ----

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref_in_place(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        m.row(row).swap(m.row(piv));
        Rat d = m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) /= d;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int exact_rank(RatMat m) { return static_cast<int>(rref_in_place(m).size()); }

// Numerical rank: singular values below tol * sigma_max count as zero.
inline int numeric_rank(const RealMat& m, double tol = 1e-8) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<RealMat> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++r;
    return r;
}

inline Rat exact_det(RatMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    Rat det = 1;
    const int n = static_cast<int>(m.rows());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) { m.row(col).swap(m.row(piv)); det = -det; }
        det *= m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(col, col);
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

// Inverse by Gauss-Jordan; nullopt when singular.
inline std::optional<RatMat> exact_inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = static_cast<int>(m.rows());
    RatMat aug(n, 2 * n);
    aug << m, RatMat::Identity(n, n);
    auto pivots = rref_in_place(aug);
    // singular iff elimination needed a pivot outside m's columns
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
    return RatMat(aug.rightCols(n));
}

// Solves m * x = rhs exactly (m square nonsingular); nullopt when singular.
inline std::optional<RatMat> exact_solve(const RatMat& m, const RatMat& rhs) {
    if (m.rows() != m.cols() || m.rows() != rhs.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const int n = static_cast<int>(m.rows());
    RatMat aug(n, n + rhs.cols());
    aug << m, rhs;
    auto pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
    return RatMat(aug.rightCols(rhs.cols()));
}

// Basis of the right nullspace, one column per free variable.
inline RatMat exact_nullspace(RatMat m) {
    const int cols = static_cast<int>(m.cols());
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    RatMat basis(cols, cols - static_cast<int>(pivots.size()));
    int out = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v = RatVec::Zero(cols);
        v(c) = 1;
        for (int k = 0; k < static_cast<int>(pivots.size()); ++k) v(pivots[k]) = -m(k, c);
        basis.col(out++) = v;
    }
    return basis;
}

// Columns of m forming a basis of its column space (pivot columns).
inline RatMat columnspace_basis(const RatMat& m) {
    RatMat work = m;
    auto pivots = rref_in_place(work);
    RatMat basis(m.rows(), static_cast<int>(pivots.size()));
    for (int k = 0; k < static_cast<int>(pivots.size()); ++k) basis.col(k) = m.col(pivots[k]);
    return basis;
}

inline bool is_zero_vec(const RatVec& v) {
    for (int i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

inline bool in_span(const RatMat& basis, const RatVec& v) {
    if (basis.cols() == 0) return is_zero_vec(v);
    RatMat aug(basis.rows(), basis.cols() + 1);
    aug << basis, v;
    return exact_rank(aug) == exact_rank(basis);
}

// Intersection of span(u) and span(w) as a (possibly empty) column basis.
inline RatMat span_intersection(const RatMat& u, const RatMat& w) {
    if (u.cols() == 0 || w.cols() == 0) return RatMat(u.rows(), 0);
    RatMat stacked(u.rows(), u.cols() + w.cols());
    stacked << u, -w;
    RatMat null = exact_nullspace(stacked);
    RatMat result(u.rows(), null.cols());
    for (int k = 0; k < null.cols(); ++k)
        result.col(k) = u * null.block(0, k, u.cols(), 1);
    // drop zero columns (possible if u or w had dependent columns)
    int out = 0;
    for (int k = 0; k < result.cols(); ++k)
        if (!is_zero_vec(result.col(k))) result.col(out++) = result.col(k);
    result.conservativeResize(Eigen::NoChange, out);
    return result;
}

template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Scales v so its first nonzero entry is 1; identity on the zero vector.
inline RatVec normalize_leading(RatVec v) {
    for (int i = 0; i < v.size(); ++i)
        if (v(i) != 0) { Rat d = v(i); v /= d; break; }
    return v;
}

}  // namespace mmt
