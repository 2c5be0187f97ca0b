#pragma once

#include <algorithm>

#include "mmt/metrics.hpp"

namespace mmt {

// Vector signature s = 1^T (F * C): s_r is the overlap of the r-th rank-one
// term with the MM tensor; sums to PQS on valid decompositions.
template <class T>
Vec<T> signature(const Factorization<T>& f) {
    check_shapes(f);
    const Mat<T> F = compute_F(f.A, f.B, f.dims);
    return Vec<T>(F.cwiseProduct(f.C).colwise().sum().transpose());
}

// Same quantity through H_r = C_r B_r A_r (a P x P product of slices).
template <class T>
Mat<T> slice_product(const Factorization<T>& f, int r) {
    return Mat<T>(slice(f, Mode::C, r) * slice(f, Mode::B, r) * slice(f, Mode::A, r));
}

template <class T>
T signature_component_via_trace(const Factorization<T>& f, int r) {
    return slice_product(f, r).trace();
}

// Gram-based formula 1^T [G * (C^T C)]; valid only when C G = F holds
// (i.e. on actual decompositions).
template <class T>
Vec<T> signature_via_gram(const Factorization<T>& f) {
    check_shapes(f);
    const Mat<T> G = compute_G(f.A, f.B);
    return Vec<T>(G.cwiseProduct(f.C.transpose() * f.C).colwise().sum().transpose());
}

// Characteristic polynomial of H_r per column: row r holds the monic
// coefficients of det(tI - H_r) in descending powers (P+1 of them).
// Uses Faddeev-LeVerrier, which is division-light and exact over rationals.
template <class T>
Mat<T> generalized_signature(const Factorization<T>& f) {
    check_shapes(f);
    const int P = f.dims.P;
    const int R = f.rank();
    Mat<T> out(R, P + 1);
    for (int r = 1; r <= R; ++r) {
        const Mat<T> H = slice_product(f, r);
        Mat<T> M = Mat<T>::Zero(P, P);
        T c(1);
        out(r - 1, 0) = c;
        for (int k = 1; k <= P; ++k) {
            M = Mat<T>(H * M);
            for (int i = 0; i < P; ++i) M(i, i) += c;
            c = -T(1) / T(k) * Mat<T>(H * M).trace();
            out(r - 1, k) = c;
        }
    }
    return out;
}

// Per-column ranks of the three slice reshapes.  Rational facts use exact
// elimination; float facts threshold singular values at tol * sigma_max.
struct RankSignature {
    std::vector<int> sA, sB, sC;
};

inline RankSignature rank_signature(const RatFact& f, double /*tol*/ = 1e-8) {
    check_shapes(f);
    RankSignature out;
    for (int r = 1; r <= f.rank(); ++r) {
        out.sA.push_back(exact_rank(slice(f, Mode::A, r)));
        out.sB.push_back(exact_rank(slice(f, Mode::B, r)));
        out.sC.push_back(exact_rank(slice(f, Mode::C, r)));
    }
    return out;
}

inline RankSignature rank_signature(const RealFact& f, double tol = 1e-8) {
    check_shapes(f);
    if (tol <= 0) throw std::invalid_argument("rank_signature: tol must be positive");
    RankSignature out;
    for (int r = 1; r <= f.rank(); ++r) {
        out.sA.push_back(numeric_rank(slice(f, Mode::A, r), tol));
        out.sB.push_back(numeric_rank(slice(f, Mode::B, r), tol));
        out.sC.push_back(numeric_rank(slice(f, Mode::C, r), tol));
    }
    return out;
}

// ---- sorted views for cross-decomposition comparison ----

template <class T>
std::vector<T> sorted_desc(const Vec<T>& v) {
    std::vector<T> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end(), [](const T& x, const T& y) { return y < x; });
    return out;
}

inline std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

// Generalized-signature rows as a lexicographically sorted multiset.
template <class T>
std::vector<std::vector<T>> sorted_rows(const Mat<T>& m) {
    std::vector<std::vector<T>> rows;
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<T> row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

struct SignatureReport {
    std::vector<Rat> s;                      // column-aligned
    std::vector<Rat> s_sorted;               // non-increasing
    std::vector<std::vector<Rat>> generalized;  // R rows of P+1 coefficients
    RankSignature rank_sig;
};

inline SignatureReport signature_report(const RatFact& f) {
    SignatureReport rep;
    const RatVec s = signature(f);
    rep.s.assign(s.data(), s.data() + s.size());
    rep.s_sorted = sorted_desc(s);
    const RatMat gen = generalized_signature(f);
    for (int i = 0; i < gen.rows(); ++i) {
        std::vector<Rat> row(gen.cols());
        for (int j = 0; j < gen.cols(); ++j) row[j] = gen(i, j);
        rep.generalized.push_back(std::move(row));
    }
    rep.rank_sig = rank_signature(f);
    return rep;
}

}  // namespace mmt
