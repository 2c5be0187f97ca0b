#pragma once

#include "mmt/factorization.hpp"
#include "mmt/rng.hpp"

namespace mmt {

// F (PS x R): F[(s-1)P+p, r] = sum_q A(q,p,r) B(s,q,r), i.e. column r is
// vec([B_r A_r]^T).  Row layout matches vec(Z) so tr(F^T C) is a plain dot.
// Costs O(R P Q S) multiply-adds.
template <class T>
Mat<T> compute_F(const Mat<T>& A, const Mat<T>& B, const Dims& d) {
    if (A.rows() != d.P * d.Q || B.rows() != d.Q * d.S || A.cols() != B.cols())
        throw std::invalid_argument("compute_F: shape mismatch");
    const int R = static_cast<int>(A.cols());
    Mat<T> F = Mat<T>::Zero(d.P * d.S, R);
    for (int r = 0; r < R; ++r)
        for (int p = 1; p <= d.P; ++p)
            for (int q = 1; q <= d.Q; ++q) {
                const T a = A((p - 1) * d.Q + q - 1, r);
                if (a == T(0)) continue;
                for (int s = 1; s <= d.S; ++s)
                    F((s - 1) * d.P + p - 1, r) += a * B((q - 1) * d.S + s - 1, r);
            }
    return F;
}

// G = (A^T A) * (B^T B), elementwise; symmetric PSD.
template <class T>
Mat<T> compute_G(const Mat<T>& A, const Mat<T>& B) {
    if (A.cols() != B.cols()) throw std::invalid_argument("compute_G: column counts differ");
    return Mat<T>((A.transpose() * A).cwiseProduct(B.transpose() * B));
}

// phi = PQS - 2 tr(F^T C) + tr(C G C^T); equals the Brent residual (Lemma 2).
template <class T>
T cost(const Factorization<T>& f) {
    check_shapes(f);
    const Mat<T> F = compute_F(f.A, f.B, f.dims);
    const Mat<T> G = compute_G(f.A, f.B);
    const T tr_fc = F.cwiseProduct(f.C).sum();
    const T tr_cgc = (f.C * G).cwiseProduct(f.C).sum();
    return T(f.dims.P * f.dims.Q * f.dims.S) - T(2) * tr_fc + tr_cgc;
}

// (tr(F^T C), tr(C G C^T)); both equal PQS for valid decompositions.
template <class T>
std::pair<T, T> trace_identities(const Factorization<T>& f) {
    check_shapes(f);
    const Mat<T> F = compute_F(f.A, f.B, f.dims);
    const Mat<T> G = compute_G(f.A, f.B);
    return {F.cwiseProduct(f.C).sum(), (f.C * G).cwiseProduct(f.C).sum()};
}

// Monte Carlo estimate of E||vec(XY) - C((A^T x)*(B^T y))||^2 with X, Y having
// i.i.d. N(0,1) entries; an unbiased estimator of cost() (Lemma 1).
struct MonteCarloResult {
    double estimate = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
};

inline MonteCarloResult monte_carlo_cost(const RealFact& f, long n_samples, std::uint64_t seed) {
    check_shapes(f);
    if (n_samples < 1) throw std::invalid_argument("monte_carlo_cost: n_samples must be >= 1");
    const Dims& d = f.dims;
    Rng rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    RealMat X(d.P, d.Q), Y(d.Q, d.S);
    for (long n = 0; n < n_samples; ++n) {
        for (int i = 0; i < X.size(); ++i) X(i) = rng.normal();
        for (int i = 0; i < Y.size(); ++i) Y(i) = rng.normal();
        const RealMat Z = apply(f, X, Y);
        const double err = (RealMat(X * Y) - Z).squaredNorm();
        sum += err;
        sum_sq += err * err;
    }
    const double mean = sum / double(n_samples);
    const double var = n_samples > 1 ? (sum_sq - sum * sum / double(n_samples)) / double(n_samples - 1) : 0.0;
    return {mean, std::sqrt(std::max(var, 0.0) / double(n_samples)), n_samples};
}

inline MonteCarloResult monte_carlo_cost(const RatFact&, long, std::uint64_t) {
    throw std::invalid_argument(
        "monte_carlo_cost requires a float factorization; convert with to_real()");
}

}  // namespace mmt
