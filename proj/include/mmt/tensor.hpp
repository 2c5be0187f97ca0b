#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mmt/linalg.hpp"

namespace mmt {

struct Dims {
    int P = 1, Q = 1, S = 1;

    bool operator==(const Dims&) const = default;
};

inline void check_dims(const Dims& d) {
    if (d.P < 1 || d.Q < 1 || d.S < 1)
        throw std::invalid_argument("dims must be positive");
    // Reject sizes whose dense representation cannot be indexed safely.
    const std::int64_t pq = std::int64_t(d.P) * d.Q;
    const std::int64_t qs = std::int64_t(d.Q) * d.S;
    const std::int64_t sp = std::int64_t(d.S) * d.P;
    if (pq * qs * sp > (std::int64_t(1) << 40))
        throw std::invalid_argument("dims too large for the dense tensor oracle");
}

// One unit entry of the matrix-multiplication tensor (1-based indices).
struct Entry {
    int alpha, beta, gamma;

    bool operator==(const Entry&) const = default;
};

// The MM tensor T_PQS: PQS unit entries in a PQ x QS x SP array.
struct MMTensor {
    Dims dims;
    std::vector<Entry> entries;
};

// Canonical index map: alpha=(p-1)Q+q, beta=(q-1)S+s, gamma=(s-1)P+p.
// This is the unique map under which contracting with x=vec(X^T), y=vec(Y^T)
// yields z=vec(XY); pinned by a property test rather than the display formulas.
inline MMTensor build_mm_tensor(const Dims& d) {
    check_dims(d);
    MMTensor t{d, {}};
    t.entries.reserve(std::size_t(d.P) * d.Q * d.S);
    for (int p = 1; p <= d.P; ++p)
        for (int q = 1; q <= d.Q; ++q)
            for (int s = 1; s <= d.S; ++s)
                t.entries.push_back({(p - 1) * d.Q + q, (q - 1) * d.S + s, (s - 1) * d.P + p});
    return t;
}

// Dense 3-way array stored as mode-1 fibers: value(a, b, c) with 0-based indices.
template <class T>
struct DenseTensor {
    int n1 = 0, n2 = 0, n3 = 0;
    std::vector<T> values;  // index (a*n2 + b)*n3 + c

    T& at(int a, int b, int c) { return values[(std::size_t(a) * n2 + b) * n3 + c]; }
    const T& at(int a, int b, int c) const { return values[(std::size_t(a) * n2 + b) * n3 + c]; }
};

template <class T>
DenseTensor<T> densify(const MMTensor& t) {
    const int n1 = t.dims.P * t.dims.Q, n2 = t.dims.Q * t.dims.S, n3 = t.dims.S * t.dims.P;
    DenseTensor<T> out{n1, n2, n3, std::vector<T>(std::size_t(n1) * n2 * n3, T(0))};
    for (const Entry& e : t.entries) out.at(e.alpha - 1, e.beta - 1, e.gamma - 1) = T(1);
    return out;
}

// Brute-force evaluation of [[A,B,C]]; the oracle vehicle for everything else.
template <class T>
DenseTensor<T> dense_eval(const Mat<T>& A, const Mat<T>& B, const Mat<T>& C) {
    const int n1 = static_cast<int>(A.rows());
    const int n2 = static_cast<int>(B.rows());
    const int n3 = static_cast<int>(C.rows());
    if (A.cols() != B.cols() || B.cols() != C.cols())
        throw std::invalid_argument("dense_eval: factor column counts differ");
    DenseTensor<T> out{n1, n2, n3, std::vector<T>(std::size_t(n1) * n2 * n3, T(0))};
    for (int r = 0; r < A.cols(); ++r)
        for (int a = 0; a < n1; ++a) {
            if (A(a, r) == T(0)) continue;
            for (int b = 0; b < n2; ++b) {
                if (B(b, r) == T(0)) continue;
                const T ab = A(a, r) * B(b, r);
                for (int c = 0; c < n3; ++c) out.at(a, b, c) += ab * C(c, r);
            }
        }
    return out;
}

// Squared Frobenius distance || T_dims - [[A,B,C]] ||_F^2, exact for rationals.
template <class T>
T brent_residual(const Mat<T>& A, const Mat<T>& B, const Mat<T>& C, const Dims& d) {
    check_dims(d);
    if (A.rows() != d.P * d.Q)
        throw std::invalid_argument("brent_residual: mode-A rows != P*Q");
    if (B.rows() != d.Q * d.S)
        throw std::invalid_argument("brent_residual: mode-B rows != Q*S");
    if (C.rows() != d.S * d.P)
        throw std::invalid_argument("brent_residual: mode-C rows != S*P");
    DenseTensor<T> approx = dense_eval(A, B, C);
    for (const Entry& e : build_mm_tensor(d).entries)
        approx.at(e.alpha - 1, e.beta - 1, e.gamma - 1) -= T(1);
    T sum(0);
    for (const T& v : approx.values) sum += v * v;
    return sum;
}

}  // namespace mmt
