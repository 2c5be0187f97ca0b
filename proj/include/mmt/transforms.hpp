#pragma once

#include "mmt/bundled_data.hpp"
#include "mmt/rng.hpp"
#include "mmt/signatures.hpp"

namespace mmt {

// Invertible change-of-basis triple acting on slice spaces:
// A'_r = X_A A_r X_C^-1, B'_r = X_B B_r X_A^-1, C'_r = X_C C_r X_B^-1.
template <class T>
struct GrooteTransform {
    Mat<T> XA;  // Q x Q
    Mat<T> XB;  // S x S
    Mat<T> XC;  // P x P

    static GrooteTransform identity(const Dims& d) {
        return {Mat<T>::Identity(d.Q, d.Q), Mat<T>::Identity(d.S, d.S),
                Mat<T>::Identity(d.P, d.P)};
    }
};

using RatGroote = GrooteTransform<Rat>;
using RealGroote = GrooteTransform<double>;

inline RatMat inverse_or_throw(const RatMat& m, const char* which) {
    auto inv = exact_inverse(m);
    if (!inv) throw std::invalid_argument(std::string("apply_groote: singular ") + which);
    return *inv;
}

inline RealMat inverse_or_throw(const RealMat& m, const char* which) {
    Eigen::FullPivLU<RealMat> lu(m);
    if (!lu.isInvertible())
        throw std::invalid_argument(std::string("apply_groote: singular ") + which);
    return lu.inverse();
}

// Applies the three transform families in sequence; preserves [[A,B,C]].
template <class T>
Factorization<T> apply_groote(const Factorization<T>& f, const GrooteTransform<T>& gt) {
    check_shapes(f);
    const Dims& d = f.dims;
    if (gt.XA.rows() != d.Q || gt.XA.cols() != d.Q || gt.XB.rows() != d.S ||
        gt.XB.cols() != d.S || gt.XC.rows() != d.P || gt.XC.cols() != d.P)
        throw std::invalid_argument("apply_groote: transform sizes do not match dims");
    const Mat<T> XAi = inverse_or_throw(gt.XA, "X_A");
    const Mat<T> XBi = inverse_or_throw(gt.XB, "X_B");
    const Mat<T> XCi = inverse_or_throw(gt.XC, "X_C");
    Factorization<T> out = f;
    for (int r = 1; r <= f.rank(); ++r) {
        set_slice(out, Mode::A, r, Mat<T>(gt.XA * slice(f, Mode::A, r) * XCi));
        set_slice(out, Mode::B, r, Mat<T>(gt.XB * slice(f, Mode::B, r) * XAi));
        set_slice(out, Mode::C, r, Mat<T>(gt.XC * slice(f, Mode::C, r) * XBi));
    }
    return out;
}

template <class T>
GrooteTransform<T> groote_inverse(const GrooteTransform<T>& gt) {
    return {inverse_or_throw(gt.XA, "X_A"), inverse_or_throw(gt.XB, "X_B"),
            inverse_or_throw(gt.XC, "X_C")};
}

// Composition so that apply(compose(g2, g1)) == apply(g2) after apply(g1).
template <class T>
GrooteTransform<T> groote_compose(const GrooteTransform<T>& second,
                                  const GrooteTransform<T>& first) {
    return {Mat<T>(second.XA * first.XA), Mat<T>(second.XB * first.XB),
            Mat<T>(second.XC * first.XC)};
}

// Deterministic invertible integer-entry transform; entries in [-range, range],
// each matrix resampled until its determinant is nonzero.
inline RatGroote random_groote(const Dims& d, std::uint64_t seed, long entry_range = 3) {
    check_dims(d);
    if (entry_range < 1) throw std::invalid_argument("random_groote: entry_range must be >= 1");
    Rng rng(seed);
    auto draw = [&](int n) {
        RatMat m(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = Rat(rng.uniform_int(-entry_range, entry_range));
        } while (exact_det(m) == 0);
        return m;
    };
    return {draw(d.Q), draw(d.S), draw(d.P)};
}

// Kronecker composition: a decomposition of T_{P1P2,Q1Q2,S1S2} with rank R1*R2.
// Composed row indices follow the canonical map with p=(p1-1)P2+p2 etc., so the
// composed slices are Kronecker products of the parent slices.
template <class T>
Factorization<T> compose_kronecker(const Factorization<T>& f1, const Factorization<T>& f2) {
    check_shapes(f1);
    check_shapes(f2);
    const Dims d{f1.dims.P * f2.dims.P, f1.dims.Q * f2.dims.Q, f1.dims.S * f2.dims.S};
    check_dims(d);
    const int R = f1.rank() * f2.rank();
    Factorization<T> out{d, Mat<T>(d.P * d.Q, R), Mat<T>(d.Q * d.S, R), Mat<T>(d.S * d.P, R)};
    for (int r1 = 1; r1 <= f1.rank(); ++r1)
        for (int r2 = 1; r2 <= f2.rank(); ++r2) {
            const int r = (r1 - 1) * f2.rank() + r2;
            set_slice(out, Mode::A, r, kron<T>(slice(f1, Mode::A, r1), slice(f2, Mode::A, r2)));
            set_slice(out, Mode::B, r, kron<T>(slice(f1, Mode::B, r1), slice(f2, Mode::B, r2)));
            set_slice(out, Mode::C, r, kron<T>(slice(f1, Mode::C, r1), slice(f2, Mode::C, r2)));
        }
    return out;
}

// Exactness gate for the rational path: inputs must be valid decompositions.
inline RatFact compose_kronecker_checked(const RatFact& f1, const RatFact& f2) {
    if (brent_residual(f1.A, f1.B, f1.C, f1.dims) != 0)
        throw std::invalid_argument("compose_kronecker: first input is not a valid decomposition");
    if (brent_residual(f2.A, f2.B, f2.C, f2.dims) != 0)
        throw std::invalid_argument("compose_kronecker: second input is not a valid decomposition");
    return compose_kronecker(f1, f2);
}

// Cyclic-symmetric assembly for T_NNN:
// A = [A0, A1, B1, C1], B = [A0, B1, C1, A1], C = [A0, C1, A1, B1].
template <class T>
Factorization<T> cyclic_assemble(const Mat<T>& A0, const Mat<T>& A1, const Mat<T>& B1,
                                 const Mat<T>& C1) {
    const int rows = static_cast<int>(A0.rows());
    int N = 0;
    while (N * N < rows) ++N;
    if (N * N != rows) throw std::invalid_argument("cyclic_assemble: A0 rows must be a square N*N");
    if (A1.rows() != rows || B1.rows() != rows || C1.rows() != rows)
        throw std::invalid_argument("cyclic_assemble: block row counts differ");
    if (A1.cols() != B1.cols() || B1.cols() != C1.cols())
        throw std::invalid_argument("cyclic_assemble: A1, B1, C1 must share a column count");
    const int R = static_cast<int>(A0.cols() + 3 * A1.cols());
    Factorization<T> out{{N, N, N}, Mat<T>(rows, R), Mat<T>(rows, R), Mat<T>(rows, R)};
    out.A << A0, A1, B1, C1;
    out.B << A0, B1, C1, A1;
    out.C << A0, C1, A1, B1;
    return out;
}

// ---- generators for the decompositions printed in the source material ----

inline RatFact gen_strassen222() { return parse_mmcpd(data::strassen222); }
inline RatFact gen_paper333_symmetric() { return parse_mmcpd(data::paper333_symmetric); }
inline RatFact gen_appendix_e_336_A() { return parse_mmcpd(data::appendix_e_336_A); }
inline RatFact gen_appendix_e_336_B() { return parse_mmcpd(data::appendix_e_336_B); }

inline RatFact gen_double_strassen444() {
    const RatFact s = gen_strassen222();
    return compose_kronecker(s, s);
}

// Parametric symmetric 3x3x3 family; valid for any nonzero (a, b, d, f).
inline RatFact gen_param333(const Rat& a, const Rat& b, const Rat& d, const Rat& f) {
    if (a == 0 || b == 0 || d == 0 || f == 0)
        throw std::invalid_argument("param333: parameters must all be nonzero");
    auto power = [](const Rat& base, int e) {
        Rat out(1);
        for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
        return e < 0 ? Rat(1 / out) : out;
    };
    RatMat A(9, 23);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 23; ++j) {
            const auto& e = data::param333_table[i][j];
            Rat base(e.num, e.den);
            base.canonicalize();
            A(i, j) = base * power(a, e.ea) * power(b, e.eb) * power(d, e.ed) * power(f, e.ef);
        }
    const std::vector<int> perm(data::param333_perm, data::param333_perm + 23);
    RatMat B = reorder_columns(A, perm);
    RatMat C = reorder_columns(B, perm);
    return RatFact{{3, 3, 3}, A, B, C};
}

inline RatFact generator(const std::string& name, const std::vector<Rat>& params = {}) {
    if (name == "strassen222") return gen_strassen222();
    if (name == "paper333_symmetric") return gen_paper333_symmetric();
    if (name == "appendix_e_336_A") return gen_appendix_e_336_A();
    if (name == "appendix_e_336_B") return gen_appendix_e_336_B();
    if (name == "double_strassen444") return gen_double_strassen444();
    if (name == "param333") {
        if (params.size() != 4)
            throw std::invalid_argument("param333 needs exactly 4 rational parameters a b d f");
        return gen_param333(params[0], params[1], params[2], params[3]);
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

inline const std::vector<std::string>& generator_names() {
    static const std::vector<std::string> names = {
        "strassen222",        "paper333_symmetric", "param333",
        "double_strassen444", "appendix_e_336_A",   "appendix_e_336_B"};
    return names;
}

}  // namespace mmt
