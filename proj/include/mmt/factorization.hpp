#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mmt/tensor.hpp"

namespace mmt {

// A CP factor triple [[A,B,C]] for T_PQS. A is PQ x R, B is QS x R, C is SP x R.
template <class T>
struct Factorization {
    Dims dims;
    Mat<T> A, B, C;

    int rank() const { return static_cast<int>(A.cols()); }

    bool operator==(const Factorization& other) const {
        return dims == other.dims && A == other.A && B == other.B && C == other.C;
    }
};

using RatFact = Factorization<Rat>;
using RealFact = Factorization<double>;

template <class T>
void check_shapes(const Factorization<T>& f) {
    const Dims& d = f.dims;
    check_dims(d);
    if (f.A.rows() != d.P * d.Q || f.B.rows() != d.Q * d.S || f.C.rows() != d.S * d.P)
        throw std::invalid_argument("factorization: factor row counts do not match dims");
    if (f.A.cols() != f.B.cols() || f.B.cols() != f.C.cols())
        throw std::invalid_argument("factorization: factor column counts differ");
}

template <class T>
T brent_residual(const Factorization<T>& f) {
    check_shapes(f);
    return brent_residual(f.A, f.B, f.C, f.dims);
}

enum class Mode { A, B, C };

// r-th column (1-based) reshaped per the slice convention:
// A-slice Q x P, B-slice S x Q, C-slice P x S, all column-major reshapes.
template <class T>
Mat<T> slice(const Factorization<T>& f, Mode mode, int r) {
    if (r < 1 || r > f.rank()) throw std::out_of_range("slice: column index out of range");
    const auto reshape = [](const Mat<T>& m, int r0, int nrows) {
        const int ncols = static_cast<int>(m.rows()) / nrows;
        Mat<T> out(nrows, ncols);
        for (int j = 0; j < ncols; ++j)
            for (int i = 0; i < nrows; ++i) out(i, j) = m(j * nrows + i, r0);
        return out;
    };
    switch (mode) {
        case Mode::A: return reshape(f.A, r - 1, f.dims.Q);
        case Mode::B: return reshape(f.B, r - 1, f.dims.S);
        default: return reshape(f.C, r - 1, f.dims.P);
    }
}

// Writes a slice-shaped matrix back into column r (1-based); inverse of slice().
template <class T>
void set_slice(Factorization<T>& f, Mode mode, int r, const Mat<T>& sl) {
    Mat<T>& m = mode == Mode::A ? f.A : mode == Mode::B ? f.B : f.C;
    const int nrows = static_cast<int>(sl.rows());
    for (int j = 0; j < sl.cols(); ++j)
        for (int i = 0; i < nrows; ++i) m(j * nrows + i, r - 1) = sl(i, j);
}

// Fast matrix product through the decomposition: Z = reshape(C((A^T x) * (B^T y))).
// Exactly R scalar multiplications between the projected vectors.
template <class T>
Mat<T> apply(const Factorization<T>& f, const Mat<T>& X, const Mat<T>& Y) {
    check_shapes(f);
    const Dims& d = f.dims;
    if (X.rows() != d.P || X.cols() != d.Q) throw std::invalid_argument("apply: X must be P x Q");
    if (Y.rows() != d.Q || Y.cols() != d.S) throw std::invalid_argument("apply: Y must be Q x S");
    Vec<T> x(d.P * d.Q), y(d.Q * d.S);
    for (int p = 1; p <= d.P; ++p)
        for (int q = 1; q <= d.Q; ++q) x((p - 1) * d.Q + q - 1) = X(p - 1, q - 1);
    for (int q = 1; q <= d.Q; ++q)
        for (int s = 1; s <= d.S; ++s) y((q - 1) * d.S + s - 1) = Y(q - 1, s - 1);
    Vec<T> prods = (f.A.transpose() * x).cwiseProduct(f.B.transpose() * y);
    Vec<T> z = f.C * prods;
    Mat<T> Z(d.P, d.S);
    for (int s = 1; s <= d.S; ++s)
        for (int p = 1; p <= d.P; ++p) Z(p - 1, s - 1) = z((s - 1) * d.P + p - 1);
    return Z;
}

// Column reordering by a 1-based permutation: out(:, j) = m(:, perm[j]).
template <class T>
Mat<T> reorder_columns(const Mat<T>& m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m.cols())
        throw std::invalid_argument("reorder_columns: permutation length != column count");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 1 || p > m.cols() || seen[p - 1])
            throw std::invalid_argument("reorder_columns: not a bijection on [1,R]");
        seen[p - 1] = true;
    }
    Mat<T> out(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) out.col(j) = m.col(perm[j] - 1);
    return out;
}

inline RealFact to_real(const RatFact& f) {
    RealFact out{f.dims, RealMat(f.A.rows(), f.A.cols()), RealMat(f.B.rows(), f.B.cols()),
                 RealMat(f.C.rows(), f.C.cols())};
    for (int j = 0; j < f.A.cols(); ++j) {
        for (int i = 0; i < f.A.rows(); ++i) out.A(i, j) = to_double(f.A(i, j));
        for (int i = 0; i < f.B.rows(); ++i) out.B(i, j) = to_double(f.B(i, j));
        for (int i = 0; i < f.C.rows(); ++i) out.C(i, j) = to_double(f.C(i, j));
    }
    return out;
}

// Exact: each double becomes its dyadic rational value.
inline RatFact to_rational(const RealFact& f) {
    RatFact out{f.dims, RatMat(f.A.rows(), f.A.cols()), RatMat(f.B.rows(), f.B.cols()),
                RatMat(f.C.rows(), f.C.cols())};
    for (int j = 0; j < f.A.cols(); ++j) {
        for (int i = 0; i < f.A.rows(); ++i) out.A(i, j) = rat_from_double(f.A(i, j));
        for (int i = 0; i < f.B.rows(); ++i) out.B(i, j) = rat_from_double(f.B(i, j));
        for (int i = 0; i < f.C.rows(); ++i) out.C(i, j) = rat_from_double(f.C(i, j));
    }
    return out;
}

// ---- MMCPD/1 text format ----
// Line 1: "MMCPD 1".  Line 2: "P Q S R".  Then blocks "A", "B", "C", each with
// (rows) lines of R whitespace-separated scalars (integer or n/d).  '#' starts
// a comment; blank lines are ignored.

namespace detail {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string strip_comment(std::string line) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    return line;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank line with comments stripped; false at EOF.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++lineno_;
            std::string stripped = strip_comment(raw);
            std::istringstream probe(stripped);
            std::string tok;
            if (probe >> tok) {
                out = stripped;
                return true;
            }
        }
        return false;
    }

    int lineno() const { return lineno_; }

private:
    std::istream& in_;
    int lineno_ = 0;
};

[[noreturn]] inline void fail(int lineno, const std::string& what) {
    throw FormatError("mmcpd line " + std::to_string(lineno) + ": " + what);
}

}  // namespace detail

inline RatFact load_rational(std::istream& in) {
    detail::LineReader reader(in);
    std::string line;
    if (!reader.next(line)) detail::fail(reader.lineno(), "empty file");
    {
        std::istringstream head(line);
        std::string magic;
        int version = 0;
        if (!(head >> magic >> version) || magic != "MMCPD" || version != 1)
            detail::fail(reader.lineno(), "expected header 'MMCPD 1'");
    }
    if (!reader.next(line)) detail::fail(reader.lineno(), "missing dimension line");
    Dims d;
    int R = 0;
    {
        std::istringstream dims_line(line);
        if (!(dims_line >> d.P >> d.Q >> d.S >> R) || R < 1)
            detail::fail(reader.lineno(), "expected 'P Q S R'");
        check_dims(d);
    }
    RatFact f{d, RatMat(d.P * d.Q, R), RatMat(d.Q * d.S, R), RatMat(d.S * d.P, R)};
    for (auto [name, mat] : {std::pair<const char*, RatMat*>{"A", &f.A}, {"B", &f.B}, {"C", &f.C}}) {
        if (!reader.next(line)) detail::fail(reader.lineno(), std::string("missing block '") + name + "'");
        {
            std::istringstream block(line);
            std::string tok;
            block >> tok;
            if (tok != name) detail::fail(reader.lineno(), std::string("expected block '") + name + "', got '" + tok + "'");
        }
        for (int i = 0; i < mat->rows(); ++i) {
            if (!reader.next(line))
                detail::fail(reader.lineno(), std::string("block '") + name + "' truncated at row " + std::to_string(i + 1));
            std::istringstream row(line);
            std::string tok;
            for (int j = 0; j < R; ++j) {
                if (!(row >> tok))
                    detail::fail(reader.lineno(), "expected " + std::to_string(R) + " scalars, found " + std::to_string(j));
                try {
                    (*mat)(i, j) = rat_from_string(tok);
                } catch (const std::invalid_argument& e) {
                    detail::fail(reader.lineno(), e.what());
                }
            }
            if (row >> tok) detail::fail(reader.lineno(), "trailing data after " + std::to_string(R) + " scalars");
        }
    }
    if (reader.next(line)) detail::fail(reader.lineno(), "trailing data after block 'C'");
    return f;
}

inline RatFact load_rational(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return load_rational(in);
    } catch (detail::FormatError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline RealFact load_real(const std::string& path) { return to_real(load_rational(path)); }

inline void save(const RatFact& f, std::ostream& out) {
    check_shapes(f);
    out << "MMCPD 1\n" << f.dims.P << ' ' << f.dims.Q << ' ' << f.dims.S << ' ' << f.rank() << '\n';
    for (auto [name, mat] : {std::pair<const char*, const RatMat*>{"A", &f.A}, {"B", &f.B}, {"C", &f.C}}) {
        out << name << '\n';
        for (int i = 0; i < mat->rows(); ++i) {
            for (int j = 0; j < mat->cols(); ++j) {
                if (j) out << ' ';
                out << rat_to_string((*mat)(i, j));
            }
            out << '\n';
        }
    }
}

inline void save(const RatFact& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    save(f, out);
}

// Floats are persisted as their exact dyadic rational values.
inline void save(const RealFact& f, const std::string& path) { save(to_rational(f), path); }

inline RatFact parse_mmcpd(const std::string& text) {
    std::istringstream in(text);
    return load_rational(in);
}

}  // namespace mmt
