#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace Eigen {

// Glue so Eigen dense expressions work over exact rationals.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100,
    };
};

}  // namespace Eigen

namespace mmt {

using Rat = mpq_class;

// Parses an optionally signed integer or "n/d" fraction.
inline Rat rat_from_string(const std::string& text) {
    Rat value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("unparsable scalar: '" + text + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in scalar: '" + text + "'");
    value.canonicalize();
    return value;
}

inline std::string rat_to_string(const Rat& value) {
    return value.get_str();
}

inline double to_double(const Rat& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

// Exact dyadic representation of a double, so float data round-trips losslessly.
inline Rat rat_from_double(double value) { return Rat(value); }

}  // namespace mmt
