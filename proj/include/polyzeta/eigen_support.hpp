#pragma once

#include "polyzeta/rational.hpp"

#include <Eigen/Core>

// NumTraits so Eigen dense types can carry the exact rational scalar.
namespace Eigen {

template <>
struct NumTraits<polyzeta::Rational> : GenericNumTraits<polyzeta::Rational> {
    typedef polyzeta::Rational Real;
    typedef polyzeta::Rational NonInteger;
    typedef polyzeta::Rational Nested;
    typedef polyzeta::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60
    };
    static inline Real epsilon() { return polyzeta::Rational(0); }
    static inline Real dummy_precision() { return polyzeta::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace polyzeta {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline bool matrices_equal(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

inline bool is_strictly_upper_triangular(const RatMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j <= i && j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

}  // namespace polyzeta
