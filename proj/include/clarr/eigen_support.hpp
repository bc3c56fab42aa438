#pragma once

#include <Eigen/Core>

#include "clarr/scalars.hpp"

// NumTraits so that Eigen dense matrices can carry the exact scalars.
// Only storage, element access and block expressions are used on them;
// decompositions stay in clarr's own exact routines.

namespace Eigen {

template <>
struct NumTraits<clarr::Rat> : GenericNumTraits<clarr::Rat> {
    using Real = clarr::Rat;
    using NonInteger = clarr::Rat;
    using Nested = clarr::Rat;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<clarr::Quad> : GenericNumTraits<clarr::Quad> {
    using Real = clarr::Quad;
    using NonInteger = clarr::Quad;
    using Nested = clarr::Quad;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 80,
        MulCost = 120,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace clarr {

/// Dense exact matrix over any clarr scalar.
template <class Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatMatrix = ExactMatrix<Rat>;
using QuadMatrix = ExactMatrix<Quad>;

} // namespace clarr
