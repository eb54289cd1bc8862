#pragma once

// Eigen scalar traits for the exact types. Eigen is used as dense storage
// and for small fixed-size products; all elimination is done by hand with
// exact arithmetic.

#include <Eigen/Core>

#include "charvar/polynomial.hpp"
#include "charvar/rational.hpp"
#include "charvar/univariate.hpp"

namespace charvar::detail {

template <typename T>
struct ExactNumTraits {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};

}  // namespace charvar::detail

namespace Eigen {

template <>
struct NumTraits<charvar::Rational> : charvar::detail::ExactNumTraits<charvar::Rational> {};
template <>
struct NumTraits<charvar::RationalFunction> : charvar::detail::ExactNumTraits<charvar::RationalFunction> {};
template <>
struct NumTraits<charvar::Poly> : charvar::detail::ExactNumTraits<charvar::Poly> {};

}  // namespace Eigen

namespace charvar {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Matrix2q = Eigen::Matrix<Rational, 2, 2>;
using Vector2q = Eigen::Matrix<Rational, 2, 1>;
using LatticePoint = Eigen::Matrix<std::int64_t, 2, 1>;

}  // namespace charvar
