#pragma once

#include <string_view>

#include "charvar/eigen_support.hpp"
#include "charvar/polynomial.hpp"

namespace charvar {

/// Exact quotient a / b. Throws InputError when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Sylvester matrix of a and b with respect to `var`; entries are polynomials
/// in the remaining variables (over the same variable list).
Matrix<Poly> sylvester_matrix(const Poly& a, const Poly& b, std::string_view var);

/// Determinant by fraction-free (Bareiss) elimination.
Poly bareiss_determinant(Matrix<Poly> m);

/// Res_var(a, b) as the Sylvester determinant; free of `var`.
Poly resultant(const Poly& a, const Poly& b, std::string_view var);

}  // namespace charvar
