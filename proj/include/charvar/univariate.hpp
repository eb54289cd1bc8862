#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charvar/polynomial.hpp"
#include "charvar/rational.hpp"

namespace charvar {

/// Dense univariate polynomial over the rationals, coefficients low to high.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT(google-explicit-constructor)
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly x() { return UniPoly(std::vector<Rational>{0, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  Rational operator()(const Rational& at) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly monic() const;

  /// Multivariate view over a single variable.
  Poly to_poly(const Variables& vars, std::size_t var) const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws InputError on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Element of Q(f): reduced fraction with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(UniPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(UniPoly num, UniPoly den);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string(const std::string& var) const;

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

/// Polynomial in a main variable whose coefficients lie in Q(parameter),
/// e.g. a minimal polynomial of a quotient-algebra element over Q(f).
struct UniPolyOverFraction {
  std::string parameter;
  std::string variable;
  std::vector<RationalFunction> coefficients;  // low to high, leading nonzero

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool is_monic() const;
  /// All coefficients lie in Q[parameter].
  bool has_polynomial_coefficients() const;
  std::string to_string() const;
};

}  // namespace charvar
