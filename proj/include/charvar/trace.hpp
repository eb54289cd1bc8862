#pragma once

#include <string>
#include <string_view>

#include "charvar/eigen_support.hpp"
#include "charvar/ideal.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/slope.hpp"

namespace charvar {

/// Freely reduced word in the generators a, b. Text form uses lowercase for a
/// generator and uppercase for its inverse; the identity prints as "1".
class GroupWord {
 public:
  GroupWord() = default;

  /// Accepts letters a, b, A, B (and "1" for the identity); reduces freely.
  /// Throws SyntaxError on any other character.
  static GroupWord parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord inverse() const;
  GroupWord pow(int n) const;
  /// Conjugate with all cancelling end letters removed.
  GroupWord cyclically_reduced() const;
  bool is_cyclically_reduced() const;
  GroupWord rotated(std::size_t k) const;

  std::string to_string() const { return letters_.empty() ? "1" : letters_; }

  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  explicit GroupWord(std::string reduced) : letters_(std::move(reduced)) {}
  static std::string reduce(std::string_view letters);
  std::string letters_;
};

/// One-relator presentation <a, b | relator>; the relator is stored
/// cyclically reduced. An empty relator presents the free group.
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(const GroupWord& relator) : relator_(relator.cyclically_reduced()) {}
  const GroupWord& relator() const { return relator_; }

 private:
  GroupWord relator_;
};

/// Words for the meridian and longitude of the boundary torus.
class PeripheralSystem {
 public:
  PeripheralSystem(GroupWord mu, GroupWord lambda);
  const GroupWord& mu() const { return mu_; }
  const GroupWord& lambda() const { return lambda_; }

 private:
  GroupWord mu_;
  GroupWord lambda_;
};

/// 2x2 rational matrix of determinant exactly 1.
class SL2Matrix {
 public:
  /// Throws InputError if det != 1.
  explicit SL2Matrix(const Matrix2q& m);
  SL2Matrix(Rational a, Rational b, Rational c, Rational d);
  static SL2Matrix identity() { return SL2Matrix(1, 0, 0, 1); }

  const Matrix2q& matrix() const { return m_; }
  Rational trace() const { return m_(0, 0) + m_(1, 1); }
  SL2Matrix inverse() const;
  friend SL2Matrix operator*(const SL2Matrix& a, const SL2Matrix& b);

 private:
  struct Unchecked {};
  SL2Matrix(const Matrix2q& m, Unchecked) : m_(m) {}
  Matrix2q m_;
};

/// The trace ring coordinates x = tr a, y = tr b, z = tr ab.
const Variables& trace_variables();

/// Integer polynomial P(x, y, z) with P(tr A, tr B, tr AB) = tr W(A, B) for
/// every pair in SL2. Computed by skein reduction
/// tr(UV) + tr(U^-1 V) = tr(U) tr(V) with memoization on cyclic classes.
Poly trace_polynomial(const GroupWord& w);

/// Generators tr(r w) - tr(w) for w in {1, a, b, ab}, r the relator.
/// Every character of the presented group lies in the zero set.
Ideal character_ideal(const Presentation& pres);

/// Trace polynomial of mu^p lambda^q.
Poly slope_trace(const PeripheralSystem& ps, const Slope& slope);

/// Exact trace of w(A, B).
Rational numeric_trace_oracle(const GroupWord& w, const SL2Matrix& a, const SL2Matrix& b);

}  // namespace charvar
