#pragma once

#include <compare>
#include <string>
#include <vector>

#include "charvar/polynomial.hpp"

namespace charvar {

/// Total order on exponent vectors compatible with multiplication.
///
/// `BlockElimination` compares the front block first (with `inner`) and only
/// on a tie compares the remaining variables (graded reverse lex), so any
/// monomial involving a front variable is larger than every monomial free of
/// front variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, BlockElimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}, Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, {}, Kind::GrevLex); }

  /// `front[i]` marks variable i as belonging to the eliminated block.
  /// `inner` must be Lex or GrevLex.
  static MonomialOrder block(std::vector<bool> front, Kind inner = Kind::GrevLex);

  Kind kind() const { return kind_; }
  Kind inner() const { return inner_; }
  const std::vector<bool>& front() const { return front_; }

  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

  std::string describe(const Variables& vars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<bool> front, Kind inner)
      : kind_(kind), inner_(inner), front_(std::move(front)) {}

  Kind kind_;
  Kind inner_;
  std::vector<bool> front_;
};

}  // namespace charvar
