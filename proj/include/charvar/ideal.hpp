#pragma once

#include <vector>

#include "charvar/polynomial.hpp"

namespace charvar {

/// Generators of an ideal of Q[variables]. Zero generators are dropped, so
/// an empty generator list is the zero ideal.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Variables vars, std::vector<Poly> generators);

  const Variables& variables() const { return vars_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  /// Same ideal with its generators re-expressed over a larger variable list.
  Ideal embed(const Variables& target) const;

 private:
  Variables vars_;
  std::vector<Poly> generators_;
};

}  // namespace charvar
