#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charvar/groebner.hpp"
#include "charvar/ideal.hpp"
#include "charvar/univariate.hpp"

namespace charvar {

struct RankOptions {
  GroebnerLimits limits;
  /// Order inside the block of non-parameter variables.
  MonomialOrder::Kind inner_order = MonomialOrder::Kind::GrevLex;
  /// Largest degree searched for an annihilator when the quotient is not
  /// finite dimensional over Q(f).
  unsigned max_annihilator_degree = 40;
  /// Seeded candidates tried by primitive_element after the plain variables.
  unsigned primitive_candidates = 500;
};

/// Monic least-degree annihilator of `element` over Q(parameter) modulo the
/// ideal. Irreducibility is not asserted.
struct MinimalPolynomial {
  UniPolyOverFraction value;
  Poly element;
  Poly parameter;

  int degree() const { return value.degree(); }
};

/// Rank of Q[V]/I over Q[f]: Finite(n) with a free basis, or Infinite with an
/// element that is not integral over Q[f].
struct RankResult {
  std::optional<std::size_t> rank;
  std::vector<Poly> basis;
  std::optional<Poly> non_integral;

  bool is_finite() const { return rank.has_value(); }
};

struct QuotientElement {
  Poly representative;
  GroebnerBasis ambient;
};

struct PrimitiveElement {
  /// The element as a linear form in the ideal's own variables.
  Poly combination;
  QuotientElement element;
  MinimalPolynomial minimal;
};

/// The algebra Q(f) (x) Q[V]/I, presented by a reduced Groebner basis over
/// Q(f). Built from a Q-basis for a block order with f's variable last; when
/// f is not itself a variable, a fresh variable F with F - f adjoined plays
/// its role.
class FractionQuotient {
 public:
  FractionQuotient(const Ideal& ideal, const Poly& f, const RankOptions& options = {});

  /// The ideal's variables, plus the fresh parameter variable if one was added.
  const Variables& ambient_variables() const { return ambient_; }
  /// Ambient variables other than the parameter.
  const Variables& inner_variables() const { return inner_; }
  const std::string& parameter_name() const { return ambient_[parameter_]; }
  bool has_fresh_parameter() const { return fresh_; }
  const GroebnerBasis& rational_basis() const { return rational_; }
  const MonomialOrder& inner_order() const { return inner_order_; }
  const std::vector<detail::SortedPoly<RationalFunction>>& basis() const { return basis_; }

  /// Standard monomials over the inner variables when the quotient is finite
  /// dimensional over Q(f); nullopt otherwise.
  const std::optional<std::vector<ExponentVector>>& standard_monomials() const { return standard_; }

  /// Inner variables with no pure power among the leading monomials.
  std::vector<std::size_t> free_inner_variables() const;

  /// p (over the ideal's variables or the ambient ones) as an element of
  /// Q(f)[inner], not yet reduced.
  MultiPoly<RationalFunction> lift(const Poly& p) const;
  detail::SortedPoly<RationalFunction> normal_form(const MultiPoly<RationalFunction>& p) const;
  /// Coordinates of p in the standard-monomial basis; requires finiteness.
  std::vector<RationalFunction> coordinates(const Poly& p) const;

  MinimalPolynomial minimal_polynomial(const Poly& g) const;

 private:
  Variables original_;
  Variables ambient_;
  Variables inner_;
  std::size_t parameter_ = 0;
  bool fresh_ = false;
  Poly f_;
  RankOptions options_;
  MonomialOrder inner_order_ = MonomialOrder::grevlex();
  GroebnerBasis rational_;
  std::vector<detail::SortedPoly<RationalFunction>> basis_;
  std::optional<std::vector<ExponentVector>> standard_;
};

MinimalPolynomial minimal_polynomial(const Poly& g, const Ideal& ideal, const Poly& f,
                                     const RankOptions& options = {});

/// True iff the minimal polynomial of g over Q(f) has coefficients in Q[f].
bool is_integral(const Poly& g, const Ideal& ideal, const Poly& f, const RankOptions& options = {});

/// Throws InputError for the unit ideal or when f is algebraic over Q
/// modulo the ideal (constant on the variety).
RankResult module_rank(const Ideal& ideal, const Poly& f, const RankOptions& options = {});

/// Small-integer linear form in the non-parameter variables whose minimal
/// polynomial over Q(f) has degree equal to the module rank. Plain variables
/// are tried first, then combinations with coefficients in [-10, 10] drawn
/// from a generator seeded with `seed`.
PrimitiveElement primitive_element(const Ideal& ideal, const Poly& f, std::uint64_t seed,
                                   const RankOptions& options = {});

}  // namespace charvar
