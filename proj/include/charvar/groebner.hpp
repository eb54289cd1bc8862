#pragma once

#include <string>
#include <vector>

#include "charvar/groebner_core.hpp"
#include "charvar/ideal.hpp"
#include "charvar/monomial_order.hpp"

namespace charvar {

/// Reduced Groebner basis of an ideal of Q[variables] for a monomial order.
/// Monic, sorted by descending leading monomial; canonical for the pair
/// (ideal, order), so equality of bases decides equality of ideals.
class GroebnerBasis {
 public:
  GroebnerBasis() : order_(MonomialOrder::grevlex()) {}
  GroebnerBasis(Variables vars, MonomialOrder order, std::vector<detail::SortedPoly<Rational>> basis);

  const Variables& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& basis() const { return basis_; }
  const std::vector<detail::SortedPoly<Rational>>& sorted() const { return sorted_; }
  std::vector<ExponentVector> leading_monomials() const;

  bool is_unit() const;
  bool is_zero_ideal() const { return basis_.empty(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.basis_ == b.basis_;
  }

 private:
  Variables vars_;
  MonomialOrder order_;
  std::vector<detail::SortedPoly<Rational>> sorted_;
  std::vector<Poly> basis_;
};

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits = {});

/// Remainder of p on division by the basis; zero iff p lies in the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& g);

bool contains(const GroebnerBasis& g, const Poly& p);

/// Leading monomial of a nonzero polynomial.
ExponentVector leading_monomial(const Poly& p, const MonomialOrder& order);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

/// Buchberger's criterion: every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

/// Block order with the named variables in the eliminated (front) block.
MonomialOrder elimination_order(const Variables& vars, const std::vector<std::string>& front,
                                MonomialOrder::Kind inner = MonomialOrder::Kind::GrevLex);

/// Generators of I intersected with Q[kept variables], as an ideal over the
/// kept variables (declared order preserved).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop, const GroebnerLimits& limits = {});

/// Dimension of the affine variety of a proper ideal: the largest set of
/// variables containing no leading monomial of a grevlex basis.
/// Throws InputError for the unit ideal.
unsigned krull_dimension(const Ideal& ideal, const GroebnerLimits& limits = {});

}  // namespace charvar
