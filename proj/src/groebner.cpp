#include "charvar/groebner.hpp"

#include <algorithm>

namespace charvar {

using detail::SortedPoly;

GroebnerBasis::GroebnerBasis(Variables vars, MonomialOrder order, std::vector<SortedPoly<Rational>> basis)
    : vars_(std::move(vars)), order_(std::move(order)), sorted_(std::move(basis)) {
  basis_.reserve(sorted_.size());
  for (const auto& p : sorted_) basis_.push_back(detail::from_sorted(p, vars_));
}

std::vector<ExponentVector> GroebnerBasis::leading_monomials() const {
  std::vector<ExponentVector> out;
  for (const auto& p : sorted_) out.push_back(p.front().exp);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return sorted_.size() == 1 && total_degree(sorted_.front().front().exp) == 0;
}

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits) {
  std::vector<SortedPoly<Rational>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(detail::to_sorted(g, order));
  detail::Buchberger<Rational> engine(order, limits);
  return GroebnerBasis(ideal.variables(), order, engine.run(std::move(gens)));
}

Poly normal_form(const Poly& p, const GroebnerBasis& g) {
  if (!(p.variables() == g.variables())) throw InputError("normal_form: variable-list mismatch");
  auto r = detail::reduce(detail::to_sorted(p, g.order()), detail::pointers(g.sorted()), g.order());
  return detail::from_sorted(r, g.variables());
}

bool contains(const GroebnerBasis& g, const Poly& p) { return normal_form(p, g).is_zero(); }

ExponentVector leading_monomial(const Poly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw InputError("leading monomial of the zero polynomial");
  auto it = p.terms().begin();
  ExponentVector best = it->first;
  for (++it; it != p.terms().end(); ++it)
    if (order.less(best, it->first)) best = it->first;
  return best;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  if (!(f.variables() == g.variables())) throw InputError("s_polynomial: variable-list mismatch");
  auto s = detail::s_polynomial(detail::to_sorted(f, order), detail::to_sorted(g, order), order);
  return detail::from_sorted(s, f.variables());
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& b = g.sorted();
  const auto reducers = detail::pointers(b);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!detail::reduce(detail::s_polynomial(b[i], b[j], g.order()), reducers, g.order()).empty())
        return false;
  return true;
}

MonomialOrder elimination_order(const Variables& vars, const std::vector<std::string>& front,
                                MonomialOrder::Kind inner) {
  std::vector<bool> mask(vars.size(), false);
  for (const auto& name : front) mask[vars.require(name)] = true;
  return MonomialOrder::block(std::move(mask), inner);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop, const GroebnerLimits& limits) {
  const Variables& vars = ideal.variables();
  const MonomialOrder order = elimination_order(vars, drop);
  const auto& mask = order.front();
  if (std::all_of(mask.begin(), mask.end(), [](bool b) { return b; }))
    throw InputError("eliminate: must keep at least one variable");
  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!mask[i]) kept_names.push_back(vars[i]);
  const Variables kept(kept_names);

  const GroebnerBasis g = groebner(ideal, order, limits);
  std::vector<Poly> gens;
  for (const auto& p : g.basis()) {
    bool free_of_dropped = true;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (mask[i] && p.depends_on(i)) free_of_dropped = false;
    if (free_of_dropped) gens.push_back(embed(p, kept));
  }
  return Ideal(kept, std::move(gens));
}

unsigned krull_dimension(const Ideal& ideal, const GroebnerLimits& limits) {
  const std::size_t n = ideal.variables().size();
  if (ideal.is_zero()) return static_cast<unsigned>(n);
  const GroebnerBasis g = groebner(ideal, MonomialOrder::grevlex(), limits);
  if (g.is_unit()) throw InputError("krull_dimension: the ideal is the unit ideal");
  const auto lms = g.leading_monomials();
  unsigned best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const unsigned size = static_cast<unsigned>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool independent = true;
    for (const auto& lm : lms) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (lm[i] != 0 && !((mask >> i) & 1U)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace charvar
