#include "charvar/module_rank.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace charvar {

using detail::SortedPoly;
using RF = RationalFunction;

namespace {

// f is literally one of the variables (coefficient 1, no other terms).
std::optional<std::size_t> as_variable(const Poly& f) {
  if (f.size() != 1) return std::nullopt;
  const auto& [e, c] = *f.terms().begin();
  if (!c.is_one() || total_degree(e) != 1) return std::nullopt;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] == 1) return i;
  return std::nullopt;
}

std::string fresh_name(const Variables& vars) {
  std::string name = "f";
  for (int k = 1; vars.index_of(name); ++k) name = "f" + std::to_string(k);
  return name;
}

}  // namespace

FractionQuotient::FractionQuotient(const Ideal& ideal, const Poly& f, const RankOptions& options)
    : original_(ideal.variables()), f_(f), options_(options) {
  if (!(f.variables() == original_))
    throw InputError("parameter polynomial must be over the ideal's variables [" + join(original_) + "]");
  if (f.is_constant()) throw InputError("parameter polynomial is constant");

  Ideal working = ideal;
  if (auto v = as_variable(f)) {
    parameter_ = *v;
    ambient_ = original_;
  } else {
    fresh_ = true;
    std::vector<std::string> names = original_.names();
    names.push_back(fresh_name(original_));
    ambient_ = Variables(names);
    parameter_ = names.size() - 1;
    std::vector<Poly> gens;
    for (const auto& g : ideal.generators()) gens.push_back(embed(g, ambient_));
    gens.push_back(Poly::variable(ambient_, ambient_[parameter_]) - embed(f, ambient_));
    working = Ideal(ambient_, std::move(gens));
  }
  std::vector<std::string> inner_names;
  std::vector<bool> front(ambient_.size(), true);
  front[parameter_] = false;
  for (std::size_t i = 0; i < ambient_.size(); ++i)
    if (i != parameter_) inner_names.push_back(ambient_[i]);
  inner_ = Variables(inner_names);
  inner_order_ = options.inner_order == MonomialOrder::Kind::Lex ? MonomialOrder::lex()
                                                                  : MonomialOrder::grevlex();

  rational_ = groebner(working, MonomialOrder::block(front, options.inner_order), options.limits);
  if (rational_.is_unit()) throw InputError("the ideal is the unit ideal");

  std::vector<SortedPoly<RF>> lifted;
  for (const auto& g : rational_.basis()) {
    auto s = detail::to_sorted(lift(g), inner_order_);
    if (total_degree(s.front().exp) == 0)
      throw InputError("the parameter is algebraic over Q modulo the ideal (constant on its zero set)");
    lifted.push_back(std::move(s));
  }
  basis_ = detail::Buchberger<RF>::interreduce(detail::minimalize(std::move(lifted)), inner_order_);

  // Finite dimension over Q(f) iff every inner variable has a pure power
  // among the leading monomials.
  const std::size_t n = inner_.size();
  std::vector<Exponent> bound(n, 0);
  for (const auto& g : basis_) {
    const auto& lm = g.front().exp;
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  if (std::any_of(bound.begin(), bound.end(), [](Exponent b) { return b == 0; })) return;

  std::vector<ExponentVector> standard;
  ExponentVector e(n, 0);
  while (true) {
    bool divisible = false;
    for (const auto& g : basis_)
      if (divides(g.front().exp, e)) {
        divisible = true;
        break;
      }
    if (!divisible) standard.push_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
  }
  std::sort(standard.begin(), standard.end(),
            [&](const auto& a, const auto& b) { return inner_order_.less(a, b); });
  standard_ = std::move(standard);
}

std::vector<std::size_t> FractionQuotient::free_inner_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    bool has_power = false;
    for (const auto& g : basis_) {
      const auto& lm = g.front().exp;
      bool pure = lm[i] != 0;
      for (std::size_t k = 0; k < lm.size() && pure; ++k)
        if (k != i && lm[k] != 0) pure = false;
      has_power = has_power || pure;
    }
    if (!has_power) out.push_back(i);
  }
  return out;
}

MultiPoly<RF> FractionQuotient::lift(const Poly& p) const {
  const Poly q = (p.variables() == ambient_) ? p : embed(p, ambient_);
  std::map<ExponentVector, std::vector<Rational>> grouped;
  for (const auto& [e, c] : q.terms()) {
    ExponentVector inner;
    inner.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != parameter_) inner.push_back(e[i]);
    auto& coeffs = grouped[inner];
    if (coeffs.size() <= e[parameter_]) coeffs.resize(e[parameter_] + 1);
    coeffs[e[parameter_]] = c;
  }
  MultiPoly<RF> out(inner_);
  for (auto& [e, coeffs] : grouped) out.add_term(e, RF(UniPoly(std::move(coeffs))));
  return out;
}

SortedPoly<RF> FractionQuotient::normal_form(const MultiPoly<RF>& p) const {
  return detail::reduce(detail::to_sorted(p, inner_order_), detail::pointers(basis_), inner_order_);
}

std::vector<RF> FractionQuotient::coordinates(const Poly& p) const {
  if (!standard_) throw InputError("coordinates need a finite dimensional quotient");
  std::vector<RF> out(standard_->size());
  for (const auto& t : normal_form(lift(p))) {
    auto it = std::find(standard_->begin(), standard_->end(), t.exp);
    out[static_cast<std::size_t>(it - standard_->begin())] = t.coeff;
  }
  return out;
}

MinimalPolynomial FractionQuotient::minimal_polynomial(const Poly& g) const {
  struct Row {
    SortedPoly<RF> poly;  // leading coefficient 1
    std::vector<RF> combination;
  };
  const unsigned cap = standard_ ? static_cast<unsigned>(standard_->size())
                                 : options_.max_annihilator_degree;
  const MultiPoly<RF> lifted = lift(g);
  std::vector<Row> rows;
  SortedPoly<RF> power = normal_form(MultiPoly<RF>::constant(inner_, RF(1)));
  for (unsigned k = 0; k <= cap; ++k) {
    if (k > 0) power = normal_form(detail::from_sorted(power, inner_) * lifted);
    std::vector<RF> combination(k + 1);
    combination[k] = RF(1);
    SortedPoly<RF> v = power;
    SortedPoly<RF> kept;
    std::size_t head = 0;
    while (head < v.size()) {
      auto row = std::find_if(rows.begin(), rows.end(),
                              [&](const Row& r) { return r.poly.front().exp == v[head].exp; });
      if (row == rows.end()) {
        kept.push_back(v[head++]);
        continue;
      }
      const RF c = v[head].coeff;
      v = detail::sub_mul(v, head + 1, c, ExponentVector(inner_.size(), 0), row->poly, 1, inner_order_);
      head = 0;
      for (std::size_t i = 0; i < row->combination.size(); ++i)
        combination[i] -= c * row->combination[i];
    }
    if (kept.empty()) {
      MinimalPolynomial out;
      out.value = UniPolyOverFraction{parameter_name(), "t", std::move(combination)};
      out.element = g;
      out.parameter = f_;
      return out;
    }
    const RF inv = RF(1) / kept.front().coeff;
    for (auto& t : kept) t.coeff *= inv;
    for (auto& c : combination) c *= inv;
    rows.push_back({std::move(kept), std::move(combination)});
  }
  throw ResourceCapExceeded("element is not algebraic over Q(" + parameter_name() + ") within degree " +
                            std::to_string(cap));
}

MinimalPolynomial minimal_polynomial(const Poly& g, const Ideal& ideal, const Poly& f, const RankOptions& options) {
  return FractionQuotient(ideal, f, options).minimal_polynomial(g);
}

bool is_integral(const Poly& g, const Ideal& ideal, const Poly& f, const RankOptions& options) {
  return minimal_polynomial(g, ideal, f, options).value.has_polynomial_coefficients();
}

namespace {

RankResult rank_of(const FractionQuotient& q, const Variables& original) {
  RankResult result;
  const Variables& inner = q.inner_variables();
  if (!q.standard_monomials()) {
    result.non_integral = Poly::variable(original, inner[q.free_inner_variables().front()]);
    return result;
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (!original.index_of(inner[i])) continue;
    const Poly v = Poly::variable(original, inner[i]);
    if (!q.minimal_polynomial(v).value.has_polynomial_coefficients()) {
      result.non_integral = v;
      return result;
    }
  }
  result.rank = q.standard_monomials()->size();
  for (const auto& e : *q.standard_monomials()) {
    Poly m = Poly::monomial(inner, e, Rational(1));
    result.basis.push_back(embed(m, original));
  }
  return result;
}

}  // namespace

RankResult module_rank(const Ideal& ideal, const Poly& f, const RankOptions& options) {
  return rank_of(FractionQuotient(ideal, f, options), ideal.variables());
}

PrimitiveElement primitive_element(const Ideal& ideal, const Poly& f, std::uint64_t seed, const RankOptions& options) {
  const FractionQuotient q(ideal, f, options);
  const RankResult rank = rank_of(q, ideal.variables());
  if (!rank.is_finite()) throw InputError("primitive_element needs a finitely generated module");
  const Variables& vars = ideal.variables();
  std::vector<std::size_t> candidates_vars;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (q.inner_variables().index_of(vars[i])) candidates_vars.push_back(i);

  auto attempt = [&](const Poly& p) -> std::optional<PrimitiveElement> {
    MinimalPolynomial m = q.minimal_polynomial(p);
    if (static_cast<std::size_t>(m.degree()) != *rank.rank) return std::nullopt;
    PrimitiveElement out;
    out.combination = p;
    out.element = QuotientElement{normal_form(embed(p, q.ambient_variables()), q.rational_basis()),
                                  q.rational_basis()};
    out.minimal = std::move(m);
    return out;
  };

  for (std::size_t i : candidates_vars)
    if (auto r = attempt(Poly::variable(vars, vars[i]))) return *r;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coefficient(-10, 10);
  for (unsigned k = 0; k < options.primitive_candidates; ++k) {
    Poly p(vars);
    for (std::size_t i : candidates_vars) {
      ExponentVector e(vars.size(), 0);
      e[i] = 1;
      p.add_term(e, Rational(coefficient(rng)));
    }
    if (p.is_zero()) continue;
    if (auto r = attempt(p)) return *r;
  }
  throw ResourceCapExceeded("no primitive element among " + std::to_string(options.primitive_candidates) +
                            " candidates; the input may not be equidimensional or radical");
}

}  // namespace charvar
