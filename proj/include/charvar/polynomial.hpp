#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/rational.hpp"

namespace charvar {

using Exponent = std::uint32_t;

/// Exponents aligned to a Variables list; entry i is the power of variable i.
using ExponentVector = std::vector<Exponent>;

inline unsigned total_degree(const ExponentVector& e) {
  unsigned d = 0;
  for (Exponent x : e) d += x;
  return d;
}

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline ExponentVector quotient(const ExponentVector& num, const ExponentVector& den) {
  ExponentVector r(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) r[i] = num[i] - den[i];
  return r;
}

inline ExponentVector product(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

/// Ordered, immutable list of variable names shared between polynomials.
class Variables {
 public:
  Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}
  Variables(std::vector<std::string> names);  // NOLINT(google-explicit-constructor)
  Variables(std::initializer_list<std::string> names)
      : Variables(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  auto begin() const { return names_->begin(); }
  auto end() const { return names_->end(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws InputError for an unknown name.
  std::size_t require(std::string_view name) const;

  /// Parses a comma separated list such as "x,y,z,l".
  static Variables parse(std::string_view list);

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

std::string join(const Variables& vars);

namespace detail {
// Unqualified so that argument-dependent lookup sees scalar types declared later.
template <typename Scalar>
bool scalar_is_zero(const Scalar& s) {
  return is_zero(s);
}
}  // namespace detail

/// Sparse multivariate polynomial with coefficients in a field `Scalar`.
///
/// The term map is canonical: no zero coefficients are stored, so two
/// polynomials are equal iff their variable lists and term maps are equal.
/// Arithmetic requires identical variable lists; alignment is explicit
/// (see embed()).
template <typename Scalar>
class MultiPoly {
 public:
  using Terms = std::map<ExponentVector, Scalar>;

  MultiPoly() = default;
  explicit MultiPoly(Variables vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(Variables vars, const Scalar& c) {
    MultiPoly p(std::move(vars));
    p.add_term(ExponentVector(p.vars_.size(), 0), c);
    return p;
  }

  static MultiPoly variable(Variables vars, std::string_view name) {
    const std::size_t i = vars.require(name);
    ExponentVector e(vars.size(), 0);
    e[i] = 1;
    return monomial(std::move(vars), std::move(e), Scalar(1));
  }

  static MultiPoly monomial(Variables vars, ExponentVector e, const Scalar& c) {
    if (e.size() != vars.size()) throw InputError("exponent vector length mismatch");
    MultiPoly p(std::move(vars));
    p.add_term(e, c);
    return p;
  }

  const Variables& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && charvar::total_degree(terms_.begin()->first) == 0);
  }

  Scalar coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
  }

  Scalar constant_term() const { return coefficient(ExponentVector(vars_.size(), 0)); }

  void add_term(const ExponentVector& e, const Scalar& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(charvar::total_degree(e)));
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
    return d;
  }

  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.vars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same(b);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(product(ea, eb), ca * cb);
    return r;
  }

  friend MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
    MultiPoly r(a.vars_);
    if (is_zero_scalar(s)) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  MultiPoly pow(unsigned n) const {
    MultiPoly result = constant(vars_, Scalar(1));
    MultiPoly base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  static bool is_zero_scalar(const Scalar& s) { return detail::scalar_is_zero(s); }

  void require_same(const MultiPoly& o) const {
    if (!(vars_ == o.vars_))
      throw InputError("variable-list mismatch: [" + join(vars_) + "] vs [" + join(o.vars_) + "]");
  }

  Variables vars_;
  Terms terms_;
};

using Poly = MultiPoly<Rational>;

/// Re-expresses `p` over `target`, which must contain every variable of `p`.
template <typename Scalar>
MultiPoly<Scalar> embed(const MultiPoly<Scalar>& p, const Variables& target) {
  const Variables& src = p.variables();
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto j = target.index_of(src[i]);
    if (!j) {
      if (p.degree_in(i) == 0) {
        map[i] = target.size();  // unused variable, dropped
        continue;
      }
      throw InputError("variable '" + src[i] + "' not present in target variable list");
    }
    map[i] = *j;
  }
  MultiPoly<Scalar> r(target);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector t(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t[map[i]] = e[i];
    r.add_term(t, c);
  }
  return r;
}

/// Exact evaluation at a point given by name. Throws InputError if a variable
/// occurring in `p` is unassigned.
template <typename Scalar>
Scalar evaluate(const MultiPoly<Scalar>& p, const std::map<std::string, Scalar>& point) {
  const Variables& vars = p.variables();
  std::vector<const Scalar*> values(vars.size(), nullptr);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it != point.end()) {
      values[i] = &it->second;
    } else if (p.depends_on(i)) {
      throw InputError("unassigned variable '" + vars[i] + "'");
    }
  }
  Scalar sum{};
  for (const auto& [e, c] : p.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (Exponent k = 0; k < e[i]; ++k) term *= *values[i];
    sum += term;
  }
  return sum;
}

/// Rational polynomial whose coefficients all have denominator 1.
bool has_integer_coefficients(const Poly& p);

/// Renders a polynomial in the canonical text form accepted by
/// parse_polynomial (terms by descending degree, then lex).
std::string to_string(const Poly& p);

}  // namespace charvar
