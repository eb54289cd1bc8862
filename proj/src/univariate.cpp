#include "charvar/univariate.hpp"

#include "charvar/errors.hpp"

namespace charvar {

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= lc;
  return UniPoly(std::move(out));
}

Poly UniPoly::to_poly(const Variables& vars, std::size_t var) const {
  Poly p(vars);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    ExponentVector e(vars.size(), 0);
    e[var] = static_cast<Exponent>(i);
    p.add_term(e, coeffs_[i]);
  }
  return p;
}

std::string UniPoly::to_string(const std::string& var) const {
  Variables vars{var};
  return charvar::to_string(to_poly(vars, 0));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lb;
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficient(static_cast<std::size_t>(j));
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    UniPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lc = den_.leading();
  if (!lc.is_one()) {
    num_ = num_ * UniPoly(Rational(1) / lc);
    den_ = den_.monic();
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw InputError("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

namespace {

bool single_term(const UniPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coefficients()) n += c.is_zero() ? 0 : 1;
  return n <= 1;
}

std::string wrapped(const UniPoly& p, const std::string& var) {
  return single_term(p) ? p.to_string(var) : "(" + p.to_string(var) + ")";
}

}  // namespace

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  return wrapped(num_, var) + "/" + wrapped(den_, var);
}

bool UniPolyOverFraction::is_monic() const {
  return !coefficients.empty() && coefficients.back() == RationalFunction(1);
}

bool UniPolyOverFraction::has_polynomial_coefficients() const {
  for (const auto& c : coefficients)
    if (!c.is_polynomial()) return false;
  return true;
}

std::string UniPolyOverFraction::to_string() const {
  std::string out;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const auto& c = coefficients[k];
    if (c.is_zero()) continue;
    const std::string mono = k == 0 ? "" : (k == 1 ? variable : variable + "^" + std::to_string(k));
    std::string text = c.to_string(parameter);
    bool negative = false;
    if (c.is_polynomial() && single_term(c.numerator()) && text.front() == '-') {
      negative = true;
      text.erase(0, 1);
    } else if (!(c.is_polynomial() && single_term(c.numerator()))) {
      text = "(" + text + ")";
    }
    std::string term;
    if (mono.empty()) term = text;
    else if (text == "1") term = mono;
    else term = text + "*" + mono;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace charvar
