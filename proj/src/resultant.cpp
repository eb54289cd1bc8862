#include "charvar/resultant.hpp"

#include <utility>

namespace charvar {

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("exact division by zero polynomial");
  if (!(a.variables() == b.variables())) throw InputError("variable-list mismatch in division");
  // lexicographic leading terms: the map's last key is lex-largest
  const auto& [lead_b, lc_b] = *b.terms().rbegin();
  Poly rem = a;
  Poly quo(a.variables());
  while (!rem.is_zero()) {
    const auto& [lead_r, lc_r] = *rem.terms().rbegin();
    if (!divides(lead_b, lead_r)) throw InputError("polynomial division is not exact");
    Poly t = Poly::monomial(a.variables(), quotient(lead_r, lead_b), lc_r / lc_b);
    quo += t;
    rem -= t * b;
  }
  return quo;
}

namespace {

// Coefficients of p as a polynomial in variable `v`, indexed by degree.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t v) {
  std::vector<Poly> out(p.degree_in(v) + 1, Poly(p.variables()));
  for (const auto& [e, c] : p.terms()) {
    ExponentVector rest = e;
    rest[v] = 0;
    out[e[v]].add_term(rest, c);
  }
  return out;
}

}  // namespace

Matrix<Poly> sylvester_matrix(const Poly& a, const Poly& b, std::string_view var) {
  if (!(a.variables() == b.variables())) throw InputError("variable-list mismatch in resultant");
  if (a.is_zero() || b.is_zero()) throw InputError("resultant of a zero polynomial");
  const std::size_t v = a.variables().require(var);
  const auto ca = coefficients_in(a, v);
  const auto cb = coefficients_in(b, v);
  const std::size_t m = ca.size() - 1, n = cb.size() - 1;
  const std::size_t size = m + n;
  Matrix<Poly> s(size, size);
  s.fill(Poly(a.variables()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = ca[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = cb[n - k];
  return s;
}

Poly bareiss_determinant(Matrix<Poly> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw InputError("determinant of a non-square matrix");
  if (n == 0) throw InputError("determinant of an empty matrix needs a variable list");
  const Variables vars = m(0, 0).variables();
  Poly prev = Poly::constant(vars, 1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Poly(vars);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = Poly(vars);
    }
    prev = m(k, k);
  }
  Poly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

Poly resultant(const Poly& a, const Poly& b, std::string_view var) {
  Matrix<Poly> s = sylvester_matrix(a, b, var);
  if (s.rows() == 0) return Poly::constant(a.variables(), 1);
  return bareiss_determinant(std::move(s));
}

}  // namespace charvar
