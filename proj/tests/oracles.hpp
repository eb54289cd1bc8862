#pragma once

// Independent reference computations for the tests. None of these call the
// code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "charvar/eigen_support.hpp"
#include "charvar/groebner.hpp"
#include "charvar/trace.hpp"

#ifndef CHARVAR_FIXTURE_DIR
#define CHARVAR_FIXTURE_DIR "tests/fixtures"
#endif

namespace oracle {

using charvar::LatticePoint;
using charvar::Rational;
using Point = std::pair<std::int64_t, std::int64_t>;

inline std::string fixture(const std::string& name) { return std::string(CHARVAR_FIXTURE_DIR) + "/" + name; }

inline std::int64_t orient(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  return orient(a, b, p) == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
         std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

inline bool in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const auto d1 = orient(a, b, p), d2 = orient(b, c, p), d3 = orient(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

/// Hull vertices by exhaustion: a point is a vertex iff it lies on no segment
/// and in no triangle spanned by the other points (Caratheodory in the plane).
inline std::set<Point> brute_force_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::set<Point> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool inside = false;
    for (std::size_t a = 0; a < n && !inside; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < n && !inside; ++b) {
        if (b == i) continue;
        if (on_segment(pts[i], pts[a], pts[b])) inside = true;
        for (std::size_t c = b + 1; c < n && !inside; ++c)
          if (c != i && orient(pts[a], pts[b], pts[c]) != 0 && in_triangle(pts[i], pts[a], pts[b], pts[c]))
            inside = true;
      }
    }
    if (!inside) out.insert(pts[i]);
  }
  return out;
}

/// max - min of p*i + q*j over every support point, vertex or not.
inline std::int64_t width(const std::vector<Point>& pts, std::int64_t p, std::int64_t q) {
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  for (const auto& [i, j] : pts) {
    lo = std::min(lo, p * i + q * j);
    hi = std::max(hi, p * i + q * j);
  }
  return hi - lo;
}

inline Rational width(const std::vector<Point>& pts, const Rational& p, const Rational& q) {
  bool first = true;
  Rational lo, hi;
  for (const auto& [i, j] : pts) {
    const Rational s = p * Rational(i) + q * Rational(j);
    if (first || s < lo) lo = s;
    if (first || s > hi) hi = s;
    first = false;
  }
  return hi - lo;
}

inline std::vector<Point> support(const charvar::Poly& p) {
  std::vector<Point> out;
  for (const auto& [e, c] : p.terms()) out.emplace_back(e[0], e[1]);
  return out;
}

/// Plain 2x2 rational matrices, multiplied entrywise by hand.
struct M2 {
  Rational a, b, c, d;
};

inline M2 mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline M2 inv(const M2& x) { return {x.d, -x.b, -x.c, x.a}; }

/// Random exact element of SL2(Q): products of elementary and diagonal
/// matrices with small rational entries.
inline M2 random_sl2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(-3, 3), den(1, 3), kind(0, 2);
  M2 m{1, 0, 0, 1};
  for (int step = 0; step < 4; ++step) {
    const Rational t(k(rng), den(rng));
    switch (kind(rng)) {
      case 0: m = mul(m, {1, t, 0, 1}); break;
      case 1: m = mul(m, {1, 0, t, 1}); break;
      default: {
        const Rational r = t.is_zero() ? Rational(2) : t;
        m = mul(m, {r, 0, 0, Rational(1) / r});
      }
    }
  }
  return m;
}

inline Rational word_trace(const std::string& word, const M2& A, const M2& B) {
  M2 m{1, 0, 0, 1};
  const M2 Ai = inv(A), Bi = inv(B);
  for (char ch : word) {
    if (ch == 'a') m = mul(m, A);
    else if (ch == 'b') m = mul(m, B);
    else if (ch == 'A') m = mul(m, Ai);
    else if (ch == 'B') m = mul(m, Bi);
  }
  return m.a + m.d;
}

/// Every word over {a, b, A, B} of the given length with no cancelling pair.
inline std::vector<std::string> reduced_words(std::size_t length) {
  std::vector<std::string> out{""};
  const std::string letters = "abAB";
  auto inverse = [](char c) { return static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c)); };
  for (std::size_t n = 0; n < length; ++n) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : letters)
        if (w.empty() || w.back() != inverse(c)) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

/// Finiteness of Q[V]/I over Q[t] for a variable t: the lex-block basis with
/// t last must contain, for each other variable v, an element whose leading
/// monomial is a pure power of v (Noether normalization criterion).
inline bool finite_over_variable(const charvar::Ideal& I, const std::string& t) {
  const auto& vars = I.variables();
  std::vector<std::string> front;
  for (const auto& v : vars)
    if (v != t) front.push_back(v);
  const auto g = charvar::groebner(I, charvar::elimination_order(vars, front));
  const std::size_t ti = *vars.index_of(t);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (v == ti) continue;
    bool found = false;
    for (const auto& lm : g.leading_monomials()) {
      bool pure = lm[v] > 0;
      for (std::size_t k = 0; k < lm.size(); ++k)
        if (k != v && lm[k] != 0) pure = false;
      found = found || pure;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
