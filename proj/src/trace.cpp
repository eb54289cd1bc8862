#include "charvar/trace.hpp"

#include <algorithm>
#include <unordered_map>

namespace charvar {

namespace {

char invert(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

bool is_inverse_letter(char c) { return c == 'A' || c == 'B'; }

std::string inverse_letters(std::string_view w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = invert(c);
  return out;
}

std::string cyclic_reduce(std::string_view w) {
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == invert(w[j - 1])) {
    ++i;
    --j;
  }
  return std::string(w.substr(i, j - i));
}

// Least rotation of w or its inverse; identifies the conjugacy-and-inverse
// class, on which the trace is constant.
std::string canonical_class(const std::string& w) {
  std::string best = w;
  const std::string inv = inverse_letters(w);
  for (const std::string* s : {&w, &inv}) {
    for (std::size_t k = 0; k < s->size(); ++k) {
      std::string r = s->substr(k) + s->substr(0, k);
      if (r < best) best = std::move(r);
    }
  }
  return best;
}

class TraceCalculator {
 public:
  TraceCalculator()
      : x_(Poly::variable(trace_variables(), "x")),
        y_(Poly::variable(trace_variables(), "y")),
        z_(Poly::variable(trace_variables(), "z")),
        two_(Poly::constant(trace_variables(), 2)) {}

  Poly trace(std::string_view word) {
    const std::string reduced = cyclic_reduce(word);
    if (reduced.empty()) return two_;
    const std::string key = canonical_class(reduced);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Poly value = expand(key);
    memo_.emplace(key, value);
    return value;
  }

 private:
  const Poly& generator_trace(char c) const { return (c == 'a' || c == 'A') ? x_ : y_; }

  Poly expand(const std::string& word) {
    // Work on whichever of w, w^-1 has fewer inverse letters; each inverse
    // step then strictly lowers min(#inverse letters, #generator letters).
    const auto inverses = std::count_if(word.begin(), word.end(), is_inverse_letter);
    const std::string s = 2 * static_cast<std::size_t>(inverses) > word.size() ? inverse_letters(word) : word;
    const std::size_t n = s.size();
    // G U with G inverse: tr(G U) = tr(g) tr(U) - tr(g U)
    if (auto it = std::find_if(s.begin(), s.end(), is_inverse_letter); it != s.end()) {
      const std::size_t k = static_cast<std::size_t>(it - s.begin());
      const std::string r = s.substr(k) + s.substr(0, k);
      const std::string rest = r.substr(1);
      const char g = invert(r[0]);
      return generator_trace(g) * trace(rest) - trace(std::string(1, g) + rest);
    }
    if (std::all_of(s.begin(), s.end(), [&](char c) { return c == s[0]; })) {
      // g^n: tr(g^n) = tr(g) tr(g^(n-1)) - tr(g^(n-2))
      if (n == 1) return generator_trace(s[0]);
      return generator_trace(s[0]) * trace(s.substr(1)) - trace(s.substr(2));
    }
    // positive word with a repeated letter: tr(g g V) = tr(g) tr(g V) - tr(V)
    for (std::size_t k = 0; k < n; ++k) {
      if (s[k] == s[(k + 1) % n]) {
        const std::string r = s.substr(k) + s.substr(0, k);
        return generator_trace(r[0]) * trace(r.substr(1)) - trace(r.substr(2));
      }
    }
    // (ab)^m: tr((ab)^m) = tr(ab) tr((ab)^(m-1)) - tr((ab)^(m-2))
    if (n == 2) return z_;
    return z_ * trace(s.substr(2)) - trace(s.substr(4));
  }

  Poly x_, y_, z_, two_;
  std::unordered_map<std::string, Poly> memo_;
};

TraceCalculator& calculator() {
  thread_local TraceCalculator calc;
  return calc;
}

}  // namespace

std::string GroupWord::reduce(std::string_view letters) {
  std::string out;
  for (char c : letters) {
    if (!out.empty() && out.back() == invert(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

GroupWord GroupWord::parse(std::string_view text) {
  std::string letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'a' || c == 'b' || c == 'A' || c == 'B') {
      letters.push_back(c);
    } else if (c == ' ' || c == '\t' || (c == '1' && text.size() == 1)) {
      continue;
    } else {
      throw SyntaxError(std::string("illegal character '") + c + "' in group word", 1, i + 1);
    }
  }
  return GroupWord(reduce(letters));
}

GroupWord GroupWord::inverse() const { return GroupWord(inverse_letters(letters_)); }

GroupWord GroupWord::pow(int n) const {
  const GroupWord base = n < 0 ? inverse() : *this;
  GroupWord out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

GroupWord GroupWord::cyclically_reduced() const { return GroupWord(cyclic_reduce(letters_)); }

bool GroupWord::is_cyclically_reduced() const { return cyclic_reduce(letters_).size() == letters_.size(); }

GroupWord GroupWord::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  return GroupWord(reduce(letters_.substr(k) + letters_.substr(0, k)));
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  return GroupWord(GroupWord::reduce(u.letters_ + v.letters_));
}

PeripheralSystem::PeripheralSystem(GroupWord mu, GroupWord lambda)
    : mu_(std::move(mu)), lambda_(std::move(lambda)) {
  if (mu_.empty() || lambda_.empty()) throw InputError("peripheral words must be nontrivial");
}

SL2Matrix::SL2Matrix(const Matrix2q& m) : m_(m) {
  if (m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0) != Rational(1))
    throw InputError("matrix determinant is not 1");
}

SL2Matrix::SL2Matrix(Rational a, Rational b, Rational c, Rational d)
    : SL2Matrix((Matrix2q() << a, b, c, d).finished()) {}

SL2Matrix SL2Matrix::inverse() const {
  Matrix2q inv;
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return SL2Matrix(inv, Unchecked{});
}

SL2Matrix operator*(const SL2Matrix& a, const SL2Matrix& b) {
  return SL2Matrix(Matrix2q(a.m_ * b.m_), SL2Matrix::Unchecked{});
}

const Variables& trace_variables() {
  static const Variables vars{"x", "y", "z"};
  return vars;
}

Poly trace_polynomial(const GroupWord& w) { return calculator().trace(w.letters()); }

Ideal character_ideal(const Presentation& pres) {
  const GroupWord& r = pres.relator();
  std::vector<Poly> gens;
  for (const char* w : {"", "a", "b", "ab"}) {
    const GroupWord word = GroupWord::parse(w);
    gens.push_back(trace_polynomial(r * word) - trace_polynomial(word));
  }
  return Ideal(trace_variables(), std::move(gens));
}

Poly slope_trace(const PeripheralSystem& ps, const Slope& slope) {
  const GroupWord w = ps.mu().pow(static_cast<int>(slope.p())) * ps.lambda().pow(static_cast<int>(slope.q()));
  return trace_polynomial(w);
}

Rational numeric_trace_oracle(const GroupWord& w, const SL2Matrix& a, const SL2Matrix& b) {
  const SL2Matrix ai = a.inverse(), bi = b.inverse();
  SL2Matrix acc = SL2Matrix::identity();
  for (char c : w.letters()) {
    switch (c) {
      case 'a': acc = acc * a; break;
      case 'A': acc = acc * ai; break;
      case 'b': acc = acc * b; break;
      default: acc = acc * bi; break;
    }
  }
  return acc.trace();
}

}  // namespace charvar
