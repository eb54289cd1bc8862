#include "charvar/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace charvar {

namespace {

class Parser {
 public:
  /// line0/column0 locate the first character when `text` is a fragment.
  Parser(std::string_view text, const Variables& vars, std::size_t line0 = 1, std::size_t column0 = 1)
      : text_(text), vars_(vars), line0_(line0), column0_(column0) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    std::size_t line = line0_, column = column0_;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(message, line, column);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Accepts the ASCII character or, for '-', the Unicode minus sign.
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    if (c == '-' && text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Poly expr() {
    Poly acc(vars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t at = pos_;
      auto d = digits();
      if (d.empty()) fail("expected exponent");
      if (d.size() > 4 || std::stoul(std::string(d)) > max_parsed_exponent)
        fail_at("exponent exceeds " + std::to_string(max_parsed_exponent), at);
      const unsigned n = static_cast<unsigned>(std::stoul(std::string(d)));
      if (base.total_degree() > 0 && static_cast<unsigned>(base.total_degree()) * n > max_parsed_exponent)
        fail_at("degree exceeds " + std::to_string(max_parsed_exponent), at);
      return base.pow(n);
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= text_.size()) {
      // Report the spot just past the last visible character.
      std::size_t end = text_.size();
      while (end > 0 && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
      fail_at("unexpected end of input", end);
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num(std::string(digits()), 10);
      Integer den = 1;
      if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        auto d = digits();
        if (d.empty()) fail("expected denominator");
        den = Integer(std::string(d), 10);
        if (den == 0) fail_at("zero denominator", at);
      }
      return Poly::constant(vars_, Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!vars_.index_of(name)) fail_at("unknown variable '" + name + "'", start);
      return Poly::variable(vars_, name);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t line0_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool parse_flag(std::string_view value, std::size_t line) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw SyntaxError("expected true or false", line, 1);
}

}  // namespace

Poly parse_polynomial(std::string_view text, const Variables& vars) { return Parser(text, vars).parse(); }

PresentationFile parse_presentation(std::string_view text) {
  std::optional<GroupWord> relator, mu, lambda;
  auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = trim(strip_comment(lines[n]));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw SyntaxError("expected 'key: word'", n + 1, 1);
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    GroupWord w;
    try {
      w = GroupWord::parse(value);
    } catch (const SyntaxError& e) {
      const auto offset = static_cast<std::size_t>(value.data() - lines[n].data());
      throw SyntaxError("bad word for '" + std::string(key) + "'", n + 1, offset + e.column());
    }
    std::optional<GroupWord>* slot = nullptr;
    if (key == "relator") slot = &relator;
    else if (key == "mu") slot = &mu;
    else if (key == "lambda") slot = &lambda;
    else throw SyntaxError("unknown key '" + std::string(key) + "'", n + 1, 1);
    if (*slot) throw SyntaxError("duplicate key '" + std::string(key) + "'", n + 1, 1);
    *slot = w;
  }
  if (!relator) throw InputError("presentation has no relator line");
  if (relator->cyclically_reduced().empty()) throw InputError("relator reduces to the identity");
  if (mu.has_value() != lambda.has_value()) throw InputError("mu and lambda must be given together");
  PresentationFile out{Presentation(*relator), std::nullopt};
  if (mu) out.peripheral = PeripheralSystem(*mu, *lambda);
  return out;
}

APolynomialFile parse_apolynomial(std::string_view text) {
  bool strip_content = false, strip_abelian = false;
  std::string body;
  std::size_t first_body_line = 0;
  auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = strip_comment(lines[n]);
    std::string_view t = trim(line);
    auto colon = t.find(':');
    if (colon != std::string_view::npos) {
      const std::string_view key = trim(t.substr(0, colon));
      const std::string_view value = trim(t.substr(colon + 1));
      if (key == "strip_content") strip_content = parse_flag(value, n + 1);
      else if (key == "strip_abelian_factor") strip_abelian = parse_flag(value, n + 1);
      else throw SyntaxError("unknown header key '" + std::string(key) + "'", n + 1, 1);
      continue;
    }
    if (!t.empty() && first_body_line == 0) first_body_line = n + 1;
    if (first_body_line != 0) {
      body += line;
      body += '\n';
    }
  }
  if (first_body_line == 0) throw InputError("A-polynomial file has no polynomial");
  APolynomialFile out{APolynomial(Parser(body, APolynomial::variables(), first_body_line).parse()), strip_content,
                      strip_abelian};
  if (strip_content) out.polynomial.strip_content();
  if (strip_abelian) out.polynomial.strip_abelian_factor();
  return out;
}

Ideal parse_ideal(std::string_view text, const Variables& vars) {
  std::vector<Poly> gens;
  auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = strip_comment(lines[n]);
    std::size_t start = 0;
    while (start <= line.size()) {
      auto end = line.find(';', start);
      if (end == std::string_view::npos) end = line.size();
      std::string_view piece = line.substr(start, end - start);
      if (!trim(piece).empty()) {
        gens.push_back(Parser(piece, vars, n + 1, start + 1).parse());
      }
      start = end + 1;
    }
  }
  return Ideal(vars, std::move(gens));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace charvar
