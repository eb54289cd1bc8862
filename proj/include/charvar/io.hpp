#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charvar/ideal.hpp"
#include "charvar/newton.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/trace.hpp"

namespace charvar {

/// Largest exponent accepted after '^'.
inline constexpr unsigned max_parsed_exponent = 1000;

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' digits]
///   atom   := digits ['/' digits] | name | '(' expr ')'
/// Whitespace (newlines included) is ignored. Throws SyntaxError with a
/// 1-based line and column, also for names outside `vars`.
Poly parse_polynomial(std::string_view text, const Variables& vars);

struct PresentationFile {
  Presentation presentation;
  std::optional<PeripheralSystem> peripheral;
};

/// Lines `relator: <word>`, `mu: <word>`, `lambda: <word>`; `#` starts a
/// comment. A relator that reduces to the identity is an error; mu and lambda
/// are optional but must come together.
PresentationFile parse_presentation(std::string_view text);

struct APolynomialFile {
  APolynomial polynomial;
  bool strip_content = false;
  bool strip_abelian_factor = false;
};

/// One polynomial in L, M, possibly over several lines, with `#` comments and
/// optional header lines `strip_content: true|false` and
/// `strip_abelian_factor: true|false`. The declared normalizations are
/// applied before returning.
APolynomialFile parse_apolynomial(std::string_view text);

/// Generators separated by newlines or ';'. Blank lines and `#` comments are
/// skipped.
Ideal parse_ideal(std::string_view text, const Variables& vars);

std::string read_file(const std::string& path);

}  // namespace charvar
