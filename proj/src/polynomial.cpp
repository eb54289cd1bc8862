#include "charvar/polynomial.hpp"

#include <cctype>
#include <set>

namespace charvar {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

Variables::Variables(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Variables::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

Variables Variables::parse(std::string_view list) {
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw InputError("empty name in variable list");
    names.push_back(cur);
    cur.clear();
  };
  for (char c : list) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !names.empty()) flush();
  return Variables(std::move(names));
}

std::string join(const Variables& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i];
  }
  return out;
}

bool has_integer_coefficients(const Poly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_integer()) return false;
  return true;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<ExponentVector, Rational>> terms(p.terms().begin(), p.terms().end());
  // graded, then lexicographic with the first variable largest
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  const Variables& vars = p.variables();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

}  // namespace charvar
