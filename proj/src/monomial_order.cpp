#include "charvar/monomial_order.hpp"

namespace charvar {

namespace {

std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b,
                                 const std::vector<bool>* mask, bool want) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask && (*mask)[i] != want) continue;
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const ExponentVector& a, const ExponentVector& b,
                                     const std::vector<bool>* mask, bool want) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask && (*mask)[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (mask && (*mask)[k] != want) continue;
    if (a[k] != b[k]) return b[k] <=> a[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<bool> front, Kind inner) {
  if (inner == Kind::BlockElimination) throw InputError("block order needs a lex or grevlex inner order");
  return MonomialOrder(Kind::BlockElimination, std::move(front), inner);
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b, nullptr, true);
    case Kind::GrevLex:
      return grevlex_compare(a, b, nullptr, true);
    case Kind::BlockElimination: {
      auto c = inner_ == Kind::Lex ? lex_compare(a, b, &front_, true)
                                   : grevlex_compare(a, b, &front_, true);
      if (c != 0) return c;
      return grevlex_compare(a, b, &front_, false);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe(const Variables& vars) const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::BlockElimination: {
      std::string hi, lo;
      for (std::size_t i = 0; i < vars.size() && i < front_.size(); ++i) {
        std::string& s = front_[i] ? hi : lo;
        if (!s.empty()) s += ",";
        s += vars[i];
      }
      return std::string("block(") + (inner_ == Kind::Lex ? "lex" : "grevlex") + " {" + hi +
             "} > grevlex {" + lo + "})";
    }
  }
  return "";
}

}  // namespace charvar
