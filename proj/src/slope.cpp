#include "charvar/slope.hpp"

#include <charconv>
#include <numeric>

#include "charvar/errors.hpp"

namespace charvar {

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (std::gcd(p, q) != 1)
    throw InputError("slope " + std::to_string(p) + "/" + std::to_string(q) +
                     " is not a primitive (coprime) pair");
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Slope Slope::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw InputError("malformed slope '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(number(text), 1);
  return Slope(number(text.substr(0, slash)), number(text.substr(slash + 1)));
}

}  // namespace charvar
