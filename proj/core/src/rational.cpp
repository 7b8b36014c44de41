#include "confhodge/rational.hpp"

#include <cctype>

#include "confhodge/error.hpp"

namespace confhodge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_integer(num));

  auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

}  // namespace confhodge
