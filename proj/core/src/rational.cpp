#include "cofmat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cofmat {

std::string to_string(const Rational& value) {
  // Values built from raw numerator/denominator pairs may not be reduced yet.
  Rational c = value;
  c.canonicalize();
  return c.get_str(10);
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational out(parse_integer(num), d);
  out.canonicalize();
  return out;
}

}  // namespace cofmat
