#include "clans/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace clans {

namespace {

std::int64_t parse_int(const std::string& text, std::size_t& at) {
  const std::size_t begin = at;
  if (at < text.size() && (text[at] == '+' || text[at] == '-')) ++at;
  const std::size_t digits = at;
  while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at])))
    ++at;
  if (at == digits) throw ParseError("expected an integer in '" + text + "'");
  errno = 0;
  const long long value = std::strtoll(text.substr(begin, at - begin).c_str(),
                                       nullptr, 10);
  if (errno != 0)
    throw ParseError("integer out of range in '" + text + "'");
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t at = 0;
  const std::int64_t num = parse_int(text, at);
  if (at == text.size()) return Rational(num);
  if (text[at] != '/')
    throw ParseError("bad rational literal '" + text + "'");
  ++at;
  const std::int64_t den = parse_int(text, at);
  if (at != text.size())
    throw ParseError("bad rational literal '" + text + "'");
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace clans
