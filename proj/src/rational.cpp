#include "hopoly/rational.hpp"

#include <cctype>

#include "hopoly/error.hpp"

namespace hopoly {

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  BigRational q(BigInt(std::string(num), 10), d);
  q.canonicalize();
  if (!text.empty() && text.front() == '-') q = -q;
  return q;
}

}  // namespace hopoly
