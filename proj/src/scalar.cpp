#include "parageom/scalar.hpp"

#include <cctype>

namespace parageom {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_pretty(const Scalar& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_str();
}

bool exact_cube_root(const Scalar& x, Scalar& root) {
  Integer num = abs(x.get_num());
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), x.get_den().get_mpz_t(), 3) == 0) return false;
  if (sgn(x) < 0) rn = -rn;
  root = Scalar(rn, rd);
  root.canonicalize();
  return true;
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result = 1;
  Scalar b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace parageom
