#include "rosen/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rosen {

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto bad = [&] { throw std::invalid_argument("bad rational literal: " + s); };
  std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal
    std::string digits;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '.') {
        if (seen_dot) bad();
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i];
        seen_digit = true;
        if (seen_dot) ++frac_len;
      } else {
        bad();
      }
    }
    if (!seen_digit) bad();
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den = 1;
    for (long k = 0; k < frac_len; ++k) den *= 10;
    mpq_class r(num, den);
    r.canonicalize();
    if (neg) r = -r;
    return r;
  }
  mpq_class r;
  if (r.set_str(s, 10) != 0) bad();
  r.canonicalize();
  if (r.get_den() == 0) bad();
  return r;
}

std::string to_string(const mpq_class& x) { return x.get_str(); }

}  // namespace rosen
