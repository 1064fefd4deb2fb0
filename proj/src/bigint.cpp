#include "fiber/bigint.hpp"

#include <stdexcept>

namespace fiber {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("empty integer");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer: " + s);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::int64_t to_i64(const BigInt& x) {
  if (!fits_i64(x)) throw std::overflow_error("integer too large for int64");
  // mpz_get_si is long; long is 64-bit on the supported platforms
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

BigInt from_i64(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace fiber
