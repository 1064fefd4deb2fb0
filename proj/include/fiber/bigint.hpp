#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fiber {

using BigInt = mpz_class;

// Throws std::invalid_argument on anything but an optional '-' and decimal digits.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline bool fits_i64(const BigInt& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2) <= 62;
}

std::int64_t to_i64(const BigInt& x);
BigInt from_i64(std::int64_t v);

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division and the matching non-negative remainder for positive m.
inline BigInt floor_div(const BigInt& a, const BigInt& m) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}
inline BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}
inline BigInt ceil_div(const BigInt& a, const BigInt& m) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

inline BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace fiber
