#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "fiber/bigint.hpp"
#include "fiber/boxes.hpp"
#include "fiber/freewords.hpp"

namespace fiber {

// Label algebras: a monoid with an anti-involution and a power that may refuse.
// Each provides value_type, identity(), mul(x, y), inv(x) and pow(x, n) -> optional.

struct WordLabels {
  using value_type = Word;
  // Powers whose result would exceed this many letters are refused.
  std::size_t max_letters = 10'000'000;

  Word identity() const { return {}; }
  Word mul(const Word& x, const Word& y) const { return x * y; }
  Word inv(const Word& x) const { return x.inverse(); }
  std::optional<Word> pow(const Word& x, const BigInt& n) const {
    if (x.empty() || n == 0) return Word{};
    if (BigInt(n * x.size()) > max_letters) return std::nullopt;
    Word r;
    for (long k = n.get_si(); k > 0; --k) r *= x;
    return r;
  }
};

// First homology of the handlebody, Z^2 with (a, b) exponent sums.
struct H1Class {
  BigInt a;
  BigInt b;
  friend bool operator==(const H1Class&, const H1Class&) = default;
};

struct H1Labels {
  using value_type = H1Class;
  H1Class identity() const { return {BigInt(0), BigInt(0)}; }
  H1Class mul(const H1Class& x, const H1Class& y) const { return {x.a + y.a, x.b + y.b}; }
  H1Class inv(const H1Class& x) const { return {-x.a, -x.b}; }
  std::optional<H1Class> pow(const H1Class& x, const BigInt& n) const { return H1Class{x.a * n, x.b * n}; }
};

// Surface homology over Z/2 as a 4-bit mask; inversion is trivial.
struct Mod2Labels {
  using value_type = std::uint8_t;
  std::uint8_t identity() const { return 0; }
  std::uint8_t mul(std::uint8_t x, std::uint8_t y) const { return x ^ y; }
  std::uint8_t inv(std::uint8_t x) const { return x; }
  std::optional<std::uint8_t> pow(std::uint8_t x, const BigInt& n) const {
    return mpz_odd_p(n.get_mpz_t()) ? x : std::uint8_t{0};
  }
};

template <class Int, class Count>
struct BoxLabels {
  using value_type = BasicBox<Int, Count>;
  value_type identity() const { return {}; }
  value_type mul(const value_type& x, const value_type& y) const { return fiber::mul(x, y); }
  value_type inv(const value_type& x) const { return rev(x); }
  std::optional<value_type> pow(const value_type& x, const BigInt& n) const { return fiber::pow(x, n); }
};
using BigBoxLabels = BoxLabels<BigInt, SatCount>;

// Componentwise product of two algebras.
template <class A, class B>
struct ProductLabels {
  using value_type = std::pair<typename A::value_type, typename B::value_type>;
  A first;
  B second;
  value_type identity() const { return {first.identity(), second.identity()}; }
  value_type mul(const value_type& x, const value_type& y) const {
    return {first.mul(x.first, y.first), second.mul(x.second, y.second)};
  }
  value_type inv(const value_type& x) const { return {first.inv(x.first), second.inv(x.second)}; }
  std::optional<value_type> pow(const value_type& x, const BigInt& n) const {
    auto p = first.pow(x.first, n);
    auto q = second.pow(x.second, n);
    if (!p || !q) return std::nullopt;
    return value_type{std::move(*p), std::move(*q)};
  }
};

}  // namespace fiber
