#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>

#include "fiber/bigint.hpp"
#include "fiber/freewords.hpp"

namespace fiber {

// Visit count that saturates at 3; only "more than 2" is ever asked of it.
class SatCount {
 public:
  constexpr SatCount() = default;
  constexpr SatCount(int v) : v_(static_cast<std::uint8_t>(v < 0 ? 0 : (v > 3 ? 3 : v))) {}
  constexpr int value() const { return v_; }
  friend constexpr SatCount operator+(SatCount x, SatCount y) { return SatCount(x.v_ + y.v_); }
  friend constexpr bool operator==(SatCount, SatCount) = default;

 private:
  std::uint8_t v_ = 0;
};

namespace box_detail {

inline SatCount scale(SatCount c, const BigInt& n) {
  if (c.value() == 0 || n == 0) return SatCount(0);
  return n >= 3 ? SatCount(3) : SatCount(c.value() * static_cast<int>(n.get_si()));
}
inline long long scale(long long c, const BigInt& n) { return c * to_i64(n); }
inline BigInt scale(const BigInt& c, const BigInt& n) { return BigInt(c * n); }

inline bool exceeds_two(SatCount c) { return c.value() > 2; }
inline bool exceeds_two(long long c) { return c > 2; }
inline bool exceeds_two(const BigInt& c) { return c > 2; }

template <class Int>
Int from_big(const BigInt& n) {
  if constexpr (std::is_same_v<Int, BigInt>) return n;
  else return static_cast<Int>(to_i64(n));
}

}  // namespace box_detail

// Summary (shift, top, bottom, top visits, bottom visits) of a walk on Z.
template <class Int, class Count>
struct BasicBox {
  Int s{0};
  Int t{0};
  Int b{0};
  Count nt{0};
  Count nb{0};

  static BasicBox identity() { return {}; }
  friend bool operator==(const BasicBox&, const BasicBox&) = default;
};

using Box = BasicBox<long long, long long>;
using BigBox = BasicBox<BigInt, SatCount>;
using ExactBigBox = BasicBox<BigInt, BigInt>;

template <class Int, class Count>
BasicBox<Int, Count> mul(const BasicBox<Int, Count>& x, const BasicBox<Int, Count>& y) {
  BasicBox<Int, Count> r;
  r.s = x.s + y.s;
  Int t2 = x.s + y.t;
  if (x.t > t2) {
    r.t = x.t;
    r.nt = x.nt;
  } else if (x.t < t2) {
    r.t = t2;
    r.nt = y.nt;
  } else {
    r.t = x.t;
    r.nt = x.nt + y.nt;
  }
  Int b2 = x.s + y.b;
  if (x.b < b2) {
    r.b = x.b;
    r.nb = x.nb;
  } else if (x.b > b2) {
    r.b = b2;
    r.nb = y.nb;
  } else {
    r.b = x.b;
    r.nb = x.nb + y.nb;
  }
  return r;
}

template <class Int, class Count>
BasicBox<Int, Count> rev(const BasicBox<Int, Count>& x) {
  return {Int(-x.s), Int(x.t - x.s), Int(x.b - x.s), x.nt, x.nb};
}

// n-fold product, in closed form.
template <class Int, class Count>
BasicBox<Int, Count> pow(const BasicBox<Int, Count>& x, const BigInt& n) {
  if (n < 0) throw std::invalid_argument("negative box power");
  if (n == 0) return {};
  const Int k = box_detail::from_big<Int>(n);
  BasicBox<Int, Count> r = x;
  r.s = x.s * k;
  const Int grow = x.s * (k - 1);
  if (x.s > 0) {
    r.t = grow + x.t;
  } else if (x.s < 0) {
    r.b = grow + x.b;
  } else {
    r.nt = box_detail::scale(x.nt, n);
    r.nb = box_detail::scale(x.nb, n);
  }
  return r;
}

template <class Int, class Count>
bool marked_top(const BasicBox<Int, Count>& x) { return box_detail::exceeds_two(x.nt); }
template <class Int, class Count>
bool marked_bottom(const BasicBox<Int, Count>& x) { return box_detail::exceeds_two(x.nb); }

template <class Int, class Count>
std::ostream& operator<<(std::ostream& os, const BasicBox<Int, Count>& x) {
  auto c = [](const Count& v) {
    if constexpr (std::is_same_v<Count, SatCount>) return v.value();
    else return v;
  };
  return os << '(' << x.s << ',' << x.t << ',' << x.b << ',' << c(x.nt) << ',' << c(x.nb) << ')';
}

// Walks must start at 0.
Box box_of_walk(std::span<const long long> walk);

// Box of a single letter under phi, including the degenerate table.
template <class BoxT>
BoxT generator_box(Letter l, const Phi& phi) {
  using Int = decltype(BoxT{}.s);
  auto cast = [](long long v) {
    if constexpr (std::is_same_v<Int, BigInt>) return from_i64(v);
    else return static_cast<Int>(v);
  };
  const long long v = phi(l);
  const int visits = phi.degenerate() ? (v == 0 ? 2 : 0) : 1;
  return {cast(v), cast(std::max(v, 0LL)), cast(std::min(v, 0LL)), visits, visits};
}

// Same table with arbitrary-precision phi values (va, vb), not both zero.
inline BigBox generator_bigbox(Letter l, const BigInt& va, const BigInt& vb) {
  BigInt v = l.generator() == 0 ? va : vb;
  if (l.sign() < 0) v = -v;
  if (va == 0 || vb == 0) {
    if (v == 0) return {BigInt(0), BigInt(0), BigInt(0), SatCount(2), SatCount(2)};
    return {v, v > 0 ? v : BigInt(0), v < 0 ? v : BigInt(0), SatCount(0), SatCount(0)};
  }
  return {v, v > 0 ? v : BigInt(0), v < 0 ? v : BigInt(0), SatCount(1), SatCount(1)};
}

template <class BoxT>
BoxT box_of_word_as(const Word& w, const Phi& phi) {
  BoxT r{};
  for (Letter l : w) r = mul(r, generator_box<BoxT>(l, phi));
  return r;
}

// Generic phi goes through the partial-sum walk; degenerate phi through the letter table.
Box box_of_word(const Word& w, const Phi& phi);

}  // namespace fiber
