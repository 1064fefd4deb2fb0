#include <doctest.h>

#include <random>

#include "fiber/boxes.hpp"

using namespace fiber;

namespace {

Box walk_box(std::initializer_list<long long> w) {
  std::vector<long long> v(w);
  return box_of_walk(v);
}

Word random_word(std::mt19937_64& g, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), code(0, 3);
  std::vector<Letter> ls(static_cast<std::size_t>(len(g)));
  for (auto& l : ls) l = Letter::from_code(static_cast<std::uint8_t>(code(g)));
  return Word(ls);
}

}  // namespace

TEST_CASE("box_of_walk counting convention") {
  CHECK(walk_box({0}) == Box{0, 0, 0, 0, 0});
  CHECK(walk_box({0, -1, 0, 1, 2, 1, 2}) == Box{2, 2, -1, 3, 2});
  CHECK(walk_box({0, 2, 0}) == Box{0, 2, 0, 2, 2});
  CHECK_THROWS(walk_box({1, 2}));
}

TEST_CASE("mul and rev") {
  Box b{3, 5, -2, 1, 4};
  CHECK(mul(b, Box{}) == b);
  CHECK(mul(Box{}, b) == b);
  CHECK(mul(Box{2, 2, 0, 1, 1}, Box{-2, 0, -2, 1, 1}) == Box{0, 2, 0, 2, 2});
  CHECK(mul(Box{1, 1, 0, 1, 1}, Box{-1, 0, -1, 1, 1}) == Box{0, 1, 0, 2, 2});
  CHECK(rev(Box{2, 2, 0, 1, 1}) == Box{-2, 0, -2, 1, 1});
  CHECK(rev(Box{}) == Box{});
  CHECK(rev(walk_box({0, 1, 2, 1, 2})) == walk_box({0, -1, 0, -1, -2}));
}

TEST_CASE("pow") {
  CHECK(pow(Box{1, 1, 0, 1, 1}, BigInt(0)) == Box{});
  CHECK(pow(Box{0, 1, 0, 2, 2}, BigInt(2)) == Box{0, 1, 0, 4, 4});
  CHECK(pow(Box{1, 1, 0, 1, 1}, BigInt(3)) == Box{3, 3, 0, 1, 1});
  BigBox big{BigInt(0), BigInt(4), BigInt(-1), SatCount(1), SatCount(2)};
  auto p = pow(big, pow10(50));
  CHECK(p.s == 0);
  CHECK(marked_top(p));
  CHECK(marked_bottom(p));
  BigBox up{BigInt(2), BigInt(3), BigInt(0), SatCount(1), SatCount(1)};
  auto q = pow(up, pow10(40));
  CHECK(q.s == 2 * pow10(40));
  CHECK(q.t == 2 * pow10(40) + 1);
  CHECK(q.b == 0);
}

TEST_CASE("box_of_word") {
  CHECK(box_of_word(Word::parse("a"), Phi{2, 1}) == Box{2, 2, 0, 1, 1});
  CHECK(box_of_word(Word::parse("a"), Phi{0, 1}) == Box{0, 0, 0, 2, 2});
  // the interior top of {0,1,2,1,0} counts twice
  CHECK(box_of_word(Word::parse("aabb"), Phi{1, -1}) == Box{0, 2, 0, 2, 2});
  CHECK(box_of_word(Word::parse("B"), Phi{0, 1}) == Box{-1, 0, -1, 0, 0});
}

TEST_CASE("marked tops and bottoms") {
  CHECK(marked_top(Box{2, 2, -1, 3, 2}));
  CHECK(!marked_bottom(Box{2, 2, -1, 3, 2}));
  CHECK(!marked_top(Box{}));
  CHECK(!marked_bottom(Box{}));
  CHECK(marked_top(Box{0, 1, 0, 4, 4}));
  CHECK(marked_bottom(Box{0, 1, 0, 4, 4}));
}

TEST_CASE("monoid and morphism laws on random words") {
  std::mt19937_64 g(21);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int i = 0; i < 3000; ++i) {
    Phi phi{coef(g), coef(g)};
    if (phi.va == 0 && phi.vb == 0) continue;
    Word u = random_word(g, 20), v = random_word(g, 20), w = random_word(g, 20);
    Box bu = box_of_word(u, phi), bv = box_of_word(v, phi), bw = box_of_word(w, phi);
    CHECK(mul(mul(bu, bv), bw) == mul(bu, mul(bv, bw)));
    CHECK(rev(rev(bu)) == bu);
    CHECK(rev(mul(bu, bv)) == mul(rev(bv), rev(bu)));
    CHECK(box_of_word(u.inverse(), phi) == rev(bu));
    if (u.empty() || v.empty() || u[u.size() - 1] != v[0].inverse())
      CHECK(box_of_word(u * v, phi) == mul(bu, bv));
    Box acc{};
    for (int n = 0; n < 6; ++n) {
      CHECK(pow(bu, BigInt(n)) == acc);
      acc = mul(acc, bu);
    }
    if (marked_top(bu) && marked_top(bv)) CHECK(marked_top(mul(bu, bv)));
  }
}

TEST_CASE("squares of balanced cyclically reduced words have marked tops") {
  std::mt19937_64 g(4);
  std::uniform_int_distribution<int> coef(-3, 3);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    Word w = cyclic_reduce(random_word(g, 12)).core;
    Phi phi{coef(g), coef(g)};
    if (w.empty() || (phi.va == 0 && phi.vb == 0) || phi(w) != 0) continue;
    CHECK(marked_top(box_of_word(w * w, phi)));
    ++checked;
  }
  CHECK(checked > 100);
}
