#include <doctest.h>

#include <random>

#include "fiber/freewords.hpp"

using namespace fiber;

namespace {

Word random_word(std::mt19937_64& g, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), code(0, 3);
  std::vector<Letter> ls(static_cast<std::size_t>(len(g)));
  for (auto& l : ls) l = Letter::from_code(static_cast<std::uint8_t>(code(g)));
  return Word(ls);
}

std::vector<Letter> letters(std::string_view s) {
  std::vector<Letter> ls;
  for (char c : s) ls.push_back(Letter::from_char(c));
  return ls;
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce(letters("aA")).empty());
  CHECK(reduce(letters("abBa")).str() == "aa");
  CHECK(reduce(letters("bbabaBaBAA")).str() == "bbabaBaBAA");
  CHECK(reduce(letters("bbababBaBAA")).str() == "bbabaaBAA");
  CHECK(reduce(letters("abBAba")).str() == "ba");
}

TEST_CASE("reduce is idempotent and never lengthens") {
  std::mt19937_64 g(7);
  for (int i = 0; i < 2000; ++i) {
    std::uniform_int_distribution<int> code(0, 3);
    std::vector<Letter> raw(40);
    for (auto& l : raw) l = Letter::from_code(static_cast<std::uint8_t>(code(g)));
    Word w = reduce(raw);
    CHECK(w.size() <= raw.size());
    CHECK(reduce(w.letters()) == w);
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k] != w[k - 1].inverse());
  }
}

TEST_CASE("cyclic_reduce") {
  auto [core, conj] = cyclic_reduce(Word::parse("Bab"));
  CHECK(core.str() == "a");
  CHECK(conj.str() == "B");
  auto e = cyclic_reduce(Word());
  CHECK(e.core.empty());
  CHECK(e.conjugator.empty());
  auto c = cyclic_reduce(Word::parse("abAB"));
  CHECK(c.core.str() == "abAB");
  CHECK(c.conjugator.empty());

  std::mt19937_64 g(11);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_word(g, 30);
    auto r = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(r.core));
    CHECK(r.conjugator * r.core * r.conjugator.inverse() == w);
  }
}

TEST_CASE("exponent sums and phi") {
  Word r = Word::parse("bbabaBaBAA");
  CHECK(exponent_sums(r) == ExponentSums{1, 1});
  CHECK(exponent_sums(r * Word::parse("a")) == ExponentSums{2, 1});
  CHECK(exponent_sums(Word::parse("abAB")) == ExponentSums{0, 0});

  CHECK(std::get<Phi>(phi_from_relator(r)) == Phi{1, -1});
  CHECK(std::get<Phi>(phi_from_relator(Word::parse("bbabaBaBA"))) == Phi{1, -2});
  CHECK(std::holds_alternative<Commutator>(phi_from_relator(Word::parse("abAB"))));

  std::mt19937_64 g(3);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_word(g, 25);
    auto p = phi_from_relator(w);
    if (auto* phi = std::get_if<Phi>(&p)) {
      CHECK((*phi)(w) == 0);
      CHECK(std::gcd(phi->va, phi->vb) == 1);
      CHECK((phi->va > 0 || (phi->va == 0 && phi->vb > 0)));
    }
  }
}

TEST_CASE("lift_path") {
  CHECK(lift_path(Word()).size() == 1);
  auto p = lift_path(Word::parse("ab"));
  REQUIRE(p.size() == 3);
  CHECK(p[1] == LatticePoint{1, 0});
  CHECK(p[2] == LatticePoint{1, 1});
  auto sq = lift_path(Word::parse("abAB"));
  REQUIRE(sq.size() == 5);
  CHECK(sq[3] == LatticePoint{0, 1});
  CHECK(sq[4] == LatticePoint{0, 0});

  std::mt19937_64 g(5);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(g, 30);
    auto path = lift_path(w);
    auto e = exponent_sums(w);
    CHECK(path.size() == w.size() + 1);
    CHECK(path.back() == LatticePoint{e.ea, e.eb});
  }
}

TEST_CASE("canonical_cyclic is invariant under rotation and inversion") {
  std::mt19937_64 g(9);
  for (int i = 0; i < 1000; ++i) {
    Word w = cyclic_reduce(random_word(g, 20)).core;
    if (w.empty()) continue;
    Word c = canonical_cyclic(w);
    // brute-force minimum over all rotations of w and w^-1
    Word best = w;
    for (const Word& v : {w, w.inverse()})
      for (std::size_t k = 0; k < v.size(); ++k) best = std::min(best, cyclic_rotation(v, k));
    CHECK(c == best);
    CHECK(canonical_cyclic(cyclic_rotation(w, 3)) == c);
    CHECK(canonical_cyclic(w.inverse()) == c);
  }
  CHECK(canonical_cyclic(Word::parse("ab")).str() == "AB");
}
