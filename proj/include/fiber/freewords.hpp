#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fiber {

// One of a, A = a^-1, b, B = b^-1. The code is 2*generator + (inverted ? 1 : 0).
class Letter {
 public:
  constexpr Letter() = default;
  static constexpr Letter a() { return Letter(0); }
  static constexpr Letter A() { return Letter(1); }
  static constexpr Letter b() { return Letter(2); }
  static constexpr Letter B() { return Letter(3); }
  static constexpr Letter from_code(std::uint8_t c) { return Letter(c & 3); }
  static Letter from_char(char c);

  constexpr std::uint8_t code() const { return code_; }
  constexpr int generator() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1) ? -1 : 1; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1); }
  char to_char() const { return "aAbB"[code_]; }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint8_t c) : code_(c) {}
  std::uint8_t code_ = 0;
};

// A freely reduced word in F(a, b).
class Word {
 public:
  Word() = default;
  // Reduces its input.
  explicit Word(std::span<const Letter> letters);
  static Word parse(std::string_view text);
  static Word letter(Letter l) { return Word(std::span<const Letter>(&l, 1)); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  std::string str() const;

  // Reduced product; cancellation happens only at the seam.
  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  // Order of the text form (A < B < a < b), then length.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> letters);

struct CyclicReduction {
  Word core;
  Word conjugator;  // input = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

struct ExponentSums {
  long long ea = 0;
  long long eb = 0;
  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};
ExponentSums exponent_sums(const Word& w);

// Integer homomorphism F -> Z given by its values on a and b.
struct Phi {
  long long va = 0;
  long long vb = 0;

  long long operator()(Letter l) const { return l.sign() * (l.generator() == 0 ? va : vb); }
  long long operator()(const Word& w) const;
  Phi operator-() const { return {-va, -vb}; }
  bool degenerate() const { return va == 0 || vb == 0; }
  friend bool operator==(const Phi&, const Phi&) = default;
};

// Marker for relators lying in the commutator subgroup.
struct Commutator {
  friend bool operator==(const Commutator&, const Commutator&) = default;
};

std::variant<Phi, Commutator> phi_from_relator(const Word& r);
// Primitive vector orthogonal to (ea, eb), lexicographically positive.
Phi phi_orthogonal_to(long long ea, long long eb);

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};
std::vector<LatticePoint> lift_path(const Word& w);

// Least cyclic rotation of w or w^-1 in the text order; w should be cyclically reduced.
Word canonical_cyclic(const Word& w);

Word cyclic_rotation(const Word& w, std::size_t k);

}  // namespace fiber
