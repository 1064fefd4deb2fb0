#include "fiber/freewords.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fiber {

namespace {

// Position of each letter code in the text order A < B < a < b.
constexpr int kRank[4] = {2, 0, 3, 1};

// Booth's algorithm: start index of the least rotation.
std::size_t least_rotation(const std::vector<int>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    int sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[(k + i + 1) % n]) {  // i == -1 here
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::vector<int> ranks(const Word& w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (Letter l : w) r.push_back(kRank[l.code()]);
  return r;
}

}  // namespace

Letter Letter::from_char(char c) {
  switch (c) {
    case 'a': return a();
    case 'A': return A();
    case 'b': return b();
    case 'B': return B();
    default: throw std::invalid_argument(std::string("not a letter: ") + c);
  }
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char c : text) ls.push_back(Letter::from_char(c));
  return Word(ls);
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

Word& Word::operator*=(const Word& v) {
  std::size_t k = 0;
  while (k < v.size() && !letters_.empty() && letters_.back() == v[k].inverse()) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), v.letters_.begin() + static_cast<long>(k), v.letters_.end());
  return *this;
}

Word operator*(const Word& u, const Word& v) {
  Word r = u;
  r *= v;
  return r;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  return std::lexicographical_compare_three_way(
      u.begin(), u.end(), v.begin(), v.end(),
      [](Letter x, Letter y) { return kRank[x.code()] <=> kRank[y.code()]; });
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w[0] != w[w.size() - 1].inverse();
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == w[j - 1].inverse()) {
    ++i;
    --j;
  }
  auto ls = w.letters();
  return {Word(ls.subspan(i, j - i)), Word(ls.subspan(0, i))};
}

ExponentSums exponent_sums(const Word& w) {
  ExponentSums e;
  for (Letter l : w) (l.generator() == 0 ? e.ea : e.eb) += l.sign();
  return e;
}

long long Phi::operator()(const Word& w) const {
  auto e = exponent_sums(w);
  return va * e.ea + vb * e.eb;
}

Phi phi_orthogonal_to(long long ea, long long eb) {
  if (ea == 0 && eb == 0) throw std::invalid_argument("zero exponent sums");
  long long g = std::gcd(ea, eb);
  Phi p{eb / g, -ea / g};
  if (p.va < 0 || (p.va == 0 && p.vb < 0)) p = -p;
  return p;
}

std::variant<Phi, Commutator> phi_from_relator(const Word& r) {
  auto e = exponent_sums(r);
  if (e.ea == 0 && e.eb == 0) return Commutator{};
  return phi_orthogonal_to(e.ea, e.eb);
}

std::vector<LatticePoint> lift_path(const Word& w) {
  std::vector<LatticePoint> pts;
  pts.reserve(w.size() + 1);
  LatticePoint p;
  pts.push_back(p);
  for (Letter l : w) {
    (l.generator() == 0 ? p.x : p.y) += l.sign();
    pts.push_back(p);
  }
  return pts;
}

Word cyclic_rotation(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> ls(w.begin() + static_cast<long>(k), w.end());
  ls.insert(ls.end(), w.begin(), w.begin() + static_cast<long>(k));
  return Word(ls);
}

Word canonical_cyclic(const Word& w) {
  Word inv = w.inverse();
  Word r1 = cyclic_rotation(w, least_rotation(ranks(w)));
  Word r2 = cyclic_rotation(inv, least_rotation(ranks(inv)));
  return std::min(r1, r2);
}

}  // namespace fiber
