#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "fiber/brown.hpp"
#include "fiber/randgroups.hpp"

using namespace fiber;

namespace {

const std::array<Letter, 4> kLetters{Letter::a(), Letter::A(), Letter::b(), Letter::B()};

// All cyclically reduced words of length r, by extending reduced prefixes.
std::vector<Word> all_cyclically_reduced(int r) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  std::function<void()> grow = [&] {
    if (static_cast<int>(cur.size()) == r) {
      if (cur.back() != cur.front().inverse() || r == 1) out.emplace_back(cur);
      return;
    }
    for (Letter l : kLetters) {
      if (!cur.empty() && l == cur.back().inverse()) continue;
      cur.push_back(l);
      grow();
      cur.pop_back();
    }
  };
  grow();
  return out;
}

// Exact probability that a random bridge of length L has a unique (cyclic) maximum, by
// enumerating every sign sequence with its weight under the walk's kernel.
double exact_bridge_unique_max(int L, bool momentum) {
  double total = 0, unique = 0;
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    double p = 1;
    long long x = 0, best = 0, hits = 1;
    for (int k = 0; k < L; ++k) {
      const int step = (mask >> k) & 1 ? 1 : -1;
      if (momentum && k > 0) p *= (step == (((mask >> (k - 1)) & 1) ? 1 : -1)) ? 2.0 / 3.0 : 1.0 / 3.0;
      x += step;
      if (k + 1 == L) break;
      if (x > best) {
        best = x;
        hits = 1;
      } else if (x == best) {
        ++hits;
      }
    }
    if (x != 0) continue;
    total += p;
    if (hits == 1) unique += p;
  }
  return unique / total;
}

}  // namespace

TEST_CASE("census counts match brute force and the closed forms") {
  for (int r = 1; r <= 12; ++r) CHECK(count_census(r) == static_cast<long>(all_cyclically_reduced(r).size()));
  CHECK(count_census(1) == 4);
  CHECK(count_census(4) == 84);
  CHECK(count_census(5) == 244);
  for (int r = 1; r <= 60; ++r) {
    BigInt p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(r));
    CHECK(count_census(r) == p3 + (r % 2 ? 1 : 3));
  }
}

TEST_CASE("sampled relators are cyclically reduced of the right length") {
  Rng rng(1);
  for (int r : {1, 2, 3, 10, 101}) {
    for (int i = 0; i < 200; ++i) {
      Word w = sample_cyclically_reduced(r, rng);
      CHECK(static_cast<int>(w.size()) == r);
      CHECK(is_cyclically_reduced(w));
    }
  }
}

TEST_CASE("length-one relators are uniform") {
  Rng rng(2);
  std::map<std::string, int> hits;
  for (int i = 0; i < 40000; ++i) ++hits[sample_cyclically_reduced(1, rng).str()];
  REQUIRE(hits.size() == 4);
  for (const auto& [w, c] : hits) CHECK(std::abs(c - 10000) < 400);
}

TEST_CASE("length-three relators match the enumeration") {
  const auto all = all_cyclically_reduced(3);
  REQUIRE(all.size() == 28);
  Rng rng(3);
  std::map<std::string, int> hits;
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++hits[sample_cyclically_reduced(3, rng).str()];
  CHECK(hits.size() == all.size());
  const double expect = static_cast<double>(n) / static_cast<double>(all.size());
  double chi = 0;
  for (const auto& w : all) {
    const double c = hits[w.str()];
    chi += (c - expect) * (c - expect) / expect;
  }
  // 27 degrees of freedom; the 0.999 quantile is about 55.5
  CHECK(chi < 55.5);
}

TEST_CASE("reduced words are cyclically reduced three times in four") {
  Rng rng(4);
  int ok = 0;
  const int n = 40000;
  for (int i = 0; i < n; ++i) ok += is_cyclically_reduced(sample_reduced(60, rng));
  CHECK(std::abs(ok / static_cast<double>(n) - 0.75) < 0.01);
}

TEST_CASE("commutator relators") {
  Rng rng(5);
  std::set<std::string> seen;
  for (int i = 0; i < 2000; ++i) {
    Word w = sample_commutator_relator(4, rng);
    CHECK(exponent_sums(w) == ExponentSums{0, 0});
    CHECK(is_cyclically_reduced(w));
    seen.insert(w.str());
  }
  CHECK(seen.count("abAB") == 1);
  for (int i = 0; i < 50; ++i) CHECK(exponent_sums(sample_commutator_relator(40, rng)) == ExponentSums{0, 0});
}

TEST_CASE("fibering estimates are reproducible and shard independent") {
  auto a = estimate_fiber_prob(60, 3000, 9, 1);
  auto b = estimate_fiber_prob(60, 3000, 9, 3);
  CHECK(a.n_fibered == b.n_fibered);
  CHECK(a.n_fibered + a.n_nonfibered == a.n);
  CHECK(a.ci_low() < a.fraction());
  CHECK(a.fraction() < a.ci_high());
  CHECK(a.fraction() > 0.0006);
  CHECK(a.fraction() < 0.975);
  auto c = estimate_fiber_prob(60, 3000, 10, 1);
  CHECK(c.n_fibered != a.n_fibered);
}

TEST_CASE("the fibering estimate matches exhaustive enumeration at small length") {
  for (int r : {6, 8}) {
    const auto all = all_cyclically_reduced(r);
    long long fib = 0;
    for (const auto& w : all) fib += group_fibers(w) == Fibering::Fibers;
    const double exact = static_cast<double>(fib) / static_cast<double>(all.size());
    auto rep = estimate_fiber_prob(r, 20000, 1);
    CHECK(std::abs(rep.fraction() - exact) < 0.015);
  }
}

TEST_CASE("commutator insertions force the kernel") {
  Rng rng(6);
  std::set<std::string> inputs, at_max, at_both;
  int tried = 0;
  while (tried < 3000) {
    Word r = sample_cyclically_reduced(1 + static_cast<int>(rng.below(80)), rng);
    auto e = exponent_sums(r);
    if (e.ea == 0 || e.eb == 0) continue;
    ++tried;
    const Phi phi = phi_orthogonal_to(e.ea, e.eb);
    Word x = insert_commutator_at_max(r);
    Word y = insert_at_min_and_max(r);
    CHECK(x.size() == r.size() + 4);
    CHECK(y.size() == r.size() + 8);
    CHECK(is_cyclically_reduced(x));
    CHECK(is_cyclically_reduced(y));
    CHECK(exponent_sums(x) == e);
    CHECK(exponent_sums(y) == e);
    CHECK(brown_fg(x, phi) == Kernel::NotFinitelyGenerated);
    CHECK(brown_fg(y, phi) == Kernel::FinitelyGenerated);
    if (inputs.insert(r.str()).second) {
      at_max.insert(x.str());
      at_both.insert(y.str());
    }
  }
  CHECK(at_max.size() == inputs.size());
  CHECK(at_both.size() == inputs.size());
}

TEST_CASE("insertions refuse relators outside the generic class") {
  CHECK_THROWS_AS(insert_commutator_at_max(Word::parse("abAB")), std::invalid_argument);
  CHECK_THROWS_AS(insert_at_min_and_max(Word::parse("abbA")), std::invalid_argument);
  CHECK_THROWS_AS(insert_commutator_at_max(Word::parse("abA")), std::invalid_argument);
}

TEST_CASE("bridges of length two always have a unique maximum") {
  CHECK(exact_bridge_unique_max(2, false) == 1.0);
  CHECK(simulate_bridge_unique_max(2, 1000, false, 1) == 1.0);
  CHECK(simulate_bridge_unique_max(2, 1000, true, 1) == 1.0);
}

TEST_CASE("short bridges match enumeration") {
  for (int L : {4, 6, 10, 16}) {
    for (bool momentum : {false, true}) {
      const double exact = exact_bridge_unique_max(L, momentum);
      const double sim = simulate_bridge_unique_max(L, 40000, momentum, 7);
      CHECK_MESSAGE(std::abs(sim - exact) < 0.012, "L=" << L << " momentum=" << momentum);
    }
  }
}

TEST_CASE("bridge simulation is shard independent") {
  CHECK(simulate_bridge_unique_max(100, 2000, true, 3, 1) == simulate_bridge_unique_max(100, 2000, true, 3, 4));
}
