#include "fiber/randgroups.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "fiber/brown.hpp"
#include "fiber/parallel.hpp"

namespace fiber {

namespace {

// Stream tags keep the experiments' random streams apart.
constexpr std::uint64_t kGroupStream = 0x67726f7570ULL;
constexpr std::uint64_t kCommutatorStream = 0x636f6d6dULL;
constexpr std::uint64_t kBridgeStream = 0x627269646765ULL;

struct Tally {
  std::uint64_t fibered = 0, total = 0;
  Tally& operator+=(const Tally& o) {
    fibered += o.fibered;
    total += o.total;
    return *this;
  }
};

GroupSampleReport tally_report(int r, std::uint64_t n, std::uint64_t seed, const Tally& t) {
  GroupSampleReport rep;
  rep.r = r;
  rep.n = n;
  rep.seed = seed;
  rep.n_fibered = t.fibered;
  rep.n_nonfibered = t.total - t.fibered;
  return rep;
}

double wilson(double p, double n, double sign) {
  if (n == 0) return sign < 0 ? 0.0 : 1.0;
  const double z = 1.959963984540054;
  const double denom = 1 + z * z / n;
  const double centre = p + z * z / (2 * n);
  const double spread = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
  return (centre + sign * spread) / denom;
}

std::vector<long long> heights(const Word& r, const Phi& phi) {
  std::vector<long long> h{0};
  for (Letter l : r) h.push_back(h.back() + phi(l));
  h.pop_back();  // positions are cyclic, the last one repeats the first
  return h;
}

Phi relator_phi(const Word& r) {
  if (r.empty() || !is_cyclically_reduced(r)) throw std::invalid_argument("relator must be cyclically reduced");
  auto e = exponent_sums(r);
  if (e.ea == 0 || e.eb == 0) throw std::invalid_argument("both exponent sums must be nonzero");
  return phi_orthogonal_to(e.ea, e.eb);
}

Letter rising(int generator, const Phi& phi) {
  Letter l = generator == 0 ? Letter::a() : Letter::b();
  return phi(l) > 0 ? l : l.inverse();
}

Word splice(const Word& r, std::size_t at, const Word& piece) {
  std::vector<Letter> ls(r.begin(), r.begin() + static_cast<long>(at));
  ls.insert(ls.end(), piece.begin(), piece.end());
  ls.insert(ls.end(), r.begin() + static_cast<long>(at), r.end());
  return Word(ls);
}

Word commutator(Letter x, Letter y) {
  const std::array<Letter, 4> ls{x, y, x.inverse(), y.inverse()};
  return Word(ls);
}

}  // namespace

Word sample_reduced(int r, Rng& rng) {
  if (r < 0) throw std::invalid_argument("negative word length");
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    if (ls.empty()) {
      ls.push_back(Letter::from_code(static_cast<int>(rng.below(4))));
    } else {
      // three continuations, skipping the inverse of the previous letter
      Letter bad = ls.back().inverse();
      int c = static_cast<int>(rng.below(3));
      if (c >= bad.code()) ++c;
      ls.push_back(Letter::from_code(c));
    }
  }
  return Word(ls);
}

Word sample_cyclically_reduced(int r, Rng& rng) {
  if (r < 1) throw std::invalid_argument("relator length must be positive");
  for (;;) {
    Word w = sample_reduced(r, rng);
    if (is_cyclically_reduced(w)) return w;
  }
}

Word sample_commutator_relator(int r, Rng& rng) {
  if (r < 2 || r % 2 != 0) throw std::invalid_argument("commutator relators have even length");
  for (;;) {
    Word w = sample_cyclically_reduced(r, rng);
    if (exponent_sums(w) == ExponentSums{0, 0}) return w;
  }
}

BigInt count_census(int r) {
  if (r < 1) throw std::invalid_argument("relator length must be positive");
  using Matrix = std::array<std::array<BigInt, 4>, 4>;
  auto mul = [](const Matrix& x, const Matrix& y) {
    Matrix z;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        z[i][j] = 0;
        for (int k = 0; k < 4; ++k) z[i][j] += x[i][k] * y[k][j];
      }
    return z;
  };
  Matrix step, acc;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      step[i][j] = Letter::from_code(j) == Letter::from_code(i).inverse() ? 0 : 1;
      acc[i][j] = i == j ? 1 : 0;
    }
  // closed walks of length r: every adjacent pair, including the wrap, is reduced
  for (int e = r; e > 0; e >>= 1) {
    if (e & 1) acc = mul(acc, step);
    step = mul(step, step);
  }
  return acc[0][0] + acc[1][1] + acc[2][2] + acc[3][3];
}

double GroupSampleReport::ci_low() const { return wilson(fraction(), static_cast<double>(n), -1); }
double GroupSampleReport::ci_high() const { return wilson(fraction(), static_cast<double>(n), +1); }

GroupSampleReport estimate_fiber_prob(int r, std::uint64_t n, std::uint64_t seed, unsigned shards) {
  Tally t = sharded_sum<Tally>(n, shards, [&](std::uint64_t i) {
    Rng rng(seed, kGroupStream + static_cast<std::uint64_t>(r), i);
    Word w = sample_cyclically_reduced(r, rng);
    return Tally{group_fibers(w) == Fibering::Fibers ? 1u : 0u, 1};
  });
  return tally_report(r, n, seed, t);
}

GroupSampleReport estimate_commutator_fiber_prob(int r, std::uint64_t n, std::uint64_t seed, unsigned shards) {
  Tally t = sharded_sum<Tally>(n, shards, [&](std::uint64_t i) {
    Rng rng(seed, kCommutatorStream + static_cast<std::uint64_t>(r), i);
    Word w = sample_commutator_relator(r, rng);
    return Tally{group_fibers(w) == Fibering::Fibers ? 1u : 0u, 1};
  });
  return tally_report(r, n, seed, t);
}

Word insert_commutator_at_max(const Word& r) {
  const Phi phi = relator_phi(r);
  const auto h = heights(r, phi);
  const auto at = static_cast<std::size_t>(std::max_element(h.begin(), h.end()) - h.begin());
  // y descends from the maximum and z descends further; y z y^-1 z^-1 climbs back to it
  const Letter y = r[at];
  const Letter z = rising(1 - y.generator(), phi).inverse();
  return splice(r, at, commutator(y, z));
}

Word insert_at_min_and_max(const Word& r) {
  const Phi phi = relator_phi(r);
  const auto h = heights(r, phi);
  const auto top = static_cast<std::size_t>(std::max_element(h.begin(), h.end()) - h.begin());
  const auto bottom = static_cast<std::size_t>(std::min_element(h.begin(), h.end()) - h.begin());
  const Letter up_a = rising(0, phi), up_b = rising(1, phi);
  // a peak above the old maximum and a pit below the old minimum, each visited once
  const Word peak = commutator(up_a, up_b);
  const Word pit = commutator(up_a.inverse(), up_b.inverse());
  if (top > bottom) return splice(splice(r, top, peak), bottom, pit);
  return splice(splice(r, bottom, pit), top, peak);
}

namespace {

// 64 independent bits that are each set with probability exactly 1/3: a lane reads two fair
// bits, 00 means set, 01 and 10 mean clear, and 11 is redrawn.
std::uint64_t third_bits(Rng& rng) {
  std::uint64_t set = 0, pending = ~std::uint64_t{0};
  while (pending) {
    const std::uint64_t u = rng(), v = rng();
    set |= pending & ~u & ~v;
    pending &= u & v;
  }
  return set;
}

// Prefix parity within a word: bit j becomes the xor of bits 0..j.
std::uint64_t prefix_xor(std::uint64_t x) {
  for (int s = 1; s < 64; s <<= 1) x ^= x << s;
  return x;
}

}  // namespace

double simulate_bridge_unique_max(int length, std::uint64_t n, bool momentum, std::uint64_t seed, unsigned shards) {
  if (length < 2 || length % 2 != 0) throw std::invalid_argument("bridge length must be even and at least 2");
  const std::size_t L = static_cast<std::size_t>(length);
  const std::size_t words = (L + 63) / 64;
  const std::uint64_t tail = L % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (L % 64)) - 1;
  // bit k of the step words is set when step k goes up
  auto unique_max = [L](const std::vector<std::uint64_t>& up) {
    long long x = 0, best = 0, hits = 1;
    for (std::size_t k = 0; k + 1 < L; ++k) {
      x += (up[k / 64] >> (k % 64)) & 1 ? 1 : -1;
      if (x > best) {
        best = x;
        hits = 1;
      } else if (x == best) {
        ++hits;
      }
    }
    return hits == 1;
  };
  const std::uint64_t hits = sharded_sum<std::uint64_t>(n, shards, [&](std::uint64_t i) -> std::uint64_t {
    Rng rng(seed, kBridgeStream + (momentum ? 1 : 0), i);
    std::vector<std::uint64_t> up(words);
    for (;;) {
      std::size_t ups = 0;
      if (!momentum) {
        for (std::size_t w = 0; w < words; ++w) up[w] = rng();
      } else {
        // a step turns with probability 1/3; the first step is a fair coin (turning from "up")
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t turns = third_bits(rng);
          if (w == 0) turns = (turns & ~std::uint64_t{1}) | (rng() & 1);
          const std::uint64_t parity = prefix_xor(turns) ^ carry;
          carry = (parity >> 63) & 1 ? ~std::uint64_t{0} : 0;
          up[w] = ~parity;
        }
      }
      up[words - 1] &= tail;
      for (std::uint64_t w : up) ups += static_cast<std::size_t>(std::popcount(w));
      if (2 * ups == L) return unique_max(up) ? 1 : 0;
    }
  });
  return static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace fiber
