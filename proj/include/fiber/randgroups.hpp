#pragma once

#include <cstdint>

#include "fiber/bigint.hpp"
#include "fiber/freewords.hpp"
#include "fiber/rng.hpp"

namespace fiber {

// Uniform over freely reduced words of length r.
Word sample_reduced(int r, Rng& rng);
// Uniform over cyclically reduced words of length r >= 1, by rejection.
Word sample_cyclically_reduced(int r, Rng& rng);
// Uniform over cyclically reduced words of even length r with zero exponent sums, by rejection.
Word sample_commutator_relator(int r, Rng& rng);

// Number of cyclically reduced words of length r >= 1, by a transfer matrix over letters.
BigInt count_census(int r);

struct GroupSampleReport {
  int r = 0;
  std::uint64_t n = 0;
  std::uint64_t n_fibered = 0;
  std::uint64_t n_nonfibered = 0;
  std::uint64_t seed = 0;

  double fraction() const { return n == 0 ? 0.0 : static_cast<double>(n_fibered) / static_cast<double>(n); }
  // 95% Wilson score interval.
  double ci_low() const;
  double ci_high() const;
};

// Sample i uses the stream (seed, r, i), so reports do not depend on the shard count.
GroupSampleReport estimate_fiber_prob(int r, std::uint64_t n, std::uint64_t seed, unsigned shards = 1);
// Same over relators in the commutator subgroup.
GroupSampleReport estimate_commutator_fiber_prob(int r, std::uint64_t n, std::uint64_t seed, unsigned shards = 1);

// Both require a cyclically reduced relator whose exponent sums are both nonzero, and keep
// those sums. The first inserts a commutator that revisits the first global maximum of the
// walk under phi; the second inserts commutators that create a new unique maximum and
// minimum.
Word insert_commutator_at_max(const Word& r);
Word insert_at_min_and_max(const Word& r);

// Fraction of n random +-1 bridges of even length whose maximum is attained once (positions
// taken cyclically). The momentum walk continues in its direction with probability 2/3.
double simulate_bridge_unique_max(int length, std::uint64_t n, bool momentum, std::uint64_t seed,
                                  unsigned shards = 1);

}  // namespace fiber
