#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiber/bigint.hpp"
#include "fiber/decide.hpp"
#include "fiber/randgroups.hpp"

namespace fiber {

// One cell of the lamination experiment: n_total coordinate samples with w_alpha + w_beta < r,
// of which n_curve are connected non-separating curves, each decided.
struct LaminationCell {
  BigInt r{0};
  std::uint64_t n_total = 0;
  std::uint64_t n_curve = 0;
  std::uint64_t n_fibered = 0;
  std::uint64_t n_nonfibered = 0;
  std::uint64_t n_indeterminate = 0;
  std::uint64_t seed = 0;

  double curve_fraction() const;
  // Among decided curves.
  double fibered_fraction() const;
};

// Sample i draws from the stream (seed, r, i), so cells do not depend on the shard count.
LaminationCell sample_laminations(const BigInt& r, std::uint64_t n, std::uint64_t seed, const DecideOptions& opts = {},
                                  unsigned shards = 1);

std::string lamination_csv_header();
std::string to_csv_row(const LaminationCell& c);
std::string group_csv_header();
std::string to_csv_row(const GroupSampleReport& g);

// Least-squares line through (x, log y), skipping points with y <= 0.
struct DecayFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  std::size_t points = 0;
};
DecayFit fit_log_decay(const std::vector<double>& x, const std::vector<double>& y);

// Exhaustive small-scale cross-check over every valid coordinate tuple with
// w_alpha + w_beta <= max_sum: splitting against the tracer (components, separation, class,
// relator word) and the fast decision against the naive test on the traced word.
struct VerifySummary {
  std::uint64_t tuples = 0;
  std::uint64_t connected = 0;
  std::uint64_t nonseparating = 0;
  std::uint64_t class_mismatches = 0;
  std::uint64_t word_mismatches = 0;
  std::uint64_t decision_mismatches = 0;
  std::uint64_t indeterminate = 0;
  std::uint64_t indeterminate_nonzero_class = 0;
  std::uint64_t fallback = 0;
  std::vector<std::string> failures;  // first few failing coordinates

  bool ok() const {
    return class_mismatches == 0 && word_mismatches == 0 && decision_mismatches == 0 && indeterminate_nonzero_class == 0;
  }
  VerifySummary& operator+=(const VerifySummary& o);
};
VerifySummary verify_small(int max_sum, const DecideOptions& opts = {}, unsigned shards = 1);
// The same checks on one tuple.
VerifySummary verify_one(const DTCoords& dt, const DecideOptions& opts = {});

}  // namespace fiber
