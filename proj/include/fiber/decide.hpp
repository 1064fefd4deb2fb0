#pragma once

#include <cstddef>

#include "fiber/bigint.hpp"
#include "fiber/dtcoords.hpp"

namespace fiber {

enum class Decision { Fibered, NonFibered, Indeterminate };

const char* to_string(Decision d);

struct DecideOptions {
  // Curves with zero class in H1 of the handlebody are reconstructed as words up to this
  // total weight and handed to the naive test; above it the answer is Indeterminate.
  BigInt fallback_max_weight{1000000};
};

struct DecideResult {
  Decision decision = Decision::Indeterminate;
  CurveClass cls;
  BigInt phi_a{0}, phi_b{0};   // the class killed by the relator; zero when indeterminate
  std::size_t split_events = 0;
  bool used_fallback = false;
  bool early_stop = false;
};

// Decides fibering for the handlebody bounded by a connected curve; throws std::invalid_argument
// for invalid coordinates or a multicurve with several components.
DecideResult decide_fibering_fast(const DTCoords& dt, const DecideOptions& opts = {});

// Same, for callers that already classified the curve.
DecideResult decide_fibering_fast(const DTCoords& dt, const CurveClass& cls, const DecideOptions& opts = {});

}  // namespace fiber
