#include "fiber/decide.hpp"

#include <algorithm>
#include <stdexcept>

#include "fiber/brown.hpp"
#include "fiber/labels.hpp"

namespace fiber {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Fibered: return "fibered";
    case Decision::NonFibered: return "nonfibered";
    case Decision::Indeterminate: return "indeterminate";
  }
  return "?";
}

DecideResult decide_fibering_fast(const DTCoords& dt, const DecideOptions& opts) {
  return decide_fibering_fast(dt, classify(dt), opts);
}

DecideResult decide_fibering_fast(const DTCoords& dt, const CurveClass& cls, const DecideOptions& opts) {
  if (cls.components != 1) throw std::invalid_argument("the multicurve is not connected");
  DecideResult res;
  res.cls = cls;
  const StandardExchange s = build_standard_exchange(dt);

  if (cls.h1_a == 0 && cls.h1_b == 0) {
    if (dt.w_alpha + dt.w_delta + dt.w_beta > opts.fallback_max_weight) return res;
    Word r = word_of_curve(instantiate<WordLabels>(s, word_of));
    res.used_fallback = true;
    res.decision = group_fibers(r) == Fibering::Fibers ? Decision::Fibered : Decision::NonFibered;
    return res;
  }

  const BigInt g = big_gcd(cls.h1_a, cls.h1_b);
  res.phi_a = cls.h1_b / g;
  res.phi_b = -cls.h1_a / g;
  const BigInt& va = res.phi_a;
  const BigInt& vb = res.phi_b;
  auto to_box = [&](const GenPower& p) {
    if (p.generator < 0 || p.exponent == 0) return BigBox{};
    Letter l = p.generator == 0 ? Letter::a() : Letter::b();
    if (p.exponent < 0) l = l.inverse();
    return pow(generator_bigbox(l, va, vb), abs(p.exponent));
  };
  auto x = instantiate<BigBoxLabels>(s, to_box);

  // Marked tops (or bottoms) survive every composition, so once all labels carry one the
  // final loop will too.
  auto all_marked = [&](auto marked) {
    for (const auto& r : x.top)
      if (!marked(x.bands[static_cast<std::size_t>(r.band)].label)) return false;
    for (const auto& r : x.bottom)
      if (!marked(x.bands[static_cast<std::size_t>(r.band)].label)) return false;
    return std::all_of(x.loops.begin(), x.loops.end(), [&](const auto& l) { return marked(l.label); });
  };
  auto stop_early = [&] {
    return all_marked([](const BigBox& b) { return marked_top(b); }) ||
           all_marked([](const BigBox& b) { return marked_bottom(b); });
  };

  x.prune();
  while (!x.top.empty()) {
    if (stop_early()) {
      res.early_stop = true;
      res.decision = Decision::NonFibered;
      return res;
    }
    x.split_batched();
    ++res.split_events;
    x.prune();
  }
  if (x.loops.size() != 1) throw std::logic_error("connected curve split into several loops");
  const BigBox& final_box = x.loops.front().label;
  res.decision = (marked_top(final_box) || marked_bottom(final_box)) ? Decision::NonFibered : Decision::Fibered;
  return res;
}

}  // namespace fiber
