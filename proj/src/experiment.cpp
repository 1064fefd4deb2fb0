#include "fiber/experiment.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fiber/brown.hpp"
#include "fiber/parallel.hpp"

namespace fiber {

namespace {

struct CellTally {
  std::uint64_t curve = 0, fibered = 0, nonfibered = 0, indeterminate = 0;
  CellTally& operator+=(const CellTally& o) {
    curve += o.curve;
    fibered += o.fibered;
    nonfibered += o.nonfibered;
    indeterminate += o.indeterminate;
    return *this;
  }
};

// FNV-1a of the decimal form, so the stream of a cell depends only on r.
std::uint64_t stream_of(const BigInt& r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : to_string(r)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

double LaminationCell::curve_fraction() const {
  return n_total == 0 ? 0.0 : static_cast<double>(n_curve) / static_cast<double>(n_total);
}

double LaminationCell::fibered_fraction() const {
  const std::uint64_t decided = n_fibered + n_nonfibered;
  return decided == 0 ? 0.0 : static_cast<double>(n_fibered) / static_cast<double>(decided);
}

LaminationCell sample_laminations(const BigInt& r, std::uint64_t n, std::uint64_t seed, const DecideOptions& opts,
                                  unsigned shards) {
  const std::uint64_t stream = stream_of(r);
  CellTally t = sharded_sum<CellTally>(n, shards, [&](std::uint64_t i) {
    Rng rng(seed, stream, i);
    const DTCoords dt = sample_dt(r, rng);
    const CurveClass cls = classify(dt);
    CellTally one;
    if (cls.components != 1 || cls.separating) return one;
    one.curve = 1;
    switch (decide_fibering_fast(dt, cls, opts).decision) {
      case Decision::Fibered: one.fibered = 1; break;
      case Decision::NonFibered: one.nonfibered = 1; break;
      case Decision::Indeterminate: one.indeterminate = 1; break;
    }
    return one;
  });
  LaminationCell c;
  c.r = r;
  c.n_total = n;
  c.n_curve = t.curve;
  c.n_fibered = t.fibered;
  c.n_nonfibered = t.nonfibered;
  c.n_indeterminate = t.indeterminate;
  c.seed = seed;
  return c;
}

std::string lamination_csv_header() { return "r,n_total,n_curve,n_fibered,n_nonfibered,n_indeterminate,seed"; }

std::string to_csv_row(const LaminationCell& c) {
  return to_string(c.r) + "," + std::to_string(c.n_total) + "," + std::to_string(c.n_curve) + "," +
         std::to_string(c.n_fibered) + "," + std::to_string(c.n_nonfibered) + "," + std::to_string(c.n_indeterminate) +
         "," + std::to_string(c.seed);
}

std::string group_csv_header() { return "r,n,n_fibered,fraction,ci_low,ci_high,seed"; }

std::string to_csv_row(const GroupSampleReport& g) {
  return std::to_string(g.r) + "," + std::to_string(g.n) + "," + std::to_string(g.n_fibered) + "," +
         fixed(g.fraction()) + "," + fixed(g.ci_low()) + "," + fixed(g.ci_high()) + "," + std::to_string(g.seed);
}

DecayFit fit_log_decay(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit needs matching x and y");
  std::vector<double> xs, ls;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] > 0) {
      xs.push_back(x[i]);
      ls.push_back(std::log(y[i]));
    }
  DecayFit f;
  f.points = xs.size();
  if (f.points < 2) return f;
  const double m = static_cast<double>(f.points);
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ls[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ls[i] - my);
    syy += (ls[i] - my) * (ls[i] - my);
  }
  if (sxx == 0) return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

VerifySummary& VerifySummary::operator+=(const VerifySummary& o) {
  tuples += o.tuples;
  connected += o.connected;
  nonseparating += o.nonseparating;
  class_mismatches += o.class_mismatches;
  word_mismatches += o.word_mismatches;
  decision_mismatches += o.decision_mismatches;
  indeterminate += o.indeterminate;
  indeterminate_nonzero_class += o.indeterminate_nonzero_class;
  fallback += o.fallback;
  for (const auto& f : o.failures)
    if (failures.size() < 10) failures.push_back(f);
  return *this;
}

VerifySummary verify_one(const DTCoords& dt, const DecideOptions& opts) {
  VerifySummary v;
  v.tuples = 1;
  auto fail = [&](std::uint64_t& counter, const char* what) {
    ++counter;
    v.failures.push_back(to_text(dt) + ": " + what);
  };
  const TraceResult t = trace_word(dt);
  const CurveClass c = classify(dt);
  const bool same_sign = c.h1_a == t.cls.h1_a && c.h1_b == t.cls.h1_b;
  const bool flipped = c.h1_a == -t.cls.h1_a && c.h1_b == -t.cls.h1_b;
  if (c.components != t.cls.components ||
      (t.cls.components == 1 && (c.separating != t.cls.separating || !(same_sign || flipped)))) {
    fail(v.class_mismatches, "class");
    return v;
  }
  if (t.cls.components != 1) return v;
  ++v.connected;
  const Word traced = canonical_cyclic(cyclic_reduce(t.word).core);
  if (word_of_curve(instantiate<WordLabels>(build_standard_exchange(dt), word_of)) != traced)
    fail(v.word_mismatches, "word");
  if (t.cls.separating) return v;
  ++v.nonseparating;
  const DecideResult d = decide_fibering_fast(dt, c, opts);
  v.fallback += d.used_fallback;
  if (d.decision == Decision::Indeterminate) {
    ++v.indeterminate;
    if (c.h1_a != 0 || c.h1_b != 0) fail(v.indeterminate_nonzero_class, "indeterminate with nonzero class");
    return v;
  }
  const bool fibers = group_fibers(traced) == Fibering::Fibers;
  if (fibers != (d.decision == Decision::Fibered)) fail(v.decision_mismatches, "decision");
  return v;
}

VerifySummary verify_small(int max_sum, const DecideOptions& opts, unsigned shards) {
  // one unit of work per weight triple; twists are enumerated inside
  std::vector<std::array<long long, 3>> weights;
  for (long long wa = 1; wa < max_sum; ++wa)
    for (long long wb = 1; wa + wb <= max_sum; ++wb)
      for (long long wd = 2; wd <= 2 * std::min(wa, wb); wd += 2) weights.push_back({wa, wd, wb});
  return sharded_sum<VerifySummary>(weights.size(), shards, [&](std::uint64_t i) {
    const auto [wa, wd, wb] = weights[i];
    VerifySummary v;
    for (long long ta = 0; ta < wa; ++ta)
      for (long long tb = 0; tb < wb; ++tb)
        for (long long td = 0; td < wd; ++td)
          v += verify_one({from_i64(wa), from_i64(wd), from_i64(wb), from_i64(ta), from_i64(td), from_i64(tb)}, opts);
    return v;
  });
}

}  // namespace fiber
