#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiber/bigint.hpp"
#include "fiber/exchange.hpp"
#include "fiber/freewords.hpp"
#include "fiber/rng.hpp"

namespace fiber {

// Dehn-Thurston coordinates on the genus-2 surface cut along alpha, delta, beta.
struct DTCoords {
  BigInt w_alpha, w_delta, w_beta;
  BigInt theta_alpha, theta_delta, theta_beta;
  friend bool operator==(const DTCoords&, const DTCoords&) = default;
};

// Text form "wa,wd,wb:ta,td,tb".
DTCoords parse_dt(std::string_view text);
std::string to_text(const DTCoords& dt);

// Positive weights, 0 <= twist < weight, w_delta <= 2 min(w_alpha, w_beta), and w_delta even.
// Evenness is the integrality condition: each pair of pants then carries only
// delta-alpha and alpha-alpha arcs, h = w_delta / 2 of each delta-alpha kind.
bool validate(const DTCoords& dt);

struct CurveClass {
  BigInt components{0};
  bool separating = false;
  // Exponent sums of the relator; only meaningful for a connected curve.
  BigInt h1_a{0};
  BigInt h1_b{0};
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// Surface homology over Z/2: bit 0 alpha crossings, bit 1 beta crossings,
// bit 2 crossings with a dual of alpha, bit 3 crossings with a dual of beta.
namespace mod2 {
constexpr std::uint8_t kAlpha = 1, kBeta = 2, kAlphaDual = 4, kBetaDual = 8;
}

// Band label on a standard exchange: g^exponent for g = a or b (or the identity), with its Z/2 class.
struct GenPower {
  int generator = -1;  // 0 = a, 1 = b, -1 = identity
  BigInt exponent{0};
  std::uint8_t mod2 = 0;
};

struct StandardExchange {
  Exchange shape;                    // always tau0's combinatorics
  std::vector<BigInt> weights;       // per band, x I1 I2 I3 J3 J2 J1
  std::vector<GenPower> labels;      // read from each band's first end to its second
  // Closed curves inside one torus piece that never reach delta: (count, label).
  std::vector<std::pair<BigInt, GenPower>> loops;
};

StandardExchange build_standard_exchange(const DTCoords& dt);

// Instantiates a standard exchange in a label algebra through a map from generator powers.
template <class Alg, class F>
LabeledExchange<Alg> instantiate(const StandardExchange& s, F&& to_label, Alg alg = Alg{}) {
  std::vector<typename Alg::value_type> labels;
  for (const auto& g : s.labels) labels.push_back(to_label(g));
  auto x = LabeledExchange<Alg>::from_shape(s.shape, s.weights, std::move(labels), std::move(alg));
  for (const auto& [n, g] : s.loops)
    if (n > 0) x.loops.push_back({n, to_label(g)});
  return x;
}

Word word_of(const GenPower& g);
H1Class h1_of(const GenPower& g);

// Smallest x >= 0 with l <= a*x mod m <= r, for 0 <= l <= r < m.
std::optional<BigInt> min_multiple_in_range(BigInt a, const BigInt& m, const BigInt& l, const BigInt& r);

struct TracedCurve {
  std::vector<Word> words;            // one cyclic word per component
  std::vector<std::uint8_t> mod2;     // Z/2 class per component
};

// Strand-by-strand construction of the multicurve; requires total weight <= max_weight.
TracedCurve trace_curve(const DTCoords& dt, long long max_weight = 100000);
struct TraceResult {
  Word word;  // relator of the first component
  CurveClass cls;
};
TraceResult trace_word(const DTCoords& dt, long long max_weight = 100000);

// Components, separation and homology class by splitting the standard exchange.
CurveClass classify(const DTCoords& dt);

// Least rotation of the relator of a connected curve, by splitting with word labels.
Word word_of_curve(LabeledExchange<WordLabels> x);

// Uniform over valid coordinates with w_alpha + w_beta < r.
DTCoords sample_dt(const BigInt& r, Rng& rng);

}  // namespace fiber
