#include "fiber/dtcoords.hpp"

#include <sstream>
#include <stdexcept>

namespace fiber {

DTCoords parse_dt(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("coordinates need the form wa,wd,wb:ta,td,tb");
  auto triple = [](const std::string& part) {
    std::vector<BigInt> v;
    std::stringstream in(part);
    for (std::string item; std::getline(in, item, ',');) v.push_back(parse_bigint(item));
    if (v.size() != 3) throw std::invalid_argument("expected three comma-separated integers");
    return v;
  };
  auto w = triple(s.substr(0, colon));
  auto t = triple(s.substr(colon + 1));
  return {w[0], w[1], w[2], t[0], t[1], t[2]};
}

std::string to_text(const DTCoords& dt) {
  return to_string(dt.w_alpha) + "," + to_string(dt.w_delta) + "," + to_string(dt.w_beta) + ":" +
         to_string(dt.theta_alpha) + "," + to_string(dt.theta_delta) + "," + to_string(dt.theta_beta);
}

bool validate(const DTCoords& dt) {
  for (const BigInt* w : {&dt.w_alpha, &dt.w_delta, &dt.w_beta})
    if (*w <= 0) return false;
  if (dt.theta_alpha < 0 || dt.theta_alpha >= dt.w_alpha) return false;
  if (dt.theta_delta < 0 || dt.theta_delta >= dt.w_delta) return false;
  if (dt.theta_beta < 0 || dt.theta_beta >= dt.w_beta) return false;
  if (dt.w_delta > 2 * dt.w_alpha || dt.w_delta > 2 * dt.w_beta) return false;
  return mpz_even_p(dt.w_delta.get_mpz_t()) != 0;
}

std::optional<BigInt> min_multiple_in_range(BigInt a, const BigInt& m, const BigInt& l, const BigInt& r) {
  // Euclid-style descent: reduce to the same question modulo a.
  if (l > r) return std::nullopt;
  if (l == 0) return BigInt(0);
  a = mod_pos(a, m);
  if (a == 0) return std::nullopt;
  BigInt k = ceil_div(l, a);
  if (a * k <= r) return k;
  auto y = min_multiple_in_range(mod_pos(m, a), a, mod_pos(-r, a), mod_pos(-l, a));
  if (!y) return std::nullopt;
  BigInt x = ceil_div(l + m * *y, a);
  if (a * x - m * *y <= r) return x;
  return std::nullopt;
}

namespace {

// First return of strands entering a one-holed torus: the rotation j -> j + s on Z/w,
// restricted to the h entry positions [0, h), splits them into three families.
struct TorusFamilies {
  BigInt size[3];
  BigInt time[3];   // crossings of the torus's meridian
  BigInt wraps[3];  // crossings of its dual
  BigInt loops;     // closed orbits missing [0, h)
  BigInt loop_time;
  BigInt loop_wraps;
};

TorusFamilies torus_families(const BigInt& w, const BigInt& s, const BigInt& h) {
  TorusFamilies f;
  const BigInt g = s == 0 ? w : big_gcd(s, w);
  const BigInt cycle = w / g;
  auto n1o = min_multiple_in_range(s, w, BigInt(1), BigInt(h - 1));
  const BigInt n1 = n1o ? std::min(*n1o, cycle) : cycle;
  const BigInt p = mod_pos(n1 * s, w);
  auto n2o = min_multiple_in_range(s, w, BigInt(w - h + 1), BigInt(w - 1));
  if (n2o) {
    const BigInt& n2 = *n2o;
    const BigInt q = w - mod_pos(n2 * s, w);
    f.size[0] = h - p;
    f.size[1] = q - h + p;
    f.size[2] = h - q;
    f.time[0] = n1;
    f.time[1] = n1 + n2;
    f.time[2] = n2;
    f.wraps[0] = (n1 * s - p) / w;
    f.wraps[1] = ((n1 + n2) * s - p + q) / w;
    f.wraps[2] = (n2 * s + q) / w;
  } else {
    // every entry returns after a full cycle; the two empty families keep nonzero exponents
    f.size[0] = h;
    f.size[1] = 0;
    f.size[2] = 0;
    f.time[0] = n1;
    f.time[1] = n1 + 1;
    f.time[2] = 1;
    f.wraps[0] = (n1 * s - p) / w;
    f.wraps[1] = 0;
    f.wraps[2] = 0;
  }
  f.loops = g > h ? BigInt(g - h) : BigInt(0);
  f.loop_time = cycle;
  f.loop_wraps = s / g;
  return f;
}

std::uint8_t parity_bits(const BigInt& time, const BigInt& wraps, std::uint8_t time_bit, std::uint8_t wrap_bit) {
  std::uint8_t m = 0;
  if (mpz_odd_p(time.get_mpz_t())) m |= time_bit;
  if (mpz_odd_p(wraps.get_mpz_t())) m |= wrap_bit;
  return m;
}

}  // namespace

StandardExchange build_standard_exchange(const DTCoords& dt) {
  if (!validate(dt)) throw std::invalid_argument("invalid Dehn-Thurston coordinates");
  const BigInt h = dt.w_delta / 2;
  const auto fa = torus_families(dt.w_alpha, dt.theta_alpha, h);
  const auto fb = torus_families(dt.w_beta, dt.theta_beta, h);

  StandardExchange s;
  s.shape = tau0();
  // top: x, then the alpha families I1 I2 I3 as entries and again as exits;
  // bottom: the beta families J3 J2 J1 as exits, then as entries, then x.
  s.weights.push_back(dt.theta_delta);
  s.labels.push_back({-1, BigInt(0), 0});
  for (int k = 0; k < 3; ++k) {
    s.weights.push_back(fa.size[k]);
    s.labels.push_back({0, fa.time[k], parity_bits(fa.time[k], fa.wraps[k], mod2::kAlpha, mod2::kAlphaDual)});
  }
  for (int k = 2; k >= 0; --k) {
    s.weights.push_back(fb.size[k]);
    // first end is the exit, so the entry-to-exit power is read backwards
    s.labels.push_back({1, BigInt(-fb.time[k]), parity_bits(fb.time[k], fb.wraps[k], mod2::kBeta, mod2::kBetaDual)});
  }
  s.loops.push_back({fa.loops, {0, fa.loop_time, parity_bits(fa.loop_time, fa.loop_wraps, mod2::kAlpha, mod2::kAlphaDual)}});
  s.loops.push_back({fb.loops, {1, fb.loop_time, parity_bits(fb.loop_time, fb.loop_wraps, mod2::kBeta, mod2::kBetaDual)}});
  return s;
}

Word word_of(const GenPower& g) {
  if (g.generator < 0 || g.exponent == 0) return {};
  Letter l = g.generator == 0 ? Letter::a() : Letter::b();
  if (g.exponent < 0) l = l.inverse();
  const long n = to_i64(abs(g.exponent));
  std::vector<Letter> ls(static_cast<std::size_t>(n), l);
  return Word(ls);
}

H1Class h1_of(const GenPower& g) {
  if (g.generator == 0) return {g.exponent, BigInt(0)};
  if (g.generator == 1) return {BigInt(0), g.exponent};
  return {BigInt(0), BigInt(0)};
}

TracedCurve trace_curve(const DTCoords& dt, long long max_weight) {
  if (!validate(dt)) throw std::invalid_argument("invalid Dehn-Thurston coordinates");
  if (dt.w_alpha + dt.w_delta + dt.w_beta > from_i64(max_weight)) throw std::invalid_argument("weights too large to trace");
  const long long wa = to_i64(dt.w_alpha), wd = to_i64(dt.w_delta), wb = to_i64(dt.w_beta);
  const long long ta = to_i64(dt.theta_alpha), td = to_i64(dt.theta_delta), tb = to_i64(dt.theta_beta);
  const long long h = wd / 2;

  // Points where the curve meets the pants boundaries. Each pair of pants has an outer
  // boundary (delta) and two inner ones (the sides L, R of alpha or beta).
  struct Pants {
    long long d, l, r, w, theta;
  };
  const Pants pa{0, wd, wd + wa, wa, ta};
  const long long base = wd + 2 * wa;
  const Pants pb{base, base + wd, base + wd + wb, wb, tb};
  const long long n = base + wd + 2 * wb;

  std::vector<long long> arc(static_cast<std::size_t>(n)), glue(static_cast<std::size_t>(n));
  // letter emitted when crossing a glue edge from this point, 0 for none
  std::vector<char> letter(static_cast<std::size_t>(n), 0);
  std::vector<bool> dual(static_cast<std::size_t>(n), false);
  auto link = [](std::vector<long long>& v, long long x, long long y) {
    v[static_cast<std::size_t>(x)] = y;
    v[static_cast<std::size_t>(y)] = x;
  };
  for (const auto& [P, fwd, back] : {std::tuple{pa, 'a', 'A'}, std::tuple{pb, 'b', 'B'}}) {
    for (long long q = 0; q < h; ++q) {
      link(arc, P.d + q, P.l + h - 1 - q);
      link(arc, P.d + h + q, P.r + h - 1 - q);
    }
    for (long long m = 0; m < P.w - h; ++m) link(arc, P.l + h + m, P.r + P.w - 1 - m);
    for (long long p = 0; p < P.w; ++p) {
      long long j = ((P.theta + h - 1 - p) % P.w + P.w) % P.w;
      link(glue, P.l + p, P.r + j);
      letter[static_cast<std::size_t>(P.l + p)] = fwd;
      letter[static_cast<std::size_t>(P.r + j)] = back;
      dual[static_cast<std::size_t>(P.l + p)] = dual[static_cast<std::size_t>(P.r + j)] = j < P.theta;
    }
  }
  for (long long p = 0; p < wd; ++p) link(glue, pa.d + p, pb.d + ((wd - 1 - td - p) % wd + wd) % wd);

  TracedCurve out;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (long long start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Letter> ls;
    long long counts[4] = {0, 0, 0, 0};
    long long cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      long long q = arc[static_cast<std::size_t>(cur)];
      seen[static_cast<std::size_t>(q)] = true;
      if (char c = letter[static_cast<std::size_t>(q)]) {
        Letter l = Letter::from_char(c);
        ls.push_back(l);
        ++counts[l.generator()];
        if (dual[static_cast<std::size_t>(q)]) ++counts[2 + l.generator()];
      }
      cur = glue[static_cast<std::size_t>(q)];
    } while (cur != start);
    std::uint8_t m = 0;
    if (counts[0] & 1) m |= mod2::kAlpha;
    if (counts[1] & 1) m |= mod2::kBeta;
    if (counts[2] & 1) m |= mod2::kAlphaDual;
    if (counts[3] & 1) m |= mod2::kBetaDual;
    out.words.emplace_back(ls);
    out.mod2.push_back(m);
  }
  return out;
}

TraceResult trace_word(const DTCoords& dt, long long max_weight) {
  TracedCurve c = trace_curve(dt, max_weight);
  TraceResult r;
  r.word = c.words.front();
  r.cls.components = static_cast<unsigned long>(c.words.size());
  if (c.words.size() == 1) {
    r.cls.separating = c.mod2.front() == 0;
    auto e = exponent_sums(r.word);
    r.cls.h1_a = from_i64(e.ea);
    r.cls.h1_b = from_i64(e.eb);
  }
  return r;
}

CurveClass classify(const DTCoords& dt) {
  using Alg = ProductLabels<H1Labels, Mod2Labels>;
  auto x = instantiate<Alg>(build_standard_exchange(dt), [](const GenPower& g) {
    return Alg::value_type{h1_of(g), g.mod2};
  });
  auto loops = x.run_to_loops();
  CurveClass c;
  for (const auto& l : loops) c.components += l.weight;
  if (c.components == 1) {
    const auto& [h1, m] = loops.front().label;
    c.separating = m == 0;
    c.h1_a = h1.a;
    c.h1_b = h1.b;
  }
  return c;
}

Word word_of_curve(LabeledExchange<WordLabels> x) {
  auto loops = x.run_to_loops();
  BigInt total = 0;
  for (const auto& l : loops) total += l.weight;
  if (total != 1) throw std::invalid_argument("carried multicurve is not connected");
  return canonical_cyclic(cyclic_reduce(loops.front().label).core);
}

DTCoords sample_dt(const BigInt& r, Rng& rng) {
  if (r < 2) throw std::invalid_argument("sampling needs r >= 2");
  const BigInt wmax = r - 1;
  for (;;) {
    // uniform over the bounding box, rejecting as early as possible
    DTCoords dt;
    dt.w_alpha = rng.below(wmax) + 1;
    dt.w_beta = rng.below(wmax) + 1;
    if (dt.w_alpha + dt.w_beta >= r) continue;
    dt.theta_alpha = rng.below(wmax);
    if (dt.theta_alpha >= dt.w_alpha) continue;
    dt.theta_beta = rng.below(wmax);
    if (dt.theta_beta >= dt.w_beta) continue;
    dt.w_delta = rng.below(BigInt(2 * wmax)) + 1;
    if (!mpz_even_p(dt.w_delta.get_mpz_t()) || dt.w_delta > 2 * dt.w_alpha || dt.w_delta > 2 * dt.w_beta) continue;
    dt.theta_delta = rng.below(BigInt(2 * wmax));
    if (dt.theta_delta >= dt.w_delta) continue;
    return dt;
  }
}

}  // namespace fiber
