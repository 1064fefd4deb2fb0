#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fiber/census.hpp"
#include "fiber/decide.hpp"
#include "fiber/dtcoords.hpp"
#include "fiber/experiment.hpp"
#include "fiber/randgroups.hpp"

using namespace fiber;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitIndeterminate = 3;

// Grid of exponents: "5", "2,5,14", "2:14" or "2:14:3".
std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> out;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    std::vector<int> parts;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ':');) parts.push_back(std::stoi(item));
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("grid range is lo:hi or lo:hi:step");
    const int step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0 || parts[0] > parts[1]) throw std::invalid_argument("bad grid range");
    for (int k = parts[0]; k <= parts[1]; k += step) out.push_back(k);
    return out;
  }
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(std::stoi(item));
  return out;
}

// CSV goes to --out when given, else to stdout; summaries go to whichever stream is free.
struct Sink {
  std::ofstream file;
  std::ostream* csv = &std::cout;
  std::ostream* notes = &std::cerr;
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    csv = &file;
    notes = &std::cout;
  }
};

int run_decide(const std::string& text, const BigInt& fallback_max) {
  DTCoords dt;
  try {
    dt = parse_dt(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  if (!validate(dt)) {
    std::cerr << "error: coordinates violate the weight, twist or parity conditions\n";
    return kExitInvalid;
  }
  const auto start = std::chrono::steady_clock::now();
  const CurveClass cls = classify(dt);
  if (cls.components != 1) {
    std::cerr << "error: the multicurve has " << cls.components << " components\n";
    return kExitInvalid;
  }
  DecideOptions opts;
  opts.fallback_max_weight = fallback_max;
  const DecideResult r = decide_fibering_fast(dt, cls, opts);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << "decision: " << to_string(r.decision) << '\n'
            << "separating: " << (cls.separating ? "yes" : "no") << '\n'
            << "class: (" << cls.h1_a << ", " << cls.h1_b << ")\n"
            << "phi: (" << r.phi_a << ", " << r.phi_b << ")\n"
            << "split_events: " << r.split_events << '\n'
            << "early_stop: " << (r.early_stop ? "yes" : "no") << '\n'
            << "fallback: " << (r.used_fallback ? "yes" : "no") << '\n';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  std::cout << "time_ms: " << buf << '\n';
  return r.decision == Decision::Indeterminate ? kExitIndeterminate : 0;
}

int run_laminations(const std::string& grid, std::uint64_t samples, std::uint64_t seed, unsigned shards,
                    const std::string& out, const BigInt& fallback_max) {
  Sink sink(out);
  DecideOptions opts;
  opts.fallback_max_weight = fallback_max;
  *sink.csv << lamination_csv_header() << '\n';
  std::vector<double> xs, ys;
  for (int k : parse_grid(grid)) {
    const LaminationCell c = sample_laminations(pow10(static_cast<unsigned>(k)), samples, seed, opts, shards);
    *sink.csv << to_csv_row(c) << '\n' << std::flush;
    xs.push_back(k);
    ys.push_back(c.fibered_fraction());
  }
  const DecayFit f = fit_log_decay(xs, ys);
  *sink.notes << "# fit log(fibered fraction) = " << f.intercept << " + " << f.slope << " * log10(r); R^2 = " << f.r_squared
              << " over " << f.points << " cells\n";
  return 0;
}

int run_groups(const std::string& lengths, std::uint64_t samples, std::uint64_t seed, unsigned shards,
               const std::string& out, bool commutator) {
  Sink sink(out);
  *sink.csv << group_csv_header() << '\n';
  for (int r : parse_grid(lengths)) {
    const GroupSampleReport g = commutator ? estimate_commutator_fiber_prob(r, samples, seed, shards)
                                           : estimate_fiber_prob(r, samples, seed, shards);
    *sink.csv << to_csv_row(g) << '\n' << std::flush;
  }
  return 0;
}

int run_census(const std::string& out) {
  const CensusGraph g = build_census(Symmetry::RelabelAndFlip);
  const auto s = sink(g);
  const auto t = g.find(tau0());
  const bool tau0_in_sink = t && std::binary_search(s.begin(), s.end(), *t);
  std::cout << g.nodes.size() << " complete, " << s.size() << " in sink, tau0 in sink: " << (tau0_in_sink ? "yes" : "no")
            << '\n';
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out);
    write_census(f, g);
  }
  return (g.nodes.size() == 201 && s.size() == 190 && tau0_in_sink) ? 0 : 1;
}

int run_verify(int max_sum, const BigInt& fallback_max, unsigned shards) {
  DecideOptions opts;
  opts.fallback_max_weight = fallback_max;
  const VerifySummary v = verify_small(max_sum, opts, shards);
  std::cout << "tuples: " << v.tuples << '\n'
            << "connected: " << v.connected << '\n'
            << "nonseparating: " << v.nonseparating << '\n'
            << "class mismatches: " << v.class_mismatches << '\n'
            << "word mismatches: " << v.word_mismatches << '\n'
            << "decision mismatches: " << v.decision_mismatches << '\n'
            << "fallback decisions: " << v.fallback << '\n'
            << "indeterminate: " << v.indeterminate << " (with nonzero class: " << v.indeterminate_nonzero_class << ")\n";
  for (const auto& f : v.failures) std::cout << "failure: " << f << '\n';
  std::cout << (v.ok() ? "all checks pass" : "CHECKS FAILED") << '\n';
  return v.ok() ? 0 : 1;
}

int run_walk(const std::string& letters) {
  // the literal letters are lifted, without free reduction
  long long x = 0, y = 0;
  std::cout << "x,y\n" << x << ',' << y << '\n';
  for (char ch : letters) {
    const Letter l = Letter::from_char(ch);
    (l.generator() == 0 ? x : y) += l.sign();
    std::cout << x << ',' << y << '\n';
  }
  return 0;
}

int run_bridge(int length, std::uint64_t samples, bool momentum, std::uint64_t seed, unsigned shards) {
  const double p = simulate_bridge_unique_max(length, samples, momentum, seed, shards);
  std::cout << "length,n,momentum,unique_max_fraction,seed\n"
            << length << ',' << samples << ',' << (momentum ? 1 : 0) << ',' << p << ',' << seed << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibering decisions and sampling experiments for genus-2 handlebody curves and one-relator groups"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
  unsigned shards = 1;
  std::string out;
  std::string fallback_text = "1000000";
  auto common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--samples", samples, "samples per cell")->check(CLI::PositiveNumber);
    sub->add_option("--shards", shards, "worker threads")->check(CLI::PositiveNumber);
    if (with_out) sub->add_option("--out", out, "output file (default stdout)");
  };

  std::string dt_text;
  auto* decide = app.add_subcommand("decide", "decide fibering for Dehn-Thurston coordinates wa,wd,wb:ta,td,tb");
  decide->add_option("coords", dt_text, "coordinates")->required();
  decide->add_option("--indeterminate-fallback-max", fallback_text, "largest total weight reconstructed as a word");

  std::string grid = "2:8";
  auto* lam = app.add_subcommand("sample-laminations", "fibered fraction of random curves per r = 10^k");
  common(lam, true);
  lam->add_option("--log10-r", grid, "exponents k: list a,b,c or range lo:hi[:step]");
  lam->add_option("--indeterminate-fallback-max", fallback_text, "largest total weight reconstructed as a word");

  std::string lengths = "1000";
  bool commutator = false;
  auto* groups = app.add_subcommand("sample-groups", "fibered fraction of random one-relator groups");
  common(groups, true);
  groups->add_option("--lengths", lengths, "relator lengths: list or range lo:hi[:step]");
  groups->add_flag("--commutator", commutator, "sample relators in the commutator subgroup");

  auto* census = app.add_subcommand("census", "enumerate complete genus-2 exchanges and the splitting sink");
  census->add_option("--out", out, "write canonical forms and edges here");

  int max_sum = 12;
  auto* verify = app.add_subcommand("verify", "exhaustive small-scale oracle suite");
  verify->add_option("max_sum", max_sum, "largest w_alpha + w_beta")->check(CLI::PositiveNumber);
  verify->add_option("--indeterminate-fallback-max", fallback_text, "largest total weight reconstructed as a word");
  verify->add_option("--shards", shards, "worker threads")->check(CLI::PositiveNumber);

  std::string word;
  auto* walk = app.add_subcommand("walk", "lattice points of the lifted word");
  walk->add_option("word", word, "letters a, A, b, B")->required();

  int length = 1000;
  bool momentum = false;
  auto* bridge = app.add_subcommand("bridge-sim", "unique-maximum frequency of random bridges");
  common(bridge, false);
  bridge->add_option("--length", length, "bridge length (even)");
  bridge->add_flag("--momentum", momentum, "continue with probability 2/3");

  CLI11_PARSE(app, argc, argv);

  try {
    const BigInt fallback_max = parse_bigint(fallback_text);
    if (*decide) return run_decide(dt_text, fallback_max);
    if (*lam) return run_laminations(grid, samples, seed, shards, out, fallback_max);
    if (*groups) return run_groups(lengths, samples, seed, shards, out, commutator);
    if (*census) return run_census(out);
    if (*verify) return run_verify(max_sum, fallback_max, shards);
    if (*walk) return run_walk(word);
    if (*bridge) return run_bridge(length, samples, momentum, seed, shards);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
