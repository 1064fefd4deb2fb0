#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fiber/bigint.hpp"
#include "fiber/labels.hpp"

namespace fiber {

// Combinatorics of a one-switch interval exchange: band ids along the top and the bottom of
// the switch, left to right. Every band id occurs exactly twice in total.
struct Exchange {
  std::vector<int> top;
  std::vector<int> bottom;

  int band_count() const;
  friend bool operator==(const Exchange&, const Exchange&) = default;
  friend auto operator<=>(const Exchange&, const Exchange&) = default;
};

// Text form "top: 1 2 3 | bottom: 3 2 1" with 1-based band names.
Exchange parse_exchange(std::string_view text);
std::string to_text(const Exchange& e);

// Reversing bands on both sides or on neither.
bool is_recurrent(const Exchange& e);
// Cusp count of each complementary region, with the two ends of the switch smoothed.
std::vector<int> region_cusps(const Exchange& e);
bool is_complete(const Exchange& e);

// The exchange (1 2 3 4 2 3 4)/(5 6 7 5 6 7 1), bands x a b c d e f as ids 0..6.
Exchange tau0();

enum class Critical { TopWins, BottomWins };
// Generic split of the combinatorics: the winning band survives at its critical end and the
// loser's end moves next to the winner's other end. Band ids are preserved.
Exchange split_shape(const Exchange& e, Critical which);

struct EndRef {
  int band = -1;
  int end = 0;  // 0 or 1; a band's label reads from end 0 to end 1
  friend bool operator==(const EndRef&, const EndRef&) = default;
};

enum class SplitKind { TopWins, BottomWins, Amalgamate, Loop };

struct SplitEvent {
  SplitKind kind = SplitKind::TopWins;
  int winner = -1;
  // Losing bands in the order they were split; repeated `count` times for a batched event.
  std::vector<int> losers;
  BigInt count{1};
};

// One elementary split, as recorded by expanding batched events.
struct StepRecord {
  SplitKind kind;
  int winner;
  int loser;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};
std::vector<StepRecord> expand(const SplitEvent& ev);

template <class Alg>
struct Loop {
  BigInt weight;
  typename Alg::value_type label;
};

template <class Alg>
class LabeledExchange {
 public:
  using Label = typename Alg::value_type;

  struct Band {
    BigInt weight;
    Label label;
    bool alive = true;
  };

  LabeledExchange() = default;
  explicit LabeledExchange(Alg alg) : alg_(std::move(alg)) {}

  // Builds from combinatorics: end 0 of each band is its first occurrence reading the top then the bottom.
  static LabeledExchange from_shape(const Exchange& e, std::vector<BigInt> weights, std::vector<Label> labels,
                                    Alg alg = Alg{});

  std::vector<EndRef> top;
  std::vector<EndRef> bottom;
  std::vector<Band> bands;
  std::vector<Loop<Alg>> loops;

  const Alg& algebra() const { return alg_; }
  bool empty() const { return top.empty() && bottom.empty(); }
  std::size_t live_bands() const;
  Exchange shape() const;
  bool switch_condition() const;
  BigInt loop_weight() const;

  // Removes every band of weight zero.
  void prune();
  SplitEvent split_step();
  SplitEvent split_batched();
  std::vector<Loop<Alg>> run_to_loops(std::vector<SplitEvent>* trace = nullptr);

  // Label read when crossing the band from the given end to the other one.
  Label traverse_from(EndRef from) const {
    const Label& l = bands[from.band].label;
    return from.end == 0 ? l : alg_.inv(l);
  }

 private:
  struct Pos {
    bool top;
    std::size_t index;
  };
  std::vector<EndRef>& side(bool is_top) { return is_top ? top : bottom; }
  Pos locate(EndRef r) const;
  EndRef other(EndRef r) const { return {r.band, 1 - r.end}; }
  void set_end(EndRef old_ref, EndRef new_ref);
  void absorb(bool winner_on_top);
  bool batch(bool winner_on_top, SplitEvent& ev);

  Alg alg_{};
};

// Checks that six splits of tau0 in which x beats the top critical band return tau0 with
// a, b, c conjugated by x and d, e, f, x unchanged. Symbols are encoded as a^i b a^-i in F(a, b).
bool verify_stable_split_labels();
// Number of complete six-step rounds (at most max_rounds) in which x wins every split.
int stable_split_rounds(const std::vector<BigInt>& weights, int max_rounds);

// ---- implementation ----

template <class Alg>
LabeledExchange<Alg> LabeledExchange<Alg>::from_shape(const Exchange& e, std::vector<BigInt> weights,
                                                     std::vector<Label> labels, Alg alg) {
  const int n = e.band_count();
  if (weights.size() != static_cast<std::size_t>(n) || labels.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("weights and labels must match the band count");
  LabeledExchange x(std::move(alg));
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int id : e.top) x.top.push_back({id, seen[static_cast<std::size_t>(id)]++});
  for (int id : e.bottom) x.bottom.push_back({id, seen[static_cast<std::size_t>(id)]++});
  for (int i = 0; i < n; ++i)
    x.bands.push_back({std::move(weights[static_cast<std::size_t>(i)]), std::move(labels[static_cast<std::size_t>(i)]), true});
  return x;
}

template <class Alg>
std::size_t LabeledExchange<Alg>::live_bands() const {
  return static_cast<std::size_t>(std::count_if(bands.begin(), bands.end(), [](const Band& b) { return b.alive; }));
}

template <class Alg>
Exchange LabeledExchange<Alg>::shape() const {
  Exchange e;
  for (const auto& r : top) e.top.push_back(r.band);
  for (const auto& r : bottom) e.bottom.push_back(r.band);
  return e;
}

template <class Alg>
bool LabeledExchange<Alg>::switch_condition() const {
  BigInt t = 0, b = 0;
  for (const auto& r : top) t += bands[r.band].weight;
  for (const auto& r : bottom) b += bands[r.band].weight;
  return t == b;
}

template <class Alg>
BigInt LabeledExchange<Alg>::loop_weight() const {
  BigInt w = 0;
  for (const auto& l : loops) w += l.weight;
  return w;
}

template <class Alg>
typename LabeledExchange<Alg>::Pos LabeledExchange<Alg>::locate(EndRef r) const {
  for (std::size_t i = 0; i < top.size(); ++i)
    if (top[i] == r) return {true, i};
  for (std::size_t i = 0; i < bottom.size(); ++i)
    if (bottom[i] == r) return {false, i};
  throw std::logic_error("band end not attached");
}

template <class Alg>
void LabeledExchange<Alg>::set_end(EndRef old_ref, EndRef new_ref) {
  Pos p = locate(old_ref);
  side(p.top)[p.index] = new_ref;
}

template <class Alg>
void LabeledExchange<Alg>::prune() {
  auto dead = [&](const EndRef& r) { return bands[r.band].weight == 0; };
  for (auto* s : {&top, &bottom}) s->erase(std::remove_if(s->begin(), s->end(), dead), s->end());
  for (auto& b : bands)
    if (b.weight == 0) b.alive = false;
}

// The band at the winner side's critical end is cut by the loser's full width. The loser is
// extended through the winner and re-attached beside the winner's other end.
template <class Alg>
void LabeledExchange<Alg>::absorb(bool winner_on_top) {
  auto& wside = side(winner_on_top);
  auto& lside = side(!winner_on_top);
  const EndRef cw = wside.back();
  const EndRef cl = lside.back();
  const EndRef ow = other(cw);
  Band& lb = bands[cl.band];
  // loser read from its other end to its critical end, then on through the winner
  Label through = alg_.mul(traverse_from(other(cl)), traverse_from(cw));
  set_end(other(cl), EndRef{cl.band, 0});
  lside.pop_back();
  lb.label = std::move(through);
  bands[cw.band].weight -= lb.weight;
  Pos p = locate(ow);
  auto& oside = side(p.top);
  // preserving winner (other end on the far side): just right of it; reversing: just left
  std::size_t at = (p.top != winner_on_top) ? p.index + 1 : p.index;
  oside.insert(oside.begin() + static_cast<long>(at), EndRef{cl.band, 1});
}

// Whole Dehn-twist cycles of a preserving winner past the ends to the right of its other end.
template <class Alg>
bool LabeledExchange<Alg>::batch(bool winner_on_top, SplitEvent& ev) {
  const EndRef cw = side(winner_on_top).back();
  const EndRef ow = other(cw);
  Pos p = locate(ow);
  if (p.top == winner_on_top) return false;
  const auto& seg_side = side(p.top);
  std::vector<EndRef> seg(seg_side.begin() + static_cast<long>(p.index) + 1, seg_side.end());
  if (seg.empty()) return false;
  BigInt cycle = 0;
  for (const auto& r : seg) cycle += bands[r.band].weight;
  BigInt k = (bands[cw.band].weight - 1) / cycle;
  if (k < 1) return false;
  auto step = alg_.pow(traverse_from(cw), k);
  if (!step) return false;
  const Label back = alg_.inv(*step);

  std::vector<int> ends_in_seg(bands.size(), 0);
  for (const auto& r : seg) ends_in_seg[static_cast<std::size_t>(r.band)] |= 1 << r.end;
  for (std::size_t id = 0; id < bands.size(); ++id) {
    Label& l = bands[id].label;
    switch (ends_in_seg[id]) {
      case 1: l = alg_.mul(back, l); break;
      case 2: l = alg_.mul(l, *step); break;
      case 3: l = alg_.mul(alg_.mul(back, l), *step); break;
      default: break;
    }
  }
  bands[cw.band].weight -= k * cycle;
  ev.kind = winner_on_top ? SplitKind::TopWins : SplitKind::BottomWins;
  ev.winner = cw.band;
  ev.losers.clear();
  for (auto it = seg.rbegin(); it != seg.rend(); ++it) ev.losers.push_back(it->band);
  ev.count = k;
  return true;
}

template <class Alg>
SplitEvent LabeledExchange<Alg>::split_step() {
  prune();
  if (top.empty() || bottom.empty()) throw std::logic_error("split of an empty exchange");
  const EndRef ct = top.back(), cb = bottom.back();
  SplitEvent ev;
  if (ct.band == cb.band) {
    Band& b = bands[ct.band];
    ev.kind = SplitKind::Loop;
    ev.winner = ct.band;
    loops.push_back({b.weight, b.label});
    b.alive = false;
    b.weight = 0;
    top.pop_back();
    bottom.pop_back();
    return ev;
  }
  const BigInt& wt = bands[ct.band].weight;
  const BigInt& wb = bands[cb.band].weight;
  if (wt == wb) {
    ev.kind = SplitKind::Amalgamate;
    ev.winner = ct.band;
    ev.losers = {cb.band};
    // new band from the top winner's other end, through the switch, to the bottom band's other end
    Label joined = alg_.mul(traverse_from(other(ct)), traverse_from(cb));
    top.pop_back();
    bottom.pop_back();
    set_end(other(ct), EndRef{ct.band, 0});
    set_end(other(cb), EndRef{ct.band, 1});
    bands[ct.band].label = std::move(joined);
    bands[cb.band].alive = false;
    bands[cb.band].weight = 0;
    return ev;
  }
  const bool top_wins = wt > wb;
  ev.kind = top_wins ? SplitKind::TopWins : SplitKind::BottomWins;
  ev.winner = top_wins ? ct.band : cb.band;
  ev.losers = {top_wins ? cb.band : ct.band};
  absorb(top_wins);
  return ev;
}

template <class Alg>
SplitEvent LabeledExchange<Alg>::split_batched() {
  prune();
  if (top.empty() || bottom.empty()) throw std::logic_error("split of an empty exchange");
  const EndRef ct = top.back(), cb = bottom.back();
  if (ct.band != cb.band && bands[ct.band].weight != bands[cb.band].weight) {
    SplitEvent ev;
    if (batch(bands[ct.band].weight > bands[cb.band].weight, ev)) return ev;
  }
  return split_step();
}

template <class Alg>
std::vector<Loop<Alg>> LabeledExchange<Alg>::run_to_loops(std::vector<SplitEvent>* trace) {
  prune();
  while (!top.empty()) {
    SplitEvent ev = split_batched();
    if (trace) trace->push_back(std::move(ev));
    prune();
  }
  return loops;
}

}  // namespace fiber
