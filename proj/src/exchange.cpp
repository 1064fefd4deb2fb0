#include "fiber/exchange.hpp"

#include <map>
#include <sstream>

namespace fiber {

int Exchange::band_count() const {
  int m = -1;
  for (int id : top) m = std::max(m, id);
  for (int id : bottom) m = std::max(m, id);
  return m + 1;
}

Exchange parse_exchange(std::string_view text) {
  std::string s(text);
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("exchange text needs 'top: ... | bottom: ...'");
  auto read_side = [](std::string part, std::string_view key) {
    auto colon = part.find(':');
    if (colon == std::string::npos || part.find(key) == std::string::npos)
      throw std::invalid_argument("missing side label in exchange text");
    std::istringstream in(part.substr(colon + 1));
    std::vector<int> ids;
    for (int v; in >> v;) {
      if (v < 1) throw std::invalid_argument("band names are positive integers");
      ids.push_back(v - 1);
    }
    if (!in.eof()) throw std::invalid_argument("bad band name in exchange text");
    return ids;
  };
  Exchange e{read_side(s.substr(0, bar), "top"), read_side(s.substr(bar + 1), "bottom")};
  std::map<int, int> count;
  for (int id : e.top) ++count[id];
  for (int id : e.bottom) ++count[id];
  for (int i = 0; i < e.band_count(); ++i)
    if (count[i] != 2) throw std::invalid_argument("every band needs exactly two ends");
  return e;
}

std::string to_text(const Exchange& e) {
  std::ostringstream out;
  out << "top:";
  for (int id : e.top) out << ' ' << id + 1;
  out << " | bottom:";
  for (int id : e.bottom) out << ' ' << id + 1;
  return out.str();
}

bool is_recurrent(const Exchange& e) {
  auto has_reversing = [](const std::vector<int>& side) {
    std::map<int, int> c;
    for (int id : side)
      if (++c[id] == 2) return true;
    return false;
  };
  return has_reversing(e.top) == has_reversing(e.bottom);
}

std::vector<int> region_cusps(const Exchange& e) {
  // Slots run counterclockwise around the thickened switch: bottom left to right, then top right to left.
  std::vector<int> slot(e.bottom);
  slot.insert(slot.end(), e.top.rbegin(), e.top.rend());
  const std::size_t n = slot.size();
  if (n == 0) return {};
  std::vector<std::size_t> partner(n);
  std::map<int, std::size_t> first;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = first.emplace(slot[i], i);
    if (!fresh) {
      partner[i] = it->second;
      partner[it->second] = i;
    }
  }
  // gap j sits between slot j and slot j+1; the two ends of the switch are smooth
  const std::size_t right_end = (e.bottom.size() + n - 1) % n;
  const std::size_t left_end = n - 1;
  std::vector<bool> seen(n, false);
  std::vector<int> cusps;
  for (std::size_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    int c = 0;
    for (std::size_t j = g; !seen[j]; j = partner[(j + 1) % n]) {
      seen[j] = true;
      if (j != right_end && j != left_end) ++c;
    }
    cusps.push_back(c);
  }
  return cusps;
}

bool is_complete(const Exchange& e) {
  if (!is_recurrent(e)) return false;
  auto cusps = region_cusps(e);
  return !cusps.empty() && std::all_of(cusps.begin(), cusps.end(), [](int c) { return c == 3; });
}

Exchange split_shape(const Exchange& e, Critical which) {
  Exchange r = e;
  const bool top_wins = which == Critical::TopWins;
  auto& ws = top_wins ? r.top : r.bottom;
  auto& ls = top_wins ? r.bottom : r.top;
  if (ws.empty() || ls.empty()) throw std::invalid_argument("split of an empty exchange");
  const int w = ws.back(), l = ls.back();
  if (w == l) throw std::invalid_argument("critical ends belong to one band");
  ls.pop_back();
  if (auto it = std::find(ls.begin(), ls.end(), w); it != ls.end()) {
    ls.insert(it + 1, l);
  } else {
    auto jt = std::find(ws.begin(), ws.end() - 1, w);
    ws.insert(jt, l);
  }
  return r;
}

std::vector<StepRecord> expand(const SplitEvent& ev) {
  std::vector<StepRecord> out;
  switch (ev.kind) {
    case SplitKind::Loop: out.push_back({ev.kind, ev.winner, -1}); break;
    case SplitKind::Amalgamate: out.push_back({ev.kind, ev.winner, ev.losers.at(0)}); break;
    default:
      for (BigInt k = 0; k < ev.count; ++k)
        for (int l : ev.losers) out.push_back({ev.kind, ev.winner, l});
  }
  return out;
}

}  // namespace fiber

namespace fiber {

Exchange tau0() { return {{0, 1, 2, 3, 1, 2, 3}, {4, 5, 6, 4, 5, 6, 0}}; }

namespace {

// Free basis element number i of a rank-7 free subgroup of F(a, b).
Word symbol(int i) {
  Word ai;
  for (int k = 0; k <= i; ++k) ai *= Word::letter(Letter::a());
  return ai * Word::letter(Letter::b()) * ai.inverse();
}

// tau0 with x's label read from its bottom end to its top end.
LabeledExchange<WordLabels> symbolic_tau0(const std::vector<BigInt>& weights) {
  std::vector<Word> labels;
  for (int i = 0; i < 7; ++i) labels.push_back(symbol(i));
  auto x = LabeledExchange<WordLabels>::from_shape(tau0(), weights, labels);
  x.top.front() = {0, 1};
  x.bottom.back() = {0, 0};
  return x;
}

}  // namespace

bool verify_stable_split_labels() {
  // w_x well above 2(w_a + w_b + w_c) so that all six splits are won by x
  std::vector<BigInt> w = {BigInt(100), 2, 3, 4, 1, 3, 5};
  auto x = symbolic_tau0(w);
  const auto before = x;
  for (int i = 0; i < 6; ++i) {
    SplitEvent ev = x.split_step();
    if (ev.kind != SplitKind::BottomWins || ev.winner != 0) return false;
  }
  if (x.shape() != tau0()) return false;
  const Word sx = symbol(0);
  for (int id = 0; id < 7; ++id) {
    const Word& got = x.bands[static_cast<std::size_t>(id)].label;
    // ends may have been renumbered, so compare up to orientation
    Word want = before.bands[static_cast<std::size_t>(id)].label;
    if (id >= 1 && id <= 3) want = sx.inverse() * want * sx;
    if (got != want && got != want.inverse()) return false;
  }
  return x.bands[0].weight == 100 - 2 * (2 + 3 + 4);
}

int stable_split_rounds(const std::vector<BigInt>& weights, int max_rounds) {
  auto x = symbolic_tau0(weights);
  for (int round = 0; round < max_rounds; ++round) {
    for (int i = 0; i < 6; ++i) {
      SplitEvent ev = x.split_step();
      if (ev.kind != SplitKind::BottomWins || ev.winner != 0) return round;
    }
    if (x.shape() != tau0()) return round;
  }
  return max_rounds;
}

}  // namespace fiber
