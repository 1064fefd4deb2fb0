#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "fiber/exchange.hpp"

namespace fiber::testing {

// Random recurrent shape with n bands and integral weights satisfying the switch condition.
inline std::pair<Exchange, std::vector<long long>> random_exchange(std::mt19937_64& g, int n, long long wmax) {
  for (;;) {
    std::vector<int> ends;
    for (int i = 0; i < n; ++i) ends.insert(ends.end(), {i, i});
    std::shuffle(ends.begin(), ends.end(), g);
    std::uniform_int_distribution<std::size_t> cut(1, ends.size() - 1);
    std::size_t k = cut(g);
    Exchange e{{ends.begin(), ends.begin() + static_cast<long>(k)}, {ends.begin() + static_cast<long>(k), ends.end()}};
    if (!is_recurrent(e)) continue;
    std::vector<int> side_of(static_cast<std::size_t>(n), 0);  // 1 top-reversing, 2 bottom-reversing
    std::vector<int> ct(static_cast<std::size_t>(n), 0), cb(static_cast<std::size_t>(n), 0);
    for (int id : e.top) ++ct[static_cast<std::size_t>(id)];
    for (int id : e.bottom) ++cb[static_cast<std::size_t>(id)];
    std::vector<long long> w(static_cast<std::size_t>(n));
    std::uniform_int_distribution<long long> wd(1, wmax);
    long long top_rev = 0;
    std::vector<std::size_t> bottom_rev;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (cb[i] == 2) { bottom_rev.push_back(i); continue; }
      w[i] = wd(g);
      if (ct[i] == 2) top_rev += w[i];
    }
    if (bottom_rev.empty()) return {e, w};
    if (top_rev < static_cast<long long>(bottom_rev.size())) continue;
    // random composition of top_rev into the bottom-reversing bands
    std::vector<long long> cuts;
    std::uniform_int_distribution<long long> cd(1, top_rev - 1);
    std::set<long long> cs;
    while (cs.size() + 1 < bottom_rev.size()) cs.insert(cd(g));
    long long prev = 0;
    std::size_t j = 0;
    for (long long c : cs) { w[bottom_rev[j++]] = c - prev; prev = c; }
    w[bottom_rev[j]] = top_rev - prev;
    return {e, w};
  }
}

inline std::vector<BigInt> big(const std::vector<long long>& w) {
  std::vector<BigInt> r;
  for (long long v : w) r.push_back(from_i64(v));
  return r;
}

inline std::vector<Word> letter_labels(std::mt19937_64& g, int n) {
  std::vector<Word> ls;
  std::uniform_int_distribution<int> c(0, 3);
  for (int i = 0; i < n; ++i) ls.push_back(Word::letter(Letter::from_code(static_cast<std::uint8_t>(c(g)))));
  return ls;
}

}  // namespace fiber::testing
