#include "fiber/boxes.hpp"

#include <vector>

namespace fiber {

Box box_of_walk(std::span<const long long> walk) {
  if (walk.empty() || walk.front() != 0) throw std::invalid_argument("walk must start at 0");
  const auto [lo, hi] = std::minmax_element(walk.begin(), walk.end());
  Box r{walk.back(), *hi, *lo, 0, 0};
  for (long long v : walk) {
    if (v == r.t) r.nt += 2;
    if (v == r.b) r.nb += 2;
  }
  if (walk.front() == r.t) --r.nt;
  if (walk.back() == r.t) --r.nt;
  if (walk.front() == r.b) --r.nb;
  if (walk.back() == r.b) --r.nb;
  return r;
}

Box box_of_word(const Word& w, const Phi& phi) {
  if (phi.degenerate()) return box_of_word_as<Box>(w, phi);
  std::vector<long long> walk;
  walk.reserve(w.size() + 1);
  long long h = 0;
  walk.push_back(0);
  for (Letter l : w) walk.push_back(h += phi(l));
  return box_of_walk(walk);
}

}  // namespace fiber
