#include "fiber/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fiber {

Exchange relabeled(const Exchange& e) {
  std::map<int, int> name;
  auto rename = [&](int id) { return name.emplace(id, static_cast<int>(name.size())).first->second; };
  Exchange r;
  for (int id : e.top) r.top.push_back(rename(id));
  for (int id : e.bottom) r.bottom.push_back(rename(id));
  return r;
}

Exchange flipped(const Exchange& e) { return {e.bottom, e.top}; }

Exchange canonical_form(const Exchange& e, Symmetry sym) {
  Exchange r = relabeled(e);
  if (sym == Symmetry::RelabelAndFlip) r = std::min(r, relabeled(flipped(e)));
  return r;
}

std::vector<Exchange> enumerate_complete(Symmetry sym, int bands) {
  const int n = 2 * bands;
  std::set<Exchange> found;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  // Pairings of the slots, bands numbered in order of their first slot; the first
  // `top` slots form the top interval.
  std::function<void(int, int)> pair_up = [&](int from, int next_id) {
    while (from < n && slot[static_cast<std::size_t>(from)] >= 0) ++from;
    if (from == n) {
      for (int top = 1; top < n; ++top) {
        Exchange e{{slot.begin(), slot.begin() + top}, {slot.begin() + top, slot.end()}};
        if (is_complete(e)) found.insert(canonical_form(e, sym));
      }
      return;
    }
    slot[static_cast<std::size_t>(from)] = next_id;
    for (int j = from + 1; j < n; ++j) {
      if (slot[static_cast<std::size_t>(j)] >= 0) continue;
      slot[static_cast<std::size_t>(j)] = next_id;
      pair_up(from + 1, next_id + 1);
      slot[static_cast<std::size_t>(j)] = -1;
    }
    slot[static_cast<std::size_t>(from)] = -1;
  };
  pair_up(0, 0);
  return {found.begin(), found.end()};
}

std::vector<Exchange> splitting_successors(const Exchange& e, Symmetry sym) {
  std::set<Exchange> out;
  if (e.top.empty() || e.bottom.empty() || e.top.back() == e.bottom.back()) return {};
  for (Critical c : {Critical::TopWins, Critical::BottomWins}) {
    Exchange s = split_shape(e, c);
    if (is_complete(s)) out.insert(canonical_form(s, sym));
  }
  return {out.begin(), out.end()};
}

std::optional<int> CensusGraph::find(const Exchange& e) const {
  const Exchange c = canonical_form(e, symmetry);
  auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
  if (it == nodes.end() || *it != c) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

CensusGraph build_census(Symmetry sym, int bands) {
  CensusGraph g;
  g.symmetry = sym;
  g.nodes = enumerate_complete(sym, bands);
  g.edges.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (const Exchange& s : splitting_successors(g.nodes[i], sym))
      if (auto j = g.find(s)) g.edges[i].push_back(*j);
  return g;
}

std::vector<int> sink(const CensusGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<int> hits(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++hits[static_cast<std::size_t>(v)];
      for (int w : g.edges[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < n; ++v)
    if (hits[v] == static_cast<int>(n)) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<int> strong_components(const CensusGraph& g) {
  // Tarjan's algorithm; the graph is small, so recursion depth is no concern.
  const int n = static_cast<int>(g.nodes.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int counter = 0, comps = 0;
  std::function<void(int)> visit = [&](int v) {
    auto V = static_cast<std::size_t>(v);
    index[V] = low[V] = counter++;
    stack.push_back(v);
    on_stack[V] = true;
    for (int w : g.edges[V]) {
      auto W = static_cast<std::size_t>(w);
      if (index[W] < 0) {
        visit(w);
        low[V] = std::min(low[V], low[W]);
      } else if (on_stack[W]) {
        low[V] = std::min(low[V], index[W]);
      }
    }
    if (low[V] == index[V]) {
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = comps;
        if (w == v) break;
      }
      ++comps;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[static_cast<std::size_t>(v)] < 0) visit(v);
  return comp;
}

void write_census(std::ostream& os, const CensusGraph& g) {
  for (const auto& e : g.nodes) os << to_text(e) << '\n';
  os << "edges:\n";
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (int j : g.edges[i]) os << i << ' ' << j << '\n';
}

}  // namespace fiber
