#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fiber/census.hpp"

using namespace fiber;

namespace {

const CensusGraph& census() {
  static const CensusGraph g = build_census(Symmetry::RelabelAndFlip);
  return g;
}

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

}  // namespace

TEST_CASE("census counts") {
  const auto& g = census();
  CHECK(g.nodes.size() == 201);
  const auto s = sink(g);
  CHECK(s.size() == 190);
  auto t = g.find(tau0());
  REQUIRE(t.has_value());
  CHECK(contains(s, *t));
}

TEST_CASE("relabeling alone counts every exchange and its flip separately") {
  auto g = build_census(Symmetry::Relabel);
  CHECK(g.nodes.size() == 402);
  CHECK(sink(g).size() == 380);
}

TEST_CASE("census nodes are complete genus-two exchanges") {
  for (const auto& e : census().nodes) {
    CHECK(e.band_count() == 7);
    CHECK(is_complete(e));
    // four triangles: Euler characteristic 1 - 7 + 4 = -2
    CHECK(region_cusps(e) == std::vector<int>{3, 3, 3, 3});
    CHECK(canonical_form(e, Symmetry::RelabelAndFlip) == e);
  }
}

TEST_CASE("canonical form ignores band names and the flip") {
  std::mt19937 gen(3);
  for (const auto& e : census().nodes) {
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    Exchange r;
    for (int id : e.top) r.top.push_back(perm[static_cast<std::size_t>(id)]);
    for (int id : e.bottom) r.bottom.push_back(perm[static_cast<std::size_t>(id)]);
    CHECK(canonical_form(r, Symmetry::RelabelAndFlip) == e);
    CHECK(canonical_form(flipped(r), Symmetry::RelabelAndFlip) == e);
    CHECK(canonical_form(r, Symmetry::Relabel) == relabeled(e));
  }
}

TEST_CASE("splitting edges") {
  const auto& g = census();
  const auto s = sink(g);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto succ = splitting_successors(g.nodes[i], g.symmetry);
    CHECK(succ.size() <= 2);
    CHECK(g.edges[i].size() == succ.size());
    for (const auto& x : succ) CHECK(g.find(x).has_value());
    if (contains(s, static_cast<int>(i)))
      for (int j : g.edges[i]) CHECK(contains(s, j));
  }
}

TEST_CASE("the x band winning returns tau0") {
  // the critical ends of tau0 are c on top and x on the bottom
  Exchange e = split_shape(tau0(), Critical::BottomWins);
  CHECK(canonical_form(e, Symmetry::RelabelAndFlip) == canonical_form(tau0(), Symmetry::RelabelAndFlip));
  auto succ = splitting_successors(tau0(), Symmetry::RelabelAndFlip);
  CHECK(std::find(succ.begin(), succ.end(), canonical_form(tau0(), Symmetry::RelabelAndFlip)) != succ.end());
}

TEST_CASE("the sink is one strongly connected component containing tau0") {
  const auto& g = census();
  const auto s = sink(g);
  const auto comp = strong_components(g);
  const int t = *g.find(tau0());
  for (int v : s) CHECK(comp[static_cast<std::size_t>(v)] == comp[static_cast<std::size_t>(t)]);
  const auto in_comp = std::count(comp.begin(), comp.end(), comp[static_cast<std::size_t>(t)]);
  CHECK(in_comp == static_cast<long>(s.size()));
}

TEST_CASE("census text output") {
  std::ostringstream out;
  write_census(out, census());
  const std::string text = out.str();
  CHECK(text.find(to_text(canonical_form(tau0(), Symmetry::RelabelAndFlip))) != std::string::npos);
  CHECK(text.find("edges:") != std::string::npos);
}
