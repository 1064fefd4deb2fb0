#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "fiber/exchange.hpp"

namespace fiber {

// Isomorphisms used to identify exchanges. Relabeling bands is always allowed; the
// flip also exchanges the top and bottom intervals.
enum class Symmetry { Relabel, RelabelAndFlip };

// Least relabeled form: bands renumbered by first appearance, top first.
Exchange relabeled(const Exchange& e);
Exchange flipped(const Exchange& e);
Exchange canonical_form(const Exchange& e, Symmetry sym);

// Every complete exchange with the given number of bands, up to the symmetry. Seven bands
// is genus two.
std::vector<Exchange> enumerate_complete(Symmetry sym, int bands = 7);

// Generic splits of a complete exchange that are again complete, in canonical form.
std::vector<Exchange> splitting_successors(const Exchange& e, Symmetry sym);

struct CensusGraph {
  Symmetry symmetry = Symmetry::Relabel;
  std::vector<Exchange> nodes;            // sorted canonical forms
  std::vector<std::vector<int>> edges;    // successor node indices
  std::optional<int> find(const Exchange& e) const;
};

CensusGraph build_census(Symmetry sym, int bands = 7);

// Nodes reachable from every node, sorted.
std::vector<int> sink(const CensusGraph& g);

// Strongly connected components, as a component index per node.
std::vector<int> strong_components(const CensusGraph& g);

// Canonical forms one per line, then "edges:" and one "from to" pair per line.
void write_census(std::ostream& os, const CensusGraph& g);

}  // namespace fiber
