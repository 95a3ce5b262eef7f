#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hoffdig/digraph.hpp"

namespace hoffdig::fixtures {

struct NamedDigraph {
  std::string name;
  Digraph digraph;
};

Digraph directed_cycle(std::size_t n);
Digraph undirected_cycle(std::size_t n);
Digraph complete_graph(std::size_t n);
Digraph petersen();
Digraph cube_graph();
/// Quadratic-residue tournament for a prime q = 3 mod 4.
Digraph paley_tournament(std::size_t q);

/// Every digraph with at most 16 vertices used by the property suites.
std::vector<NamedDigraph> small_digraphs();
/// small_digraphs() plus larger constructed instances.
std::vector<NamedDigraph> all_digraphs();

}  // namespace hoffdig::fixtures
