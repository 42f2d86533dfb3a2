#pragma once

#include <random>
#include <vector>

#include "monophilic/graph.hpp"

namespace monophilic {

// Every connected graph on exactly `n` vertices, one per isomorphism class,
// found by raw edge-set enumeration plus brute-force canonical labelling.
// 1 <= n <= 6 (n = 6 yields the 112 classes).
std::vector<Graph> connected_graphs(int n);

// Union of connected_graphs(1..max_vertices).
std::vector<Graph> connected_graphs_up_to(int max_vertices);

// Random connected graph on n vertices: a random spanning tree plus each
// remaining pair independently with probability `extra_edge_probability`.
Graph random_connected_graph(int n, double extra_edge_probability, std::mt19937_64& rng);

// Random connected chordal graph built by repeatedly coning a new vertex
// over a random clique, then shuffling vertex ids.
Graph random_chordal_graph(int n, std::mt19937_64& rng);

}  // namespace monophilic
