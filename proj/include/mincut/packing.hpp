#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

struct TreePacking {
  std::vector<std::vector<EdgeId>> trees;  // edge ids of the host, ascending
  std::vector<std::uint32_t> loads;        // trees containing each host edge
};

/// k spanning trees; tree i is a minimum spanning tree under relative load
/// load(e)/w(e) after trees 0..i-1, ties broken by edge id.
TreePacking greedy_pack(const WeightedGraph& host, std::size_t k);

struct Skeleton {
  WeightedGraph graph;
  double rate = 1;  // sampling rate that produced a connected graph
  double lambda_guess = 1;
};

/// Keeps Binomial(w, p) units of every edge, p = min(1, c1 ln n / (eps^2
/// lambda_guess)). A disconnected sample is redrawn with doubled p.
Skeleton build_skeleton(const WeightedGraph& host, double eps, double lambda_guess, std::mt19937_64& rng,
                        double c1 = 12);

/// U, U/2, U/4, ... while at least max(1, U/(2n)), with U the minimum
/// weighted degree; at most ceil(log2(2n)) guesses.
std::vector<double> lambda_schedule(const WeightedGraph& host);

}  // namespace mincut
