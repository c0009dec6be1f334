#pragma once

#include "graph.hpp"
#include "resolving.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rshare {

struct ResolvingSetResult {
    std::vector<Vertex> set;
    bool is_resolving = false;
    std::optional<Pair> witness; // first pair no member resolves, when not resolving
};

// Checks whether s hits every pair's resolving neighborhood.
ResolvingSetResult is_resolving_set(const DistanceMatrix& dm, std::span<const Vertex> s);

// Pairs whose resolving neighborhood is exactly the pair itself; every
// resolving set must contain one of the two endpoints. Identical to
// twin_pairs, exposed here as the exact-search pruning rule.
std::vector<Pair> forced_pairs(const DistanceMatrix& dm);

// Minimum resolving-set size by increasing-size subset search with
// forced-pair pruning. Requires n <= cap (default 20).
std::int64_t metric_dimension_exact(const Graph& g, std::int64_t cap = 20);

// The lexicographically first minimum resolving set found by the same search.
std::vector<Vertex> minimum_resolving_set(const Graph& g, std::int64_t cap = 20);

// Upper bound: repeatedly add the vertex resolving the most still-unresolved
// pairs, ties broken by smallest id. Deterministic and always verified.
std::vector<Vertex> greedy_resolving_set(const Graph& g);

} // namespace rshare
