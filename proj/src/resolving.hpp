#pragma once

#include "graph.hpp"
#include "rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace rshare {

// Unordered vertex pair in canonical order u < v.
struct Pair {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Pair&) const = default;
};

Pair make_pair(Vertex a, Vertex b); // canonicalizes; throws on a == b

// A vertex w resolves (u, v) when d(u, w) != d(v, w).
bool resolves(const DistanceMatrix& dm, Vertex w, Pair p);

// R(u,v): every vertex that resolves the pair. Sorted; always contains both
// endpoints, so never empty.
std::vector<Vertex> resolving_neighborhood(const DistanceMatrix& dm, Pair p);

// 1/|R(u,v)| if w resolves the pair, else 0. Always in [0, 1/2].
Rational resolving_share(const DistanceMatrix& dm, Vertex w, Pair p);

// R(w): the pairs w resolves, in lexicographic order. |R(w)| >= n - 1 since
// w resolves every pair it belongs to.
std::vector<Pair> resolvent_neighborhood(const DistanceMatrix& dm, Vertex w);

// ar_w: mean of w's shares over R(w). Strictly positive. Requires n >= 2.
Rational average_resolving_share(const DistanceMatrix& dm, Vertex w);

// Pairs resolved by every vertex (R(u,v) = V). Their endpoint distance is
// always odd.
std::vector<Pair> full_pairs(const DistanceMatrix& dm);

// Pairs equidistant from every other vertex; equivalently R(u,v) = {u,v},
// i.e. the endpoint shares are 1/2.
std::vector<Pair> twin_pairs(const DistanceMatrix& dm);

struct VertexShare {
    Vertex id = 0;
    Rational avg_share;
    std::int64_t resolvent_count = 0;
};

struct PairDetail {
    Pair pair;
    std::uint32_t size = 0;          // |R(u,v)|
    std::vector<Vertex> members;
};

// Full per-graph result: the resolving topological index and its per-vertex
// decomposition; per-pair neighborhoods only on request (O(n^3) storage).
struct ShareReport {
    std::uint32_t n = 0;
    Rational index;
    std::vector<VertexShare> per_vertex;
    std::optional<std::vector<PairDetail>> per_pair;
};

struct ComputeOptions {
    unsigned threads = 0;    // 0 = available parallelism
    bool per_pair = false;
};

// Sum of average resolving shares over all vertices, computed in exact
// rational arithmetic. The pair set is partitioned across workers; the result
// is bit-identical for any thread count. Requires a connected graph on
// n >= 2 vertices.
ShareReport resolving_index(const Graph& g, const ComputeOptions& options = {});
ShareReport resolving_index(const DistanceMatrix& dm, const ComputeOptions& options = {});

} // namespace rshare
