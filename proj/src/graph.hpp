#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rshare {

using Vertex = std::uint32_t;
using Dist = std::uint32_t;

// Immutable simple undirected graph in CSR form, 0-based vertex ids.
// Construction validates the simple-graph model: self-loops and out-of-range
// endpoints are rejected, duplicate edges collapse to one.
class Graph {
public:
    Graph() = default; // empty placeholder; real graphs come from from_edges

    static Graph from_edges(std::int64_t n,
                            std::span<const std::pair<std::int64_t, std::int64_t>> edges);

    std::uint32_t order() const { return n_; }
    std::int64_t size() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> offsets_;
    std::vector<Vertex> adj_;
};

bool is_connected(const Graph& g);

// Hop distances between all vertex pairs, plus the diameter. Entries are
// finite; construction fails on disconnected input.
class DistanceMatrix {
public:
    std::uint32_t order() const { return n_; }
    Dist at(Vertex u, Vertex v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    std::span<const Dist> row(Vertex u) const {
        return {d_.data() + static_cast<size_t>(u) * n_, n_};
    }
    Dist diameter() const { return diameter_; }
    Dist eccentricity(Vertex v) const;

private:
    friend DistanceMatrix all_pairs_distances(const Graph&, unsigned);
    std::uint32_t n_ = 0;
    Dist diameter_ = 0;
    std::vector<Dist> d_;
};

// BFS from every source. `threads` = 0 picks the available parallelism; the
// result is identical for any thread count. Throws NotConnected.
DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads = 0);

// Distance partition of V(G) - {center}: classes[i] holds the vertices at
// distance i + 1 from the center. Classes run up to the eccentricity of the
// center, so none is empty.
struct DistancePartition {
    Vertex center = 0;
    std::vector<std::vector<Vertex>> classes;
};

DistancePartition distance_partition(const DistanceMatrix& dm, Vertex w);

// Effective worker count for a parallel section (0 = available parallelism).
unsigned effective_threads(unsigned requested);

} // namespace rshare
