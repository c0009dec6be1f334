#pragma once

// Test-only helpers: a deterministic connected-graph sampler and a
// definition-direct brute-force oracle. The oracle keeps its own adjacency
// representation and BFS so it shares no code path with the library it
// checks.

#include "graph.hpp"
#include "rational.hpp"

#include <cstdint>
#include <queue>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using EdgeList = std::vector<std::pair<std::int64_t, std::int64_t>>;

inline std::vector<std::vector<int>> naive_distances(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(static_cast<int>(v));
        adj[v].push_back(static_cast<int>(u));
    }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        dist[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

struct OracleResult {
    rshare::Rational index;
    std::vector<rshare::Rational> avg_shares;
    std::vector<std::int64_t> resolvent_counts;
};

// Straight from the definitions: every pair, every vertex, exact rationals.
inline OracleResult naive_resolving_index(int n, const EdgeList& edges) {
    auto dist = naive_distances(n, edges);
    std::vector<rshare::Rational> sums(n, rshare::Rational(0));
    std::vector<std::int64_t> counts(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> resolvers;
            for (int x = 0; x < n; ++x)
                if (dist[u][x] != dist[v][x])
                    resolvers.push_back(x);
            for (int w : resolvers) {
                sums[w] += rshare::Rational(1, resolvers.size());
                ++counts[w];
            }
        }
    OracleResult result;
    for (int w = 0; w < n; ++w) {
        result.avg_shares.push_back(sums[w] / counts[w]);
        result.resolvent_counts.push_back(counts[w]);
        result.index += result.avg_shares.back();
    }
    return result;
}

// Random spanning tree plus density-p extra edges: always connected, spans
// sparse trees to near-complete graphs as p varies.
class RandomConnectedGraphs {
public:
    explicit RandomConnectedGraphs(std::uint64_t seed) : rng_(seed) {}

    std::pair<int, EdgeList> sample(int min_n, int max_n) {
        std::uniform_int_distribution<int> n_dist(min_n, max_n);
        const int n = n_dist(rng_);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double p = unit(rng_) * unit(rng_);
        EdgeList edges;
        for (int v = 1; v < n; ++v) {
            std::uniform_int_distribution<int> parent(0, v - 1);
            edges.emplace_back(parent(rng_), v);
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng_) < p)
                    edges.emplace_back(u, v);
        return {n, edges};
    }

private:
    std::mt19937_64 rng_;
};

inline rshare::Graph to_graph(int n, const EdgeList& edges) {
    return rshare::Graph::from_edges(n, edges);
}

} // namespace testsupport
