#include "graph.hpp"

#include "errors.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <thread>

namespace rshare {

namespace {

std::string edge_str(std::int64_t u, std::int64_t v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

Graph Graph::from_edges(std::int64_t n,
                        std::span<const std::pair<std::int64_t, std::int64_t>> edges) {
    if (n < 1)
        throw InvalidInput("graph needs at least one vertex, got n=" + std::to_string(n));
    if (n > (std::int64_t{1} << 31))
        throw InvalidInput("vertex count too large: " + std::to_string(n));

    std::vector<std::pair<Vertex, Vertex>> normalized;
    normalized.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw InvalidInput("self-loop " + edge_str(a, b));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InvalidInput("edge " + edge_str(a, b) + " endpoint out of range [0, " +
                               std::to_string(n) + ")");
        auto u = static_cast<Vertex>(std::min(a, b));
        auto v = static_cast<Vertex>(std::max(a, b));
        normalized.emplace_back(u, v);
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    Graph g;
    g.n_ = static_cast<std::uint32_t>(n);
    std::vector<std::uint32_t> deg(g.n_ + 1, 0);
    for (const auto& [u, v] : normalized) {
        ++deg[u + 1];
        ++deg[v + 1];
    }
    g.offsets_.assign(g.n_ + 1, 0);
    for (std::uint32_t i = 0; i < g.n_; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + deg[i + 1];
    g.adj_.resize(g.offsets_[g.n_]);
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : normalized) {
        g.adj_[fill[u]++] = v;
        g.adj_[fill[v]++] = u;
    }
    for (Vertex v = 0; v < g.n_; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(size()));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

namespace {

constexpr Dist kUnreached = ~Dist{0};

// Single-source BFS into a caller-owned row.
void bfs_row(const Graph& g, Vertex source, Dist* row) {
    const std::uint32_t n = g.order();
    std::fill(row, row + n, kUnreached);
    row[source] = 0;
    std::vector<Vertex> frontier{source};
    std::vector<Vertex> next;
    Dist level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex u : frontier)
            for (Vertex v : g.neighbors(u))
                if (row[v] == kUnreached) {
                    row[v] = level;
                    next.push_back(v);
                }
        frontier.swap(next);
    }
}

} // namespace

bool is_connected(const Graph& g) {
    std::vector<Dist> row(g.order());
    bfs_row(g, 0, row.data());
    return std::none_of(row.begin(), row.end(), [](Dist d) { return d == kUnreached; });
}

unsigned effective_threads(unsigned requested) {
    if (requested != 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads) {
    const std::uint32_t n = g.order();
    DistanceMatrix dm;
    dm.n_ = n;
    dm.d_.resize(static_cast<size_t>(n) * n);

    const unsigned workers = std::min<unsigned>(effective_threads(threads), n);
    if (workers <= 1) {
        for (Vertex s = 0; s < n; ++s)
            bfs_row(g, s, dm.d_.data() + static_cast<size_t>(s) * n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (Vertex s = t; s < n; s += workers)
                    bfs_row(g, s, dm.d_.data() + static_cast<size_t>(s) * n);
            });
        for (auto& th : pool)
            th.join();
    }

    Dist diameter = 0;
    for (Dist d : dm.d_) {
        if (d == kUnreached)
            throw NotConnected();
        diameter = std::max(diameter, d);
    }
    dm.diameter_ = diameter;
    return dm;
}

Dist DistanceMatrix::eccentricity(Vertex v) const {
    auto r = row(v);
    return *std::max_element(r.begin(), r.end());
}

DistancePartition distance_partition(const DistanceMatrix& dm, Vertex w) {
    if (w >= dm.order())
        throw InvalidInput("vertex " + std::to_string(w) + " out of range [0, " +
                           std::to_string(dm.order()) + ")");
    DistancePartition part;
    part.center = w;
    part.classes.resize(dm.eccentricity(w));
    for (Vertex v = 0; v < dm.order(); ++v)
        if (v != w)
            part.classes[dm.at(w, v) - 1].push_back(v);
    return part;
}

} // namespace rshare
