#include "resolving.hpp"

#include "errors.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace rshare {

namespace {

void check_vertex(const DistanceMatrix& dm, Vertex w) {
    if (w >= dm.order())
        throw InvalidInput("vertex " + std::to_string(w) + " out of range [0, " +
                           std::to_string(dm.order()) + ")");
}

void check_pair(const DistanceMatrix& dm, Pair p) {
    if (p.u >= p.v)
        throw InvalidInput("pair endpoints must satisfy u < v, got (" +
                           std::to_string(p.u) + "," + std::to_string(p.v) + ")");
    check_vertex(dm, p.v);
}

void check_nontrivial(std::uint32_t n) {
    if (n < 2)
        throw InvalidInput("resolving computations require a non-trivial graph (n >= 2)");
}

std::int64_t pair_count(std::uint32_t n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

} // namespace

Pair make_pair(Vertex a, Vertex b) {
    if (a == b)
        throw InvalidInput("pair endpoints must differ, got (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
    return a < b ? Pair{a, b} : Pair{b, a};
}

bool resolves(const DistanceMatrix& dm, Vertex w, Pair p) {
    check_vertex(dm, w);
    check_pair(dm, p);
    return dm.at(p.u, w) != dm.at(p.v, w);
}

std::vector<Vertex> resolving_neighborhood(const DistanceMatrix& dm, Pair p) {
    check_pair(dm, p);
    auto du = dm.row(p.u);
    auto dv = dm.row(p.v);
    std::vector<Vertex> members;
    for (Vertex x = 0; x < dm.order(); ++x)
        if (du[x] != dv[x])
            members.push_back(x);
    return members;
}

Rational resolving_share(const DistanceMatrix& dm, Vertex w, Pair p) {
    if (!resolves(dm, w, p))
        return Rational(0);
    return Rational(1, resolving_neighborhood(dm, p).size());
}

std::vector<Pair> resolvent_neighborhood(const DistanceMatrix& dm, Vertex w) {
    check_vertex(dm, w);
    std::vector<Pair> pairs;
    auto dw = dm.row(w);
    for (Vertex u = 0; u + 1 < dm.order(); ++u)
        for (Vertex v = u + 1; v < dm.order(); ++v)
            if (dw[u] != dw[v])
                pairs.push_back(Pair{u, v});
    return pairs;
}

Rational average_resolving_share(const DistanceMatrix& dm, Vertex w) {
    check_nontrivial(dm.order());
    check_vertex(dm, w);
    Rational sum(0);
    std::int64_t count = 0;
    auto dw = dm.row(w);
    for (Vertex u = 0; u + 1 < dm.order(); ++u)
        for (Vertex v = u + 1; v < dm.order(); ++v)
            if (dw[u] != dw[v]) {
                sum += Rational(1, resolving_neighborhood(dm, Pair{u, v}).size());
                ++count;
            }
    return sum / count;
}

std::vector<Pair> full_pairs(const DistanceMatrix& dm) {
    const std::uint32_t n = dm.order();
    std::vector<Pair> pairs;
    for (Vertex u = 0; u + 1 < n; ++u) {
        auto du = dm.row(u);
        for (Vertex v = u + 1; v < n; ++v) {
            auto dv = dm.row(v);
            bool all = true;
            for (Vertex x = 0; x < n && all; ++x)
                all = du[x] != dv[x];
            if (all)
                pairs.push_back(Pair{u, v});
        }
    }
    return pairs;
}

std::vector<Pair> twin_pairs(const DistanceMatrix& dm) {
    const std::uint32_t n = dm.order();
    std::vector<Pair> pairs;
    for (Vertex u = 0; u + 1 < n; ++u) {
        auto du = dm.row(u);
        for (Vertex v = u + 1; v < n; ++v) {
            auto dv = dm.row(v);
            bool twin = true;
            for (Vertex x = 0; x < n && twin; ++x)
                twin = x == u || x == v || du[x] == dv[x];
            if (twin)
                pairs.push_back(Pair{u, v});
        }
    }
    return pairs;
}

namespace {

// One worker's accumulation over a contiguous range of the pair sequence.
// counts[w * (n+1) + k] = number of pairs with |R| = k that w resolves.
struct Accumulator {
    std::vector<std::uint32_t> counts;
    std::vector<PairDetail> details;
};

// First pair of the linear index `idx` in lexicographic (u, v) order.
Pair pair_at(std::uint32_t n, std::int64_t idx) {
    Vertex u = 0;
    std::int64_t base = 0;
    while (base + (n - 1 - u) <= idx)
        base += n - 1 - u++;
    return Pair{u, static_cast<Vertex>(u + 1 + (idx - base))};
}

void scan_pairs(const DistanceMatrix& dm, std::int64_t lo, std::int64_t hi,
                bool want_details, Accumulator& acc) {
    const std::uint32_t n = dm.order();
    acc.counts.assign(static_cast<size_t>(n) * (n + 1), 0);
    if (lo >= hi)
        return;
    Pair p = pair_at(n, lo);
    std::vector<Vertex> diff;
    diff.reserve(n);
    for (std::int64_t idx = lo; idx < hi; ++idx) {
        const Dist* du = dm.row(p.u).data();
        const Dist* dv = dm.row(p.v).data();
        diff.clear();
        for (Vertex x = 0; x < n; ++x)
            if (du[x] != dv[x])
                diff.push_back(x);
        const auto k = static_cast<std::uint32_t>(diff.size());
        for (Vertex w : diff)
            ++acc.counts[static_cast<size_t>(w) * (n + 1) + k];
        if (want_details)
            acc.details.push_back(PairDetail{p, k, diff});
        if (++p.v == n) {
            ++p.u;
            p.v = p.u + 1;
        }
    }
}

} // namespace

ShareReport resolving_index(const DistanceMatrix& dm, const ComputeOptions& options) {
    const std::uint32_t n = dm.order();
    check_nontrivial(n);
    const std::int64_t total = pair_count(n);

    unsigned workers = std::min<std::int64_t>(effective_threads(options.threads), total);
    std::vector<Accumulator> acc(workers);
    if (workers <= 1) {
        scan_pairs(dm, 0, total, options.per_pair, acc[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                scan_pairs(dm, total * t / workers, total * (t + 1) / workers,
                           options.per_pair, acc[t]);
            });
        for (auto& th : pool)
            th.join();
    }

    // Merge in worker order; ranges are contiguous and ascending, so pair
    // details stay lexicographic and counts are thread-count independent.
    std::vector<std::uint64_t> counts(static_cast<size_t>(n) * (n + 1), 0);
    for (const auto& a : acc)
        for (size_t i = 0; i < counts.size(); ++i)
            counts[i] += a.counts[i];

    ShareReport report;
    report.n = n;
    report.per_vertex.reserve(n);
    for (Vertex w = 0; w < n; ++w) {
        const std::uint64_t* row = counts.data() + static_cast<size_t>(w) * (n + 1);
        Rational sum(0);
        std::int64_t resolved = 0;
        for (std::uint32_t k = 2; k <= n; ++k)
            if (row[k]) {
                sum += Rational(BigInt(row[k]), BigInt(k));
                resolved += static_cast<std::int64_t>(row[k]);
            }
        Rational avg = sum / resolved; // resolved >= n-1 > 0
        report.index += avg;
        report.per_vertex.push_back(VertexShare{w, std::move(avg), resolved});
    }

    if (options.per_pair) {
        std::vector<PairDetail> details;
        details.reserve(static_cast<size_t>(total));
        for (auto& a : acc)
            for (auto& d : a.details)
                details.push_back(std::move(d));
        report.per_pair = std::move(details);
    }
    return report;
}

ShareReport resolving_index(const Graph& g, const ComputeOptions& options) {
    check_nontrivial(g.order());
    return resolving_index(all_pairs_distances(g, options.threads), options);
}

} // namespace rshare
