#include "metric_dim.hpp"

#include "errors.hpp"

#include <algorithm>
#include <string>

namespace rshare {

namespace {

void check_nontrivial(std::uint32_t n) {
    if (n < 2)
        throw InvalidInput("resolving computations require a non-trivial graph (n >= 2)");
}

// Per-vertex bitmask over the lexicographic pair sequence: bit i set when the
// vertex resolves pair i.
struct PairMasks {
    std::uint32_t n = 0;
    std::int64_t pairs = 0;
    size_t words = 0;
    std::vector<std::uint64_t> bits; // n * words

    explicit PairMasks(const DistanceMatrix& dm)
        : n(dm.order()), pairs(static_cast<std::int64_t>(n) * (n - 1) / 2),
          words((static_cast<size_t>(pairs) + 63) / 64), bits(n * words, 0) {
        for (Vertex w = 0; w < n; ++w) {
            auto dw = dm.row(w);
            std::int64_t idx = 0;
            for (Vertex u = 0; u + 1 < n; ++u)
                for (Vertex v = u + 1; v < n; ++v, ++idx)
                    if (dw[u] != dw[v])
                        bits[w * words + idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
    }

    const std::uint64_t* mask(Vertex w) const { return bits.data() + w * words; }

    bool covers_all(const std::uint64_t* acc) const {
        std::int64_t remaining = pairs;
        for (size_t i = 0; i < words; ++i) {
            int width = remaining >= 64 ? 64 : static_cast<int>(remaining);
            std::uint64_t full = width == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << width) - 1;
            if ((acc[i] & full) != full)
                return false;
            remaining -= width;
        }
        return true;
    }
};

struct ExactSearch {
    const PairMasks& masks;
    const std::vector<Pair>& forced;
    std::vector<std::uint64_t> suffix_or; // OR of masks[start..n)
    std::vector<bool> chosen;
    std::vector<Vertex> current;
    std::vector<Vertex> found;

    ExactSearch(const PairMasks& m, const std::vector<Pair>& f) : masks(m), forced(f) {
        suffix_or.assign((masks.n + 1) * masks.words, 0);
        for (Vertex v = masks.n; v-- > 0;)
            for (size_t i = 0; i < masks.words; ++i)
                suffix_or[v * masks.words + i] =
                    suffix_or[(v + 1) * masks.words + i] | masks.mask(v)[i];
        chosen.assign(masks.n, false);
    }

    // A forced pair both of whose endpoints are already unpickable kills the
    // branch: no extension can hit its two-element neighborhood.
    bool forced_pair_dead(Vertex start) const {
        for (const Pair& p : forced)
            if (!chosen[p.u] && !chosen[p.v] && p.v < start)
                return true;
        return false;
    }

    bool search(Vertex start, std::int64_t remaining, std::vector<std::uint64_t>& acc) {
        if (remaining == 0) {
            if (!masks.covers_all(acc.data()))
                return false;
            found = current;
            return true;
        }
        if (forced_pair_dead(start))
            return false;
        // Even taking every remaining vertex cannot cover a missing pair.
        {
            bool possible = true;
            std::int64_t left = masks.pairs;
            for (size_t i = 0; i < masks.words && possible; ++i) {
                int width = left >= 64 ? 64 : static_cast<int>(left);
                std::uint64_t full = width == 64 ? ~std::uint64_t{0}
                                                 : (std::uint64_t{1} << width) - 1;
                possible = ((acc[i] | suffix_or[start * masks.words + i]) & full) == full;
                left -= width;
            }
            if (!possible)
                return false;
        }
        for (Vertex v = start; v + remaining <= masks.n; ++v) {
            std::vector<std::uint64_t> next(acc);
            for (size_t i = 0; i < masks.words; ++i)
                next[i] |= masks.mask(v)[i];
            chosen[v] = true;
            current.push_back(v);
            if (search(v + 1, remaining - 1, next))
                return true;
            current.pop_back();
            chosen[v] = false;
        }
        return false;
    }
};

std::vector<Vertex> exact_search(const Graph& g, std::int64_t cap) {
    check_nontrivial(g.order());
    if (g.order() > cap)
        throw InvalidInput("graph has " + std::to_string(g.order()) +
                           " vertices, above the exact-search cap of " + std::to_string(cap) +
                           "; use greedy_resolving_set for an upper bound");
    DistanceMatrix dm = all_pairs_distances(g);
    PairMasks masks(dm);
    std::vector<Pair> forced = forced_pairs(dm);
    ExactSearch search(masks, forced);
    for (std::int64_t k = 1; k < g.order(); ++k) {
        std::vector<std::uint64_t> acc(masks.words, 0);
        if (search.search(0, k, acc))
            return search.found;
    }
    // V(G) minus one vertex always resolves, so the loop above cannot fail.
    throw std::logic_error("exact search exhausted all sizes");
}

} // namespace

ResolvingSetResult is_resolving_set(const DistanceMatrix& dm, std::span<const Vertex> s) {
    const std::uint32_t n = dm.order();
    ResolvingSetResult result;
    result.set.assign(s.begin(), s.end());
    std::sort(result.set.begin(), result.set.end());
    result.set.erase(std::unique(result.set.begin(), result.set.end()), result.set.end());
    for (Vertex w : result.set)
        if (w >= n)
            throw InvalidInput("vertex " + std::to_string(w) + " out of range [0, " +
                               std::to_string(n) + ")");
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool hit = false;
            for (Vertex w : result.set)
                if (dm.at(u, w) != dm.at(v, w)) {
                    hit = true;
                    break;
                }
            if (!hit) {
                result.is_resolving = false;
                result.witness = Pair{u, v};
                return result;
            }
        }
    result.is_resolving = true;
    return result;
}

std::vector<Pair> forced_pairs(const DistanceMatrix& dm) {
    return twin_pairs(dm);
}

std::int64_t metric_dimension_exact(const Graph& g, std::int64_t cap) {
    return static_cast<std::int64_t>(exact_search(g, cap).size());
}

std::vector<Vertex> minimum_resolving_set(const Graph& g, std::int64_t cap) {
    return exact_search(g, cap);
}

std::vector<Vertex> greedy_resolving_set(const Graph& g) {
    check_nontrivial(g.order());
    DistanceMatrix dm = all_pairs_distances(g);
    const std::uint32_t n = g.order();

    std::vector<Pair> unresolved;
    unresolved.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            unresolved.push_back(Pair{u, v});

    std::vector<Vertex> set;
    std::vector<bool> in_set(n, false);
    while (!unresolved.empty()) {
        Vertex best = 0;
        std::int64_t best_count = -1;
        for (Vertex w = 0; w < n; ++w) {
            if (in_set[w])
                continue;
            std::int64_t count = 0;
            auto dw = dm.row(w);
            for (const Pair& p : unresolved)
                count += dw[p.u] != dw[p.v];
            if (count > best_count) { // ties keep the smallest id
                best_count = count;
                best = w;
            }
        }
        in_set[best] = true;
        set.push_back(best);
        auto db = dm.row(best);
        std::erase_if(unresolved, [&](const Pair& p) { return db[p.u] != db[p.v]; });
    }
    std::sort(set.begin(), set.end());
    return set;
}

} // namespace rshare
