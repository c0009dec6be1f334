#include "families.hpp"

#include "errors.hpp"

#include <charconv>
#include <numeric>

namespace rshare {

namespace {

std::int64_t parse_int(std::string_view tok, std::string_view what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InvalidInput("invalid " + std::string(what) + ": '" + std::string(tok) + "'");
    return value;
}

using EdgeList = std::vector<std::pair<std::int64_t, std::int64_t>>;

} // namespace

std::string_view family_kind_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_multipartite: return "kpartite";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::friendship: return "friendship";
    case FamilyKind::petersen: return "petersen";
    }
    return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
    FamilySpec spec;
    std::string_view kind = text;
    std::string_view params;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        kind = text.substr(0, colon);
        params = text.substr(colon + 1);
    }

    if (kind == "path") spec.kind = FamilyKind::path;
    else if (kind == "cycle") spec.kind = FamilyKind::cycle;
    else if (kind == "complete") spec.kind = FamilyKind::complete;
    else if (kind == "kpartite") spec.kind = FamilyKind::complete_multipartite;
    else if (kind == "wheel") spec.kind = FamilyKind::wheel;
    else if (kind == "friendship") spec.kind = FamilyKind::friendship;
    else if (kind == "petersen") spec.kind = FamilyKind::petersen;
    else
        throw InvalidInput("unknown family '" + std::string(kind) +
                           "' (expected path, cycle, complete, kpartite, wheel, "
                           "friendship or petersen)");

    if (spec.kind == FamilyKind::petersen) {
        if (!params.empty())
            throw InvalidInput("family petersen takes no parameters");
        return spec;
    }
    if (params.empty())
        throw InvalidInput("family " + std::string(kind) + " needs parameters, e.g. '" +
                           std::string(kind) +
                           (spec.kind == FamilyKind::complete_multipartite ? ":2,3" : ":5") + "'");

    if (spec.kind == FamilyKind::complete_multipartite) {
        size_t start = 0;
        while (start <= params.size()) {
            size_t comma = params.find(',', start);
            if (comma == std::string_view::npos)
                comma = params.size();
            spec.parts.push_back(parse_int(params.substr(start, comma - start), "part size"));
            start = comma + 1;
        }
    } else {
        spec.n = parse_int(params, "family parameter");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out{family_kind_name(kind)};
    if (kind == FamilyKind::petersen)
        return out;
    out += ':';
    if (kind == FamilyKind::complete_multipartite) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts[i]);
        }
    } else {
        out += std::to_string(n);
    }
    return out;
}

void FamilySpec::validate(bool allow_unverified) const {
    auto fail = [&](const std::string& constraint) {
        throw InvalidInput("family " + to_string() + ": " + constraint);
    };
    switch (kind) {
    case FamilyKind::path:
        if (n < 2) fail("path requires n >= 2");
        break;
    case FamilyKind::cycle:
        if (n < 3) fail("cycle requires n >= 3");
        break;
    case FamilyKind::complete:
        if (n < 2) fail("complete requires n >= 2");
        break;
    case FamilyKind::complete_multipartite: {
        if (parts.size() < 2) fail("kpartite requires at least 2 parts");
        std::int64_t min_part = allow_unverified ? 1 : 2;
        for (std::int64_t p : parts)
            if (p < min_part)
                fail(allow_unverified
                         ? "every part size must be >= 1"
                         : "every part size must be >= 2 (pass --allow-unverified to lift)");
        break;
    }
    case FamilyKind::wheel:
        if (n < 6) fail("wheel requires n >= 6 (n counts the rim cycle plus the center)");
        break;
    case FamilyKind::friendship:
        if (n < 2) fail("friendship requires n >= 2 triangles");
        break;
    case FamilyKind::petersen:
        break;
    }
}

std::int64_t FamilySpec::vertex_count() const {
    switch (kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
    case FamilyKind::wheel:
        return n;
    case FamilyKind::complete_multipartite:
        return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    case FamilyKind::friendship:
        return 2 * n + 1;
    case FamilyKind::petersen:
        return 10;
    }
    return 0;
}

Graph generate(const FamilySpec& spec, bool allow_unverified) {
    spec.validate(allow_unverified);
    EdgeList edges;
    const std::int64_t n = spec.n;
    switch (spec.kind) {
    case FamilyKind::path:
        for (std::int64_t i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        break;
    case FamilyKind::cycle:
        for (std::int64_t i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        break;
    case FamilyKind::complete:
        for (std::int64_t u = 0; u < n; ++u)
            for (std::int64_t v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        break;
    case FamilyKind::complete_multipartite: {
        std::vector<std::int64_t> first(spec.parts.size() + 1, 0);
        for (size_t i = 0; i < spec.parts.size(); ++i)
            first[i + 1] = first[i] + spec.parts[i];
        for (size_t i = 0; i < spec.parts.size(); ++i)
            for (size_t j = i + 1; j < spec.parts.size(); ++j)
                for (std::int64_t a = first[i]; a < first[i + 1]; ++a)
                    for (std::int64_t b = first[j]; b < first[j + 1]; ++b)
                        edges.emplace_back(a, b);
        break;
    }
    case FamilyKind::wheel:
        for (std::int64_t i = 0; i < n - 1; ++i) {
            edges.emplace_back(i, (i + 1) % (n - 1)); // rim C_{n-1}
            edges.emplace_back(i, n - 1);             // spoke
        }
        break;
    case FamilyKind::friendship:
        for (std::int64_t i = 0; i < n; ++i) {
            edges.emplace_back(2 * i, 2 * i + 1);
            edges.emplace_back(2 * i, 2 * n);
            edges.emplace_back(2 * i + 1, 2 * n);
        }
        break;
    case FamilyKind::petersen: {
        std::vector<std::pair<int, int>> subsets;
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b)
                subsets.emplace_back(a, b);
        for (size_t i = 0; i < subsets.size(); ++i)
            for (size_t j = i + 1; j < subsets.size(); ++j) {
                auto [a, b] = subsets[i];
                auto [c, d] = subsets[j];
                if (a != c && a != d && b != c && b != d)
                    edges.emplace_back(static_cast<std::int64_t>(i),
                                       static_cast<std::int64_t>(j));
            }
        break;
    }
    }
    return Graph::from_edges(spec.vertex_count(), edges);
}

} // namespace rshare
