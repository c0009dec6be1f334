#pragma once

#include "graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rshare {

enum class FamilyKind {
    path,
    cycle,
    complete,
    complete_multipartite,
    wheel,
    friendship,
    petersen,
};

std::string_view family_kind_name(FamilyKind kind);

// Named graph family plus parameters. Canonical text forms: "path:10",
// "cycle:7", "complete:5", "kpartite:2,3,4", "wheel:9", "friendship:4",
// "petersen".
struct FamilySpec {
    FamilyKind kind = FamilyKind::petersen;
    std::int64_t n = 0;                // all kinds except kpartite/petersen
    std::vector<std::int64_t> parts;   // kpartite only

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;

    // Parameter bounds under which the closed forms are stated. With
    // allow_unverified, k-partite parts of size 1 are admitted (no
    // closed-form comparison is possible for them).
    void validate(bool allow_unverified = false) const;

    std::int64_t vertex_count() const;
};

// Canonical vertex numbering:
//   path/cycle     v0..v(n-1) in walk order
//   complete       all pairs
//   kpartite       parts in given order, consecutive ids
//   wheel          rim cycle 0..n-2, center n-1
//   friendship     triangle i = {2i, 2i+1}, shared center 2n
//   petersen       the 2-subsets of {1..5} in lexicographic order, edges
//                  between disjoint subsets
Graph generate(const FamilySpec& spec, bool allow_unverified = false);

} // namespace rshare
