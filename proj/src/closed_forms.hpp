#pragma once

#include "families.hpp"
#include "rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rshare {

enum class FormulaStatus { confirmed, corrected, unverified };

std::string_view formula_status_name(FormulaStatus status);

// Published closed form next to the value the library actually vouches for.
// `novel` flags a mismatch that is NOT in the known-discrepancy ledger; it is
// the signal the CLI turns into exit code 2.
struct ClosedFormResult {
    FamilySpec spec;
    Rational published;
    Rational validated;
    FormulaStatus status = FormulaStatus::unverified;
    bool novel = false;
    std::string note;
};

// Exact evaluation of the closed form exactly as printed, including the
// even/odd case splits for paths and cycles. Throws outside the formula's
// stated parameter range.
Rational published_index(const FamilySpec& spec);

// Runs the published formula and, when the graph has at most brute_cap
// vertices, the definitional computation; reports whether they agree.
ClosedFormResult validated_index(const FamilySpec& spec, std::int64_t brute_cap = 200,
                                 unsigned threads = 0);

// Known places where the published closed forms and definitional computation
// part ways (or where a published derivation carries a typo).
struct DiscrepancyEntry {
    std::string family;
    std::string range;
    std::string published;
    std::string validated;
    std::string note;
};

const std::vector<DiscrepancyEntry>& discrepancy_report();

// Per-parameter verification sweep behind the CLI `verify` subcommand.
// `range_or_parts` is "A..B" for ranged families, a comma list of part sizes
// for kpartite, and empty for petersen.
struct VerifyOutcome {
    std::string text;
    bool novel = false;
};

VerifyOutcome run_verify(const std::string& kind, const std::string& range_or_parts,
                         std::int64_t brute_cap = 200, unsigned threads = 0);

} // namespace rshare
