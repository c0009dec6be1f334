#include "closed_forms.hpp"

#include "errors.hpp"
#include "resolving.hpp"

#include <charconv>

namespace rshare {

namespace {

Rational path_index(std::int64_t n_in) {
    // P2 is the complete graph on two vertices; the summation forms below
    // are stated for n >= 3.
    if (n_in == 2)
        return Rational(1);
    const BigInt n(n_in);
    Rational total(0);
    if (n_in % 2 == 0) {
        for (BigInt i = 1; i <= n / 2; ++i)
            total += Rational(2 * n * n - 3 * n - 4 * i + 4,
                              n * (n - 1) * (n - 1) - 2 * (n - 1) * (i - 1));
    } else {
        total = Rational(2 * n * n - 3 * n - 1, 2 * n * (n - 1) * (n - 1));
        for (BigInt i = 1; i <= (n - 1) / 2; ++i)
            total += Rational(2 * n * n * n - 3 * n * n - 4 * n * (i - 1) + 1,
                              n * n * (n - 1) * (n - 1) - 2 * n * (n - 1) * (i - 1));
    }
    return total;
}

Rational cycle_index(std::int64_t n_in) {
    const BigInt n(n_in);
    if (n_in % 2 == 0)
        return Rational(n * (n - 1), n * n - 2 * n + 2);
    return Rational(n, n - 1);
}

Rational kpartite_index(const std::vector<std::int64_t>& parts) {
    Rational total(0);
    for (size_t i = 0; i < parts.size(); ++i) {
        const BigInt ni(parts[i]);
        Rational inv_factor(ni - 1, ni);
        Rational share_sum(ni - 1, 2 * ni);
        for (size_t t = 0; t < parts.size(); ++t) {
            if (t == i)
                continue;
            inv_factor += parts[t];
            share_sum += Rational(BigInt(parts[t]), ni + parts[t]);
        }
        total += Rational(ni) * share_sum / inv_factor;
    }
    return total;
}

Rational wheel_index(std::int64_t n_in) {
    const BigInt n(n_in);
    return Rational((n - 3) * (n * n + 8), 2 * (n - 2) * (4 * n - 13));
}

Rational friendship_index_published(std::int64_t n_in) {
    const BigInt n(n_in);
    return Rational(2 * n * n * n - n * n + 4 * n - 4, 4 * n * (3 * n - 2));
}

// The published friendship statement does not match its own per-vertex
// averages; recombining those averages over all 2n+1 vertices gives this
// expression, which definitional computation confirms.
Rational friendship_index_revised(std::int64_t n_in) {
    const BigInt n(n_in);
    return Rational(2 * n * n * n + n * n + 2 * n - 2, 2 * n * (3 * n - 2));
}

const DiscrepancyEntry* known_discrepancy(FamilyKind kind) {
    for (const auto& entry : discrepancy_report())
        if (entry.family == family_kind_name(kind) && entry.published != entry.validated)
            return &entry;
    return nullptr;
}

std::int64_t parse_range_int(std::string_view tok) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InvalidInput("invalid range bound: '" + std::string(tok) + "'");
    return value;
}

} // namespace

std::string_view formula_status_name(FormulaStatus status) {
    switch (status) {
    case FormulaStatus::confirmed: return "confirmed";
    case FormulaStatus::corrected: return "corrected";
    case FormulaStatus::unverified: return "unverified";
    }
    return "?";
}

Rational published_index(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
    case FamilyKind::path: return path_index(spec.n);
    case FamilyKind::cycle: return cycle_index(spec.n);
    case FamilyKind::complete: return Rational(spec.n, 2);
    case FamilyKind::complete_multipartite: return kpartite_index(spec.parts);
    case FamilyKind::wheel: return wheel_index(spec.n);
    case FamilyKind::friendship: return friendship_index_published(spec.n);
    case FamilyKind::petersen: return Rational(5, 3);
    }
    throw std::logic_error("unreachable family kind");
}

ClosedFormResult validated_index(const FamilySpec& spec, std::int64_t brute_cap,
                                 unsigned threads) {
    ClosedFormResult result;
    result.spec = spec;
    result.published = published_index(spec);

    const bool is_friendship = spec.kind == FamilyKind::friendship;
    const Rational expected =
        is_friendship ? friendship_index_revised(spec.n) : result.published;

    if (spec.vertex_count() > brute_cap) {
        result.status = FormulaStatus::unverified;
        result.validated = expected;
        result.note = "definitional check skipped: " + std::to_string(spec.vertex_count()) +
                      " vertices exceed the cap of " + std::to_string(brute_cap);
        return result;
    }

    ComputeOptions options;
    options.threads = threads;
    const Rational computed = resolving_index(generate(spec), options).index;
    result.validated = computed;

    if (computed == expected) {
        if (expected == result.published) {
            result.status = FormulaStatus::confirmed;
        } else {
            result.status = FormulaStatus::corrected;
            if (const auto* entry = known_discrepancy(spec.kind))
                result.note = entry->note;
        }
        return result;
    }

    // The definitional value matches neither the published formula nor the
    // recorded correction: nothing in the ledger explains it.
    result.novel = true;
    result.status = computed == result.published ? FormulaStatus::confirmed
                                                 : FormulaStatus::corrected;
    result.note = "computed index " + fraction_str(computed) +
                  " does not match the recorded expectation " + fraction_str(expected);
    return result;
}

const std::vector<DiscrepancyEntry>& discrepancy_report() {
    static const std::vector<DiscrepancyEntry> entries = {
        {
            "friendship",
            "n >= 2",
            "(2n^3 - n^2 + 4n - 4) / (4n(3n - 2))",
            "(2n^3 + n^2 + 2n - 2) / (2n(3n - 2))",
            "published statement disagrees with its own per-vertex averages; "
            "summing ar_c = 1/(2n) plus 2n copies of ar_u = (n+1)(2n-1)/(4n(3n-2)) "
            "gives the revised expression, confirmed definitionally for n = 2..20",
        },
        {
            "wheel",
            "n >= 6",
            "(n - 3)(n^2 + 8) / (2(n - 2)(4n - 13))",
            "(n - 3)(n^2 + 8) / (2(n - 2)(4n - 13))",
            "a published derivation displays denominator 6(n-2)(4n-13) in its final "
            "step; the stated denominator 2(n-2)(4n-13) is the consistent one and is "
            "confirmed definitionally for n = 6..30",
        },
    };
    return entries;
}

VerifyOutcome run_verify(const std::string& kind, const std::string& range_or_parts,
                         std::int64_t brute_cap, unsigned threads) {
    std::vector<FamilySpec> specs;
    if (kind == "petersen") {
        if (!range_or_parts.empty())
            throw InvalidInput("family petersen takes no range");
        specs.push_back(FamilySpec::parse("petersen"));
    } else if (kind == "kpartite") {
        if (range_or_parts.empty())
            throw InvalidInput("family kpartite needs part sizes, e.g. 2,3,4");
        specs.push_back(FamilySpec::parse("kpartite:" + range_or_parts));
    } else {
        auto sep = range_or_parts.find("..");
        if (sep == std::string::npos)
            throw InvalidInput("range must look like A..B, got '" + range_or_parts + "'");
        std::int64_t lo = parse_range_int(range_or_parts.substr(0, sep));
        std::int64_t hi = parse_range_int(range_or_parts.substr(sep + 2));
        if (lo > hi)
            throw InvalidInput("empty range " + range_or_parts);
        for (std::int64_t n = lo; n <= hi; ++n)
            specs.push_back(FamilySpec::parse(kind + ":" + std::to_string(n)));
    }

    VerifyOutcome outcome;
    for (const auto& spec : specs) {
        ClosedFormResult r = validated_index(spec, brute_cap, threads);
        std::string line = spec.to_string() + "  published=" + fraction_str(r.published);
        if (r.status == FormulaStatus::unverified)
            line += "  expected=" + fraction_str(r.validated);
        else
            line += "  computed=" + fraction_str(r.validated);
        line += "  ";
        line += formula_status_name(r.status);
        if (r.novel) {
            line += " (NOVEL MISMATCH: " + r.note + ")";
            outcome.novel = true;
        } else if (r.status == FormulaStatus::corrected) {
            line += " (known discrepancy)";
        } else if (r.status == FormulaStatus::unverified) {
            line += " (" + r.note + ")";
        }
        outcome.text += line + "\n";
    }
    return outcome;
}

} // namespace rshare
