#pragma once

#include "families.hpp"
#include "graph.hpp"
#include "resolving.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rshare {

enum class InputFormat { auto_detect, edgelist, dimacs };
enum class GraphFormat { edgelist, dimacs };
enum class ReportFormat { json, csv, table };

// A graph together with where it came from. Labels are optional and only
// surface in reports; computation works on dense 0-based ids.
struct GraphDocument {
    Graph graph;
    std::vector<std::string> labels; // empty, or one unique label per vertex
    std::string source_format;       // "edgelist" | "dimacs" | "family"
    std::vector<std::string> warnings;
};

// One edge per line: two whitespace-separated labels. '#' lines and blank
// lines are ignored. Vertex ids are assigned by first appearance.
GraphDocument parse_edge_list(std::string_view text);

// DIMACS: 'c' comments, one 'p edge <n> <m>' header, 'e <u> <v>' lines with
// 1-based ids. An edge-count mismatch is a warning, not an error.
GraphDocument parse_dimacs(std::string_view text);

// Auto-detection: the first line that is neither blank nor a '#'/'c' comment
// selects DIMACS when it starts with 'p edge'.
GraphDocument parse_graph(std::string_view text, InputFormat format = InputFormat::auto_detect);

GraphDocument document_for_family(const FamilySpec& spec, bool allow_unverified = false);

std::string write_graph(const GraphDocument& doc, GraphFormat format);

// ShareReport plus the metadata the serialized report carries. Deliberately
// free of timestamps and thread counts so identical inputs render
// byte-identically.
struct ReportDocument {
    ShareReport report;
    std::int64_t edge_count = 0;
    std::vector<std::string> labels;
    std::string input_desc;
    std::string options_desc;
};

ReportDocument make_report_document(const GraphDocument& doc, const ShareReport& report,
                                    std::string input_desc, std::string options_desc);

std::string write_report(const ReportDocument& doc, ReportFormat format);

} // namespace rshare
