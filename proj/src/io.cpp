#include "io.hpp"

#include "errors.hpp"
#include "rational.hpp"
#include "version.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace rshare {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        auto line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::int64_t parse_id(std::string_view tok, int line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

GraphDocument parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, std::int64_t> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;

    auto intern = [&](std::string_view label) {
        auto [it, inserted] = ids.try_emplace(std::string(label),
                                              static_cast<std::int64_t>(labels.size()));
        if (inserted)
            labels.emplace_back(label);
        return it->second;
    };

    int line_no = 0;
    for (auto line : split_lines(text)) {
        ++line_no;
        if (is_blank(line))
            continue;
        auto first = line.find_first_not_of(" \t");
        if (line[first] == '#')
            continue;
        auto tokens = tokenize(line);
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
        if (tokens[0] == tokens[1])
            throw ParseError(line_no, "self-loop '" + std::string(tokens[0]) + "'");
        const std::int64_t u = intern(tokens[0]);
        const std::int64_t v = intern(tokens[1]);
        edges.emplace_back(u, v);
    }

    if (labels.empty())
        throw InvalidInput("edge list contains no edges");

    GraphDocument doc;
    doc.graph = Graph::from_edges(static_cast<std::int64_t>(labels.size()), edges);
    doc.labels = std::move(labels);
    doc.source_format = "edgelist";
    return doc;
}

GraphDocument parse_dimacs(std::string_view text) {
    bool have_header = false;
    std::int64_t n = 0;
    std::int64_t declared_edges = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;

    int line_no = 0;
    for (auto line : split_lines(text)) {
        ++line_no;
        if (is_blank(line))
            continue;
        auto tokens = tokenize(line);
        if (tokens[0] == "c")
            continue;
        if (tokens[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate 'p' header");
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = parse_id(tokens[2], line_no);
            declared_edges = parse_id(tokens[3], line_no);
            if (n < 1)
                throw ParseError(line_no, "vertex count must be positive");
            have_header = true;
            continue;
        }
        if (tokens[0] == "e") {
            if (!have_header)
                throw ParseError(line_no, "edge line before 'p edge' header");
            if (tokens.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            std::int64_t u = parse_id(tokens[1], line_no);
            std::int64_t v = parse_id(tokens[2], line_no);
            for (std::int64_t id : {u, v})
                if (id < 1 || id > n)
                    throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                                  " out of range [1, " + std::to_string(n) + "]");
            if (u == v)
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw ParseError(line_no, "unrecognized line '" + std::string(tokens[0]) + " ...'");
    }

    if (!have_header)
        throw InvalidInput("missing 'p edge' header");

    GraphDocument doc;
    doc.graph = Graph::from_edges(n, edges);
    doc.source_format = "dimacs";
    if (declared_edges != static_cast<std::int64_t>(edges.size()))
        doc.warnings.push_back("header declares " + std::to_string(declared_edges) +
                               " edges, found " + std::to_string(edges.size()));
    return doc;
}

GraphDocument parse_graph(std::string_view text, InputFormat format) {
    if (format == InputFormat::edgelist)
        return parse_edge_list(text);
    if (format == InputFormat::dimacs)
        return parse_dimacs(text);

    for (auto line : split_lines(text)) {
        if (is_blank(line))
            continue;
        auto first = line.find_first_not_of(" \t");
        if (line[first] == '#')
            continue;
        auto tokens = tokenize(line);
        if (tokens[0] == "c")
            continue; // either a DIMACS comment or an ambiguous edge; skip
        if (tokens[0] == "p" && tokens.size() >= 2 && tokens[1] == "edge")
            return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

GraphDocument document_for_family(const FamilySpec& spec, bool allow_unverified) {
    GraphDocument doc;
    doc.graph = generate(spec, allow_unverified);
    doc.source_format = "family";
    return doc;
}

std::string write_graph(const GraphDocument& doc, GraphFormat format) {
    const auto edges = doc.graph.edges();
    std::string out;
    if (format == GraphFormat::dimacs) {
        out = "p edge " + std::to_string(doc.graph.order()) + " " +
              std::to_string(edges.size()) + "\n";
        for (const auto& [u, v] : edges)
            out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
        return out;
    }
    auto label = [&](Vertex v) {
        return doc.labels.empty() ? std::to_string(v) : doc.labels[v];
    };
    for (const auto& [u, v] : edges)
        out += label(u) + " " + label(v) + "\n";
    return out;
}

ReportDocument make_report_document(const GraphDocument& doc, const ShareReport& report,
                                    std::string input_desc, std::string options_desc) {
    ReportDocument rd;
    rd.report = report;
    rd.edge_count = doc.graph.size();
    rd.labels = doc.labels;
    rd.input_desc = std::move(input_desc);
    rd.options_desc = std::move(options_desc);
    return rd;
}

namespace {

std::string label_of(const ReportDocument& doc, Vertex v) {
    return doc.labels.empty() ? std::string{} : doc.labels[v];
}

std::string write_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["input"] = doc.input_desc;
    j["n"] = doc.report.n;
    j["m"] = doc.edge_count;
    j["index"] = {{"rational", fraction_str(doc.report.index)},
                  {"decimal", decimal_str(doc.report.index)}};
    auto& per_vertex = j["per_vertex"] = nlohmann::ordered_json::array();
    for (const auto& vs : doc.report.per_vertex)
        per_vertex.push_back({{"id", vs.id},
                              {"label", label_of(doc, vs.id)},
                              {"avg_share_rational", fraction_str(vs.avg_share)},
                              {"avg_share_decimal", decimal_str(vs.avg_share)},
                              {"resolvent_count", vs.resolvent_count}});
    if (doc.report.per_pair) {
        auto& per_pair = j["per_pair"] = nlohmann::ordered_json::array();
        for (const auto& pd : *doc.report.per_pair)
            per_pair.push_back({{"u", pd.pair.u},
                                {"v", pd.pair.v},
                                {"size", pd.size},
                                {"members", pd.members}});
    }
    j["options"] = doc.options_desc;
    j["version"] = kVersion;
    return j.dump(2) + "\n";
}

std::string write_csv(const ReportDocument& doc) {
    std::string out = "vertex,label,avg_share,resolvent_count\n";
    for (const auto& vs : doc.report.per_vertex)
        out += std::to_string(vs.id) + "," + csv_field(label_of(doc, vs.id)) + "," +
               fraction_str(vs.avg_share) + "," + std::to_string(vs.resolvent_count) + "\n";
    out += "INDEX,," + fraction_str(doc.report.index) + ",\n";
    return out;
}

std::string write_table(const ReportDocument& doc) {
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"vertex", "label", "avg_share", "decimal", "resolvent_count"});
    for (const auto& vs : doc.report.per_vertex)
        rows.push_back({std::to_string(vs.id), label_of(doc, vs.id),
                        fraction_str(vs.avg_share), decimal_str(vs.avg_share),
                        std::to_string(vs.resolvent_count)});

    std::array<size_t, 5> width{};
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    out << "input: " << doc.input_desc << "\n";
    out << "n = " << doc.report.n << ", m = " << doc.edge_count;
    if (!doc.options_desc.empty())
        out << ", options: " << doc.options_desc;
    out << "\n\n";
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c)
                out << "  ";
            out << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        out << "\n";
    }

    if (doc.report.per_pair) {
        out << "\npair  |R|  members\n";
        for (const auto& pd : *doc.report.per_pair) {
            out << "(" << pd.pair.u << "," << pd.pair.v << ")  " << pd.size << "  {";
            for (size_t i = 0; i < pd.members.size(); ++i) {
                if (i)
                    out << ", ";
                out << pd.members[i];
            }
            out << "}\n";
        }
    }

    out << "\nindex decimal = " << decimal_str(doc.report.index) << "\n";
    out << "index = " << fraction_str(doc.report.index) << "\n";
    return out.str();
}

} // namespace

std::string write_report(const ReportDocument& doc, ReportFormat format) {
    switch (format) {
    case ReportFormat::json: return write_json(doc);
    case ReportFormat::csv: return write_csv(doc);
    case ReportFormat::table: return write_table(doc);
    }
    throw std::logic_error("unreachable report format");
}

} // namespace rshare
