#include "rshare.h"

#include "closed_forms.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "rational.hpp"
#include "resolving.hpp"
#include "metric_dim.hpp"
#include "version.hpp"

#include <cstring>
#include <new>
#include <string>
#include <utility>

using namespace rshare;

struct rshare_graph {
    GraphDocument doc;
    std::string warnings_text;
};

struct rshare_report {
    ReportDocument doc;
    std::string index_text;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
rshare_status guarded(Fn&& fn) {
    try {
        fn();
        return RSHARE_OK;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return RSHARE_ERR_PARSE;
    } catch (const NotConnected& e) {
        g_last_error = e.what();
        return RSHARE_ERR_DISCONNECTED;
    } catch (const InvalidInput& e) {
        g_last_error = e.what();
        return RSHARE_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return RSHARE_ERR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RSHARE_ERR_INTERNAL;
    }
}

rshare_status invalid(const char* message) {
    g_last_error = message;
    return RSHARE_ERR_INVALID;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rshare_graph* wrap(GraphDocument doc) {
    auto* g = new rshare_graph{std::move(doc), {}};
    for (const auto& w : g->doc.warnings) {
        if (!g->warnings_text.empty())
            g->warnings_text += '\n';
        g->warnings_text += w;
    }
    return g;
}

} // namespace

extern "C" {

const char* rshare_version(void) {
    return kVersion;
}

const char* rshare_last_error(void) {
    return g_last_error.c_str();
}

void rshare_string_free(char* s) {
    delete[] s;
}

rshare_status rshare_graph_build(int64_t vertex_count, const int64_t* endpoints,
                                 int64_t edge_count, rshare_graph** out) {
    if (!out || (edge_count > 0 && !endpoints))
        return invalid("null argument");
    return guarded([&] {
        std::vector<std::pair<std::int64_t, std::int64_t>> edges;
        edges.reserve(static_cast<size_t>(edge_count));
        for (int64_t i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        GraphDocument doc;
        doc.graph = Graph::from_edges(vertex_count, edges);
        doc.source_format = "edgelist";
        *out = wrap(std::move(doc));
    });
}

rshare_status rshare_graph_from_family(const char* family_text, int allow_unverified,
                                       rshare_graph** out) {
    if (!out || !family_text)
        return invalid("null argument");
    return guarded([&] {
        FamilySpec spec = FamilySpec::parse(family_text);
        *out = wrap(document_for_family(spec, allow_unverified != 0));
    });
}

rshare_status rshare_graph_parse(const char* text, rshare_input_format format,
                                 rshare_graph** out) {
    if (!out || !text)
        return invalid("null argument");
    return guarded([&] {
        InputFormat f = format == RSHARE_INPUT_EDGELIST ? InputFormat::edgelist
                        : format == RSHARE_INPUT_DIMACS ? InputFormat::dimacs
                                                        : InputFormat::auto_detect;
        *out = wrap(parse_graph(text, f));
    });
}

void rshare_graph_free(rshare_graph* g) {
    delete g;
}

int64_t rshare_graph_order(const rshare_graph* g) {
    return g ? g->doc.graph.order() : -1;
}

int64_t rshare_graph_size(const rshare_graph* g) {
    return g ? g->doc.graph.size() : -1;
}

int rshare_graph_is_connected(const rshare_graph* g) {
    return g && is_connected(g->doc.graph) ? 1 : 0;
}

const char* rshare_graph_source(const rshare_graph* g) {
    return g ? g->doc.source_format.c_str() : "";
}

const char* rshare_graph_warnings(const rshare_graph* g) {
    return g ? g->warnings_text.c_str() : "";
}

rshare_status rshare_graph_write(const rshare_graph* g, rshare_graph_format format,
                                 char** out_text) {
    if (!g || !out_text)
        return invalid("null argument");
    return guarded([&] {
        GraphFormat f = format == RSHARE_GRAPH_DIMACS ? GraphFormat::dimacs
                                                      : GraphFormat::edgelist;
        *out_text = copy_string(write_graph(g->doc, f));
    });
}

rshare_status rshare_compute(const rshare_graph* g, const rshare_compute_options* options,
                             rshare_report** out) {
    if (!g || !out)
        return invalid("null argument");
    return guarded([&] {
        ComputeOptions co;
        std::string input_desc = "graph";
        std::string options_desc;
        if (options) {
            if (options->threads < 0)
                throw InvalidInput("threads must be >= 0");
            co.threads = static_cast<unsigned>(options->threads);
            co.per_pair = options->per_pair != 0;
            if (options->input_desc)
                input_desc = options->input_desc;
            if (co.per_pair)
                options_desc = "per-pair";
        }
        ShareReport report = resolving_index(g->doc.graph, co);
        auto* r = new rshare_report{
            make_report_document(g->doc, report, std::move(input_desc),
                                 std::move(options_desc)),
            {}};
        r->index_text = fraction_str(r->doc.report.index);
        *out = r;
    });
}

void rshare_report_free(rshare_report* r) {
    delete r;
}

rshare_status rshare_report_render(const rshare_report* r, rshare_report_format format,
                                   char** out_text) {
    if (!r || !out_text)
        return invalid("null argument");
    return guarded([&] {
        ReportFormat f = format == RSHARE_REPORT_JSON  ? ReportFormat::json
                         : format == RSHARE_REPORT_CSV ? ReportFormat::csv
                                                       : ReportFormat::table;
        *out_text = copy_string(write_report(r->doc, f));
    });
}

const char* rshare_report_index(const rshare_report* r) {
    return r ? r->index_text.c_str() : "";
}

int64_t rshare_report_order(const rshare_report* r) {
    return r ? r->doc.report.n : -1;
}

rshare_status rshare_metric_dimension(const rshare_graph* g, int64_t exact_cap,
                                      int64_t* out_value, int* out_is_exact) {
    if (!g || !out_value || !out_is_exact)
        return invalid("null argument");
    return guarded([&] {
        const int64_t cap = exact_cap > 0 ? exact_cap : 20;
        if (g->doc.graph.order() <= cap) {
            *out_value = metric_dimension_exact(g->doc.graph, cap);
            *out_is_exact = 1;
        } else {
            *out_value = static_cast<int64_t>(greedy_resolving_set(g->doc.graph).size());
            *out_is_exact = 0;
        }
    });
}

rshare_status rshare_verify_family(const char* kind, const char* range_or_parts,
                                   int64_t brute_cap, char** out_text, int* out_has_novel) {
    if (!kind || !out_text || !out_has_novel)
        return invalid("null argument");
    return guarded([&] {
        VerifyOutcome outcome = run_verify(kind, range_or_parts ? range_or_parts : "",
                                           brute_cap > 0 ? brute_cap : 200);
        *out_text = copy_string(outcome.text);
        *out_has_novel = outcome.novel ? 1 : 0;
    });
}

rshare_status rshare_known_discrepancies(char** out_text) {
    if (!out_text)
        return invalid("null argument");
    return guarded([&] {
        std::string text;
        for (const auto& entry : discrepancy_report()) {
            text += entry.family + " (" + entry.range + ")\n";
            text += "  published: " + entry.published + "\n";
            text += "  validated: " + entry.validated + "\n";
            text += "  note: " + entry.note + "\n";
        }
        *out_text = copy_string(text);
    });
}

} // extern "C"
