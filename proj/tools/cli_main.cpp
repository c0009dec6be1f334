// Command-line front end. Everything goes through the C API in rshare.h so
// the binary exercises the same surface other language bindings would use.

#include <rshare.h>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct GraphDeleter {
    void operator()(rshare_graph* g) const { rshare_graph_free(g); }
};
struct ReportDeleter {
    void operator()(rshare_report* r) const { rshare_report_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { rshare_string_free(s); }
};
using GraphHandle = std::unique_ptr<rshare_graph, GraphDeleter>;
using ReportHandle = std::unique_ptr<rshare_report, ReportDeleter>;
using StringHandle = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(1);
}

[[noreturn]] void fail_api() {
    fail(rshare_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct InputOptions {
    std::string input_file;
    std::string family;
    std::string format = "auto";
    bool allow_unverified = false;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    auto* input = cmd->add_option("--input", opts.input_file, "Graph file to read");
    auto* family = cmd->add_option(
        "--family", opts.family,
        "Family spec: path:N, cycle:N, complete:N, kpartite:A,B,..., wheel:N, "
        "friendship:N, petersen");
    cmd->add_option("--format", opts.format, "Input file format")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
    cmd->add_flag("--allow-unverified", opts.allow_unverified,
                  "Admit k-partite parts of size 1 (no closed-form comparison)");
    input->excludes(family);
    family->excludes(input);
}

// Loads the graph (file or family) and builds the report's input description.
GraphHandle load_graph(const InputOptions& opts, std::string& input_desc) {
    rshare_graph* raw = nullptr;
    if (!opts.family.empty()) {
        if (rshare_graph_from_family(opts.family.c_str(), opts.allow_unverified, &raw) !=
            RSHARE_OK)
            fail_api();
        input_desc = "family " + opts.family;
    } else if (!opts.input_file.empty()) {
        std::string text = read_file(opts.input_file);
        rshare_input_format format = opts.format == "edgelist" ? RSHARE_INPUT_EDGELIST
                                     : opts.format == "dimacs" ? RSHARE_INPUT_DIMACS
                                                               : RSHARE_INPUT_AUTO;
        if (rshare_graph_parse(text.c_str(), format, &raw) != RSHARE_OK)
            fail_api();
        input_desc = std::string(rshare_graph_source(raw)) + " " + opts.input_file;
    } else {
        fail("one of --input or --family is required");
    }
    GraphHandle graph(raw);
    if (const char* warnings = rshare_graph_warnings(raw); warnings[0] != '\0')
        std::cerr << "warning: " << warnings << "\n";
    return graph;
}

int run_compute(const InputOptions& input, const std::string& output, bool per_pair,
                std::int64_t threads) {
    std::string input_desc;
    GraphHandle graph = load_graph(input, input_desc);

    rshare_compute_options options{threads, per_pair ? 1 : 0, input_desc.c_str()};
    rshare_report* raw = nullptr;
    if (rshare_compute(graph.get(), &options, &raw) != RSHARE_OK)
        fail_api();
    ReportHandle report(raw);

    rshare_report_format format = output == "json"  ? RSHARE_REPORT_JSON
                                  : output == "csv" ? RSHARE_REPORT_CSV
                                                    : RSHARE_REPORT_TABLE;
    char* text = nullptr;
    if (rshare_report_render(report.get(), format, &text) != RSHARE_OK)
        fail_api();
    StringHandle owned(text);
    std::cout << text;
    return 0;
}

int run_gen(const InputOptions& input, const std::string& output) {
    std::string input_desc;
    GraphHandle graph = load_graph(input, input_desc);
    char* text = nullptr;
    rshare_graph_format format =
        output == "dimacs" ? RSHARE_GRAPH_DIMACS : RSHARE_GRAPH_EDGELIST;
    if (rshare_graph_write(graph.get(), format, &text) != RSHARE_OK)
        fail_api();
    StringHandle owned(text);
    std::cout << text;
    return 0;
}

int run_verify(const std::string& family, const std::string& range,
               const std::vector<std::string>& parts, std::int64_t cap) {
    std::vector<std::string> args;
    if (family == "kpartite") {
        if (parts.empty())
            fail("verify --family kpartite needs at least one --parts list");
        args = parts;
    } else {
        if (!parts.empty())
            fail("--parts is only meaningful with --family kpartite");
        args.push_back(range);
    }

    bool novel = false;
    for (const auto& arg : args) {
        char* text = nullptr;
        int has_novel = 0;
        if (rshare_verify_family(family.c_str(), arg.c_str(), cap, &text, &has_novel) !=
            RSHARE_OK)
            fail_api();
        StringHandle owned(text);
        std::cout << text;
        novel = novel || has_novel != 0;
    }
    return novel ? 2 : 0;
}

int run_dim(const InputOptions& input, std::int64_t exact_cap) {
    std::string input_desc;
    GraphHandle graph = load_graph(input, input_desc);
    int64_t value = 0;
    int is_exact = 0;
    if (rshare_metric_dimension(graph.get(), exact_cap, &value, &is_exact) != RSHARE_OK)
        fail_api();
    if (is_exact)
        std::cout << "metric dimension = " << value << " (exact)\n";
    else
        std::cout << "metric dimension <= " << value
                  << " (greedy upper bound; graph exceeds --exact-cap)\n";
    return 0;
}

int run_bench(const std::string& family, int repeat, std::int64_t threads) {
    rshare_graph* raw = nullptr;
    if (rshare_graph_from_family(family.c_str(), 0, &raw) != RSHARE_OK)
        fail_api();
    GraphHandle graph(raw);

    const double n = static_cast<double>(rshare_graph_order(graph.get()));
    const double pairs = n * (n - 1) / 2;
    std::printf("family %s: n=%.0f, m=%lld, pairs=%.0f, threads=%lld\n", family.c_str(), n,
                static_cast<long long>(rshare_graph_size(graph.get())), pairs,
                static_cast<long long>(threads));

    double best = 0;
    for (int rep = 1; rep <= repeat; ++rep) {
        rshare_compute_options options{threads, 0, family.c_str()};
        rshare_report* report = nullptr;
        auto start = std::chrono::steady_clock::now();
        if (rshare_compute(graph.get(), &options, &report) != RSHARE_OK)
            fail_api();
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        rshare_report_free(report);
        const double secs = elapsed.count();
        std::printf("rep %d: %.3f s  (%.3g pairs/s)\n", rep, secs, pairs / secs);
        if (best == 0 || secs < best)
            best = secs;
    }
    std::printf("best: %.3f s  (%.3g pairs/s)\n", best, pairs / best);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resolving shares and the resolving topological index of "
                 "simple connected graphs, in exact rational arithmetic"};
    app.set_version_flag("--version", rshare_version());
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Compute the resolving topological index");
    InputOptions compute_input;
    add_input_options(compute, compute_input);
    std::string compute_output = "table";
    bool per_pair = false;
    std::int64_t threads = 0;
    compute->add_option("--output", compute_output, "Report format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    compute->add_flag("--per-pair", per_pair, "Include per-pair resolving neighborhoods");
    compute->add_option("--threads", threads, "Worker threads (0 = available parallelism)")
        ->check(CLI::NonNegativeNumber);

    auto* gen = app.add_subcommand("gen", "Generate a named family graph");
    InputOptions gen_input;
    std::string gen_output = "edgelist";
    gen->add_option("--family", gen_input.family, "Family spec")->required();
    gen->add_flag("--allow-unverified", gen_input.allow_unverified,
                  "Admit k-partite parts of size 1");
    gen->add_option("--output", gen_output, "Graph format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* verify =
        app.add_subcommand("verify", "Check published closed forms against computation");
    std::string verify_family;
    std::string verify_range;
    std::vector<std::string> verify_parts;
    std::int64_t verify_cap = 200;
    verify->add_option("--family", verify_family, "Family kind")
        ->required()
        ->check(CLI::IsMember(
            {"path", "cycle", "complete", "kpartite", "wheel", "friendship", "petersen"}));
    verify->add_option("--range", verify_range, "Parameter range A..B");
    verify->add_option("--parts", verify_parts,
                       "k-partite part sizes, e.g. 2,3,4 (repeatable)");
    verify->add_option("--cap", verify_cap,
                       "Vertex-count cap for definitional recomputation")
        ->check(CLI::PositiveNumber);

    auto* dim = app.add_subcommand("dim", "Metric dimension (exact or greedy upper bound)");
    InputOptions dim_input;
    add_input_options(dim, dim_input);
    std::int64_t exact_cap = 20;
    dim->add_option("--exact-cap", exact_cap, "Largest n for exhaustive search")
        ->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "Time the index computation");
    std::string bench_family;
    int bench_repeat = 3;
    std::int64_t bench_threads = 0;
    bench->add_option("--family", bench_family, "Family spec")->required();
    bench->add_option("--repeat", bench_repeat, "Repetitions")->check(CLI::PositiveNumber);
    bench->add_option("--threads", bench_threads, "Worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (app.got_subcommand(compute))
        return run_compute(compute_input, compute_output, per_pair, threads);
    if (app.got_subcommand(gen))
        return run_gen(gen_input, gen_output);
    if (app.got_subcommand(verify))
        return run_verify(verify_family, verify_range, verify_parts, verify_cap);
    if (app.got_subcommand(dim))
        return run_dim(dim_input, exact_cap);
    if (app.got_subcommand(bench))
        return run_bench(bench_family, bench_repeat, bench_threads);
    return 1;
}
