// Exercises the shared library strictly through the C header, the way an
// external binding would.

#include <rshare.h>

#include <json.hpp>

#include <doctest.h>

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    rshare_string_free(s);
    return out;
}

struct Graph {
    rshare_graph* g = nullptr;
    ~Graph() { rshare_graph_free(g); }
};

struct Report {
    rshare_report* r = nullptr;
    ~Report() { rshare_report_free(r); }
};

} // namespace

TEST_CASE("version and initial error state") {
    CHECK(std::strlen(rshare_version()) > 0);
    CHECK(std::string(rshare_last_error()).empty());
}

TEST_CASE("graph build, accessors, and validation errors") {
    const int64_t triangle[] = {0, 1, 1, 2, 2, 0};
    Graph g;
    REQUIRE(rshare_graph_build(3, triangle, 3, &g.g) == RSHARE_OK);
    CHECK(rshare_graph_order(g.g) == 3);
    CHECK(rshare_graph_size(g.g) == 3);
    CHECK(rshare_graph_is_connected(g.g) == 1);
    CHECK(std::string(rshare_graph_warnings(g.g)).empty());

    const int64_t loop[] = {0, 0};
    rshare_graph* bad = nullptr;
    CHECK(rshare_graph_build(2, loop, 1, &bad) == RSHARE_ERR_INVALID);
    CHECK(std::string(rshare_last_error()).find("self-loop") != std::string::npos);
    CHECK(bad == nullptr);

    CHECK(rshare_graph_build(2, nullptr, 1, &bad) == RSHARE_ERR_INVALID);
    CHECK(rshare_graph_build(2, loop, 1, nullptr) == RSHARE_ERR_INVALID);
}

TEST_CASE("family graphs and the compute/render pipeline") {
    Graph g;
    REQUIRE(rshare_graph_from_family("petersen", 0, &g.g) == RSHARE_OK);
    CHECK(rshare_graph_order(g.g) == 10);
    CHECK(std::string(rshare_graph_source(g.g)) == "family");

    rshare_compute_options options{0, 0, "family petersen"};
    Report report;
    REQUIRE(rshare_compute(g.g, &options, &report.r) == RSHARE_OK);
    CHECK(std::string(rshare_report_index(report.r)) == "5/3");
    CHECK(rshare_report_order(report.r) == 10);

    char* text = nullptr;
    REQUIRE(rshare_report_render(report.r, RSHARE_REPORT_JSON, &text) == RSHARE_OK);
    auto j = nlohmann::json::parse(take(text));
    CHECK(j["index"]["rational"] == "5/3");
    CHECK(j["n"] == 10);
    CHECK(j["input"] == "family petersen");

    REQUIRE(rshare_report_render(report.r, RSHARE_REPORT_TABLE, &text) == RSHARE_OK);
    std::string table = take(text);
    CHECK(table.find("index = 5/3\n") == table.size() - 12);

    rshare_graph* none = nullptr;
    CHECK(rshare_graph_from_family("wheel:4", 0, &none) == RSHARE_ERR_INVALID);
    CHECK(std::string(rshare_last_error()).find("n >= 6") != std::string::npos);
}

TEST_CASE("parsing through the C surface") {
    Graph g;
    REQUIRE(rshare_graph_parse("a b\nb c\n", RSHARE_INPUT_AUTO, &g.g) == RSHARE_OK);
    CHECK(rshare_graph_order(g.g) == 3);
    CHECK(std::string(rshare_graph_source(g.g)) == "edgelist");

    Graph d;
    REQUIRE(rshare_graph_parse("p edge 3 5\ne 1 2\ne 2 3\n", RSHARE_INPUT_AUTO, &d.g) ==
            RSHARE_OK);
    CHECK(std::string(rshare_graph_source(d.g)) == "dimacs");
    CHECK(std::string(rshare_graph_warnings(d.g)).find("declares 5") != std::string::npos);

    rshare_graph* bad = nullptr;
    CHECK(rshare_graph_parse("x x\n", RSHARE_INPUT_EDGELIST, &bad) == RSHARE_ERR_PARSE);
    CHECK(std::string(rshare_last_error()).find("line 1") != std::string::npos);
}

TEST_CASE("disconnected graphs surface the right status") {
    const int64_t split[] = {0, 1, 2, 3};
    Graph g;
    REQUIRE(rshare_graph_build(4, split, 2, &g.g) == RSHARE_OK);
    CHECK(rshare_graph_is_connected(g.g) == 0);
    rshare_report* report = nullptr;
    CHECK(rshare_compute(g.g, nullptr, &report) == RSHARE_ERR_DISCONNECTED);
    CHECK(std::string(rshare_last_error()) == "graph must be connected");
}

TEST_CASE("graph writing round-trips") {
    Graph g;
    REQUIRE(rshare_graph_from_family("path:4", 0, &g.g) == RSHARE_OK);
    char* text = nullptr;
    REQUIRE(rshare_graph_write(g.g, RSHARE_GRAPH_EDGELIST, &text) == RSHARE_OK);
    CHECK(take(text) == "0 1\n1 2\n2 3\n");
    REQUIRE(rshare_graph_write(g.g, RSHARE_GRAPH_DIMACS, &text) == RSHARE_OK);
    CHECK(take(text) == "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
}

TEST_CASE("metric dimension, exact and greedy fallback") {
    Graph petersen;
    REQUIRE(rshare_graph_from_family("petersen", 0, &petersen.g) == RSHARE_OK);
    int64_t value = 0;
    int exact = 0;
    REQUIRE(rshare_metric_dimension(petersen.g, 20, &value, &exact) == RSHARE_OK);
    CHECK(value == 3);
    CHECK(exact == 1);

    Graph big;
    REQUIRE(rshare_graph_from_family("cycle:40", 0, &big.g) == RSHARE_OK);
    REQUIRE(rshare_metric_dimension(big.g, 20, &value, &exact) == RSHARE_OK);
    CHECK(exact == 0);
    CHECK(value >= 2);
}

TEST_CASE("verify and the discrepancy ledger") {
    char* text = nullptr;
    int novel = -1;
    REQUIRE(rshare_verify_family("friendship", "2..5", 0, &text, &novel) == RSHARE_OK);
    std::string out = take(text);
    CHECK(novel == 0);
    CHECK(out.find("corrected") != std::string::npos);
    CHECK(out.find("11/8") != std::string::npos);

    REQUIRE(rshare_verify_family("wheel", "6..8", 0, &text, &novel) == RSHARE_OK);
    out = take(text);
    CHECK(novel == 0);
    CHECK(out.find("confirmed") != std::string::npos);

    REQUIRE(rshare_verify_family("kpartite", "2,3", 0, &text, &novel) == RSHARE_OK);
    CHECK(take(text).find("367/280") != std::string::npos);

    CHECK(rshare_verify_family("path", "bad", 0, &text, &novel) == RSHARE_ERR_INVALID);

    REQUIRE(rshare_known_discrepancies(&text) == RSHARE_OK);
    out = take(text);
    CHECK(out.find("friendship") != std::string::npos);
    CHECK(out.find("wheel") != std::string::npos);
}
