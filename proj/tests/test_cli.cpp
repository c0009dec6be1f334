// End-to-end CLI checks. The binary path arrives in RSHARE_CLI; stdout and
// stderr are captured together through popen.

#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("RSHARE_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "RSHARE_CLI must point at the CLI binary");
    std::string command = "\"" + std::string(cli) + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

bool ends_with_line(const std::string& text, const std::string& line) {
    std::string trimmed = text;
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r'))
        trimmed.pop_back();
    return trimmed.size() >= line.size() &&
           trimmed.compare(trimmed.size() - line.size(), line.size(), line) == 0;
}

} // namespace

TEST_CASE("compute --family petersen prints a table ending with the index") {
    auto r = run_cli("compute --family petersen");
    CHECK(r.exit_code == 0);
    CHECK(ends_with_line(r.output, "index = 5/3"));
}

TEST_CASE("compute json output is stable across thread counts") {
    auto one = run_cli("compute --family kpartite:2,3 --output json --threads 1");
    auto four = run_cli("compute --family kpartite:2,3 --output json --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(one.output == four.output);
    auto j = nlohmann::json::parse(one.output);
    CHECK(j["index"]["rational"] == "367/280");
    CHECK(j["options"] == "");
}

TEST_CASE("compute csv output carries the INDEX summary row") {
    auto r = run_cli("compute --family complete:2 --output csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("vertex,label,avg_share,resolvent_count\n") == 0);
    CHECK(r.output.find("\nINDEX,,1/1,\n") != std::string::npos);
}

TEST_CASE("compute reads edge-list and dimacs files") {
    auto edgelist = write_temp("rshare_cli_p4.txt", "a b\nb c\nc d\n");
    auto r = run_cli("compute --input " + edgelist + " --output json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["index"]["rational"] == "49/45");
    CHECK(j["per_vertex"][0]["label"] == "a");
    CHECK(j["input"].get<std::string>().find("edgelist") == 0);

    auto dimacs = write_temp("rshare_cli_c4.txt", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    r = run_cli("compute --input " + dimacs + " --output json");
    CHECK(r.exit_code == 0);
    j = nlohmann::json::parse(r.output);
    CHECK(j["index"]["rational"] == "6/5");
    CHECK(j["input"].get<std::string>().find("dimacs") == 0);
}

TEST_CASE("dimacs count mismatch warns on stderr but succeeds") {
    auto path = write_temp("rshare_cli_warn.txt", "p edge 3 9\ne 1 2\ne 2 3\n");
    auto r = run_cli("compute --input " + path + " --output csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("warning:") != std::string::npos);
    CHECK(r.output.find("declares 9") != std::string::npos);
}

TEST_CASE("per-pair detail appears on request") {
    auto r = run_cli("compute --family cycle:4 --output json --per-pair");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.contains("per_pair"));
    CHECK(j["per_pair"].size() == 6);
    CHECK(j["options"] == "per-pair");
}

TEST_CASE("input errors exit 1 with a message") {
    auto missing = run_cli("compute --input /no/such/file.txt");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("cannot open") != std::string::npos);

    auto badfam = run_cli("compute --family path:1");
    CHECK(badfam.exit_code == 1);
    CHECK(badfam.output.find("n >= 2") != std::string::npos);

    auto guarded = run_cli("compute --family kpartite:1,3");
    CHECK(guarded.exit_code == 1);
    auto lifted = run_cli("compute --family kpartite:1,3 --allow-unverified --output csv");
    CHECK(lifted.exit_code == 0);

    auto selfloop = write_temp("rshare_cli_loop.txt", "x x\n");
    auto parse = run_cli("compute --input " + selfloop);
    CHECK(parse.exit_code == 1);
    CHECK(parse.output.find("line 1") != std::string::npos);

    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("compute --no-such-flag").exit_code == 1);
    CHECK(run_cli("compute").exit_code == 1);
}

TEST_CASE("gen emits both formats and round-trips through compute") {
    auto edges = run_cli("gen --family path:4");
    CHECK(edges.exit_code == 0);
    CHECK(edges.output == "0 1\n1 2\n2 3\n");

    auto dimacs = run_cli("gen --family wheel:7 --output dimacs");
    CHECK(dimacs.exit_code == 0);
    CHECK(dimacs.output.find("p edge 7 12\n") == 0);

    auto path = write_temp("rshare_cli_gen.txt", dimacs.output);
    auto direct = run_cli("compute --family wheel:7 --output csv");
    auto via_file = run_cli("compute --input " + path + " --output csv");
    CHECK(via_file.exit_code == 0);
    CHECK(via_file.output == direct.output);
}

TEST_CASE("verify reports corrected friendship values with exit 0") {
    auto r = run_cli("verify --family friendship --range 2..10");
    CHECK(r.exit_code == 0);
    size_t corrected = 0;
    size_t pos = 0;
    while ((pos = r.output.find("corrected", pos)) != std::string::npos) {
        ++corrected;
        pos += 9;
    }
    CHECK(corrected == 9);
    CHECK(r.output.find("NOVEL") == std::string::npos);
}

TEST_CASE("verify confirms wheels and k-partite parts") {
    auto wheels = run_cli("verify --family wheel --range 6..10");
    CHECK(wheels.exit_code == 0);
    CHECK(wheels.output.find("confirmed") != std::string::npos);

    auto parts = run_cli("verify --family kpartite --parts 2,3 --parts 2,2");
    CHECK(parts.exit_code == 0);
    CHECK(parts.output.find("367/280") != std::string::npos);
    CHECK(parts.output.find("6/5") != std::string::npos);

    CHECK(run_cli("verify --family wheel --range oops").exit_code == 1);
    CHECK(run_cli("verify --family kpartite --range 2..3").exit_code == 1);
}

TEST_CASE("dim prints exact values or a marked upper bound") {
    auto exact = run_cli("dim --family petersen");
    CHECK(exact.exit_code == 0);
    CHECK(exact.output == "metric dimension = 3 (exact)\n");

    auto bound = run_cli("dim --family cycle:30 --exact-cap 10");
    CHECK(bound.exit_code == 0);
    CHECK(bound.output.find("upper bound") != std::string::npos);
    CHECK(bound.output.find("<=") != std::string::npos);
}

TEST_CASE("bench runs and reports pairs per second") {
    auto r = run_cli("bench --family cycle:64 --repeat 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pairs/s") != std::string::npos);
    CHECK(r.output.find("rep 2") != std::string::npos);
}
