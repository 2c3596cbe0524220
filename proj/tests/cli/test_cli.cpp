// Runs the maskcheck binary and checks exit codes and machine-readable output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(MASKCHECK_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("maskcheck_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST_CASE("bias") {
    const Run r = run("bias --n 4096 --q 3329 --format json");
    REQUIRE(r.status == 0);
    const auto j = json_of(r);
    CHECK(j["schema"] == "maskcheck/1");
    CHECK(j["counts"][0] == 2);
    CHECK(j["counts"][767] == 1);
    CHECK(j["ratio"] == "2/1");
    CHECK(run("bias --bits 12 --q 3329 --format json").out == r.out);
    CHECK(run("bias --n 8 --q 4 --format csv").out == "residue,count\n0,2\n1,2\n2,2\n3,2\n");
}

TEST_CASE("bounds") {
    CHECK(json_of(run("bounds --q 3329 --w 24 --format json"))["admissible"] == true);
    CHECK(json_of(run("bounds --q 8380417 --w 24 --format json"))["admissible"] == true);
    const Run r = run("bounds --q 8388608 --w 24 --format json");
    CHECK(r.status == 0);
    CHECK(json_of(r)["admissible"] == false);
}

TEST_CASE("census") {
    const Run r = run("census --q 2 --format json");
    REQUIRE(r.status == 0);
    const auto j = json_of(r);
    CHECK(j["total_wires"] == 16);
    CHECK(j["value_independent"] == 4);
    CHECK(j["constant_marginal"] == 6);
    CHECK(j["conservative"] == 2);
    CHECK(j["soundness_violations"] == 0);
    CHECK(run("census --q 4 --workers 1 --format json").out == run("census --q 4 --workers 5 --format json").out);
    CHECK(run("census --q 3 --format json").out == run("census --q 3 --format json").out);
    CHECK(run("census --q 6").status == 2);
    CHECK(json_of(run("census --q 2 --spot 3 --format json"))["verdict"] == "CONSTANT_MARGINAL_ONLY");
    CHECK(run("census --q 2 --spot 16").status == 2);
}

TEST_CASE("classify") {
    const std::string witness_path = temp_file("witness5.json", "");
    REQUIRE(run("witness --q 5 --write-wire " + witness_path).status == 0);
    const Run r = run("classify " + witness_path + " --format json");
    REQUIRE(r.status == 0);
    CHECK(json_of(r)["verdict"] == "CONSTANT_MARGINAL_ONLY");
    CHECK(json_of(r)["mutual_information"]["bits"] == 0.0);

    const std::string constant = temp_file("const.json", R"({"q":3,"alphabet":2,"order":"s0_major","table":[1,1,1,1,1,1,1,1,1]})");
    CHECK(json_of(run("classify " + constant + " --format json"))["verdict"] == "VALUE_INDEPENDENT");

    const std::string truncated = temp_file("trunc.json", R"({"q":2,"table":[1,1,0)");
    CHECK(run("classify " + truncated).status == 2);
    const std::string short_table = temp_file("short.json", R"({"q":2,"table":[1,1,0]})");
    CHECK(run("classify " + short_table).status == 2);
    CHECK(run("classify /nonexistent.json").status == 2);
}

TEST_CASE("witness, urem-check, butterfly") {
    const Run w = run("witness --q 3329 --format json");
    REQUIRE(w.status == 0);
    CHECK(json_of(w)["verdict"] == "CONSTANT_MARGINAL_ONLY");
    CHECK(run("witness --q 1").status == 2);

    const Run u = run("urem-check --q 8380417 --w 24 --seed 9 --format json");
    REQUIRE(u.status == 0);
    CHECK(json_of(u)["mismatches"] == 0);
    CHECK(u.out == run("urem-check --q 8380417 --w 24 --seed 9 --format json").out);
    CHECK(u.out != run("urem-check --q 8380417 --w 24 --seed 10 --format json").out);
    CHECK(run("urem-check --q 8388608 --w 24").status == 2);

    const Run b = run("butterfly --q 5 --stages 1 --twiddles 2 --format json");
    REQUIRE(b.status == 0);
    CHECK(json_of(b)["sharewise_non_constant"] == 0);
    CHECK(b.out == run("butterfly --q 5 --stages 1 --twiddles 2 --workers 3 --format json").out);
    CHECK(run("butterfly --q 8").status == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").status == 2);
    CHECK(run("bias --q 0 --n 5").status == 2);
    CHECK(run("bias --q 5").status == 2);
    CHECK(run("bounds --q 5 --w 24 --format yaml").status == 2);
    CHECK(run("witness --q 5 --format csv").status == 2);
    CHECK(run("frobnicate").status == 2);
}
