#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "io.hpp"

using namespace toric_ci;
using io::ordered_json;

namespace {

std::string data_path(const std::string& name) { return std::string(TORIC_CI_DATA) + "/" + name; }

ordered_json load(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return ordered_json::parse(in);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int rc = -1;
    std::string out, err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "cli_run_" + std::to_string(counter++);
    std::string cmd =
        std::string(TORIC_CI_BIN) + " " + args + " > " + base + ".out 2> " + base + ".err";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    return r;
}

}  // namespace

TEST_CASE("fan files round-trip through the JSON layer") {
    for (const char* name : {"p2.json", "p1p1.json", "p1p1p1.json", "p112.json", "f1.json"}) {
        INFO(name);
        ordered_json j = load(data_path(name));
        Fan fan = io::fan_from_json(j);
        CHECK(validate_fan(fan).valid);
        ordered_json back = io::fan_to_json(fan);
        CHECK(back == j);
        // serialize -> parse -> serialize is a fixed point
        CHECK(ordered_json::parse(back.dump(2)).dump(2) == back.dump(2));
    }
}

TEST_CASE("problem files parse with names, classes, and options") {
    io::Problem quintic = io::problem_from_json(load(data_path("quintic_fermat.json")));
    CHECK(quintic.names == std::vector<std::string>{"f"});
    CHECK(quintic.method == "auto");
    CHECK(quintic.checks == "full");
    CHECK(quintic.output == "table");
    CHECK(degree_of(quintic.polys[0]).free == fixtures::iv({5}));

    io::Problem pair = io::problem_from_json(load(data_path("p1p1p1_111.json")));
    CHECK(pair.names == std::vector<std::string>{"f1", "f2"});
    CHECK(pair.polys.size() == 2);
    CHECK(degree_of(pair.polys[0]).free == fixtures::iv({1, 1, 1}));
    CHECK(degree_of(pair.polys[1]).free == fixtures::iv({1, 1, 1}));

    SECTION("shape violations are rejected") {
        auto expect_reject = [](const std::string& text) {
            CHECK_THROWS_AS(io::problem_from_json(ordered_json::parse(text)),
                            invalid_input_error);
        };
        expect_reject(R"({"hypersurfaces": []})");  // no fan
        expect_reject(R"({"fan": {"lattice_rank": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]]},
                          "hypersurfaces": []})");
        expect_reject(R"({"fan": {"lattice_rank": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]]},
                          "hypersurfaces": [{"name": "a", "polynomial": "x1"},
                                            {"name": "a", "polynomial": "x2"}]})");
        expect_reject(R"({"fan": {"lattice_rank": 2, "rays": [[1],[-1]], "max_cones": [[0],[1]]},
                          "hypersurfaces": [{"name": "a", "polynomial": "x1"}]})");
        expect_reject(R"({"fan": {"lattice_rank": 1, "rays": [[1],[-1]], "max_cones": [[0],[2]]},
                          "hypersurfaces": [{"name": "a", "polynomial": "x1"}]})");
        expect_reject(R"({"fan": {"lattice_rank": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]]},
                          "hypersurfaces": [{"name": "a", "polynomial": "x1"}],
                          "options": {"method": "newton"}})");
    }

    SECTION("big ray coordinates may arrive as strings") {
        ordered_json j = ordered_json::parse(
            R"({"lattice_rank": 1, "rays": [["1"],["-1"]], "max_cones": [[0],[1]]})");
        Fan fan = io::fan_from_json(j);
        CHECK(fan.rays[0][0] == 1);
        CHECK(fan.rays[1][0] == -1);
    }
}

TEST_CASE("analysis serialization is a fixed point") {
    io::Problem p = io::problem_from_json(load(data_path("quadrics_nondeg.json")));
    Analysis a = analyze(p.fan, p.polys);
    ordered_json j = io::analysis_to_json(a, p.names);
    CHECK(ordered_json::parse(j.dump(2)).dump(2) == j.dump(2));
    CHECK(j["method"] == "colon");
    CHECK(j["euler_characteristic"] == 0);
    CHECK(j["variable_table"]["entries"] == ordered_json::array({1, 1}));
}

TEST_CASE("the command line front end is deterministic") {
    RunResult betti1 = run_cli("betti --input " + data_path("p1p1p1.json"));
    RunResult betti2 = run_cli("betti --input " + data_path("p1p1p1.json"));
    CHECK(betti1.rc == 0);
    CHECK(betti1.out == "[1,0,3,0,3,0,1]\n");
    CHECK(betti1.out == betti2.out);

    std::string hodge_cmd = "hodge --json --input " + data_path("p1p1p1_111.json");
    RunResult h1 = run_cli(hodge_cmd);
    RunResult h2 = run_cli(hodge_cmd);
    CHECK(h1.rc == 0);
    CHECK(h1.out == h2.out);
    ordered_json j = ordered_json::parse(h1.out);
    CHECK(j["method"] == "colon");
    CHECK(j["certified"] == true);
    CHECK(j["variable_table"]["entries"] == ordered_json::array({1, 1}));
    CHECK(j["euler_characteristic"] == 0);
    // the rendered output itself re-serializes to the same bytes
    CHECK(j.dump(2) + "\n" == h1.out);
}

TEST_CASE("exit codes follow the contract") {
    RunResult ok = run_cli("validate --input " + data_path("p2.json"));
    CHECK(ok.rc == 0);

    RunResult broken = run_cli("validate --input " + data_path("broken_p2.json"));
    CHECK(broken.rc == 2);
    CHECK(broken.out.find("NotComplete") != std::string::npos);

    RunResult nef = run_cli("hodge --input " + data_path("f1_nef.json"));
    CHECK(nef.rc == 3);
    CHECK(nef.err.find("HypothesisViolated") != std::string::npos);

    RunResult nef_assumed =
        run_cli("hodge --assume-theorem-hypotheses --input " + data_path("f1_nef.json"));
    CHECK(nef_assumed.rc == 0);
    CHECK(nef_assumed.out.find("UNCERTIFIED") != std::string::npos);

    RunResult fiber =
        run_cli("hodge --assume-theorem-hypotheses --input " + data_path("p1p1_fiber.json"));
    CHECK(fiber.rc == 4);
    CHECK(fiber.err.find("NegativeEntry") != std::string::npos);

    RunResult cartier = run_cli("hodge --input " + data_path("p112_deg1.json"));
    CHECK(cartier.rc == 2);
    CHECK(cartier.err.find("NotCartier") != std::string::npos);

    RunResult missing = run_cli("hodge --input no_such_file.json");
    CHECK(missing.rc == 2);

    RunResult usage = run_cli("frobnicate");
    CHECK(usage.rc == 2);

    RunResult bare_check = run_cli("check --input " + data_path("p2.json"));
    CHECK(bare_check.rc == 2);
}
