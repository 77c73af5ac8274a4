#include "doctest.h"

#include "regbound/cli.hpp"
#include "regbound/families.hpp"
#include "regbound/graph6.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace regbound;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "regbound");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("regbound_test_" + name);
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

int run_binary(const std::string& arguments) {
    const std::string command = std::string(REGBOUND_CLI_PATH) + " " + arguments + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("analyze") {
    const auto petersen = write_temp("petersen.g6", write_graph6(petersen_graph()) + "\n");
    const auto r = run({"analyze", petersen.string()});
    REQUIRE(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["girth"] == 5);
    CHECK(j["girth_traces"] == 5);
    CHECK(j["spectral_gap"] == 2.0);
    CHECK(j["k"] == 3);
    CHECK(j["connected"] == true);
    CHECK(j["diameter"] == 2);
    CHECK(j["distance_regular"] == json::parse(R"({"b":[3,2],"c":[1,1]})"));

    const auto k4 = json::parse(run({"analyze", "-"}, "C~\n").out);
    CHECK(k4["girth"] == 3);
    CHECK(k4["spectral_gap"] == 4.0);

    const auto text = run({"analyze", "-", "--format", "text"}, "C~");
    CHECK(text.code == kExitOk);
    CHECK(text.out.find("girth (bfs):   3") != std::string::npos);

    // path on three vertices: not regular, no gap
    const auto p3 = json::parse(run({"analyze", "-"}, "Bg").out);
    CHECK(p3["k"].is_null());
    CHECK(p3["girth"].is_null());
}

TEST_CASE("analyze errors") {
    const auto bad = write_temp("bad.g6", "D~|\n");
    const auto r = run({"analyze", bad.string()});
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("at byte 2") != std::string::npos);

    CHECK(run({"analyze", "-"}, "").code == kExitParse);
    CHECK(run({"analyze", "/nonexistent/file.g6"}).code == kExitParse);
    CHECK(run({"analyze", "-"}, write_graph6(cycle_graph(513))).code == kExitSizeCap);
    CHECK(run({"analyze", "-"}, "~~???~??").code == kExitSizeCap);
}

TEST_CASE("bound") {
    const auto r = run({"bound", "--k", "3", "--eigenvalues", "1,-2"});
    REQUIRE(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["certificate"]["bound"] == 10.0);
    CHECK(j["certificate"]["bound_exact"] == "10");
    CHECK(j["certificate"]["f_coeffs"] == json::parse("[5.0,5.0,3.0,1.0]"));
    CHECK(j["lp"]["dual"]["objective"] == 10.0);
    CHECK(j["lp"]["primal"]["objective"] == 10.0);
    CHECK(j["lp"]["primal"]["m"] == json::parse("[5.0,4.0]"));

    const auto hs = json::parse(run({"bound", "--k", "7", "--eigenvalues", "2,-3"}).out);
    CHECK(hs["certificate"]["bound"] == 50.0);

    // unsorted input is sorted; sqrt tokens switch to floating mode
    const auto heawood = json::parse(run({"bound", "--k", "3", "--eigenvalues", "-3,sqrt(2),-sqrt(2)"}).out);
    CHECK(heawood["exact"] == false);
    CHECK(heawood["certificate"]["bound"].get<double>() == doctest::Approx(14.0));

    const auto frac = json::parse(run({"bound", "--k", "3", "--eigenvalues", "1/2,-2"}).out);
    CHECK(frac["exact"] == true);

    const auto lp_only = run({"bound", "--k", "3", "--eigenvalues", "1,-2", "--method", "lp", "--degree", "5"});
    CHECK(lp_only.code == kExitOk);
    CHECK(json::parse(lp_only.out)["lp"]["dual"]["objective"] == 10.0);
}

TEST_CASE("bound with a spectrum no graph can have") {
    const auto r = run({"bound", "--k", "3", "--eigenvalues", "2.9"});
    CHECK(r.code == kExitOk);
    const auto j = json::parse(r.out);
    CHECK(j["certificate"]["valid"] == false);
    CHECK(j["certificate"]["conditions"]["f0_positive"]["holds"] == false);  // f = x - 29/10
    CHECK(j["lp"]["dual"]["status"] == "infeasible");

    CHECK(run({"bound", "--k", "3", "--eigenvalues", "2.9", "--method", "certificate"}).code == kExitInvalidCertificate);
}

TEST_CASE("bound usage errors") {
    CHECK(run({"bound", "--k", "3", "--eigenvalues", "1,1"}).code == kExitOther);
    CHECK(run({"bound", "--k", "3", "--eigenvalues", "3"}).code == kExitOther);
    CHECK(run({"bound", "--k", "1", "--eigenvalues", "0"}).code == kExitOther);
    CHECK(run({"bound", "--k", "3"}).code == kExitOther);
    CHECK(run({"bound", "--k", "3", "--eigenvalues", "1,-2", "--method", "magic"}).code == kExitOther);
    CHECK(run({"bound", "--k", "3", "--eigenvalues", "abc"}).code == kExitParse);
}

TEST_CASE("certify") {
    const auto pet = json::parse(run({"certify", "-"}, write_graph6(petersen_graph()) + "\n").out);
    CHECK(pet["verdict"] == "certified");
    CHECK(pet["schema"] == 1);
    CHECK(pet["is_moore"] == true);

    const auto c7 = json::parse(run({"certify", "-"}, write_graph6(cycle_graph(7))).out);
    CHECK(c7["verdict"] == "certified");
    CHECK(c7["d"] == 3);
    CHECK(c7["girth"] == 7);

    // the 5-prism: cubic on 10 vertices, girth 4
    std::vector<Edge> prism;
    for (int i = 0; i < 5; ++i) {
        prism.emplace_back(i, (i + 1) % 5);
        prism.emplace_back(5 + i, 5 + (i + 1) % 5);
        prism.emplace_back(i, 5 + i);
    }
    const auto p = json::parse(run({"certify", "-"}, write_graph6(Graph(10, prism))).out);
    CHECK(p["verdict"] != "certified");
    CHECK(!p["reason"].get<std::string>().empty());

    CHECK(run({"certify", "-"}, write_graph6(cycle_graph(600))).code == kExitSizeCap);
    CHECK(run({"certify", "-", "--format", "text"}, "C~").code == kExitOk);
}

TEST_CASE("generate") {
    CHECK(run({"generate", "cycle:5"}).out == write_graph6(cycle_graph(5)) + "\n");
    CHECK(run({"generate", "pg2:2"}).out == write_graph6(incidence_pg2(2)) + "\n");
    const auto gq = run({"generate", "gq:2"});
    CHECK(parse_graph6(gq.out.substr(0, gq.out.size() - 1)).vertex_count() == 30);
    CHECK(run({"generate", "pg2:6"}).code == kExitOther);
    CHECK(run({"generate", "cycle:200000"}).code == kExitSizeCap);
}

TEST_CASE("table2") {
    const auto text = run({"table2"});
    REQUIRE(text.code == kExitOk);
    CHECK(text.out.find("hoffman_singleton") != std::string::npos);

    const auto first = run({"table2", "--json"});
    const auto second = run({"table2", "--json"});
    CHECK(first.out == second.out);
    const auto rows = json::parse(first.out);
    REQUIRE(rows.size() == 12);
    for (const auto& row : rows) {
        CAPTURE(row["name"].get<std::string>());
        CHECK(row["tight"] == true);
        CHECK(row["verdict"] == "certified");
        CHECK(std::abs(row["lp_bound"].get<double>() - row["v"].get<int>()) <= 1e-6);
    }
}

TEST_CASE("argument handling") {
    CHECK(run({}).code == kExitOther);
    CHECK(run({"frobnicate"}).code == kExitOther);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"certify", "-", "--tol-cluster", "0"}, "C~").code == kExitOther);
    CHECK(run({"certify", "-", "--tol-cluster", "1e-6"}, "C~").code == kExitOk);
}

TEST_CASE("exit codes through the installed binary") {
    const auto good = write_temp("good.g6", "IheA@GUAo\n");
    const auto bad = write_temp("bad2.g6", "I\n");
    CHECK(run_binary("certify " + good.string()) == 0);
    CHECK(run_binary("analyze " + bad.string()) == 2);
    CHECK(run_binary("bound --k 3 --eigenvalues 2.9 --method certificate") == 4);
    CHECK(run_binary("generate cycle:200000") == 3);
    CHECK(run_binary("no-such-command") == 1);
}
