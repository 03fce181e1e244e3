#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kcenter/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = KCENTER_CLI_PATH;

struct RunResult {
    int exit_code = 0;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "kcenter_cli_stdout.txt";
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kCollinear = R"({"k": 2, "customers": [[0,0],[50,0],[100,0]]})";

} // namespace

TEST_CASE("solve command") {
    const fs::path inst = write_temp("collinear.json", kCollinear);

    SUBCASE("dragoon on the collinear triple gives D=50") {
        const RunResult r = run("solve " + inst.string() + " --solver dragoon");
        REQUIRE(r.exit_code == 0);
        const json doc = json::parse(r.stdout_text);
        CHECK(doc["objective"].get<double>() == 50.0);
        CHECK(doc["centers"].size() == 2);
        CHECK(doc["center_coordinates"].size() == 2);
        CHECK(doc["trace"]["stages"].size() >= 1);
    }
    SUBCASE("k = n gives D=0 for every solver") {
        const fs::path full = write_temp(
            "full.json", R"({"k": 3, "customers": [[0,0],[50,0],[100,0]]})");
        for (const char* solver :
             {"dragoon", "two-approx", "macqueen", "greedy", "backtrack"}) {
            const RunResult r =
                run("solve " + full.string() + " --solver " + solver);
            REQUIRE(r.exit_code == 0);
            CHECK(json::parse(r.stdout_text)["objective"].get<double>() == 0.0);
        }
    }
    SUBCASE("missing k field exits 2 and names the field") {
        const fs::path bad = write_temp("bad.json", R"({"customers": [[0,0]]})");
        const RunResult r = run("solve " + bad.string());
        CHECK(r.exit_code == 2);
    }
    SUBCASE("k larger than n exits 2") {
        const fs::path bad =
            write_temp("badk.json", R"({"k": 5, "customers": [[0,0],[1,1]]})");
        CHECK(run("solve " + bad.string()).exit_code == 2);
    }
    SUBCASE("unknown solver exits 2") {
        CHECK(run("solve " + inst.string() + " --solver magic").exit_code == 2);
    }
}

TEST_CASE("exact command") {
    const fs::path inst = write_temp(
        "single.json", R"({"k": 1, "customers": [[0,0],[50,0],[100,0]]})");
    const RunResult r = run("exact " + inst.string());
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.stdout_text);
    CHECK(doc["centers"] == json::array({1}));
    CHECK(doc["objective"].get<double>() == 50.0);

    SUBCASE("cap exceeded exits 3") {
        std::string big = R"({"k": 10, "customers": [)";
        for (int i = 0; i < 40; ++i)
            big += (i ? "," : "") + std::string("[") + std::to_string(i) + ",0]";
        big += "]}";
        const fs::path p = write_temp("big.json", big);
        CHECK(run("exact " + p.string() + " --cap 100").exit_code == 3);
    }
}

TEST_CASE("average command reruns byte-identically") {
    const fs::path out1 = fs::temp_directory_path() / "avg1";
    const fs::path out2 = fs::temp_directory_path() / "avg2";
    fs::remove_all(out1);
    fs::remove_all(out2);
    const std::string common =
        "average --setup 10/2 --instances 5 --challengers greedy,macqueen "
        "--seed 33 --jobs 2 --out ";
    REQUIRE(run(common + out1.string()).exit_code == 0);
    REQUIRE(run(common + out2.string()).exit_code == 0);
    CHECK(slurp(out1 / "records.csv") == slurp(out2 / "records.csv"));
    CHECK(slurp(out1 / "summary.csv") == slurp(out2 / "summary.csv"));
    CHECK(!slurp(out1 / "manifest.json").empty());

    const json manifest = json::parse(slurp(out1 / "manifest.json"));
    CHECK(manifest["master_seed"].get<std::uint64_t>() == 33);
    CHECK(manifest["instances"].get<int>() == 5);
}

TEST_CASE("adversary command persists replayable instances") {
    const fs::path out = fs::temp_directory_path() / "adv1";
    fs::remove_all(out);
    const RunResult r = run(
        "adversary --setup 10/2 --challenger greedy --population 6 "
        "--generations 3 --runs 2 --seed 5 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(out / "manifest.json"));
    CHECK(fs::exists(out / "report.csv"));
    // report header plus one row per run
    CHECK(std::count(r.stdout_text.begin(), r.stdout_text.end(), '\n') == 3);

    SUBCASE("challenger == challenged reports zero") {
        const fs::path out0 = fs::temp_directory_path() / "adv0";
        fs::remove_all(out0);
        const RunResult same = run(
            "adversary --setup 10/2 --challenger dragoon --challenged dragoon "
            "--population 4 --generations 1 --out " + out0.string());
        REQUIRE(same.exit_code == 0);
        CHECK(same.stdout_text.find(",0,") != std::string::npos);
    }
}

TEST_CASE("matrix command") {
    const fs::path out = fs::temp_directory_path() / "mat1";
    fs::remove_all(out);
    const RunResult r = run(
        "matrix --customers 6 --centers 2 --kinds greedy,dragoon "
        "--population 4 --generations 1 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(out / "matrix.csv");
    CHECK(csv.find("challenger,greedy,dragoon") == 0);

    SUBCASE("duplicate kinds are rejected") {
        CHECK(run("matrix --customers 6 --centers 2 --kinds greedy,greedy "
                  "--out " + out.string()).exit_code == 2);
    }
}

TEST_CASE("dump-geometry command") {
    const fs::path inst = write_temp("geo_inst.json",
                                     R"({"k": 1, "customers": [[1,2]]})");
    const fs::path sol = write_temp("geo_sol.json",
                                    R"({"centers": [0], "objective": 0.0})");
    const RunResult r = run("dump-geometry " + inst.string() + " " + sol.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("center,0,1,2") != std::string::npos);
    CHECK(r.stdout_text.find("customer,0,1,2,0,1,2,0") != std::string::npos);

    SUBCASE("mismatched pair exits 2") {
        const fs::path bad = write_temp("geo_bad.json",
                                        R"({"centers": [7], "objective": 1.0})");
        CHECK(run("dump-geometry " + inst.string() + " " + bad.string()).exit_code == 2);
    }
}
