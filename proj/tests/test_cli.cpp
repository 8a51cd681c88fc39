#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(GREX_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("ext command") {
    const auto plain = run_cli("ext -2,0,2 -1,2,3 --oracle");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("ext_dim: 1") != std::string::npos);
    CHECK(plain.output.find("oracle_dim: 1") != std::string::npos);
    CHECK(plain.output.find("compatible: false") != std::string::npos);
    CHECK(plain.output.find("I(l): (x^2,x*y^1,y^2)(0)") != std::string::npos);
    CHECK(plain.output.find("I(m): (x^2,x,y^2)(-1)") != std::string::npos);

    const auto json_run = run_cli("ext -2,0,2 -1,2,3 --oracle --json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_run.output);
    CHECK(parsed["k"] == 3);
    CHECK(parsed["l"] == nlohmann::json({-2, 0, 2}));
    CHECK(parsed["m"] == nlohmann::json({-1, 2, 3}));
    CHECK(parsed["alpha"] == 3);
    CHECK(parsed["beta"] == 2);
    CHECK(parsed["intersection"] == 1);
    CHECK(parsed["ext_dim"] == 1);
    CHECK(parsed["compatible"] == false);
    CHECK(parsed["oracle_dim"] == 1);

    const auto trivial = run_cli("ext 0,1 0,1");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output.find("ext_dim: 0") != std::string::npos);
    CHECK(trivial.output.find("compatible: true") != std::string::npos);

    CHECK(run_cli("ext 0,1 0,1,2").exit_code == 2);
    CHECK(run_cli("ext 0,1").exit_code == 2);
    CHECK(run_cli("ext 0,x 0,1").exit_code == 2);
    CHECK(run_cli("ext 0,1 2,3 --flavor A").exit_code == 2); // not an ext flag
}

TEST_CASE("grid command") {
    const auto a = run_cli("grid -2,0,2 -1,2,3 --flavor A");
    CHECK(a.exit_code == 0);
    CHECK(a.output == "###\n.##\n.##\nalpha=3 beta=2\n");

    const auto b = run_cli("grid 0,1 0,1 --flavor B");
    CHECK(b.exit_code == 0);
    CHECK(b.output == ".#\n..\nalpha=2 beta=2\n");

    const auto json_run = run_cli("grid -2,0,2 -1,2,3 --flavor A --json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_run.output);
    CHECK(parsed["flavor"] == "A");
    CHECK(parsed["k"] == 3);
    CHECK(parsed["rows"] == nlohmann::json({"###", ".##", ".##"}));

    CHECK(run_cli("grid 0,1 0,1 --flavor C").exit_code == 2);
}

TEST_CASE("verify command") {
    const auto small = run_cli("verify --k 2 --lo -3 --hi 3");
    CHECK(small.exit_code == 0);
    const auto parsed = nlohmann::json::parse(small.output);
    CHECK(parsed["pairs_checked"] == 441);
    CHECK(parsed["mismatches"].empty());
    CHECK(parsed["window"] == nlohmann::json({-3, 3}));

    const auto k3 = run_cli("verify --k 3 --lo -2 --hi 3");
    CHECK(k3.exit_code == 0);
    CHECK(nlohmann::json::parse(k3.output)["pairs_checked"] == 400);

    // over the default cap without a sample size
    CHECK(run_cli("verify --k 5 --lo 0 --hi 30").exit_code == 2);

    const auto sampled = run_cli("verify --k 5 --lo 0 --hi 30 --sample 25");
    CHECK(sampled.exit_code == 0);
    const auto sampled_json = nlohmann::json::parse(sampled.output);
    CHECK(sampled_json["pairs_checked"] == 25);
    CHECK(sampled_json["mismatches"].empty());

    CHECK(run_cli("verify --k 2 --lo 3 --hi 1").exit_code == 2);
    CHECK(run_cli("verify --lo 1 --hi 5").exit_code == 2); // --k required
}

TEST_CASE("enumerate command") {
    const auto pentagon = run_cli("enumerate --k 2 --lo 1 --hi 5 --json");
    CHECK(pentagon.exit_code == 0);
    const auto parsed = nlohmann::json::parse(pentagon.output);
    CHECK(parsed["count"] == 5);
    for (const auto& collection : parsed["collections"]) CHECK(collection.size() == 7);

    CHECK(run_cli("enumerate --k 2 --lo 1 --hi 40").exit_code == 2);
}

TEST_CASE("plucker-verify command") {
    const std::string dir = std::filesystem::temp_directory_path().string();
    const std::string path = dir + "/grex_cli_matrix.csv";
    {
        std::ofstream out(path);
        out << "1,2,3,4\n";
        out << "1,1/2,-3,2/5\n";
        out << "0,7,1/3,-1\n";
    }
    const auto ok = run_cli("plucker-verify " + path + " 1 2,3,4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "relation holds: true\n");

    const auto as_json = run_cli("plucker-verify " + path + " 1 2,3,4 --json");
    CHECK(as_json.exit_code == 0);
    CHECK(nlohmann::json::parse(as_json.output)["holds"] == true);

    CHECK(run_cli("plucker-verify /nonexistent.csv 1 2,3,4").exit_code == 2);
    CHECK(run_cli("plucker-verify " + path + " 1,2 3,4,5,6").exit_code == 2); // k=3 vs 2 rows
    std::remove(path.c_str());
}

TEST_CASE("JSON output is stable under re-run") {
    const std::string commands[] = {
        "ext -2,0,2 -1,2,3 --oracle --json",
        "grid 1,2,4,7 0,2,3,5 --flavor B --json",
        "enumerate --k 2 --lo 1 --hi 5 --json",
    };
    for (const auto& command : commands) {
        const auto first = run_cli(command);
        const auto second = run_cli(command);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
    }
    // verify: identical up to the elapsed-time field
    auto strip = [](const std::string& text) {
        auto parsed = nlohmann::json::parse(text);
        parsed.erase("elapsed_ms");
        return parsed;
    };
    const auto first = run_cli("verify --k 2 --lo 0 --hi 3");
    const auto second = run_cli("verify --k 2 --lo 0 --hi 3");
    CHECK(strip(first.output) == strip(second.output));
}

TEST_CASE("usage and help") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("plucker-verify") != std::string::npos);
}
