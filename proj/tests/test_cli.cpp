#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gainscatter/config.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli_path() {
    const char* env = std::getenv("GAINSCATTER_CLI");
    REQUIRE_MESSAGE(env != nullptr, "GAINSCATTER_CLI must point at the binary");
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() /
                         ("gainscatter_cli_test_" + std::to_string(++counter) + ".out");
    const std::string command =
        cli_path() + " " + args + " > " + out.string() + " 2> /dev/null";
    const int status = std::system(command.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    fs::remove(out);
    return r;
}

}  // namespace

TEST_CASE("spectrum output is byte-identical across runs") {
    const std::string args =
        "spectrum --gamma-nr 0.2 --pump-rate 0.8 --sweep-min -4 --sweep-max 4 "
        "--sweep-points 33";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("detuning_over_gamma0,sigma_sc,sigma_abs,sigma_ext,"
                         "w_sc,w_abs,w_inc") != std::string::npos);

    // 33 data rows after the metadata block and header
    int data_rows = 0;
    std::istringstream lines(first.out);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line[0] != 'd') ++data_rows;
    CHECK(data_rows == 33);
}

TEST_CASE("config file and flags feed the same pipeline") {
    const fs::path cfg_path = fs::temp_directory_path() / "gainscatter_cli_cfg.json";
    {
        std::ofstream out(cfg_path);
        out << R"({"gamma_nr": 0.2, "pump_rate": 0.8, "sweep_n_points": 33,
                   "sweep_min": -4.0, "sweep_max": 4.0})";
    }
    const RunResult from_file = run_cli("spectrum --config " + cfg_path.string());
    const RunResult from_flags = run_cli(
        "spectrum --gamma-nr 0.2 --pump-rate 0.8 --sweep-min -4 --sweep-max 4 "
        "--sweep-points 33");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == from_flags.out);
    fs::remove(cfg_path);
}

TEST_CASE("invalid input is rejected with a nonzero exit") {
    CHECK(run_cli("spectrum --sweep-points 1").exit_code != 0);
    CHECK(run_cli("spectrum --gamma-u=-5").exit_code != 0);

    const fs::path bad = fs::temp_directory_path() / "gainscatter_cli_bad.json";
    {
        std::ofstream out(bad);
        out << R"({"no_such_key": 1})";
    }
    CHECK(run_cli("spectrum --config " + bad.string()).exit_code != 0);
    fs::remove(bad);
}

TEST_CASE("balance subcommand emits the critical pumps as JSON") {
    const RunResult r = run_cli("balance --gamma-nr 0.2");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["p_ext_zero"].get<double>() == doctest::Approx(1.8).epsilon(1e-12));
    CHECK(j["p_abs_zero"].get<double>() ==
          doctest::Approx(std::sqrt(0.24)).epsilon(1e-12));
    CHECK(j["p_ext_zero_solver"].get<double>() == doctest::Approx(1.8).epsilon(1e-9));
    CHECK(j["unitarity_residual_at_resonance"].get<double>() == 0.0);
}

TEST_CASE("pumpsweep carries the critical pumps in the footer") {
    const RunResult r = run_cli("pumpsweep --gamma-nr 0.2 --sweep-points 11");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("P_over_gamma0,sigma_sc,sigma_abs,sigma_ext") != std::string::npos);
    const auto footer_at = r.out.rfind("# {");
    REQUIRE(footer_at != std::string::npos);
    const json footer = json::parse(r.out.substr(footer_at + 2));
    CHECK(footer["p_ext_zero"].get<double>() == doctest::Approx(1.8).epsilon(1e-12));
}

TEST_CASE("compare subcommand reports the imbalance ratio") {
    const RunResult r = run_cli(
        "compare --gamma-nr 0.2 --pump-rate 1.0 --sweep-points 5 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    for (const auto& row : j["rows"]) {
        const double imbalance = (1.0 - 1.2) / 2.2;
        CHECK(row["ratio"].get<double>() ==
              doctest::Approx(imbalance * imbalance).epsilon(1e-10));
    }
}

TEST_CASE("bloch subcommand emits a trajectory") {
    const RunResult r = run_cli(
        "bloch --pump-rate 1.8 --gamma-nr 0.2 --ne 0.3 --t-end 5 "
        "--omega0 4 --omega-u 12 --method rk4 --stride 200");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("time,rho_gg,rho_ee,re_rho_eg,im_rho_eg") != std::string::npos);
}

TEST_CASE("oracle subcommand reports every target and exits cleanly") {
    const RunResult r = run_cli("oracle --gamma-nr 0.2 --pump-rate 1.8");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["all_pass"].get<bool>());
    CHECK(j["targets"].size() == 9);
    for (const auto& t : j["targets"]) {
        CHECK(t["pass"].get<bool>());
        CHECK(t["rel_error"].get<double>() <= t["tolerance"].get<double>());
    }
}

TEST_CASE("output file path writes the same bytes as stdout") {
    // the metadata block echoes output_path, so drop that one line before
    // comparing the two destinations
    const auto without_path_echo = [](const std::string& text) {
        std::istringstream in(text);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("# output_path", 0) != 0) out << line << "\n";
        return out.str();
    };
    const fs::path out_path = fs::temp_directory_path() / "gainscatter_cli_file.csv";
    const std::string args = "spectrum --gamma-nr 0.2 --sweep-points 7";
    const RunResult to_stdout = run_cli(args);
    const RunResult to_file = run_cli(args + " --out " + out_path.string());
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    CHECK(without_path_echo(slurp(out_path)) == without_path_echo(to_stdout.out));
    fs::remove(out_path);
}
