// Copyright 2026 The cgmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgmeas/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"

using namespace cgmeas;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "cgmeas");
    std::ostringstream out, err;
    const int code = cli::parse_and_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path tmp_path(const std::string& name) {
    std::filesystem::path dir(CGMEAS_TEST_TMPDIR);
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct Csv {
    std::map<std::string, std::string> header;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq != std::string::npos) csv.header[line.substr(2, eq - 2)] = line.substr(eq + 1);
        } else if (csv.columns.empty()) {
            csv.columns = split(line);
        } else {
            csv.rows.push_back(split(line));
        }
    }
    return csv;
}

}  // namespace

TEST(Cli, negativity_example_writes_one_row_per_point) {
    const auto path = tmp_path("neg.csv");
    const Invocation r = run({"negativity", "--n", "4,6,12", "--c0", "0.7071067811865476", "--theta-steps", "256", "--out",
                       path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const Csv csv = parse_csv(slurp(path));
    EXPECT_EQ(csv.columns, (std::vector<std::string>{"theta", "t", "N", "negativity"}));
    ASSERT_EQ(csv.rows.size(), 3u * 256u);
    EXPECT_EQ(csv.rows.front()[2], "4");
    EXPECT_EQ(csv.rows.back()[2], "12");
    for (const auto& row : csv.rows) EXPECT_GE(std::stod(row[3]), 0.0);
}

TEST(Cli, prob_time_plateau) {
    const Invocation r = run({"prob-time", "--n", "50", "--c0", "0.5773502691896258", "--theta-steps", "3", "--theta-max",
                       "3.141592653589793"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Csv csv = parse_csv(r.out);
    EXPECT_EQ(csv.columns, (std::vector<std::string>{"sweep_value", "N", "pr_plus1", "pr_0", "pr_minus1"}));
    ASSERT_EQ(csv.rows.size(), 3u);
    const auto& mid = csv.rows[1];
    EXPECT_NEAR(std::stod(mid[2]), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(std::stod(mid[3]), 0.0, 1e-12);
    EXPECT_NEAR(std::stod(mid[4]), 2.0 / 3.0, 1e-12);
}

TEST(Cli, prob_initial_defaults) {
    const Invocation r = run({"prob-initial", "--p-steps", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Csv csv = parse_csv(r.out);
    EXPECT_EQ(csv.header.at("N"), "9,33,99");
    EXPECT_EQ(csv.header.at("sweep_variable"), "p");
    EXPECT_EQ(csv.rows.size(), 3u * 11u);
}

TEST(Cli, validate_exits_zero) {
    const Invocation r = run({"validate"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, usage_errors_exit_two) {
    EXPECT_EQ(run({"negativity", "--bogus", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"negativity", "--c0", "abc"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"negativity", "--c0", "1.5"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"negativity", "--n", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"negativity", "--theta-max", "1", "--t-max", "2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"prob-time", "--p", "1.2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({}).code, cli::kExitUsage);

    const Invocation guarded = run({"coherences", "--n", "100", "--theta-steps", "2"});
    EXPECT_EQ(guarded.code, cli::kExitUsage);
    EXPECT_NE(guarded.err.find("cost guard"), std::string::npos) << guarded.err;
}

TEST(Cli, failed_run_leaves_no_output_file) {
    const auto path = tmp_path("guarded.csv");
    std::filesystem::remove(path);
    EXPECT_EQ(run({"negativity", "--n", "6,100", "--out", path.string()}).code, cli::kExitUsage);
    EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(Cli, output_is_deterministic) {
    const std::vector<std::string> args{"coherences", "--n", "6,12", "--theta-steps", "17", "--c0-phase", "0.4"};
    const Invocation a = run(args);
    const Invocation b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, header_round_trips_parameters) {
    const double c0 = 0.6, p = 0.3, phi = 1.0 / 3.0;
    const Invocation r = run({"negativity", "--n", "4", "--c0", cli::detail::full(c0), "--p", cli::detail::full(p), "--phi",
                       cli::detail::full(phi), "--theta-steps", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Csv csv = parse_csv(r.out);
    EXPECT_EQ(std::stod(csv.header.at("c0")), c0);
    EXPECT_EQ(std::stod(csv.header.at("c1")), std::sqrt(1.0 - c0 * c0));
    EXPECT_EQ(std::stod(csv.header.at("p")), p);
    EXPECT_EQ(std::stod(csv.header.at("phi")), phi);
    EXPECT_EQ(std::stod(csv.header.at("grid_max")), 2.0 * std::numbers::pi);
    EXPECT_EQ(csv.header.at("grid_points"), "2");
}

TEST(Cli, json_config_applies_and_flags_override) {
    const auto cfg = tmp_path("config.json");
    {
        std::ofstream f(cfg);
        f << R"({"n": [4, 6], "c0": 0.6, "theta-steps": 5})";
    }
    const Invocation from_file = run({"negativity", "--config", cfg.string()});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    Csv csv = parse_csv(from_file.out);
    EXPECT_EQ(csv.header.at("N"), "4,6");
    EXPECT_EQ(std::stod(csv.header.at("c0")), 0.6);
    EXPECT_EQ(csv.rows.size(), 10u);

    const Invocation overridden = run({"negativity", "--config", cfg.string(), "--c0", "0.8", "--n", "4"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    csv = parse_csv(overridden.out);
    EXPECT_EQ(csv.header.at("N"), "4");
    EXPECT_EQ(std::stod(csv.header.at("c0")), 0.8);
    EXPECT_EQ(csv.rows.size(), 5u);

    const auto bad = tmp_path("bad.json");
    {
        std::ofstream f(bad);
        f << R"({"nonsense": 1})";
    }
    EXPECT_EQ(run({"negativity", "--config", bad.string()}).code, cli::kExitUsage);
}

TEST(Cli, time_axis_columns) {
    const Invocation r = run({"negativity", "--n", "4", "--omega", "2", "--t-max", "8", "--theta-steps", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Csv csv = parse_csv(r.out);
    EXPECT_EQ(csv.header.at("sweep_variable"), "time");
    ASSERT_EQ(csv.rows.size(), 3u);
    // theta = omega t / N
    EXPECT_EQ(std::stod(csv.rows[2][0]), 4.0);
    EXPECT_EQ(std::stod(csv.rows[2][1]), 8.0);
    EXPECT_EQ(std::stod(csv.rows[1][0]), 2.0);
}
