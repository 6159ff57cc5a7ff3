// Copyright 2026 The ctd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "config.h"
#include "ctd/asymptotics.h"
#include "ctd/types.h"
#include "experiments.h"
#include "ops.h"
#include "output.h"
#include "pool.h"
#include "verify.h"

namespace fs = std::filesystem;
using namespace ctd;
using namespace ctd::tools;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("ctd_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::map<std::string, std::string> dir_contents(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) out[e.path().filename().string()] = slurp(e.path());
    return out;
}

ExperimentConfig small_fig5() {
    ExperimentConfig c = default_config("fig5");
    apply_setting(c, "gamma_in", "1:3:1");
    apply_setting(c, "n_th", "0.25,1");
    c.format = "csv+svg";
    return c;
}

}  // namespace

TEST(Config, ParseList) {
    EXPECT_EQ(parse_list("1, 2.5,3"), (std::vector<double>{1, 2.5, 3}));
    EXPECT_EQ(parse_list("0:1:0.1").size(), 11u);
    EXPECT_EQ(parse_list("0:1:0.1")[3], 0.3);
    EXPECT_EQ(parse_list("0:0.2:0.1,5"), (std::vector<double>{0, 0.1, 0.2, 5}));
    EXPECT_TRUE(parse_list("").empty());
    EXPECT_THROW(parse_list("1,,2"), ConfigError);
    EXPECT_THROW(parse_list("3:1:1"), ConfigError);
    EXPECT_THROW(parse_list("0:1:0"), ConfigError);
    EXPECT_THROW(parse_list("nan"), ConfigError);
}

TEST(Config, FormatRoundTrips) {
    for (double v : {0.0, 0.1, 1e-4, 400.0, 2.0 / 3, -1e300}) EXPECT_EQ(std::stod(format_number(v)), v);
    EXPECT_EQ(format_number(400), "400");
}

TEST(Config, FileThenOverrides) {
    const fs::path dir = scratch("cfg");
    fs::create_directories(dir);
    std::ofstream(dir / "a.cfg") << "# sweep\nexperiment = theorem1-sweep\nn = 1000, 10000  # two points\njobs = 2\n";
    ExperimentConfig c = load_config_file((dir / "a.cfg").string());
    EXPECT_EQ(c.experiment, "theorem1-sweep");
    EXPECT_EQ(c.grid("n"), (std::vector<double>{1000, 10000}));
    EXPECT_EQ(c.grid("n_th"), (std::vector<double>{1.0}));
    EXPECT_EQ(c.jobs, 2);
    apply_setting(c, "n", "100");
    EXPECT_EQ(c.grid("n"), (std::vector<double>{100}));

    std::ofstream(dir / "b.cfg") << "n_th = 1\n";
    EXPECT_THROW(load_config_file((dir / "b.cfg").string()), ConfigError);
    std::ofstream(dir / "c.cfg") << "experiment = fig9\n";
    EXPECT_THROW(load_config_file((dir / "c.cfg").string()), ConfigError);
    std::ofstream(dir / "d.cfg") << "experiment = fig2\njust words\n";
    EXPECT_THROW(load_config_file((dir / "d.cfg").string()), ConfigError);
    EXPECT_THROW(load_config_file((dir / "missing.cfg").string()), ConfigError);
    EXPECT_THROW(apply_setting(c, "format", "png"), ConfigError);
    EXPECT_THROW(apply_setting(c, "jobs", "0"), ConfigError);
}

TEST(Run, DeterministicAcrossJobCounts) {
    ExperimentConfig a = small_fig5(), b = small_fig5();
    a.out_dir = scratch("det1").string();
    b.out_dir = scratch("det2").string();
    a.jobs = 1;
    b.jobs = 3;
    write_outputs(run_experiment(a), a);
    write_outputs(run_experiment(b), b);
    const auto ca = dir_contents(a.out_dir), cb = dir_contents(b.out_dir);
    EXPECT_EQ(ca.size(), 4u);  // two curves, one plot, summary
    EXPECT_EQ(ca, cb);

    write_outputs(run_experiment(b), b);
    EXPECT_EQ(dir_contents(b.out_dir), cb);
}

TEST(Run, EmptyCustomGridWritesHeaderOnly) {
    ExperimentConfig c = default_config("custom");
    c.out_dir = scratch("empty").string();
    const RunResult r = run_experiment(c);
    ASSERT_EQ(r.tables.size(), 1u);
    EXPECT_TRUE(r.tables[0].rows.empty());
    EXPECT_TRUE(r.pass());
    write_outputs(r, c);
    std::ifstream f(fs::path(c.out_dir) / "custom_delta.csv");
    std::string line, last;
    int data = 0;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++data;
        last = line;
    }
    EXPECT_EQ(data, 1);
    EXPECT_EQ(last, "n_th,opt,gauss,mp,heterodyne");
}

TEST(Run, CustomCartesianProduct) {
    ExperimentConfig c = default_config("custom");
    apply_setting(c, "op", "theorem1");
    apply_setting(c, "n", "1000,10000");
    apply_setting(c, "n_th", "0.5,1");
    apply_setting(c, "alpha", "1");
    const RunResult r = run_experiment(c);
    const Table& t = r.tables[0];
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.columns[0], "n");
    // last argument varies fastest
    EXPECT_EQ(t.rows[1][0], 1000);
    EXPECT_EQ(t.rows[1][1], 1);
    EXPECT_EQ(t.rows[2][0], 10000);
    EXPECT_EQ(t.rows[3][4], find_op("theorem1").fn({10000, 1, 1})[1]);

    apply_setting(c, "op", "nothing");
    EXPECT_THROW(run_experiment(c), ConfigError);
}

TEST(Run, Fig2MatchesDeltaFactor) {
    const RunResult r = run_experiment(default_config("fig2"));
    ASSERT_EQ(r.tables[0].rows.size(), 61u);
    for (const auto& row : r.tables[0].rows) {
        EXPECT_NEAR(row[1], delta_factor(DeltaKind::kOpt, row[0]), 1e-12);
        EXPECT_NEAR(row[2], delta_factor(DeltaKind::kGauss, row[0]), 1e-12);
        EXPECT_NEAR(row[3], delta_factor(DeltaKind::kMp, row[0]), 1e-12);
    }
    EXPECT_TRUE(r.pass());
}

TEST(Run, Fig5RowsCarryTupleAndClearForbiddenRegion) {
    const RunResult r = run_experiment(small_fig5());
    ASSERT_EQ(r.tables.size(), 2u);
    for (const auto& t : r.tables) {
        for (const auto& row : t.rows) {
            ASSERT_EQ(row.size(), t.columns.size());
            EXPECT_EQ(row[2], 1e-4);
            EXPECT_EQ(row[3], 400);
            EXPECT_GE(row[5], row[9]);
        }
    }
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(r.fitted.count("gamma_times_gap_nth_1"));
}

TEST(Run, GuardsAndResourceCeilings) {
    ExperimentConfig c = small_fig5();
    apply_setting(c, "gamma_out", "0.2");
    apply_setting(c, "gamma_in", "1");
    EXPECT_THROW(run_experiment(c), ConfigError);
    c.force = true;
    const RunResult r = run_experiment(c);
    ASSERT_FALSE(r.warnings.empty());
    EXPECT_NE(r.warnings[0].find("forced"), std::string::npos);

    ExperimentConfig big = small_fig5();
    apply_setting(big, "L", "1e7");
    try {
        run_experiment(big);
        FAIL();
    } catch (const ResourceError& e) {
        EXPECT_NE(std::string(e.what()).find("L=1e+07"), std::string::npos) << e.what();
    }
    ExperimentConfig wide = small_fig5();
    apply_setting(wide, "gamma_in", "2000");
    wide.force = true;
    try {
        run_experiment(wide);
        FAIL();
    } catch (const ResourceError& e) {
        EXPECT_NE(std::string(e.what()).find("gamma_in=2000"), std::string::npos) << e.what();
    }

    ExperimentConfig bad = default_config("fig2");
    apply_setting(bad, "n_th", "-1");
    EXPECT_THROW(run_experiment(bad), ConfigError);
}

TEST(Pool, LowestIndexErrorWins) {
    std::vector<int> hit(50);
    try {
        parallel_for(50, 4, [&](std::size_t i) {
            hit[i] = 1;
            if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
        });
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "7");
    }
    for (int h : hit) EXPECT_EQ(h, 1);
    parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Ops, CatalogShapes) {
    const std::map<std::string, double> sample = {
        {"n_th", 0.5}, {"alpha", 2},      {"gamma_in", 3}, {"gamma_out", 0.01}, {"L", 50},       {"n", 10},
        {"m", 1},      {"l", 3},          {"beta", 1},     {"omega", 1},        {"target", 0.5}, {"R", 6},
        {"gamma", 3},  {"n_th_in", 0.5}, {"alpha_in", 1}, {"n_th_out", 0.1},   {"alpha_out", 1}};
    for (const auto& op : op_catalog()) {
        std::vector<double> args;
        for (const auto& a : op.args) {
            ASSERT_TRUE(sample.count(a)) << op.name << " " << a;
            args.push_back(sample.at(a));
        }
        const auto out = op.fn(args);
        EXPECT_EQ(out.size(), op.outputs.size()) << op.name;
    }
    EXPECT_THROW(find_op("nope"), ConfigError);
    EXPECT_THROW(find_op("gauss-first").fn({0.5, 1, 2.5}), ConfigError);
}

TEST(Verify, ChannelSuitePasses) {
    const auto entries = run_verify("channel", 5, 1);
    ASSERT_FALSE(entries.empty());
    for (const auto& e : entries) EXPECT_TRUE(e.pass) << e.name << " " << e.residual;
    EXPECT_THROW(run_verify("nope", 1, 1), ConfigError);
}

TEST(Output, SvgAndSummaryAreWellFormed) {
    Plot p{"p", "t <&>", "x", "y", true, true, {{"a", {1, 10, 100}, {1, 0.1, -1}, false}}};
    std::ostringstream svg;
    write_svg(svg, p);
    EXPECT_NE(svg.str().find("t &lt;&amp;&gt;"), std::string::npos);
    EXPECT_EQ(svg.str().rfind("</svg>\n"), svg.str().size() - 7);

    RunResult r;
    r.checks.push_back({"c", false, 2, 1, ""});
    r.fitted["k"] = 0.5;
    std::ostringstream js;
    write_summary(js, r, default_config("fig2"), {"fig2.csv"});
    EXPECT_NE(js.str().find("\"pass\": false"), std::string::npos);
    EXPECT_NE(js.str().find("\"k\": 0.5"), std::string::npos);
}
