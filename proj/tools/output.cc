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


#include "output.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace ctd::tools {

namespace fs = std::filesystem;

bool RunResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void write_csv(std::ostream& os, const Table& t, const ExperimentConfig& cfg) {
    os << "# schema: " << kCsvSchema << "\n";
    os << "# tool: ctd " << kToolVersion << "\n";
    os << "# table: " << t.name << "\n";
    for (const auto& [k, v] : cfg.echo()) os << "# config: " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << "\n";
    }
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

void write_svg(std::ostream& os, const Plot& p) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
    constexpr double W = 640, H = 420, ml = 70, mr = 160, mt = 40, mb = 50;
    auto tx = [&](double x) { return p.logx ? std::log10(x) : x; };
    auto ty = [&](double y) { return p.logy ? std::log10(y) : y; };
    auto usable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!p.logx || x > 0) && (!p.logy || y > 0);
    };
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& s : p.series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.x[i], s.y[i])) continue;
            x0 = std::min(x0, tx(s.x[i]));
            x1 = std::max(x1, tx(s.x[i]));
            y0 = std::min(y0, ty(s.y[i]));
            y1 = std::max(y1, ty(s.y[i]));
        }
    }
    if (!(x0 <= x1)) x0 = 0, x1 = 1;
    if (!(y0 <= y1)) y0 = 0, y1 = 1;
    if (x1 == x0) x0 -= 0.5, x1 += 0.5;
    if (y1 == y0) y0 -= 0.5, y1 += 0.5;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad, y1 += pad;
    auto px = [&](double x) { return ml + (tx(x) - x0) / (x1 - x0) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (ty(y) - y0) / (y1 - y0) * (H - mt - mb); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(W / 2 - mr / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">"
       << xml_escape(p.title) << "</text>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << W - ml - mr << "\" height=\"" << H - mt - mb
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = x0 + (x1 - x0) * i / 4, fy = y0 + (y1 - y0) * i / 4;
        const double X = ml + (W - ml - mr) * i / 4, Y = H - mb - (H - mt - mb) * i / 4;
        os << "<text x=\"" << num(X) << "\" y=\"" << num(H - mb + 15) << "\" text-anchor=\"middle\">"
           << tick(p.logx ? std::pow(10, fx) : fx) << "</text>\n";
        os << "<text x=\"" << num(ml - 5) << "\" y=\"" << num(Y + 4) << "\" text-anchor=\"end\">"
           << tick(p.logy ? std::pow(10, fy) : fy) << "</text>\n";
    }
    os << "<text x=\"" << num((W - mr + ml) / 2) << "\" y=\"" << num(H - 12) << "\" text-anchor=\"middle\">"
       << xml_escape(p.xlabel) << "</text>\n";
    os << "<text transform=\"translate(14," << num((H - mb + mt) / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
       << xml_escape(p.ylabel) << "</text>\n";
    for (std::size_t k = 0; k < p.series.size(); ++k) {
        const Series& s = p.series[k];
        const char* color = colors[k % 7];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
           << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.x[i], s.y[i])) continue;
            os << (first ? "" : " ") << num(px(s.x[i])) << "," << num(py(s.y[i]));
            first = false;
        }
        os << "\"/>\n";
        const double ly = mt + 14 * k + 8;
        os << "<line x1=\"" << num(W - mr + 10) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(W - mr + 30)
           << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\""
           << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
        os << "<text x=\"" << num(W - mr + 35) << "\" y=\"" << num(ly + 4) << "\">" << xml_escape(s.label)
           << "</text>\n";
    }
    os << "</svg>\n";
}

void write_summary(std::ostream& os, const RunResult& r, const ExperimentConfig& cfg,
                   const std::vector<std::string>& files) {
    nlohmann::ordered_json j;
    j["schema"] = "ctd-summary/1";
    j["tool"] = std::string("ctd ") + kToolVersion;
    nlohmann::ordered_json conf;
    for (const auto& [k, v] : cfg.echo()) conf[k] = v;
    j["config"] = conf;
    j["pass"] = r.pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back(
            {{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"detail", c.detail}});
    }
    nlohmann::ordered_json fit = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.fitted) fit[k] = v;
    j["fitted"] = fit;
    j["warnings"] = r.warnings;
    j["files"] = files;
    os << j.dump(2) << "\n";
}

std::vector<std::string> write_outputs(const RunResult& r, const ExperimentConfig& cfg) {
    const fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    std::vector<std::string> files;
    auto open = [&](const std::string& name) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
        files.push_back(name);
        return f;
    };
    for (const auto& t : r.tables) {
        auto f = open(t.name + ".csv");
        write_csv(f, t, cfg);
    }
    if (cfg.format == "csv+svg") {
        for (const auto& p : r.plots) {
            auto f = open(p.name + ".svg");
            write_svg(f, p);
        }
    }
    std::vector<std::string> listed = files;
    listed.push_back("summary.json");
    auto f = open("summary.json");
    write_summary(f, r, cfg, listed);
    return listed;
}

}  // namespace ctd::tools
