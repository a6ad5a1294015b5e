#include <doctest.h>

#include <perfcast/figures.hpp>
#include <perfcast/svg.hpp>
#include <perfcast/verify.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace perfcast;
namespace fs = std::filesystem;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

SweepResult drift_sweep() {
    SweepConfig config;
    config.rules = testutil::proper_rules();
    config.map = PerformativityMap::drift(0.5);
    config.label = "drift, c=1";
    return run_sweep(config);
}

} // namespace

TEST_CASE("svg output is a standalone 640x480 document") {
    std::ostringstream out;
    render_svg({drift_sweep()}, out, ChartOptions{"drift, c=1", true});
    const std::string svg = out.str();
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
                   "height=\"480\"") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // diagonal reference
    CHECK(count_occurrences(svg, "<polyline") == 3);           // one curve per rule
    CHECK(svg.find(">quadratic<") != std::string::npos);
    CHECK(svg.find(">spherical<") != std::string::npos);
    CHECK(svg.find(">log<") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);  // no external references
}

TEST_CASE("svg bytes are identical across renders") {
    const SweepResult result = drift_sweep();
    std::ostringstream first, second;
    render_svg({result}, first, ChartOptions{"probe", true});
    render_svg({result}, second, ChartOptions{"probe", true});
    CHECK(first.str() == second.str());
}

TEST_CASE("svg labels curves per sweep when several are overlaid") {
    SweepConfig config;
    config.rules = {ScoringRule::quadratic()};
    config.map = PerformativityMap::drift(0.5);
    config.audit = AuditCost(2.0, 1.0);
    config.label = "c=1";
    const SweepResult low = run_sweep(config);
    config.audit = AuditCost(2.0, 10.0);
    config.label = "c=10";
    const SweepResult high = run_sweep(config);

    std::ostringstream out;
    render_svg({low, high}, out);
    const std::string svg = out.str();
    CHECK(count_occurrences(svg, "<polyline") == 2);
    CHECK(svg.find("quadratic, c=1") != std::string::npos);
    CHECK(svg.find("quadratic, c=10") != std::string::npos);
}

TEST_CASE("svg rejects empty input") {
    std::ostringstream out;
    CHECK_THROWS_AS(render_svg({}, out), std::invalid_argument);
    SweepConfig config;
    config.rules = {ScoringRule::quadratic()};
    CHECK_THROWS_AS(render_svg({SweepResult{config, {}}}, out), std::invalid_argument);
}

TEST_CASE("figure set writes csv, svg, and manifest deterministically") {
    const fs::path base = fs::temp_directory_path() / "perfcast-figure-test";
    const fs::path dir_a = base / "a";
    const fs::path dir_b = base / "b";
    fs::remove_all(base);

    const auto artifacts = write_figure_set(dir_a);
    REQUIRE(artifacts.size() == 11);
    CHECK(artifacts.front().name == "figure1a");
    CHECK(artifacts.back().name == "figure4c");
    for (const auto& artifact : artifacts) {
        CHECK(fs::exists(dir_a / artifact.csv_file));
        CHECK(fs::exists(dir_a / artifact.svg_file));
    }
    const std::string manifest = slurp(dir_a / "manifest.json");
    CHECK(manifest.find("\"figure3b\"") != std::string::npos);
    CHECK(manifest.find("\"reversion\"") != std::string::npos);

    write_figure_set(dir_b);
    for (const auto& entry : fs::directory_iterator(dir_a)) {
        CHECK(slurp(entry.path()) == slurp(dir_b / entry.path().filename()));
    }
    fs::remove_all(base);
}

TEST_CASE("figure format filter drops the other representation") {
    const fs::path dir = fs::temp_directory_path() / "perfcast-figure-csv-only";
    fs::remove_all(dir);
    const auto artifacts = write_figure_set(dir, FigureFormat::Csv);
    for (const auto& artifact : artifacts) {
        CHECK(!artifact.csv_file.empty());
        CHECK(artifact.svg_file.empty());
    }
    bool saw_svg = false;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".svg") saw_svg = true;
    }
    CHECK(!saw_svg);
    fs::remove_all(dir);
}

TEST_CASE("the verification suite passes on this build") {
    const auto results = run_verification();
    CHECK(results.size() >= 20);
    for (const auto& result : results) {
        INFO(result.name, ": ", result.detail);
        CHECK(result.passed);
    }
    std::ostringstream out;
    CHECK(report(results, out));
    CHECK(count_occurrences(out.str(), "PASS") == results.size());
}
