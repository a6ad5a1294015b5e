#include <perfcast/figures.hpp>

#include <perfcast/svg.hpp>
#include <perfcast/sweep.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace perfcast {

namespace {

std::vector<ScoringRule> proper_rules() {
    return {ScoringRule::quadratic(), ScoringRule::spherical(), ScoringRule::logarithmic()};
}

struct FigureDef {
    std::string name;
    std::string description;
    SweepConfig config;
};

std::vector<FigureDef> standard_figures() {
    std::vector<FigureDef> defs;
    auto add = [&defs](std::string name, std::string description, PerformativityMap map,
                       double c, std::string label) {
        SweepConfig config;
        config.rules = proper_rules();
        config.map = map;
        config.audit = AuditCost(2.0, c);
        config.label = std::move(label);
        defs.push_back({std::move(name), std::move(description), std::move(config)});
    };

    const PerformativityMap drift_half = PerformativityMap::drift(0.5);
    const PerformativityMap reversion = PerformativityMap::reversion();

    add("figure1a", "drift, alpha=0.5, q=2, c=1", drift_half, 1.0, "drift, c=1");
    add("figure1b", "reversion, q=2, c=1", reversion, 1.0, "reversion, c=1");
    add("figure2a", "drift, alpha=0.5, q=2, c=0.01", drift_half, 0.01, "c=0.01");
    add("figure2b", "drift, alpha=0.5, q=2, c=1", drift_half, 1.0, "c=1");
    add("figure2c", "drift, alpha=0.5, q=2, c=10", drift_half, 10.0, "c=10");
    add("figure3a", "reversion, q=2, c=0.01", reversion, 0.01, "c=0.01");
    add("figure3b", "reversion, q=2, c=1", reversion, 1.0, "c=1");
    add("figure3c", "reversion, q=2, c=10", reversion, 10.0, "c=10");
    add("figure4a", "drift, alpha=0.1, q=2, c=1", PerformativityMap::drift(0.1), 1.0, "alpha=0.1");
    add("figure4b", "drift, alpha=0.5, q=2, c=1", drift_half, 1.0, "alpha=0.5");
    add("figure4c", "drift, alpha=0.9, q=2, c=1", PerformativityMap::drift(0.9), 1.0, "alpha=0.9");
    return defs;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    file << content;
    if (!file) {
        throw std::runtime_error("failed to write " + path.string());
    }
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

std::string manifest_json(const std::vector<FigureDef>& defs,
                          const std::vector<FigureArtifact>& artifacts) {
    std::ostringstream out;
    out << "{\n  \"artifacts\": [\n";
    for (std::size_t i = 0; i < artifacts.size(); ++i) {
        const FigureArtifact& artifact = artifacts[i];
        const SweepConfig& cfg = defs[i].config;
        out << "    {\n"
            << "      \"name\": \"" << json_escape(artifact.name) << "\",\n"
            << "      \"description\": \"" << json_escape(artifact.description) << "\",\n";
        if (!artifact.csv_file.empty()) {
            out << "      \"csv\": \"" << json_escape(artifact.csv_file) << "\",\n";
        }
        if (!artifact.svg_file.empty()) {
            out << "      \"svg\": \"" << json_escape(artifact.svg_file) << "\",\n";
        }
        out << "      \"rules\": [";
        for (std::size_t r = 0; r < cfg.rules.size(); ++r) {
            if (r > 0) out << ", ";
            out << '"' << cfg.rules[r].name() << '"';
        }
        out << "],\n"
            << "      \"phi\": \"" << cfg.map.name() << "\",\n"
            << "      \"alpha\": " << format_double(cfg.map.alpha()) << ",\n"
            << "      \"q\": " << format_double(cfg.audit.q()) << ",\n"
            << "      \"c\": " << format_double(cfg.audit.c()) << ",\n"
            << "      \"p_grid\": " << cfg.p_grid << ",\n"
            << "      \"grid_points\": " << cfg.grid.points << ",\n"
            << "      \"grid_lo\": " << format_double(cfg.grid.lo) << ",\n"
            << "      \"grid_hi\": " << format_double(cfg.grid.hi) << "\n"
            << "    }" << (i + 1 < artifacts.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

} // namespace

std::vector<FigureArtifact> write_figure_set(const std::filesystem::path& out_dir,
                                             FigureFormat format) {
    std::filesystem::create_directories(out_dir);
    const std::vector<FigureDef> defs = standard_figures();
    std::vector<FigureArtifact> artifacts;
    artifacts.reserve(defs.size());

    for (const FigureDef& def : defs) {
        const SweepResult result = run_sweep(def.config);
        FigureArtifact artifact{def.name, def.description, "", ""};

        if (format != FigureFormat::Svg) {
            std::ostringstream csv;
            write_csv(result, csv);
            artifact.csv_file = def.name + ".csv";
            write_file(out_dir / artifact.csv_file, csv.str());
        }
        if (format != FigureFormat::Csv) {
            std::ostringstream svg;
            render_svg({result}, svg, ChartOptions{def.description, true});
            artifact.svg_file = def.name + ".svg";
            write_file(out_dir / artifact.svg_file, svg.str());
        }
        artifacts.push_back(std::move(artifact));
    }

    write_file(out_dir / "manifest.json", manifest_json(defs, artifacts));
    return artifacts;
}

} // namespace perfcast
