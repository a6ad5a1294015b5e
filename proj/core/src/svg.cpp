#include <perfcast/svg.hpp>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace perfcast {

namespace {

// Fixed 640x480 canvas; plot area inside the margins.
constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 50.0;
constexpr double kRight = 14.0;
constexpr double kTop = 32.0;
constexpr double kBottom = 40.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};
constexpr int kPaletteSize = 8;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double to_x(double p) { return kLeft + p * kPlotW; }
double to_y(double v) { return kTop + (1.0 - v) * kPlotH; }

struct Series {
    std::string label;
    std::vector<const SweepRow*> rows;
};

std::vector<Series> collect_series(const std::vector<SweepResult>& results) {
    std::vector<Series> series;
    for (const SweepResult& result : results) {
        const SweepRow* previous = nullptr;
        for (const SweepRow& row : result.rows) {
            const bool new_rule =
                previous == nullptr || previous->rule.name() != row.rule.name() ||
                previous->rule.constant_level() != row.rule.constant_level();
            if (new_rule) {
                std::string label{row.rule.name()};
                if (results.size() > 1 && !result.config.label.empty()) {
                    label += ", " + result.config.label;
                }
                series.push_back({label, {}});
            }
            series.back().rows.push_back(&row);
            previous = &row;
        }
    }
    return series;
}

} // namespace

void render_svg(const std::vector<SweepResult>& results, std::ostream& out,
                const ChartOptions& options) {
    const std::vector<Series> series = collect_series(results);
    if (series.empty()) {
        throw std::invalid_argument("render_svg: nothing to plot");
    }

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"480\" viewBox=\"0 0 640 480\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    if (!options.title.empty()) {
        out << "<text x=\"" << fmt(kWidth / 2)
            << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" "
               "text-anchor=\"middle\">"
            << options.title << "</text>\n";
    }

    // frame and ticks
    out << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(kPlotW)
        << "\" height=\"" << fmt(kPlotH) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double ticks[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    const char* tick_labels[] = {"0", "0.25", "0.5", "0.75", "1"};
    for (int i = 0; i < 5; ++i) {
        const double x = to_x(ticks[i]);
        const double y = to_y(ticks[i]);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop + kPlotH) << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(kTop + kPlotH + 4) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + kPlotH + 17)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << tick_labels[i] << "</text>\n"
            << "<line x1=\"" << fmt(kLeft - 4) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kLeft)
            << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(kLeft - 7) << "\" y=\"" << fmt(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << tick_labels[i] << "</text>\n";
    }
    out << "<text x=\"" << fmt(kLeft + kPlotW / 2) << "\" y=\"" << fmt(kHeight - 8)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
        << "true probability p</text>\n"
        << "<text x=\"14\" y=\"" << fmt(kTop + kPlotH / 2)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 14 "
        << fmt(kTop + kPlotH / 2) << ")\">optimal forecast</text>\n";

    // y = x reference
    out << "<line x1=\"" << fmt(to_x(0.0)) << "\" y1=\"" << fmt(to_y(0.0)) << "\" x2=\""
        << fmt(to_x(1.0)) << "\" y2=\"" << fmt(to_y(1.0))
        << "\" stroke=\"#999999\" stroke-dasharray=\"5 4\"/>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[s % kPaletteSize]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].rows.size(); ++i) {
            if (i > 0) out << ' ';
            out << fmt(to_x(series[s].rows[i]->p)) << ',' << fmt(to_y(series[s].rows[i]->p_hat_star));
        }
        out << "\"/>\n";
    }

    if (options.show_legend) {
        double y = kTop + 14.0;
        for (std::size_t s = 0; s < series.size(); ++s) {
            out << "<line x1=\"" << fmt(kLeft + 8) << "\" y1=\"" << fmt(y) << "\" x2=\""
                << fmt(kLeft + 32) << "\" y2=\"" << fmt(y) << "\" stroke=\""
                << kPalette[s % kPaletteSize] << "\" stroke-width=\"1.5\"/>\n"
                << "<text x=\"" << fmt(kLeft + 37) << "\" y=\"" << fmt(y + 4)
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << series[s].label
                << "</text>\n";
            y += 15.0;
        }
    }

    out << "</svg>\n";
    if (!out) {
        throw std::runtime_error("failed to write SVG stream");
    }
}

} // namespace perfcast
