#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace perfcast {

enum class FigureFormat { Csv, Svg, Both };

struct FigureArtifact {
    std::string name;         // e.g. "figure1a"
    std::string description;  // map + parameters, human readable
    std::string csv_file;     // file name inside the output directory ("" if skipped)
    std::string svg_file;
};

/// Writes the standard figure set (drift/reversion comparison, cost ladder,
/// alpha ladder) plus manifest.json into out_dir, creating it if needed.
/// Output bytes depend only on the configs, so reruns are identical.
/// Returns the artifacts in the order written.
std::vector<FigureArtifact> write_figure_set(const std::filesystem::path& out_dir,
                                             FigureFormat format = FigureFormat::Both);

} // namespace perfcast
