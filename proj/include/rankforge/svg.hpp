#pragma once

#include <filesystem>
#include <string>

#include "rankforge/report.hpp"

namespace rankforge {

enum class SvgKind { Boxplot, Heatmap };

/// Boxplot of the untied-rank distribution: one box per alternative
/// (whiskers at min/max, box at q1/q3, line at the median), rank 1 at the
/// top. Standalone well-formed SVG.
std::string render_boxplot_svg(const SweepReport& report);

/// k x k correlation heatmap with one labelled cell per pipeline pair
/// (3-decimal labels, monotone color ramp). Needs at least 2 pipelines.
std::string render_heatmap_svg(const SweepReport& report);

void render_svg(const SweepReport& report, SvgKind kind,
                const std::filesystem::path& path);

}  // namespace rankforge
