#include "rankforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rankforge {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct SvgWriter {
    std::ostringstream out;

    void open(double width, double height) {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
            << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
            << fmt(height) << "\" font-family=\"sans-serif\">\n";
        out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
            << "\" fill=\"white\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0) {
        out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
            << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
            << fmt(width) << "\"/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& fill,
              const std::string& extra = "") {
        out << "<rect " << (extra.empty() ? "" : extra + " ") << "x=\"" << fmt(x) << "\" y=\""
            << fmt(y) << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\" fill=\""
            << fill << "\"/>\n";
    }

    void text(double x, double y, const std::string& content, double size,
              const std::string& anchor, const std::string& extra = "") {
        out << "<text " << (extra.empty() ? "" : extra + " ") << "x=\"" << fmt(x) << "\" y=\""
            << fmt(y) << "\" font-size=\"" << fmt(size) << "\" text-anchor=\"" << anchor
            << "\">" << escape_xml(content) << "</text>\n";
    }

    std::string close() {
        out << "</svg>\n";
        return out.str();
    }
};

}  // namespace

std::string render_boxplot_svg(const SweepReport& report) {
    const auto& dist = report.rank_distribution;
    const std::size_t m = dist.alternatives.size();
    if (m == 0) throw Error("boxplot needs at least 1 alternative");

    const double slot = 70.0;
    const double left = 60.0, right = 20.0, top = 50.0, bottom = 60.0;
    const double plot_h = 320.0;
    const double width = left + static_cast<double>(m) * slot + right;
    const double height = top + plot_h + bottom;

    // Rank 1 at the top; a single rank level still gets a nonzero span.
    const double max_rank = static_cast<double>(std::max<std::size_t>(m, 2));
    auto y_of = [&](double rank) {
        return top + (rank - 1.0) / (max_rank - 1.0) * plot_h;
    };

    SvgWriter svg;
    svg.open(width, height);
    svg.text(width / 2.0, 24.0, "Ranking distribution across pipelines", 15.0, "middle");

    // Horizontal grid and rank axis labels.
    for (std::size_t r = 1; r <= static_cast<std::size_t>(max_rank); ++r) {
        const double y = y_of(static_cast<double>(r));
        svg.line(left, y, width - right, y, "#e0e0e0");
        svg.text(left - 8.0, y + 4.0, std::to_string(r), 11.0, "end");
    }
    svg.text(16.0, top + plot_h / 2.0, "rank", 12.0, "middle",
             "transform=\"rotate(-90 16 " + fmt(top + plot_h / 2.0) + ")\"");

    for (std::size_t i = 0; i < m; ++i) {
        const auto& s = dist.rows[i];
        const double cx = left + (static_cast<double>(i) + 0.5) * slot;
        const double half = slot * 0.3;
        const double y_min = y_of(s.min), y_q1 = y_of(s.q1), y_med = y_of(s.median),
                     y_q3 = y_of(s.q3), y_max = y_of(s.max);

        // Whisker spine and caps (min is the better, upper end).
        svg.line(cx, y_min, cx, y_max, "#555555");
        svg.line(cx - half * 0.6, y_min, cx + half * 0.6, y_min, "#555555");
        svg.line(cx - half * 0.6, y_max, cx + half * 0.6, y_max, "#555555");
        // Box q1..q3 (may be degenerate when every pipeline agrees).
        svg.rect(cx - half, y_q1, 2.0 * half, y_q3 - y_q1, "#9ecae1",
                 "class=\"box\" stroke=\"#3182bd\"");
        svg.line(cx - half, y_med, cx + half, y_med, "#08519c", 2.0);

        svg.text(cx, top + plot_h + 20.0, dist.alternatives[i], 11.0, "middle");
    }
    return svg.close();
}

namespace {

// Monotone light-to-dark blue ramp; t in [0, 1].
std::string ramp_color(double t) {
    const double r0 = 247, g0 = 251, b0 = 255;
    const double r1 = 8, g1 = 48, b1 = 107;
    const int r = static_cast<int>(std::lround(r0 + (r1 - r0) * t));
    const int g = static_cast<int>(std::lround(g0 + (g1 - g0) * t));
    const int b = static_cast<int>(std::lround(b0 + (b1 - b0) * t));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string render_heatmap_svg(const SweepReport& report) {
    if (!report.correlation) {
        throw Error("heatmap needs at least 2 pipelines (no correlation matrix in report)");
    }
    const MetricMatrix& m = *report.correlation;
    const std::size_t k = m.size();

    const double cell_w = 88.0, cell_h = 40.0;
    const double left = 230.0, top = 150.0, right = 30.0, bottom = 30.0;
    const double width = left + static_cast<double>(k) * cell_w + right;
    const double height = top + static_cast<double>(k) * cell_h + bottom;

    double lo = m.cells[0], hi = m.cells[0];
    for (double v : m.cells) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    SvgWriter svg;
    svg.open(width, height);
    svg.text(width / 2.0, 24.0, "Pairwise ranking correlation", 15.0, "middle");

    for (std::size_t j = 0; j < k; ++j) {
        const double x = left + (static_cast<double>(j) + 0.5) * cell_w;
        svg.text(x, top - 10.0, m.labels[j], 10.0, "start",
                 "transform=\"rotate(-45 " + fmt(x) + " " + fmt(top - 10.0) + ")\"");
    }
    for (std::size_t i = 0; i < k; ++i) {
        const double y = top + (static_cast<double>(i) + 0.5) * cell_h;
        svg.text(left - 8.0, y + 3.5, m.labels[i], 10.0, "end");
        for (std::size_t j = 0; j < k; ++j) {
            const double v = m.at(i, j);
            const double t = (hi == lo) ? 0.5 : (v - lo) / (hi - lo);
            const double x = left + static_cast<double>(j) * cell_w;
            svg.rect(x, top + static_cast<double>(i) * cell_h, cell_w, cell_h, ramp_color(t),
                     "class=\"cell\" data-row=\"" + std::to_string(i) + "\" data-col=\"" +
                         std::to_string(j) + "\" stroke=\"white\"");
            svg.text(x + cell_w / 2.0, y + 4.0, fmt3(v), 12.0, "middle",
                     "class=\"cell-label\" fill=\"" +
                         std::string(t > 0.55 ? "#ffffff" : "#1a1a1a") + "\"");
        }
    }
    return svg.close();
}

void render_svg(const SweepReport& report, SvgKind kind,
                const std::filesystem::path& path) {
    const std::string content =
        kind == SvgKind::Boxplot ? render_boxplot_svg(report) : render_heatmap_svg(report);
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write SVG to '" + path.string() + "'");
    out << content;
    if (!out) throw Error("failed writing SVG to '" + path.string() + "'");
}

}  // namespace rankforge
