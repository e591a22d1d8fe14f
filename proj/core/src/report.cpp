#include "sparse_lms/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "sparse_lms/errors.hpp"

namespace sparse_lms {

namespace {

std::vector<const MsdCurve*> sorted_curves(std::span<const MsdCurve> curves) {
    std::vector<const MsdCurve*> order;
    order.reserve(curves.size());
    for (const MsdCurve& c : curves) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(), [](const MsdCurve* a, const MsdCurve* b) {
        return CellKey{a->variant, a->sparsity_level} < CellKey{b->variant, b->sparsity_level};
    });
    return order;
}

std::ofstream open_output(const std::filesystem::path& out) {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + out.string());
    return f;
}

void finish(std::ofstream& f, const std::filesystem::path& out) {
    f.flush();
    if (!f) throw IoError("write failed for " + out.string());
}

// Plot geometry, in SVG user units.
constexpr double kPanelWidth = 480.0;
constexpr double kPanelHeight = 320.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;
constexpr double kLegendHeight = 40.0;

constexpr std::array<const char*, 4> kColors = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

const char* color_for(Variant v) { return kColors[static_cast<std::size_t>(v)]; }

std::string label_for(Variant v) {
    switch (v) {
        case Variant::Lms: return "LMS";
        case Variant::Llms: return "LLMS";
        case Variant::LpLikeLms: return "lp-like-LMS";
        case Variant::LpLikeLlms: return "lp-like-LLMS";
    }
    return "?";
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), ptr);
}

void write_csv(std::span<const MsdCurve> curves, std::ostream& out) {
    out << "algorithm,sr_numerator,sr_denominator,iteration,msd\n";
    for (const MsdCurve* c : sorted_curves(curves)) {
        const std::string prefix = std::string(to_string(c->variant)) + "," +
                                   std::to_string(c->sparsity_level) + "," +
                                   std::to_string(c->n_taps) + ",";
        for (std::size_t k = 0; k < c->values.size(); ++k) {
            out << prefix << (k + 1) << ',' << format_double(c->values[k]) << '\n';
        }
    }
}

void emit_csv(std::span<const MsdCurve> curves, const std::filesystem::path& out) {
    std::ofstream f = open_output(out);
    write_csv(curves, f);
    finish(f, out);
}

double to_db(double msd) { return 10.0 * std::log10(std::max(msd, kDbFloor)); }

std::string render_svg(std::span<const MsdCurve> curves, bool db_scale) {
    if (curves.empty()) throw ParameterError("plot needs at least one curve");

    std::map<std::size_t, std::vector<const MsdCurve*>> panels;
    std::vector<Variant> present;
    for (const MsdCurve* c : sorted_curves(curves)) {
        panels[c->sparsity_level].push_back(c);
        if (std::find(present.begin(), present.end(), c->variant) == present.end()) {
            present.push_back(c->variant);
        }
    }

    const std::size_t n_cols = panels.size() == 1 ? 1 : 2;
    const std::size_t n_rows = (panels.size() + n_cols - 1) / n_cols;
    const double width = static_cast<double>(n_cols) * kPanelWidth;
    const double height = static_cast<double>(n_rows) * kPanelHeight + kLegendHeight;
    const double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
    const double plot_h = kPanelHeight - kMarginTop - kMarginBottom;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt("%.0f", width)
        << "\" height=\"" << fmt("%.0f", height) << "\" viewBox=\"0 0 " << fmt("%.0f", width) << ' '
        << fmt("%.0f", height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::size_t index = 0;
    for (const auto& [level, members] : panels) {
        const double ox = static_cast<double>(index % n_cols) * kPanelWidth;
        const double oy = static_cast<double>(index / n_cols) * kPanelHeight;
        ++index;

        std::vector<std::vector<double>> ys;
        double lo = INFINITY;
        double hi = -INFINITY;
        std::size_t max_len = 0;
        for (const MsdCurve* c : members) {
            std::vector<double> y(c->values.size());
            for (std::size_t k = 0; k < y.size(); ++k) {
                y[k] = db_scale ? to_db(c->values[k]) : c->values[k];
                lo = std::min(lo, y[k]);
                hi = std::max(hi, y[k]);
            }
            max_len = std::max(max_len, y.size());
            ys.push_back(std::move(y));
        }
        if (!(lo < hi)) {
            const double pad = std::isfinite(lo) ? std::max(1.0, std::abs(lo) * 0.05) : 1.0;
            if (!std::isfinite(lo)) lo = hi = 0.0;
            lo -= pad;
            hi += pad;
        } else {
            const double pad = 0.05 * (hi - lo);
            lo -= pad;
            hi += pad;
        }

        const double left = ox + kMarginLeft;
        const double top = oy + kMarginTop;
        const std::string sr = std::to_string(level) + "/" + std::to_string(members.front()->n_taps);
        svg << "<g class=\"subplot\" data-sr=\"" << sr << "\" data-y-min=\"" << format_double(lo)
            << "\" data-y-max=\"" << format_double(hi) << "\">\n";
        svg << "<rect class=\"frame\" x=\"" << fmt("%.2f", left) << "\" y=\"" << fmt("%.2f", top)
            << "\" width=\"" << fmt("%.2f", plot_w) << "\" height=\"" << fmt("%.2f", plot_h)
            << "\" fill=\"none\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt("%.2f", left + plot_w / 2) << "\" y=\"" << fmt("%.2f", top - 12)
            << "\" text-anchor=\"middle\">SR = " << sr << "</text>\n";
        svg << "<text x=\"" << fmt("%.2f", left + plot_w / 2) << "\" y=\""
            << fmt("%.2f", top + plot_h + 36) << "\" text-anchor=\"middle\">iteration</text>\n";
        svg << "<text x=\"" << fmt("%.2f", ox + 16) << "\" y=\"" << fmt("%.2f", top + plot_h / 2)
            << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << fmt("%.2f", ox + 16) << ' '
            << fmt("%.2f", top + plot_h / 2) << ")\">" << (db_scale ? "MSD (dB)" : "MSD")
            << "</text>\n";
        for (int t = 0; t <= 4; ++t) {
            const double frac = t / 4.0;
            const double ty = top + plot_h * (1.0 - frac);
            svg << "<text x=\"" << fmt("%.2f", left - 6) << "\" y=\"" << fmt("%.2f", ty + 4)
                << "\" text-anchor=\"end\">" << fmt("%.3g", lo + frac * (hi - lo)) << "</text>\n";
            const double tx = left + plot_w * frac;
            const double it = frac * static_cast<double>(max_len);
            svg << "<text x=\"" << fmt("%.2f", tx) << "\" y=\"" << fmt("%.2f", top + plot_h + 18)
                << "\" text-anchor=\"middle\">" << fmt("%.0f", it) << "</text>\n";
        }

        for (std::size_t m = 0; m < members.size(); ++m) {
            const std::vector<double>& y = ys[m];
            svg << "<polyline class=\"curve\" data-algorithm=\"" << to_string(members[m]->variant)
                << "\" fill=\"none\" stroke=\"" << color_for(members[m]->variant)
                << "\" stroke-width=\"1\" points=\"";
            const double span = max_len > 1 ? static_cast<double>(max_len - 1) : 1.0;
            for (std::size_t k = 0; k < y.size(); ++k) {
                const double px = left + plot_w * (max_len > 1 ? static_cast<double>(k) / span : 0.5);
                const double py = top + plot_h * (hi - y[k]) / (hi - lo);
                if (k) svg << ' ';
                svg << fmt("%.2f", px) << ',' << fmt("%.2f", py);
            }
            svg << "\"/>\n";
        }
        svg << "</g>\n";
    }

    svg << "<g class=\"legend\">\n";
    const double legend_y = static_cast<double>(n_rows) * kPanelHeight + kLegendHeight / 2;
    for (std::size_t i = 0; i < present.size(); ++i) {
        const double lx = 20.0 + static_cast<double>(i) * 140.0;
        svg << "<line x1=\"" << fmt("%.2f", lx) << "\" y1=\"" << fmt("%.2f", legend_y) << "\" x2=\""
            << fmt("%.2f", lx + 24) << "\" y2=\"" << fmt("%.2f", legend_y) << "\" stroke=\""
            << color_for(present[i]) << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fmt("%.2f", lx + 30) << "\" y=\"" << fmt("%.2f", legend_y + 4)
            << "\">" << label_for(present[i]) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

void emit_plot(std::span<const MsdCurve> curves, const std::filesystem::path& out, bool db_scale) {
    const std::string doc = render_svg(curves, db_scale);
    std::ofstream f = open_output(out);
    f << doc;
    finish(f, out);
}

void write_summary(std::span<const SteadyStateSummary> rows, std::ostream& out) {
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %-8s %-24s %-24s\n", "algorithm", "SR", "mean_msd",
                  "std_error");
    out << line;
    for (const SteadyStateSummary& r : rows) {
        const std::string sr = std::to_string(r.sparsity_level) + "/" + std::to_string(r.n_taps);
        std::snprintf(line, sizeof line, "%-14s %-8s %-24s %-24s\n",
                      std::string(to_string(r.variant)).c_str(), sr.c_str(),
                      format_double(r.mean).c_str(), format_double(r.std_error).c_str());
        out << line;
    }
}

}  // namespace sparse_lms
