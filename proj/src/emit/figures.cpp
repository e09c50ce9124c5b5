#include "evoviz/emit/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

constexpr const char* background = "rgb(40,40,46)";
constexpr const char* axis_colour = "rgb(190,190,190)";
constexpr const char* text_colour = "rgb(225,225,225)";
constexpr double point_radius = 2.2;
constexpr double cross_half = 3.5;

std::string fmt(const char* pattern, double v)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, pattern, v);
    return buffer;
}

std::string px(double v) { return fmt("%.2f", v); }

std::string escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
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

std::string rgb(Rgb c)
{
    return "rgb(" + std::to_string(c.r) + "," + std::to_string(c.g) + "," + std::to_string(c.b) + ")";
}

void open_document(std::ostringstream& svg, const FigureOptions& options, const std::string& description)
{
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width_px
        << "\" height=\"" << options.height_px << "\" viewBox=\"0 0 " << options.width_px << ' '
        << options.height_px << "\">\n"
        << "<desc>" << escape(description) << "</desc>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << options.width_px << "\" height=\"" << options.height_px
        << "\" fill=\"" << background << "\"/>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << px(options.width_px / 2.0) << "\" y=\"22\" fill=\"" << text_colour
            << "\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">" << escape(options.title)
            << "</text>\n";
    }
}

void line(std::ostringstream& svg, double x1, double y1, double x2, double y2, const char* cls)
{
    svg << "<line class=\"" << cls << "\" x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\"" << px(x2)
        << "\" y2=\"" << px(y2) << "\" stroke=\"" << axis_colour << "\" stroke-width=\"1\"/>\n";
}

void label(std::ostringstream& svg, double x, double y, const std::string& text, const char* anchor)
{
    svg << "<text x=\"" << px(x) << "\" y=\"" << px(y) << "\" fill=\"" << text_colour
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"" << anchor << "\">" << escape(text)
        << "</text>\n";
}

// Orthographic view: rotate about the vertical axis by the azimuth, then tilt
// by the elevation. Returns (screen x, screen up).
struct Projector {
    double cos_a, sin_a, cos_e, sin_e;

    explicit Projector(const FigureOptions& o)
        : cos_a(std::cos(o.azimuth_deg * std::numbers::pi / 180.0)),
          sin_a(std::sin(o.azimuth_deg * std::numbers::pi / 180.0)),
          cos_e(std::cos(o.elevation_deg * std::numbers::pi / 180.0)),
          sin_e(std::sin(o.elevation_deg * std::numbers::pi / 180.0))
    {
    }

    [[nodiscard]] std::array<double, 2> operator()(double x, double y, double z) const
    {
        const double depth = x * sin_a + y * cos_a;
        return {x * cos_a - y * sin_a, z * cos_e + depth * sin_e};
    }
};

// Maps the projected unit cube onto the canvas with a uniform scale.
struct Viewport {
    double scale = 1.0, cx = 0.0, cy = 0.0, mid_x = 0.0, mid_y = 0.0;

    Viewport(const Projector& project, const FigureOptions& o, double margin)
    {
        double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
        for (int corner = 0; corner < 8; ++corner) {
            const auto p = project(corner & 1 ? 1.0 : -1.0, corner & 2 ? 1.0 : -1.0, corner & 4 ? 1.0 : -1.0);
            lo_x = std::min(lo_x, p[0]);
            hi_x = std::max(hi_x, p[0]);
            lo_y = std::min(lo_y, p[1]);
            hi_y = std::max(hi_y, p[1]);
        }
        scale = std::min((o.width_px - 2.0 * margin) / (hi_x - lo_x), (o.height_px - 2.0 * margin) / (hi_y - lo_y));
        cx = 0.5 * (lo_x + hi_x);
        cy = 0.5 * (lo_y + hi_y);
        mid_x = o.width_px / 2.0;
        mid_y = o.height_px / 2.0;
    }

    [[nodiscard]] std::array<double, 2> operator()(std::array<double, 2> p) const
    {
        return {mid_x + (p[0] - cx) * scale, mid_y - (p[1] - cy) * scale};
    }
};

}  // namespace

Rgb colour_for_score(double score) noexcept
{
    const double s = std::isnan(score) ? 0.0 : std::clamp(score, 0.0, 1.0);
    const double scaled = s * 4.0;
    const auto segment = std::min(static_cast<std::size_t>(scaled), std::size_t{3});
    const double t = scaled - static_cast<double>(segment);
    const auto& a = colour_anchors[segment];
    const auto& b = colour_anchors[segment + 1];
    auto mix = [t](std::uint8_t lo, std::uint8_t hi) {
        return static_cast<std::uint8_t>(std::lround(lo + (static_cast<double>(hi) - lo) * t));
    };
    return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

std::string render_history_figure(const ScoredEmbedding& scored, const FigureOptions& options)
{
    const auto& points = scored.embedding.points;
    if (points.empty()) {
        throw ContractViolation("render_history_figure: empty embedding");
    }
    if (scored.scores.size() != points.size()) {
        throw ContractViolation("render_history_figure: score count differs from point count");
    }

    double extent = 0.0;
    std::size_t last_gen = 0;
    for (const auto& p : points) {
        extent = std::max({extent, std::abs(p.e1), std::abs(p.e2)});
        last_gen = std::max(last_gen, p.generation);
    }
    if (extent == 0.0) {
        extent = 1.0;
    }
    auto height_of = [&](std::size_t gen) {
        return last_gen == 0 ? -1.0 : 2.0 * static_cast<double>(gen) / static_cast<double>(last_gen) - 1.0;
    };

    const Projector project(options);
    const Viewport view(project, options, 70.0);
    auto to_canvas = [&](double x, double y, double z) { return view(project(x, y, z)); };

    std::ostringstream svg;
    open_document(svg, options,
                  "space=" + std::string(to_string(scored.embedding.space)) +
                      " stride=" + std::to_string(scored.embedding.stride) + " points=" +
                      std::to_string(points.size()) + " final_generation=" + std::to_string(last_gen));

    // Axes from the (-1,-1,-1) corner, five ticks each.
    const auto origin = to_canvas(-1, -1, -1);
    const auto e1_end = to_canvas(1, -1, -1);
    const auto e2_end = to_canvas(-1, 1, -1);
    const auto gen_end = to_canvas(-1, -1, 1);
    svg << "<g class=\"axes\">\n";
    line(svg, origin[0], origin[1], e1_end[0], e1_end[1], "axis");
    line(svg, origin[0], origin[1], e2_end[0], e2_end[1], "axis");
    line(svg, origin[0], origin[1], gen_end[0], gen_end[1], "axis");
    for (int i = 0; i <= 4; ++i) {
        const double u = -1.0 + 0.5 * i;
        const double value = u * extent;
        const auto a = to_canvas(u, -1, -1);
        line(svg, a[0], a[1], a[0], a[1] + 5, "tick");
        label(svg, a[0], a[1] + 17, fmt("%.3g", value), "middle");
        const auto b = to_canvas(-1, u, -1);
        line(svg, b[0], b[1], b[0], b[1] + 5, "tick");
        label(svg, b[0], b[1] + 17, fmt("%.3g", value), "middle");
        const auto c = to_canvas(-1, -1, u);
        line(svg, c[0] - 5, c[1], c[0], c[1], "tick");
        label(svg, c[0] - 8, c[1] + 4, fmt("%.0f", 0.5 * (u + 1.0) * static_cast<double>(last_gen)), "end");
    }
    label(svg, e1_end[0] + 10, e1_end[1] + 4, "e1", "start");
    label(svg, e2_end[0] - 10, e2_end[1] + 4, "e2", "end");
    label(svg, gen_end[0], gen_end[1] - 10, "generation", "middle");
    svg << "</g>\n";

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(points[a].generation, points[a].member_index) <
               std::pair(points[b].generation, points[b].member_index);
    });

    svg << "<g class=\"points\">\n";
    for (auto i : order) {
        const auto& p = points[i];
        const auto c = to_canvas(p.e1 / extent, p.e2 / extent, height_of(p.generation));
        svg << "<circle class=\"point\" cx=\"" << px(c[0]) << "\" cy=\"" << px(c[1]) << "\" r=\""
            << px(point_radius) << "\" fill=\"" << rgb(colour_for_score(scored.scores[i])) << "\"/>\n";
    }
    svg << "</g>\n<g class=\"final\">\n";
    for (auto i : order) {
        const auto& p = points[i];
        if (p.generation != last_gen) {
            continue;
        }
        const auto c = to_canvas(p.e1 / extent, p.e2 / extent, height_of(p.generation));
        svg << "<path class=\"cross\" d=\"M" << px(c[0] - cross_half) << ' ' << px(c[1] - cross_half) << " L"
            << px(c[0] + cross_half) << ' ' << px(c[1] + cross_half) << " M" << px(c[0] - cross_half) << ' '
            << px(c[1] + cross_half) << " L" << px(c[0] + cross_half) << ' ' << px(c[1] - cross_half)
            << "\" stroke=\"white\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

std::string render_history_figure(const Embedding& embedding, const ExplorationProfile& profile,
                                  const FigureOptions& options)
{
    return render_history_figure(attach_scores(embedding, profile), options);
}

std::string render_hv_figure(const HypervolumeTrace& trace, const FigureOptions& options)
{
    const auto& values = trace.values;
    if (values.empty()) {
        throw ContractViolation("render_hv_figure: empty trace");
    }
    const double left = 80.0;
    const double right = options.width_px - 30.0;
    const double top = 40.0;
    const double bottom = options.height_px - 60.0;

    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double last = static_cast<double>(values.size() - 1);
    auto x_of = [&](double t) { return last == 0.0 ? 0.5 * (left + right) : left + (right - left) * t / last; };
    auto y_of = [&](double v) { return hi == lo ? 0.5 * (top + bottom) : bottom - (bottom - top) * (v - lo) / (hi - lo); };

    std::ostringstream svg;
    open_document(svg, options, "hypervolume generations=" + std::to_string(values.size()));
    svg << "<g class=\"axes\">\n";
    line(svg, left, bottom, right, bottom, "axis");
    line(svg, left, bottom, left, top, "axis");
    for (int i = 0; i <= 4; ++i) {
        const double t = last * i / 4.0;
        const double x = x_of(t);
        line(svg, x, bottom, x, bottom + 5, "tick");
        label(svg, x, bottom + 18, fmt("%.0f", t), "middle");
        // A flat trace gets a single value tick at its level.
        if (hi != lo || i == 2) {
            const double v = lo + (hi - lo) * i / 4.0;
            const double y = y_of(v);
            line(svg, left - 5, y, left, y, "tick");
            label(svg, left - 8, y + 4, fmt("%.4g", v), "end");
        }
    }
    label(svg, 0.5 * (left + right), bottom + 40, "generation", "middle");
    svg << "<text x=\"20\" y=\"" << px(0.5 * (top + bottom)) << "\" fill=\"" << text_colour
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << px(0.5 * (top + bottom)) << ")\">hypervolume</text>\n";
    svg << "</g>\n<polyline class=\"trace\" fill=\"none\" stroke=\"" << rgb(colour_anchors[2])
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t t = 0; t < values.size(); ++t) {
        svg << (t == 0 ? "" : " ") << px(x_of(static_cast<double>(t))) << ',' << px(y_of(values[t]));
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

}  // namespace evoviz
