#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "evoviz/emit/tables.hpp"

namespace evoviz {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Anchors at scores 0, 0.25, 0.5, 0.75, 1 (dark purple through teal to yellow).
inline constexpr std::array<Rgb, 5> colour_anchors{{
    {68, 1, 84},
    {59, 82, 139},
    {33, 145, 140},
    {94, 201, 98},
    {253, 231, 37},
}};

// Piecewise-linear lookup, channels rounded to nearest; the score is clamped to [0,1].
[[nodiscard]] Rgb colour_for_score(double score) noexcept;

struct FigureOptions {
    int width_px = 900;
    int height_px = 700;
    double azimuth_deg = 45.0;
    double elevation_deg = 25.0;
    std::string title;
};

/// Static 3-D view of an embedded history: (e1, e2) in the horizontal plane
/// and the generation, normalised to [0,1], as height, under a fixed
/// orthographic projection. Every point is a circle (class "point") coloured
/// by its exploration score; final-generation points are then overdrawn with
/// white crosses (class "cross"). Throws ContractViolation when empty.
[[nodiscard]] std::string render_history_figure(const ScoredEmbedding& scored, const FigureOptions& options = {});
[[nodiscard]] std::string render_history_figure(const Embedding& embedding, const ExplorationProfile& profile,
                                                const FigureOptions& options = {});

// Hypervolume against generation as a single polyline (class "trace").
[[nodiscard]] std::string render_hv_figure(const HypervolumeTrace& trace, const FigureOptions& options = {});

}  // namespace evoviz
