#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "evoviz/embedding.hpp"
#include "evoviz/metrics/exploration.hpp"
#include "evoviz/metrics/hypervolume.hpp"

namespace evoviz {

inline constexpr const char* embedding_csv_header = "gen,idx,e1,e2,score,space,stride";
inline constexpr const char* hypervolume_csv_header = "gen,hv";

// Embedding points with the exploration score attached to each, as stored in
// the embedding CSV. Eigenvalues are not part of the file.
struct ScoredEmbedding {
    Embedding embedding;
    std::vector<double> scores;  // aligned with embedding.points
};

// Looks up each embedded point's score in the profile.
[[nodiscard]] ScoredEmbedding attach_scores(const Embedding& embedding, const ExplorationProfile& profile);

// CSV rows in (gen, idx) order; reals with 17 significant digits; LF.
void write_embedding(const Embedding& embedding, const ExplorationProfile& profile, std::ostream& out);
void write_embedding(const Embedding& embedding, const ExplorationProfile& profile,
                     const std::filesystem::path& path);
void write_embedding(const ScoredEmbedding& scored, std::ostream& out);

[[nodiscard]] ScoredEmbedding read_embedding(std::istream& in);
[[nodiscard]] ScoredEmbedding read_embedding(const std::filesystem::path& path);

void write_hypervolume_trace(const HypervolumeTrace& trace, std::ostream& out);
void write_hypervolume_trace(const HypervolumeTrace& trace, const std::filesystem::path& path);
// The reference point is not stored; the returned trace has an empty reference.
[[nodiscard]] HypervolumeTrace read_hypervolume_trace(std::istream& in);
[[nodiscard]] HypervolumeTrace read_hypervolume_trace(const std::filesystem::path& path);

}  // namespace evoviz
