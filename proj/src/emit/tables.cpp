#include "evoviz/emit/tables.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "evoviz/emit/history_io.hpp"
#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return in;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, sep)) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        cells.emplace_back();
    }
    return cells;
}

template <typename T>
T parse_cell(const std::string& cell, std::size_t line)
{
    T value{};
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw MalformedLine("line " + std::to_string(line) + ": cannot parse '" + cell + "'", line);
    }
    return value;
}

}  // namespace

ScoredEmbedding attach_scores(const Embedding& embedding, const ExplorationProfile& profile)
{
    ScoredEmbedding scored{embedding, {}};
    scored.scores.reserve(embedding.points.size());
    for (const auto& p : embedding.points) {
        if (p.generation >= profile.scores.size() || p.member_index >= profile.scores[p.generation].size()) {
            throw ContractViolation("attach_scores: profile does not cover generation " +
                                    std::to_string(p.generation));
        }
        scored.scores.push_back(profile.score(p.generation, p.member_index));
    }
    return scored;
}

void write_embedding(const ScoredEmbedding& scored, std::ostream& out)
{
    const auto& points = scored.embedding.points;
    if (scored.scores.size() != points.size()) {
        throw ContractViolation("write_embedding: score count differs from point count");
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(points[a].generation, points[a].member_index) <
               std::pair(points[b].generation, points[b].member_index);
    });
    const auto space = to_string(scored.embedding.space);
    out << embedding_csv_header << '\n';
    for (auto i : order) {
        const auto& p = points[i];
        out << p.generation << ',' << p.member_index << ',' << format_real(p.e1) << ',' << format_real(p.e2) << ','
            << format_real(scored.scores[i]) << ',' << space << ',' << scored.embedding.stride << '\n';
    }
}

void write_embedding(const Embedding& embedding, const ExplorationProfile& profile, std::ostream& out)
{
    write_embedding(attach_scores(embedding, profile), out);
}

void write_embedding(const Embedding& embedding, const ExplorationProfile& profile,
                     const std::filesystem::path& path)
{
    auto scored = attach_scores(embedding, profile);
    auto out = open_out(path);
    write_embedding(scored, out);
    finish(out, path);
}

ScoredEmbedding read_embedding(std::istream& in)
{
    std::string text;
    if (!std::getline(in, text) || text != embedding_csv_header) {
        throw MalformedLine("line 1: expected header '" + std::string(embedding_csv_header) + "'", 1);
    }
    ScoredEmbedding scored;
    std::size_t line = 1;
    bool first = true;
    while (std::getline(in, text)) {
        ++line;
        const auto cells = split(text, ',');
        if (cells.size() != 7) {
            throw MalformedLine("line " + std::to_string(line) + ": expected 7 columns", line);
        }
        EmbeddedPoint p;
        p.generation = parse_cell<std::size_t>(cells[0], line);
        p.member_index = parse_cell<std::size_t>(cells[1], line);
        p.e1 = parse_cell<double>(cells[2], line);
        p.e2 = parse_cell<double>(cells[3], line);
        const auto score = parse_cell<double>(cells[4], line);
        EmbeddingSpace space{};
        try {
            space = parse_space(cells[5]);
        } catch (const ConfigError& e) {
            throw MalformedLine("line " + std::to_string(line) + ": " + e.what(), line);
        }
        const auto stride = parse_cell<std::size_t>(cells[6], line);
        if (first) {
            scored.embedding.space = space;
            scored.embedding.stride = stride;
            first = false;
        } else if (space != scored.embedding.space || stride != scored.embedding.stride) {
            throw InvariantViolation("line " + std::to_string(line) + ": space/stride changes mid-file", line);
        }
        scored.embedding.points.push_back(p);
        scored.scores.push_back(score);
    }
    return scored;
}

ScoredEmbedding read_embedding(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_embedding(in);
}

void write_hypervolume_trace(const HypervolumeTrace& trace, std::ostream& out)
{
    out << hypervolume_csv_header << '\n';
    for (std::size_t t = 0; t < trace.values.size(); ++t) {
        out << t << ',' << format_real(trace.values[t]) << '\n';
    }
}

void write_hypervolume_trace(const HypervolumeTrace& trace, const std::filesystem::path& path)
{
    auto out = open_out(path);
    write_hypervolume_trace(trace, out);
    finish(out, path);
}

HypervolumeTrace read_hypervolume_trace(std::istream& in)
{
    std::string text;
    if (!std::getline(in, text) || text != hypervolume_csv_header) {
        throw MalformedLine("line 1: expected header '" + std::string(hypervolume_csv_header) + "'", 1);
    }
    HypervolumeTrace trace;
    std::size_t line = 1;
    while (std::getline(in, text)) {
        ++line;
        const auto cells = split(text, ',');
        if (cells.size() != 2) {
            throw MalformedLine("line " + std::to_string(line) + ": expected 2 columns", line);
        }
        const auto gen = parse_cell<std::size_t>(cells[0], line);
        if (gen != trace.values.size()) {
            throw InvariantViolation("line " + std::to_string(line) + ": generation out of order", line);
        }
        trace.values.push_back(parse_cell<double>(cells[1], line));
    }
    return trace;
}

HypervolumeTrace read_hypervolume_trace(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_hypervolume_trace(in);
}

}  // namespace evoviz
