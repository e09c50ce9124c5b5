#include "evoviz/emit/history_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "evoviz/errors.hpp"
#include "evoviz/problems.hpp"
#include "evoviz/random.hpp"

namespace evoviz {

namespace {

using nlohmann::json;

void write_matrix(std::ostream& out, const std::vector<Individual>& members, bool decision)
{
    out << '[';
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& v = decision ? members[i].x : members[i].y;
        out << (i == 0 ? "[" : ",[");
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j != 0) {
                out << ',';
            }
            out << format_real(v[j]);
        }
        out << ']';
    }
    out << ']';
}

std::string line_prefix(std::size_t line) { return "history line " + std::to_string(line) + ": "; }

template <typename T>
T field(const json& record, const char* key, std::size_t line)
{
    const auto it = record.find(key);
    if (it == record.end()) {
        throw MalformedLine(line_prefix(line) + "missing field '" + key + "'", line);
    }
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw MalformedLine(line_prefix(line) + "field '" + key + "' has the wrong type", line);
    }
}

json parse_line(const std::string& text, std::size_t line)
{
    try {
        auto record = json::parse(text);
        if (!record.is_object()) {
            throw MalformedLine(line_prefix(line) + "not a JSON object", line);
        }
        return record;
    } catch (const json::parse_error& e) {
        throw MalformedLine(line_prefix(line) + "malformed JSON (" + e.what() + ")", line);
    }
}

std::vector<std::vector<double>> read_matrix(const json& record, const char* key, std::size_t rows,
                                             std::size_t cols, std::size_t line)
{
    auto matrix = field<std::vector<std::vector<double>>>(record, key, line);
    if (matrix.size() != rows) {
        throw InvariantViolation(line_prefix(line) + "'" + key + "' has " + std::to_string(matrix.size()) +
                                     " rows, expected " + std::to_string(rows),
                                 line);
    }
    for (const auto& row : matrix) {
        if (row.size() != cols) {
            throw InvariantViolation(line_prefix(line) + "'" + key + "' row of length " +
                                         std::to_string(row.size()) + ", expected " + std::to_string(cols),
                                     line);
        }
    }
    return matrix;
}

}  // namespace

std::string format_real(double value)
{
    if (!std::isfinite(value)) {
        throw ContractViolation("format_real: non-finite value");
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_history(const RunHistory& history, std::ostream& out)
{
    history.validate();
    const auto& ops = history.operators;
    out << "{\"format_version\":" << history_format_version << ",\"problem\":\""
        << to_string(history.problem.name) << "\",\"M\":" << history.problem.objectives
        << ",\"D\":" << history.problem.dimensions() << ",\"k\":" << history.problem.k << ",\"algorithm\":\""
        << to_string(history.algorithm) << "\",\"population_size\":" << history.population_size
        << ",\"evaluation_budget\":" << history.evaluation_budget << ",\"seed\":" << history.seed
        << ",\"reference_partitions\":" << history.reference_partitions
        << ",\"operators\":{\"crossover_probability\":" << format_real(ops.crossover_probability)
        << ",\"mutation_probability\":" << format_real(ops.mutation_probability)
        << ",\"sbx_eta\":" << format_real(ops.sbx_eta) << ",\"pm_eta\":" << format_real(ops.pm_eta)
        << "},\"rng_algorithm\":\"" << Rng::algorithm << "\"}\n";
    for (const auto& gen : history.generations) {
        out << "{\"gen\":" << gen.generation << ",\"x\":";
        write_matrix(out, gen.members, true);
        out << ",\"y\":";
        write_matrix(out, gen.members, false);
        out << "}\n";
    }
}

void write_history(const RunHistory& history, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_history(history, out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

RunHistory read_history(std::istream& in)
{
    std::string text;
    if (!std::getline(in, text)) {
        throw MalformedLine(line_prefix(1) + "missing header", 1);
    }
    const auto header = parse_line(text, 1);
    if (!header.contains("format_version") || !header["format_version"].is_number_integer() ||
        header["format_version"].get<int>() != history_format_version) {
        throw VersionMismatch(line_prefix(1) + "unsupported format_version (expected " +
                                  std::to_string(history_format_version) + ")",
                              1);
    }

    RunHistory history;
    try {
        const auto m = field<std::size_t>(header, "M", 1);
        const auto k = field<std::size_t>(header, "k", 1);
        history.problem = make_problem(parse_problem_name(field<std::string>(header, "problem", 1)), m, k);
        if (field<std::size_t>(header, "D", 1) != history.problem.dimensions()) {
            throw InvariantViolation(line_prefix(1) + "D does not equal k + M - 1", 1);
        }
        history.algorithm = parse_algorithm(field<std::string>(header, "algorithm", 1));
    } catch (const ConfigError& e) {
        throw MalformedLine(line_prefix(1) + e.what(), 1);
    }
    history.population_size = field<std::size_t>(header, "population_size", 1);
    history.evaluation_budget = field<std::size_t>(header, "evaluation_budget", 1);
    history.seed = field<std::uint64_t>(header, "seed", 1);
    history.reference_partitions = field<std::size_t>(header, "reference_partitions", 1);
    const auto ops = field<json>(header, "operators", 1);
    history.operators.crossover_probability = field<double>(ops, "crossover_probability", 1);
    history.operators.mutation_probability = field<double>(ops, "mutation_probability", 1);
    history.operators.sbx_eta = field<double>(ops, "sbx_eta", 1);
    history.operators.pm_eta = field<double>(ops, "pm_eta", 1);
    if (history.population_size < 2) {
        throw InvariantViolation(line_prefix(1) + "population_size below 2", 1);
    }

    const auto d = history.problem.dimensions();
    const auto m = history.problem.objectives;
    std::size_t line = 1;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty() && in.peek() == std::char_traits<char>::eof()) {
            break;
        }
        const auto record = parse_line(text, line);
        const auto gen = field<std::size_t>(record, "gen", line);
        if (gen != history.generations.size()) {
            throw InvariantViolation(line_prefix(line) + "generation " + std::to_string(gen) + " out of order (expected " +
                                         std::to_string(history.generations.size()) + ")",
                                     line);
        }
        auto xs = read_matrix(record, "x", history.population_size, d, line);
        auto ys = read_matrix(record, "y", history.population_size, m, line);
        GenerationRecord g{gen, {}};
        g.members.reserve(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (double v : xs[i]) {
                if (!(v >= 0.0 && v <= 1.0)) {
                    throw InvariantViolation(line_prefix(line) + "decision variable outside [0,1]", line);
                }
            }
            g.members.push_back({std::move(xs[i]), std::move(ys[i])});
        }
        history.generations.push_back(std::move(g));
    }
    if (history.generations.empty()) {
        throw InvariantViolation(line_prefix(line + 1) + "history has no generations", line + 1);
    }
    return history;
}

RunHistory read_history(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return read_history(in);
}

}  // namespace evoviz
