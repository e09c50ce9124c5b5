#include "evoviz/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "evoviz/embedding.hpp"
#include "evoviz/emit/figures.hpp"
#include "evoviz/emit/history_io.hpp"
#include "evoviz/emit/tables.hpp"
#include "evoviz/errors.hpp"
#include "evoviz/metrics/exploration.hpp"
#include "evoviz/metrics/hypervolume.hpp"
#include "evoviz/optimizer/run.hpp"
#include "evoviz/problems.hpp"

namespace evoviz::cli {

namespace {

// Bad input data (empty or inconsistent files); exit code 1.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OptionDef {
    const char* key;
    const char* help;
};

const std::vector<OptionDef> run_options{
    {"problem", "dtlz1, dtlz2, dtlz3, dtlz4 or dtlz7"},
    {"objectives", "number of objectives M (default 3)"},
    {"k", "distance variables (default 5 for dtlz1, 20 for dtlz7, 10 otherwise)"},
    {"algorithm", "nsga2 or nsga3 (default nsga2 for M <= 3, nsga3 otherwise)"},
    {"seed", "64-bit seed (default 0)"},
    {"evaluations", "evaluation budget (default 100000 for M <= 3, 200000 otherwise)"},
    {"pop", "population size (default 92 for M = 3, 212 for M = 5)"},
    {"partitions", "nsga3 Das-Dennis partitions (default: largest fitting the population)"},
    {"crossover-probability", "SBX probability (default 0.8)"},
    {"mutation-probability", "per-variable mutation probability (default 0.1)"},
    {"sbx-eta", "SBX distribution index (default 15)"},
    {"pm-eta", "polynomial mutation distribution index (default 7)"},
};

const std::vector<OptionDef> embed_options{
    {"history", "history file (JSON lines)"},
    {"space", "search or objective (default search)"},
    {"max-points", "upper bound on embedded points (default 10000)"},
    {"metric-space", "space of the exploration metric (default search)"},
};

const std::vector<OptionDef> hv_options{
    {"history", "history file (JSON lines)"},
    {"ref", "reference point as comma-separated reals, or auto (default auto)"},
};

const std::vector<OptionDef> render_options{
    {"embedding", "embedding CSV"},
    {"hv-trace", "hypervolume trace CSV"},
    {"title", "figure title"},
    {"width", "figure width in pixels (default 900)"},
    {"height", "figure height in pixels (default 700)"},
};

const std::vector<OptionDef> pipeline_extra_options{
    {"out-dir", "output directory"},
    {"max-points", "upper bound on embedded points (default 10000)"},
    {"metric-space", "space of the exploration metric (default search)"},
    {"ref", "reference point as comma-separated reals, or auto (default auto)"},
};

std::string config_key(std::string flag)
{
    for (char& c : flag) {
        if (c == '-') {
            c = '_';
        }
    }
    return flag;
}

std::set<std::string> known_config_keys()
{
    std::set<std::string> keys{"out"};
    for (const auto* list : {&run_options, &embed_options, &hv_options, &render_options, &pipeline_extra_options}) {
        for (const auto& def : *list) {
            keys.insert(config_key(def.key));
        }
    }
    return keys;
}

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Flag values resolved against the config file: flags > file > defaults.
class Settings {
public:
    Settings(std::string command, std::map<std::string, std::string> values)
        : command_(std::move(command)), values_(std::move(values))
    {
    }

    [[nodiscard]] bool has(const std::string& key) const { return values_.contains(config_key(key)); }

    [[nodiscard]] std::string text(const std::string& key) const
    {
        const auto it = values_.find(config_key(key));
        if (it == values_.end()) {
            throw ConfigError(command_ + ": --" + key + " is required");
        }
        return it->second;
    }

    [[nodiscard]] std::string text(const std::string& key, const std::string& fallback) const
    {
        return has(key) ? text(key) : fallback;
    }

    template <typename T>
    [[nodiscard]] T number(const std::string& key) const
    {
        const auto raw = text(key);
        T value{};
        const auto* end = raw.data() + raw.size();
        const auto [ptr, ec] = std::from_chars(raw.data(), end, value);
        if (ec != std::errc{} || ptr != end || raw.empty()) {
            throw ConfigError(command_ + ": invalid value '" + raw + "' for --" + key);
        }
        return value;
    }

    template <typename T>
    [[nodiscard]] T number(const std::string& key, T fallback) const
    {
        return has(key) ? number<T>(key) : fallback;
    }

private:
    std::string command_;
    std::map<std::string, std::string> values_;
};

struct Subcommand {
    CLI::App* app = nullptr;
    std::map<std::string, std::string> flags;  // keyed by flag name
    std::string config_path;
    std::vector<std::string> keys;

    void add(const OptionDef& def)
    {
        app->add_option(std::string("--") + def.key, flags[def.key], def.help);
        keys.emplace_back(def.key);
    }

    [[nodiscard]] Settings resolve() const
    {
        std::map<std::string, std::string> values;
        if (!config_path.empty()) {
            const auto file = read_config_file(config_path);
            for (const auto& key : keys) {
                if (const auto it = file.find(config_key(key)); it != file.end()) {
                    values[config_key(key)] = it->second;
                }
            }
        }
        for (const auto& key : keys) {
            if (app->get_option("--" + key)->count() > 0) {
                values[config_key(key)] = flags.at(key);
            }
        }
        return {app->get_name(), std::move(values)};
    }
};

std::optional<ObjectiveVector> parse_reference(const std::string& raw)
{
    if (raw == "auto") {
        return std::nullopt;
    }
    ObjectiveVector ref;
    std::istringstream stream(raw);
    std::string cell;
    while (std::getline(stream, cell, ',')) {
        cell = trim(cell);
        double v = 0.0;
        const auto* end = cell.data() + cell.size();
        const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
        if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
            throw ConfigError("--ref: cannot parse '" + raw + "' (expected comma-separated reals or auto)");
        }
        ref.push_back(v);
    }
    if (ref.empty() || raw.back() == ',') {
        throw ConfigError("--ref: cannot parse '" + raw + "' (expected comma-separated reals or auto)");
    }
    return ref;
}

struct RunOutcome {
    RunHistory history;
    double seconds = 0.0;
};

RunOutcome execute_run(const Settings& s)
{
    const auto name = parse_problem_name(s.text("problem"));
    const auto objectives = s.number<std::size_t>("objectives", 3);
    const auto spec = make_problem(name, objectives,
                                   s.has("k") ? std::optional(s.number<std::size_t>("k")) : std::nullopt);

    RunConfig rc;
    rc.algorithm = s.has("algorithm") ? parse_algorithm(s.text("algorithm"))
                                      : (objectives <= 3 ? Algorithm::nsga2 : Algorithm::nsga3);
    rc.evaluation_budget = s.number<std::size_t>("evaluations", objectives <= 3 ? 100'000 : 200'000);
    rc.population_size = s.number<std::size_t>("pop", default_population_size(objectives));
    rc.seed = s.number<std::uint64_t>("seed", 0);
    rc.reference_partitions = s.number<std::size_t>("partitions", 0);

    OperatorConfig oc;
    oc.crossover_probability = s.number<double>("crossover-probability", oc.crossover_probability);
    oc.mutation_probability = s.number<double>("mutation-probability", oc.mutation_probability);
    oc.sbx_eta = s.number<double>("sbx-eta", oc.sbx_eta);
    oc.pm_eta = s.number<double>("pm-eta", oc.pm_eta);

    const auto start = std::chrono::steady_clock::now();
    auto history = run(spec, rc, oc);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {std::move(history), elapsed.count()};
}

void print_summary(std::ostream& out, const RunOutcome& outcome)
{
    const auto& h = outcome.history;
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", outcome.seconds);
    out << to_string(h.problem.name) << " M=" << h.problem.objectives << ' ' << to_string(h.algorithm)
        << " generations=" << h.generations.size() << " evaluations="
        << h.generations.size() * h.population_size << " wall=" << wall << "s\n";
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::string figure_title(const RunHistory& h, EmbeddingSpace space)
{
    return std::string(to_string(h.problem.name)) + ", M=" + std::to_string(h.problem.objectives) + ", " +
           std::string(to_string(h.algorithm)) + ": " + std::string(to_string(space)) + " space";
}

int cmd_run(const Settings& s, std::ostream& out)
{
    const auto target = s.text("out");
    const auto outcome = execute_run(s);
    write_history(outcome.history, std::filesystem::path(target));
    print_summary(out, outcome);
    return success;
}

int cmd_embed(const Settings& s, std::ostream& out)
{
    const auto target = s.text("out");
    const auto space = parse_space(s.text("space", "search"));
    const auto metric_space = parse_space(s.text("metric-space", "search"));
    const auto max_points = s.number<std::size_t>("max-points", default_max_points);
    const auto history = read_history(std::filesystem::path(s.text("history")));

    const auto embedding = embed_history(history, space, max_points);
    const auto profile = exploration_profile(history, metric_space);
    write_embedding(embedding, profile, std::filesystem::path(target));
    out << "embedded " << embedding.points.size() << " points (" << to_string(space) << " space, stride "
        << embedding.stride << ")\n";
    return success;
}

int cmd_hv(const Settings& s, std::ostream& out)
{
    const auto target = s.text("out");
    const auto reference = parse_reference(s.text("ref", "auto"));
    const auto history = read_history(std::filesystem::path(s.text("history")));
    if (reference && reference->size() != history.problem.objectives) {
        throw ConfigError("--ref has " + std::to_string(reference->size()) + " components, history has " +
                          std::to_string(history.problem.objectives) + " objectives");
    }
    const auto trace = hypervolume_trace(history, reference);
    write_hypervolume_trace(trace, std::filesystem::path(target));
    out << "hypervolume trace of " << trace.values.size() << " generations\n";
    return success;
}

int cmd_render(const Settings& s, std::ostream& out)
{
    const auto target = s.text("out");
    if (!s.has("embedding") && !s.has("hv-trace")) {
        throw ConfigError("render: --embedding and/or --hv-trace is required");
    }
    FigureOptions options;
    options.width_px = s.number<int>("width", options.width_px);
    options.height_px = s.number<int>("height", options.height_px);
    options.title = s.text("title", "");
    if (options.width_px < 200 || options.height_px < 200) {
        throw ConfigError("render: figures must be at least 200x200 pixels");
    }
    const bool both = s.has("embedding") && s.has("hv-trace");

    if (s.has("embedding")) {
        const auto scored = read_embedding(std::filesystem::path(s.text("embedding")));
        if (scored.embedding.points.empty()) {
            throw DataError("render: embedding file has no points");
        }
        const std::filesystem::path path = both ? target + ".history.svg" : target;
        write_text(path, render_history_figure(scored, options));
        out << "wrote " << path.string() << '\n';
    }
    if (s.has("hv-trace")) {
        const auto trace = read_hypervolume_trace(std::filesystem::path(s.text("hv-trace")));
        if (trace.values.empty()) {
            throw DataError("render: hypervolume trace is empty");
        }
        const std::filesystem::path path = both ? target + ".hv.svg" : target;
        write_text(path, render_hv_figure(trace, options));
        out << "wrote " << path.string() << '\n';
    }
    return success;
}

int cmd_pipeline(const Settings& s, std::ostream& out)
{
    const std::filesystem::path dir = s.text("out-dir");
    const auto max_points = s.number<std::size_t>("max-points", default_max_points);
    const auto metric_space = parse_space(s.text("metric-space", "search"));
    const auto reference = parse_reference(s.text("ref", "auto"));
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    }

    const auto outcome = execute_run(s);
    const auto& history = outcome.history;
    if (reference && reference->size() != history.problem.objectives) {
        throw ConfigError("--ref has " + std::to_string(reference->size()) + " components, history has " +
                          std::to_string(history.problem.objectives) + " objectives");
    }
    write_history(history, dir / "history.jsonl");
    print_summary(out, outcome);

    const auto profile = exploration_profile(history, metric_space);
    for (auto space : {EmbeddingSpace::search, EmbeddingSpace::objective}) {
        const auto embedding = embed_history(history, space, max_points);
        const auto name = std::string(to_string(space));
        write_embedding(embedding, profile, dir / ("embedding_" + name + ".csv"));
        FigureOptions options;
        options.title = figure_title(history, space);
        write_text(dir / (name + ".history.svg"), render_history_figure(embedding, profile, options));
    }

    const auto trace = hypervolume_trace(history, reference);
    write_hypervolume_trace(trace, dir / "hv.csv");
    FigureOptions hv_options;
    hv_options.title = std::string(to_string(history.problem.name)) + ", M=" +
                       std::to_string(history.problem.objectives) + ": hypervolume";
    write_text(dir / "hv.svg", render_hv_figure(trace, hv_options));
    out << "wrote 7 artifacts to " << dir.string() << '\n';
    return success;
}

}  // namespace

ConfigValues parse_config(std::istream& in)
{
    static const auto known = known_config_keys();
    ConfigValues values;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const auto text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line) + ": expected 'key = value'");
        }
        const auto key = trim(text.substr(0, eq));
        const auto value = trim(text.substr(eq + 1));
        if (!known.contains(key)) {
            throw ConfigError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
        if (!values.emplace(key, value).second) {
            throw ConfigError("config line " + std::to_string(line) + ": duplicate key '" + key + "'");
        }
    }
    return values;
}

ConfigValues read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    return parse_config(in);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Optimise DTLZ problems with NSGA-II/III and visualise the search history", "evoviz"};
    app.require_subcommand(1);

    std::vector<std::unique_ptr<Subcommand>> subs;
    auto make = [&](const char* name, const char* description,
                    std::initializer_list<const std::vector<OptionDef>*> lists, bool with_out) {
        auto sub = std::make_unique<Subcommand>();
        sub->app = app.add_subcommand(name, description);
        sub->app->add_option("--config", sub->config_path, "key = value configuration file");
        for (const auto* list : lists) {
            for (const auto& def : *list) {
                if (std::find(sub->keys.begin(), sub->keys.end(), def.key) == sub->keys.end()) {
                    sub->add(def);
                }
            }
        }
        if (with_out) {
            sub->add({"out", "output path"});
        }
        subs.push_back(std::move(sub));
        return subs.back().get();
    };
    auto* run_cmd = make("run", "run an optimiser and write its history", {&run_options}, true);
    auto* embed_cmd = make("embed", "embed a history with classical MDS", {&embed_options}, true);
    auto* hv_cmd = make("hv", "hypervolume trace of a history", {&hv_options}, true);
    auto* render_cmd = make("render", "render SVG figures", {&render_options}, true);
    auto* pipeline_cmd =
        make("pipeline", "run, embed both spaces, hypervolume and render", {&run_options, &pipeline_extra_options},
             false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    try {
        if (run_cmd->app->parsed()) {
            return cmd_run(run_cmd->resolve(), out);
        }
        if (embed_cmd->app->parsed()) {
            return cmd_embed(embed_cmd->resolve(), out);
        }
        if (hv_cmd->app->parsed()) {
            return cmd_hv(hv_cmd->resolve(), out);
        }
        if (render_cmd->app->parsed()) {
            return cmd_render(render_cmd->resolve(), out);
        }
        if (pipeline_cmd->app->parsed()) {
            return cmd_pipeline(pipeline_cmd->resolve(), out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const UnsupportedDimension& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    }
    return usage_error;
}

}  // namespace evoviz::cli
