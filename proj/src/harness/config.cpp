#include "qgx/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "qgx/errors.hpp"

namespace qgx::harness {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) throw ConfigError(key, "not a valid number: '" + value + "'");
    return out;
}

}  // namespace

std::string_view to_string(CrossoverKind k) noexcept {
    switch (k) {
        case CrossoverKind::genotypic: return "genotypic";
        case CrossoverKind::quotient: return "quotient";
        case CrossoverKind::quotient_heuristic: return "quotient-heuristic";
    }
    return "?";
}

std::optional<CrossoverKind> parse_crossover_kind(std::string_view s) noexcept {
    if (s == "genotypic") return CrossoverKind::genotypic;
    if (s == "quotient") return CrossoverKind::quotient;
    if (s == "quotient-heuristic") return CrossoverKind::quotient_heuristic;
    return std::nullopt;
}

void RunConfig::validate() const {
    if (problem.empty()) throw ConfigError("problem", "missing");
    if (representation.empty()) throw ConfigError("representation", "missing");
    if (population < 2) throw ConfigError("population", "must be >= 2");
    if (generations < 1) throw ConfigError("generations", "must be >= 1");
    if (tournament < 1) throw ConfigError("tournament", "must be >= 1");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw ConfigError("crossover_rate", "must be in [0,1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw ConfigError("mutation_rate", "must be in [0,1]");
}

RunConfig parse_config(std::istream& in, const std::string& source) {
    static const std::set<std::string> known{"problem",   "representation", "crossover",     "population",
                                             "generations", "tournament",   "crossover_rate", "mutation_rate",
                                             "seed",       "instance",       "output"};
    static const std::set<std::string> required{"problem", "representation", "crossover", "population",
                                                "generations", "seed"};
    RunConfig cfg;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ParseError(source, lineno, "expected 'key = value'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (!known.contains(key)) throw ConfigError(key, "unknown key (" + source + ":" + std::to_string(lineno) + ")");
        if (!seen.insert(key).second) throw ConfigError(key, "given more than once");
        if (value.empty()) throw ConfigError(key, "empty value");

        if (key == "problem") cfg.problem = value;
        else if (key == "representation") cfg.representation = value;
        else if (key == "crossover") {
            const auto k = parse_crossover_kind(value);
            if (!k) throw ConfigError(key, "expected genotypic | quotient | quotient-heuristic");
            cfg.crossover = *k;
        } else if (key == "population") cfg.population = parse_number<std::size_t>(key, value);
        else if (key == "generations") cfg.generations = parse_number<std::size_t>(key, value);
        else if (key == "tournament") cfg.tournament = parse_number<std::size_t>(key, value);
        else if (key == "crossover_rate") cfg.crossover_rate = parse_number<double>(key, value);
        else if (key == "mutation_rate") cfg.mutation_rate = parse_number<double>(key, value);
        else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "instance") cfg.instance = value;
        else if (key == "output") cfg.output = value;
    }
    for (const auto& r : required)
        if (!seen.contains(r)) throw ConfigError(r, "missing");
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    RunConfig cfg = parse_config(in, path.string());
    // Relative instance/output paths are taken relative to the config file.
    const auto base = path.parent_path();
    if (!cfg.instance.empty() && cfg.instance.is_relative()) cfg.instance = base / cfg.instance;
    if (!cfg.output.empty() && cfg.output.is_relative()) cfg.output = base / cfg.output;
    return cfg;
}

void write_config(std::ostream& out, const RunConfig& cfg) {
    out << "problem = " << cfg.problem << '\n'
        << "representation = " << cfg.representation << '\n'
        << "crossover = " << to_string(cfg.crossover) << '\n'
        << "population = " << cfg.population << '\n'
        << "generations = " << cfg.generations << '\n'
        << "tournament = " << cfg.tournament << '\n'
        << "crossover_rate = " << cfg.crossover_rate << '\n'
        << "mutation_rate = " << cfg.mutation_rate << '\n'
        << "seed = " << cfg.seed << '\n';
    if (!cfg.instance.empty()) out << "instance = " << cfg.instance.string() << '\n';
    if (!cfg.output.empty()) out << "output = " << cfg.output.string() << '\n';
}

RepresentationId parse_representation(const std::string& id) {
    RepresentationId out;
    const auto colon = id.find(':');
    out.name = id.substr(0, colon);
    if (colon != std::string::npos) {
        const std::string p = id.substr(colon + 1);
        out.parameter = parse_number<std::size_t>("representation", p);
    }
    return out;
}

}  // namespace qgx::harness
