#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "seqmo/pairing.hpp"
#include "seqmo/pointer_net.hpp"

namespace seqmo {

// Invalid run configuration; the CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProblemKind { Motsp, Moqap };
enum class Algorithm { Nsga2, Moead, SeqmoNsga2, SeqmoMoead };
enum class TrainMode { Warm, Fresh };

inline bool is_seqmo(Algorithm a) {
    return a == Algorithm::SeqmoNsga2 || a == Algorithm::SeqmoMoead;
}
inline bool moead_host(Algorithm a) {
    return a == Algorithm::Moead || a == Algorithm::SeqmoMoead;
}

inline std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Nsga2: return "nsga2";
        case Algorithm::Moead: return "moead";
        case Algorithm::SeqmoNsga2: return "seqmo-nsga2";
        case Algorithm::SeqmoMoead: return "seqmo-moead";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& s) {
    if (s == "nsga2") return Algorithm::Nsga2;
    if (s == "moead") return Algorithm::Moead;
    if (s == "seqmo-nsga2") return Algorithm::SeqmoNsga2;
    if (s == "seqmo-moead") return Algorithm::SeqmoMoead;
    throw ConfigError("unknown algorithm '" + s + "'");
}

inline std::string problem_kind_name(ProblemKind k) {
    return k == ProblemKind::Motsp ? "motsp" : "moqap";
}

// Full experiment description for one run. Defaults follow the desk-scale
// profile; `apply_profile("paper")` switches to the full training schedule.
struct RunConfig {
    static constexpr int kConfigVersion = 1;

    RunConfig() { apply_profile("desk"); }

    ProblemKind problem = ProblemKind::Motsp;
    std::size_t problem_n = 15;
    std::size_t problem_k = 2;
    std::uint64_t instance_seed = 1;
    std::string instance_path;  // non-empty overrides instance_seed

    Algorithm algorithm = Algorithm::SeqmoMoead;
    std::size_t pop_size = 100;
    std::int64_t max_fe = 50000;

    PairingMode pairing = PairingMode::Greedy;
    std::size_t train_every = 5;  // 0 disables training entirely
    TrainMode train_mode = TrainMode::Warm;
    TrainConfig train;

    std::size_t neighborhood_size = 20;
    std::size_t max_replacements = 0;  // 0 = unlimited
    double mutation_rate = 0.0;        // 0 = use 2/N

    std::size_t snapshot_every = 11;  // in training iterations; 0 disables
    std::uint64_t seed = 1;

    void apply_profile(const std::string& name) {
        if (name == "paper") {
            train.epochs = 200;
            train.batch_size = 128;
            train.hidden_units = 200;
            train.embedding_dim = 64;
            train_every = 1;
        } else if (name == "desk") {
            train.epochs = 20;
            // small batches keep the optimizer step count useful at 20 epochs
            train.batch_size = 16;
            train.hidden_units = 64;
            train.embedding_dim = 32;
            train_every = 5;
        } else {
            throw ConfigError("unknown profile '" + name + "' (expected desk or paper)");
        }
    }

    double effective_mutation_rate() const {
        return mutation_rate > 0.0 ? mutation_rate : 2.0 / static_cast<double>(problem_n);
    }

    void validate() const {
        if (problem_n < 3) throw ConfigError("n must be at least 3");
        if (problem_k < 2) throw ConfigError("k must be at least 2");
        if (pop_size < 2) throw ConfigError("pop_size must be at least 2");
        if (max_fe <= static_cast<std::int64_t>(pop_size))
            throw ConfigError("max_fe must exceed pop_size");
        if (mutation_rate < 0.0 || mutation_rate > 1.0)
            throw ConfigError("mutation_rate must be in [0,1]");
        if (neighborhood_size < 2) throw ConfigError("neighborhood_size must be at least 2");
        try {
            train.validate();
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
};

// Declarative key-value file: one `key value` per line, '#' comments.
// A `profile` line applies its preset first; explicit keys then override.
inline RunConfig parse_run_config_text(std::istream& in, const std::string& origin) {
    RunConfig cfg;
    cfg.apply_profile("desk");

    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key)) continue;
        std::string value;
        ss >> value;
        std::string extra;
        if (ss >> extra)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": trailing tokens after '" +
                              key + " " + value + "'");
        if (value.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": key '" + key +
                              "' has no value");
        entries.emplace_back(key, value);
    }

    for (const auto& [key, value] : entries)
        if (key == "profile") cfg.apply_profile(value);

    auto to_u64 = [&](const std::string& key, const std::string& v) -> std::uint64_t {
        try {
            std::size_t pos = 0;
            const std::uint64_t r = std::stoull(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw ConfigError("bad integer for '" + key + "': '" + v + "'");
        }
    };
    auto to_double = [&](const std::string& key, const std::string& v) -> double {
        try {
            std::size_t pos = 0;
            const double r = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw ConfigError("bad number for '" + key + "': '" + v + "'");
        }
    };

    for (const auto& [key, value] : entries) {
        if (key == "profile") continue;  // already applied
        if (key == "config_version") {
            if (to_u64(key, value) != RunConfig::kConfigVersion)
                throw ConfigError("unsupported config_version " + value);
        } else if (key == "problem") {
            if (value == "motsp") cfg.problem = ProblemKind::Motsp;
            else if (value == "moqap") cfg.problem = ProblemKind::Moqap;
            else throw ConfigError("unknown problem '" + value + "'");
        } else if (key == "n") cfg.problem_n = to_u64(key, value);
        else if (key == "k") cfg.problem_k = to_u64(key, value);
        else if (key == "instance_seed") cfg.instance_seed = to_u64(key, value);
        else if (key == "instance_path") cfg.instance_path = value;
        else if (key == "algorithm") cfg.algorithm = parse_algorithm(value);
        else if (key == "pop_size") cfg.pop_size = to_u64(key, value);
        else if (key == "max_fe") cfg.max_fe = static_cast<std::int64_t>(to_u64(key, value));
        else if (key == "pairing") {
            if (value == "greedy") cfg.pairing = PairingMode::Greedy;
            else if (value == "hungarian") cfg.pairing = PairingMode::Hungarian;
            else throw ConfigError("unknown pairing '" + value + "'");
        } else if (key == "train_every") cfg.train_every = to_u64(key, value);
        else if (key == "train_mode") {
            if (value == "warm") cfg.train_mode = TrainMode::Warm;
            else if (value == "fresh") cfg.train_mode = TrainMode::Fresh;
            else throw ConfigError("unknown train_mode '" + value + "'");
        } else if (key == "epochs") cfg.train.epochs = to_u64(key, value);
        else if (key == "batch_size") cfg.train.batch_size = to_u64(key, value);
        else if (key == "learn_rate") cfg.train.learn_rate = to_double(key, value);
        else if (key == "hidden_units") cfg.train.hidden_units = to_u64(key, value);
        else if (key == "embedding_dim") cfg.train.embedding_dim = to_u64(key, value);
        else if (key == "dropout") cfg.train.dropout = to_double(key, value);
        else if (key == "grad_clip_norm") cfg.train.grad_clip_norm = to_double(key, value);
        else if (key == "neighborhood_size") cfg.neighborhood_size = to_u64(key, value);
        else if (key == "max_replacements") cfg.max_replacements = to_u64(key, value);
        else if (key == "mutation_rate") cfg.mutation_rate = to_double(key, value);
        else if (key == "snapshot_every") cfg.snapshot_every = to_u64(key, value);
        else if (key == "seed") cfg.seed = to_u64(key, value);
        else throw ConfigError(origin + ": unknown config key '" + key + "'");
    }

    cfg.validate();
    return cfg;
}

inline RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    return parse_run_config_text(in, path);
}

inline std::string instance_label(const RunConfig& cfg) {
    std::string kind = cfg.problem == ProblemKind::Motsp ? "MOTSP" : "MOQAP";
    return kind + std::to_string(cfg.problem_n);
}

}  // namespace seqmo
