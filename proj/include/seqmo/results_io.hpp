#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqmo/harness.hpp"
#include "seqmo/run_config.hpp"

namespace seqmo {

namespace detail {

inline std::string full_precision(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

}  // namespace detail

inline constexpr const char* kSnapshotFormatVersion = "1";

// One record per line: points carry (iteration, role, objectives, id),
// pairing lines carry (iteration, poor id, generated id).
inline void emit_snapshots(const std::vector<Snapshot>& snapshots, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    for (const auto& snap : snapshots) {
        for (const auto& pt : snap.points) {
            nlohmann::json j;
            j["type"] = "point";
            j["iter"] = snap.iteration;
            j["id"] = pt.id;
            j["role"] = point_role_name(pt.role);
            j["f"] = pt.objectives;
            out << j.dump() << '\n';
        }
        for (const auto& [poor_id, generated_id] : snap.pairing_lines) {
            nlohmann::json j;
            j["type"] = "pair";
            j["iter"] = snap.iteration;
            j["poor"] = poor_id;
            j["generated"] = generated_id;
            out << j.dump() << '\n';
        }
    }
    if (!out) throw std::runtime_error("emit_snapshots: write failed for " + path);
}

inline std::vector<Snapshot> read_snapshots(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_snapshots: cannot open " + path);
    std::vector<Snapshot> out;
    auto snapshot_for = [&](std::size_t iter) -> Snapshot& {
        if (out.empty() || out.back().iteration != iter) out.push_back(Snapshot{iter, {}, {}});
        return out.back();
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        Snapshot& snap = snapshot_for(j.at("iter").get<std::size_t>());
        const std::string type = j.at("type").get<std::string>();
        if (type == "point") {
            const auto role = parse_point_role(j.at("role").get<std::string>());
            if (!role)
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown role");
            snap.points.push_back({j.at("id").get<std::size_t>(), *role,
                                   j.at("f").get<ObjectiveVector>()});
        } else if (type == "pair") {
            snap.pairing_lines.emplace_back(j.at("poor").get<std::size_t>(),
                                            j.at("generated").get<std::size_t>());
        } else {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown record type");
        }
    }
    return out;
}

inline void write_front_csv(const std::vector<ObjectiveVector>& front, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    if (!front.empty()) {
        for (std::size_t k = 0; k < front.front().size(); ++k) out << (k ? ",f" : "f") << (k + 1);
        out << '\n';
        for (const auto& f : front) {
            for (std::size_t k = 0; k < f.size(); ++k)
                out << (k ? "," : "") << detail::full_precision(f[k]);
            out << '\n';
        }
    }
}

inline void write_update_trace_csv(const UpdateTrace& trace, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "iteration,updated\n";
    const auto& counts = trace.counts();
    for (std::size_t i = 0; i < counts.size(); ++i) out << (i + 1) << ',' << counts[i] << '\n';
}

inline std::vector<long> read_update_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != "iteration,updated")
        throw std::runtime_error(path + ": missing update-trace header");
    std::vector<long> counts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error(path + ": malformed row");
        counts.push_back(std::stol(line.substr(comma + 1)));
    }
    return counts;
}

inline void write_losses_csv(const std::vector<LossTrace>& traces, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "iteration,epoch,loss\n";
    for (const auto& t : traces)
        for (std::size_t e = 0; e < t.epoch_losses.size(); ++e)
            out << t.iteration << ',' << (e + 1) << ',' << detail::full_precision(t.epoch_losses[e])
                << '\n';
}

inline void write_result_csv(const RunConfig& cfg, const RunResult& result, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "instance,algorithm,seed,hv,evaluations,generations,training_iterations\n";
    out << instance_label(cfg) << ',' << algorithm_name(cfg.algorithm) << ',' << cfg.seed << ','
        << detail::full_precision(result.hypervolume) << ',' << result.evaluations << ','
        << result.generations << ',' << result.training_iterations << '\n';
}

inline nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["config_version"] = RunConfig::kConfigVersion;
    j["problem"] = problem_kind_name(cfg.problem);
    j["n"] = cfg.problem_n;
    j["k"] = cfg.problem_k;
    if (!cfg.instance_path.empty())
        j["instance_path"] = cfg.instance_path;
    else
        j["instance_seed"] = cfg.instance_seed;
    j["algorithm"] = algorithm_name(cfg.algorithm);
    j["pop_size"] = cfg.pop_size;
    j["max_fe"] = cfg.max_fe;
    j["pairing"] = cfg.pairing == PairingMode::Greedy ? "greedy" : "hungarian";
    j["train_every"] = cfg.train_every;
    j["train_mode"] = cfg.train_mode == TrainMode::Warm ? "warm" : "fresh";
    j["epochs"] = cfg.train.epochs;
    j["batch_size"] = cfg.train.batch_size;
    j["learn_rate"] = cfg.train.learn_rate;
    j["hidden_units"] = cfg.train.hidden_units;
    j["embedding_dim"] = cfg.train.embedding_dim;
    j["dropout"] = cfg.train.dropout;
    j["grad_clip_norm"] = cfg.train.grad_clip_norm;
    j["neighborhood_size"] = cfg.neighborhood_size;
    j["max_replacements"] = cfg.max_replacements;
    j["mutation_rate"] = cfg.mutation_rate;
    j["snapshot_every"] = cfg.snapshot_every;
    j["seed"] = cfg.seed;
    return j;
}

inline void write_manifest(const RunConfig& cfg, const RunResult& result, const std::string& path) {
    nlohmann::json j;
    j["config"] = config_to_json(cfg);
    j["formats"] = {{"instance", "1"},
                    {"checkpoint", "1"},
                    {"snapshot", kSnapshotFormatVersion},
                    {"run_config", std::to_string(RunConfig::kConfigVersion)}};
    j["evaluations"] = result.evaluations;
    j["generations"] = result.generations;
    j["training_iterations"] = result.training_iterations;
    std::ofstream out = detail::open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace seqmo
