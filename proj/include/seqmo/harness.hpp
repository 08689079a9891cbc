#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqmo/evaluator.hpp"
#include "seqmo/instance_io.hpp"
#include "seqmo/metrics.hpp"
#include "seqmo/moead.hpp"
#include "seqmo/nsga2.hpp"
#include "seqmo/pairing.hpp"
#include "seqmo/pointer_net.hpp"
#include "seqmo/problems.hpp"
#include "seqmo/run_config.hpp"

namespace seqmo {

enum class PointRole { Population, Poor, Elite, Generated, GeneratedAccepted };

inline const char* point_role_name(PointRole role) {
    switch (role) {
        case PointRole::Population: return "population";
        case PointRole::Poor: return "poor";
        case PointRole::Elite: return "elite";
        case PointRole::Generated: return "generated";
        case PointRole::GeneratedAccepted: return "generated-and-accepted";
    }
    return "?";
}

inline std::optional<PointRole> parse_point_role(const std::string& s) {
    for (PointRole r : {PointRole::Population, PointRole::Poor, PointRole::Elite,
                        PointRole::Generated, PointRole::GeneratedAccepted})
        if (s == point_role_name(r)) return r;
    return std::nullopt;
}

struct SnapshotPoint {
    std::size_t id;
    PointRole role;
    ObjectiveVector objectives;
};

// Objective-space picture of one training iteration, after the population
// update. Pairing lines connect each poor solution to the solution the
// network generated from it.
struct Snapshot {
    std::size_t iteration;  // training iteration, 1-based
    std::vector<SnapshotPoint> points;
    std::vector<std::pair<std::size_t, std::size_t>> pairing_lines;  // poor id -> generated id
};

struct LossTrace {
    std::size_t iteration;
    std::vector<double> epoch_losses;
};

struct RunResult {
    Population final_population;
    std::vector<ObjectiveVector> final_front;  // non-dominated objective vectors
    double hypervolume = 0.0;                  // self-normalized, informational
    std::int64_t evaluations = 0;
    std::size_t generations = 0;
    std::size_t training_iterations = 0;
    UpdateTrace trace;
    std::vector<Snapshot> snapshots;
    std::vector<LossTrace> loss_traces;
    std::optional<PointerNetParams> network;  // final parameters, seqmo only
};

inline ProblemInstance make_instance(const RunConfig& cfg) {
    if (!cfg.instance_path.empty()) {
        ProblemInstance inst = load_instance(cfg.instance_path);
        if (instance_size(inst) != cfg.problem_n)
            throw ConfigError("instance file size does not match configured n");
        return inst;
    }
    RngStream rng(cfg.instance_seed);
    if (cfg.problem == ProblemKind::Motsp)
        return generate_motsp(cfg.problem_n, cfg.problem_k, rng);
    return generate_moqap(cfg.problem_n, cfg.problem_k, rng);
}

inline std::vector<ObjectiveVector> nondominated_objectives(const Population& pop) {
    const FrontPartition fronts = fast_nondominated_sort(pop.objectives());
    std::vector<ObjectiveVector> out;
    out.reserve(fronts.fronts.front().size());
    for (std::size_t i : fronts.fronts.front()) out.push_back(pop[i].objectives);
    return out;
}

// Hypervolume of a front normalized by its own bounds; degenerate axes get
// unit padding so single-point fronts still score.
inline double self_normalized_hypervolume(const std::vector<ObjectiveVector>& front) {
    if (front.empty()) return 0.0;
    const std::size_t dim = front.front().size();
    std::vector<std::pair<double, double>> bounds(dim,
                                                  {std::numeric_limits<double>::infinity(),
                                                   -std::numeric_limits<double>::infinity()});
    for (const auto& f : front)
        for (std::size_t k = 0; k < dim; ++k) {
            bounds[k].first = std::min(bounds[k].first, f[k]);
            bounds[k].second = std::max(bounds[k].second, f[k]);
        }
    for (auto& [lo, hi] : bounds)
        if (!(hi > lo)) hi = lo + 1.0;
    // reference slightly outside the box so extreme points keep their area
    const std::vector<ObjectiveVector> norm = normalize_front(front, bounds);
    return hypervolume_2d(norm, {1.1, 1.1});
}

namespace detail {

struct SeqmoState {
    std::optional<PointerNetParams> params;
    AdamState adam;
};

struct GenerationArtifacts {
    // filled on training generations
    bool trained = false;
    OffspringSplit split;
    PairSet pairs;
    std::vector<Individual> generated;
    std::vector<char> generated_accepted;
};

}  // namespace detail

using GenerationObserver = std::function<void(std::size_t generation, const Population&)>;

// Runs the configured algorithm: a host EA generation loop with, for the
// seqmo variants, the train-on-pairs / predict / update cycle layered on
// training generations. Generated solutions consume evaluation budget like
// any offspring. The loop stops at the first generation boundary past
// max_fe.
inline RunResult run_algorithm(const RunConfig& cfg,
                               const GenerationObserver& observer = nullptr) {
    cfg.validate();
    const ProblemInstance instance = make_instance(cfg);
    if (num_objectives(instance) != cfg.problem_k)
        throw ConfigError("instance objective count does not match configured k");

    CountingEvaluator eval(instance);
    RngStream root(cfg.seed);
    RngStream ea_rng = root.split(0);
    RngStream init_rng = root.split(1);
    RngStream shuffle_rng = root.split(2);

    const std::size_t n = cfg.problem_n;
    const bool seqmo = is_seqmo(cfg.algorithm);
    const bool use_moead = moead_host(cfg.algorithm);

    Population pop(cfg.pop_size);
    for (std::size_t i = 0; i < cfg.pop_size; ++i)
        pop.add(eval.make_individual(random_permutation(n, ea_rng)));

    std::optional<WeightVectorSet> weights;
    ObjectiveVector z_ideal;
    MoeadParams moead_params;
    moead_params.neighborhood_size = cfg.neighborhood_size;
    moead_params.max_replacements =
        cfg.max_replacements == 0 ? std::numeric_limits<std::size_t>::max() : cfg.max_replacements;
    moead_params.mutation_rate = cfg.effective_mutation_rate();
    if (use_moead) {
        weights.emplace(cfg.pop_size, cfg.problem_k, cfg.neighborhood_size);
        z_ideal = ideal_point(pop);
    }
    GeneticParams genetic{cfg.effective_mutation_rate()};

    detail::SeqmoState net;
    RunResult result;
    std::size_t point_id = 0;

    std::size_t generation = 0;
    std::size_t training_iter = 0;
    if (observer) observer(0, pop);

    while (eval.count() <= cfg.max_fe) {
        ++generation;

        // a) genetic operation: one offspring batch, replacement deferred
        std::vector<SubproblemChild> moead_children;
        std::vector<Individual> offspring;
        if (use_moead) {
            moead_children = moead_make_offspring(pop, *weights, moead_params, eval, ea_rng);
            offspring.reserve(moead_children.size());
            for (const auto& c : moead_children) offspring.push_back(c.individual);
        } else {
            offspring = nsga2_make_offspring(pop, genetic, eval, ea_rng);
        }

        // b)-e) divide, pair, train, predict; the cadence includes the very
        // first generation so the earliest, most update-prone iteration is
        // part of the trace
        detail::GenerationArtifacts arts;
        const bool training_generation =
            seqmo && cfg.train_every > 0 && (generation - 1) % cfg.train_every == 0;
        if (training_generation) {
            ++training_iter;
            TrainingSet ts = build_training_set(offspring, cfg.pairing);
            arts.trained = true;
            arts.split = std::move(ts.split);
            arts.pairs = std::move(ts.pairs);

            if (cfg.train_mode == TrainMode::Fresh || !net.params) {
                net.params = init_pointer_net(n, cfg.train, init_rng);
                net.adam = AdamState{};
            }
            const TrainResult tr = train(*net.params, net.adam, arts.pairs, cfg.train, shuffle_rng);
            result.loss_traces.push_back({training_iter, tr.epoch_losses});

            std::vector<Permutation> data;
            data.reserve(arts.split.poor.size());
            for (const auto& p : arts.split.poor) data.push_back(p.genotype);
            std::vector<Permutation> outputs = predict(*net.params, data);
            arts.generated.reserve(outputs.size());
            for (auto& g : outputs) arts.generated.push_back(eval.make_individual(std::move(g)));
            arts.generated_accepted.assign(arts.generated.size(), 0);
        }

        // f) environment selection; C first, then the generated solutions
        if (use_moead) {
            moead_apply_offspring(pop, *weights, z_ideal, moead_children, moead_params);
            if (arts.trained) {
                result.trace.record(training_iter - 1, false);  // materialize the slot
                for (std::size_t i = 0; i < arts.generated.size(); ++i) {
                    const std::size_t origin = moead_children[arts.split.poor_indices[i]].subproblem;
                    const std::size_t replaced = moead_insert(pop, *weights, z_ideal,
                                                              arts.generated[i], origin, moead_params);
                    for (std::size_t r = 0; r < replaced; ++r)
                        result.trace.record(training_iter - 1, true);
                    if (replaced > 0) arts.generated_accepted[i] = 1;
                }
            }
        } else {
            std::vector<char>* accepted = arts.trained ? &arts.generated_accepted : nullptr;
            pop = nsga2_environment_selection(pop, offspring, arts.generated, accepted);
            if (arts.trained) {
                result.trace.record(training_iter - 1, false);
                for (char a : arts.generated_accepted)
                    if (a) result.trace.record(training_iter - 1, true);
            }
        }

        if (observer) observer(generation, pop);

        // snapshot after the update, on the configured training cadence
        if (arts.trained && cfg.snapshot_every > 0 &&
            (training_iter - 1) % cfg.snapshot_every == 0) {
            Snapshot snap;
            snap.iteration = training_iter;
            auto add_point = [&](PointRole role, const ObjectiveVector& f) {
                snap.points.push_back({point_id, role, f});
                return point_id++;
            };
            for (const auto& m : pop) add_point(PointRole::Population, m.objectives);
            std::vector<std::size_t> poor_ids(arts.split.poor.size());
            for (std::size_t i = 0; i < arts.split.poor.size(); ++i)
                poor_ids[i] = add_point(PointRole::Poor, arts.split.poor[i].objectives);
            for (const auto& e : arts.split.elite) add_point(PointRole::Elite, e.objectives);
            for (std::size_t i = 0; i < arts.generated.size(); ++i) {
                const PointRole role = arts.generated_accepted[i] ? PointRole::GeneratedAccepted
                                                                  : PointRole::Generated;
                const std::size_t gid = add_point(role, arts.generated[i].objectives);
                snap.pairing_lines.emplace_back(poor_ids[i], gid);
            }
            result.snapshots.push_back(std::move(snap));
        }
    }

    result.final_population = std::move(pop);
    result.final_front = nondominated_objectives(result.final_population);
    result.hypervolume = self_normalized_hypervolume(result.final_front);
    result.evaluations = eval.count();
    result.generations = generation;
    result.training_iterations = training_iter;
    if (net.params) result.network = std::move(net.params);
    return result;
}

// Host EA without the training wrapper.
inline RunResult run_baseline(RunConfig cfg, const GenerationObserver& observer = nullptr) {
    cfg.algorithm = moead_host(cfg.algorithm) ? Algorithm::Moead : Algorithm::Nsga2;
    cfg.train_every = 0;
    return run_algorithm(cfg, observer);
}

inline RunResult run_seqmo(const RunConfig& cfg, const GenerationObserver& observer = nullptr) {
    if (!is_seqmo(cfg.algorithm))
        throw ConfigError("run_seqmo requires a seqmo-* algorithm");
    return run_algorithm(cfg, observer);
}

}  // namespace seqmo
