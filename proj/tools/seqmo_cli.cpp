// Command-line front end: instance generation, single runs, batch
// comparisons and update-trace inspection.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime divergence.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqmo/seqmo.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// "1..10" or "1,4,9"
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::uint64_t lo = std::stoull(text.substr(0, dots));
        const std::uint64_t hi = std::stoull(text.substr(dots + 2));
        if (hi < lo) throw seqmo::ConfigError("bad seed range '" + text + "'");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
        for (const auto& item : split_list(text)) seeds.push_back(std::stoull(item));
    }
    if (seeds.empty()) throw seqmo::ConfigError("empty seed list '" + text + "'");
    return seeds;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << content;
}

int cmd_gen_instance(const std::string& problem, std::size_t n, std::size_t k, std::uint64_t seed,
                     const std::string& out_path) {
    seqmo::RngStream rng(seed);
    seqmo::ProblemInstance inst;
    if (problem == "motsp")
        inst = seqmo::generate_motsp(n, k, rng);
    else if (problem == "moqap")
        inst = seqmo::generate_moqap(n, k, rng);
    else
        throw seqmo::ConfigError("unknown problem '" + problem + "'");
    seqmo::save_instance(inst, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    const seqmo::RunConfig cfg = seqmo::load_run_config(config_path);
    const fs::path dir(out_dir);
    fs::create_directories(dir);

    const seqmo::RunResult result = seqmo::run_algorithm(cfg);

    seqmo::write_result_csv(cfg, result, (dir / "result.csv").string());
    seqmo::write_front_csv(result.final_front, (dir / "front.csv").string());
    seqmo::write_manifest(cfg, result, (dir / "manifest.json").string());
    if (seqmo::is_seqmo(cfg.algorithm)) {
        seqmo::write_update_trace_csv(result.trace, (dir / "update_trace.csv").string());
        seqmo::write_losses_csv(result.loss_traces, (dir / "losses.csv").string());
        seqmo::emit_snapshots(result.snapshots, (dir / "snapshots.jsonl").string());
        if (result.network)
            seqmo::save_checkpoint(*result.network, (dir / "checkpoint.txt").string());
    }

    std::cout << seqmo::instance_label(cfg) << " " << seqmo::algorithm_name(cfg.algorithm)
              << " seed " << cfg.seed << ": hv " << seqmo::sci_notation(result.hypervolume, 4)
              << ", " << result.evaluations << " evaluations, " << result.generations
              << " generations\n";
    return 0;
}

int cmd_compare(const std::string& config_path, const std::string& n_list,
                const std::string& algorithms_csv, const std::string& seeds_text,
                const std::string& out_dir, std::size_t jobs) {
    const seqmo::RunConfig base = seqmo::load_run_config(config_path);

    std::vector<seqmo::RunConfig> instance_configs;
    if (n_list.empty()) {
        instance_configs.push_back(base);
    } else {
        for (const auto& item : split_list(n_list)) {
            seqmo::RunConfig cfg = base;
            cfg.problem_n = std::stoull(item);
            cfg.instance_path.clear();  // per-size instances come from the seed
            instance_configs.push_back(cfg);
        }
    }
    std::vector<seqmo::Algorithm> algorithms;
    for (const auto& name : split_list(algorithms_csv))
        algorithms.push_back(seqmo::parse_algorithm(name));
    const std::vector<std::uint64_t> seeds = parse_seed_list(seeds_text);

    const seqmo::CompareResult result = seqmo::compare(instance_configs, algorithms, seeds, jobs);

    const fs::path dir(out_dir);
    fs::create_directories(dir);
    write_text_file(dir / "runs.csv", seqmo::render_raw_csv(result));
    write_text_file(dir / "table.csv", seqmo::render_table_csv(result));
    const std::string table = seqmo::render_table_text(result);
    write_text_file(dir / "table.txt", table);
    std::cout << table;
    return 0;
}

int cmd_trace(const std::string& run_dir) {
    const fs::path path = fs::path(run_dir) / "update_trace.csv";
    const std::vector<long> counts = seqmo::read_update_trace_csv(path.string());
    if (counts.empty()) {
        std::cout << "no training iterations recorded\n";
        return 0;
    }
    std::printf("%-12s", "iteration");
    for (std::size_t i = 0; i < counts.size(); ++i) std::printf(" %6zu", i + 1);
    std::printf("\n%-12s", "updated");
    for (long c : counts) std::printf(" %6ld", c);
    std::printf("\ntotal %ld, first %ld, last %ld\n",
                [&] { long t = 0; for (long c : counts) t += c; return t; }(), counts.front(),
                counts.back());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learnable evolutionary multi-objective optimizer for permutation problems"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-instance", "Generate a random problem instance file");
    std::string gen_problem = "motsp", gen_out;
    std::size_t gen_n = 15, gen_k = 2;
    std::uint64_t gen_seed = 1;
    gen->add_option("--problem", gen_problem, "motsp or moqap")->required();
    gen->add_option("--n", gen_n, "problem size")->required();
    gen->add_option("--k", gen_k, "number of objectives");
    gen->add_option("--seed", gen_seed, "generation seed")->required();
    gen->add_option("--out", gen_out, "output path")->required();

    auto* run = app.add_subcommand("run", "Execute one configured run");
    std::string run_config, run_out = "run-out";
    run->add_option("--config", run_config, "run-config file")->required();
    run->add_option("--out", run_out, "output directory");

    auto* cmp = app.add_subcommand("compare", "Run an (instance x algorithm x seed) batch");
    std::string cmp_config, cmp_n_list, cmp_algorithms, cmp_seeds = "1", cmp_out = "compare-out";
    std::size_t cmp_jobs = 0;
    cmp->add_option("--config", cmp_config, "base run-config file")->required();
    cmp->add_option("--n", cmp_n_list, "comma-separated instance sizes (default: config n)");
    cmp->add_option("--algorithms", cmp_algorithms, "comma-separated algorithm list")->required();
    cmp->add_option("--seeds", cmp_seeds, "seed list: 1..10 or 1,2,3");
    cmp->add_option("--out", cmp_out, "output directory");
    cmp->add_option("--jobs", cmp_jobs, "parallel runs (default: hardware threads)");

    auto* trace = app.add_subcommand("trace", "Print the update trace of a finished run");
    std::string trace_dir;
    trace->add_option("run_dir", trace_dir, "run output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen_instance(gen_problem, gen_n, gen_k, gen_seed, gen_out);
        if (run->parsed()) return cmd_run(run_config, run_out);
        if (cmp->parsed()) return cmd_compare(cmp_config, cmp_n_list, cmp_algorithms, cmp_seeds,
                                              cmp_out, cmp_jobs);
        if (trace->parsed()) return cmd_trace(trace_dir);
    } catch (const seqmo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const seqmo::DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
