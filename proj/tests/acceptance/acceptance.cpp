// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the exit
// code is the number of failures. The heavy benchmark batch (criteria 7 and
// 8) runs once and is shared.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "seqmo/seqmo.hpp"

namespace fs = std::filesystem;
using namespace seqmo;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string note;
};

// ---------------------------------------------------------------- criterion 1
Outcome criterion_hungarian() {
    const auto start = Clock::now();
    seqmo::RngStream rng(20240801);
    int exact = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Matrix cost(8, 8);
        for (double& x : cost.data()) x = rng.next_double() * 3.141592653589793;

        const std::vector<std::size_t> assignment = min_cost_assignment(cost);
        double total = 0.0;
        for (std::size_t i = 0; i < 8; ++i) total += cost(i, assignment[i]);

        std::vector<std::size_t> perm(8);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        double best = std::numeric_limits<double>::infinity();
        do {
            double t = 0.0;
            for (std::size_t i = 0; i < 8; ++i) t += cost(i, perm[i]);
            best = std::min(best, t);
        } while (std::next_permutation(perm.begin(), perm.end()));

        exact += (total == best);
    }
    const double elapsed = seconds_since(start);
    char note[128];
    std::snprintf(note, sizeof(note), "%d/100 exact vs 8! enumeration, %.1f s", exact, elapsed);
    return {exact == 100 && elapsed < 10.0, note};
}

// ---------------------------------------------------------------- criterion 2
Outcome criterion_nondominated_sort() {
    seqmo::RngStream rng(20240802);
    int agree = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t n = 1 + rng.next_below(200);
        std::vector<ObjectiveVector> pts(n);
        for (auto& p : pts) {
            // half the sets use a coarse grid so ties and duplicates appear
            if (trial % 2 == 0)
                p = {double(rng.next_below(25)), double(rng.next_below(25))};
            else
                p = {rng.next_double(), rng.next_double()};
        }
        const FrontPartition fast = fast_nondominated_sort(pts);

        // brute force by iterated removal
        std::vector<std::size_t> remaining(n);
        std::iota(remaining.begin(), remaining.end(), std::size_t{0});
        std::vector<std::vector<std::size_t>> brute;
        while (!remaining.empty()) {
            std::vector<std::size_t> front, rest;
            for (std::size_t i : remaining) {
                bool dominated = false;
                for (std::size_t j : remaining)
                    if (j != i && dominates(pts[j], pts[i])) {
                        dominated = true;
                        break;
                    }
                (dominated ? rest : front).push_back(i);
            }
            brute.push_back(front);
            remaining = rest;
        }

        bool same = fast.fronts.size() == brute.size();
        for (std::size_t r = 0; same && r < brute.size(); ++r) same = fast.fronts[r] == brute[r];
        agree += same;
    }
    char note[96];
    std::snprintf(note, sizeof(note), "%d/%d random sets match brute force", agree, trials);
    return {agree == trials, note};
}

// ---------------------------------------------------------------- criterion 3
Outcome criterion_hypervolume() {
    // column-threshold pixel count straight from the dominance definition
    auto pixel_estimate = [](const std::vector<ObjectiveVector>& front, int grid) {
        long covered = 0;
        for (int i = 0; i < grid; ++i) {
            const double x = (i + 0.5) / grid;
            double threshold = std::numeric_limits<double>::infinity();
            for (const auto& p : front)
                if (p[0] <= x) threshold = std::min(threshold, p[1]);
            for (int j = 0; j < grid; ++j)
                covered += ((j + 0.5) / grid >= threshold);
        }
        return static_cast<double>(covered) / (static_cast<double>(grid) * grid);
    };

    seqmo::RngStream rng(20240803);
    int ok = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ObjectiveVector> front;
        const std::size_t count = 1 + rng.next_below(20);
        for (std::size_t i = 0; i < count; ++i)
            front.push_back({rng.next_double(), rng.next_double()});
        const double exact = hypervolume_2d(front, {1.0, 1.0});
        const double estimate = pixel_estimate(front, 2000);
        const double err = std::abs(exact - estimate);
        worst = std::max(worst, err);
        ok += err < 1e-3;
    }

    const double worked = hypervolume_2d({{0.2, 0.6}, {0.6, 0.2}}, {1.0, 1.0});
    const bool worked_ok = std::abs(worked - 0.48) < 1e-12;

    char note[160];
    std::snprintf(note, sizeof(note),
                  "%d/100 fronts within 1e-3 of pixel count (worst %.2g); worked example %.17g",
                  ok, worst, worked);
    return {ok == 100 && worked_ok, note};
}

// ---------------------------------------------------------------- criterion 4
Outcome criterion_gradients() {
    const auto start = Clock::now();
    TrainConfig cfg;
    cfg.hidden_units = 8;
    cfg.embedding_dim = 8;
    cfg.dropout = 0.0;
    seqmo::RngStream init(20240804);
    PointerNetParams params = init_pointer_net(5, cfg, init);

    seqmo::RngStream rng(101);
    std::vector<TrainingPair> pairs(2);
    for (auto& p : pairs) {
        p.data = random_permutation(5, rng);
        p.label = random_permutation(5, rng);
    }

    PointerNetTensors grads = make_tensors_like(params);
    pointer_net_loss(params, pairs, 0.0, nullptr, &grads);

    auto pviews = tensor_views(params);
    auto gviews = tensor_views(grads);
    const double step = 1e-5;
    double worst = 0.0;
    std::string worst_group_name;
    for (std::size_t g = 0; g < pviews.size(); ++g) {
        double num_sq = 0.0, diff_sq = 0.0;
        for (std::size_t i = 0; i < pviews[g].data->size(); ++i) {
            double& theta = (*pviews[g].data)[i];
            const double saved = theta;
            theta = saved + step;
            const double hi = pointer_net_loss(params, pairs, 0.0, nullptr, nullptr);
            theta = saved - step;
            const double lo = pointer_net_loss(params, pairs, 0.0, nullptr, nullptr);
            theta = saved;
            const double fd = (hi - lo) / (2 * step);
            const double an = (*gviews[g].data)[i];
            num_sq += fd * fd;
            diff_sq += (an - fd) * (an - fd);
        }
        const double rel = std::sqrt(diff_sq) / std::max(std::sqrt(num_sq), 1e-12);
        if (rel > worst) {
            worst = rel;
            worst_group_name = pviews[g].name;
        }
    }
    const double elapsed = seconds_since(start);
    char note[160];
    std::snprintf(note, sizeof(note), "worst group '%s' rel err %.2e, %.1f s",
                  worst_group_name.c_str(), worst, elapsed);
    return {worst < 1e-4 && elapsed < 60.0, note};
}

// ---------------------------------------------------------------- criterion 5
Outcome criterion_decode_validity() {
    TrainConfig cfg;
    cfg.hidden_units = 32;
    cfg.embedding_dim = 16;
    cfg.dropout = 0.0;
    cfg.epochs = 30;
    cfg.batch_size = 16;

    seqmo::RngStream init(20240805);
    PointerNetParams random_params = init_pointer_net(10, cfg, init);

    // a trained network as the second source of parameters
    PairSet pairs;
    seqmo::RngStream rng(55);
    for (int i = 0; i < 64; ++i) {
        TrainingPair p;
        p.data = random_permutation(10, rng);
        p.label = random_permutation(10, rng);
        pairs.pairs.push_back(std::move(p));
    }
    PointerNetParams trained_params = init_pointer_net(10, cfg, init);
    AdamState adam;
    seqmo::RngStream shuffle(56);
    train(trained_params, adam, pairs, cfg, shuffle);

    long violations = 0;
    long decodes = 0;
    for (const PointerNetParams* params : {&random_params, &trained_params}) {
        for (int i = 0; i < 10000; ++i) {
            const Permutation input = random_permutation(10, rng);
            const Permutation output = decode_greedy(*params, input);
            ++decodes;
            violations += !Permutation::is_valid_order(output.order());
        }
    }
    char note[96];
    std::snprintf(note, sizeof(note), "%ld decodes, %ld violations", decodes, violations);
    return {violations == 0, note};
}

// ---------------------------------------------------------------- criterion 6
Outcome criterion_learning() {
    // single-pair memorization
    TrainConfig overfit_cfg;
    overfit_cfg.hidden_units = 32;
    overfit_cfg.embedding_dim = 16;
    overfit_cfg.dropout = 0.0;
    overfit_cfg.batch_size = 1;
    overfit_cfg.epochs = 500;
    overfit_cfg.learn_rate = 0.005;

    seqmo::RngStream init(20240806);
    PointerNetParams overfit_params = init_pointer_net(6, overfit_cfg, init);
    AdamState overfit_adam;
    PairSet one;
    seqmo::RngStream rng(66);
    {
        TrainingPair p;
        p.data = random_permutation(6, rng);
        p.label = random_permutation(6, rng);
        one.pairs.push_back(std::move(p));
    }
    seqmo::RngStream shuffle_a(67);
    const TrainResult overfit = train(overfit_params, overfit_adam, one, overfit_cfg, shuffle_a);
    const double final_loss = overfit.epoch_losses.back();

    // identity-label synthetic task
    const std::size_t n = 8;
    TrainConfig sort_cfg;
    sort_cfg.hidden_units = 64;
    sort_cfg.embedding_dim = 32;
    sort_cfg.dropout = 0.0;
    sort_cfg.batch_size = 128;
    sort_cfg.epochs = 200;
    sort_cfg.learn_rate = 0.002;

    PairSet sorted;
    for (int i = 0; i < 512; ++i) {
        TrainingPair p;
        p.data = random_permutation(n, rng);
        p.label = Permutation::identity(n);
        sorted.pairs.push_back(std::move(p));
    }
    PointerNetParams sort_params = init_pointer_net(n, sort_cfg, init);
    AdamState sort_adam;
    seqmo::RngStream shuffle_b(68);
    train(sort_params, sort_adam, sorted, sort_cfg, shuffle_b);

    std::size_t hits = 0, total = 0;
    for (const auto& pair : sorted.pairs) {
        const Permutation out = decode_greedy(sort_params, pair.data);
        for (std::size_t i = 0; i < out.size(); ++i) {
            hits += out[i] == pair.label[i];
            ++total;
        }
    }
    const double accuracy = static_cast<double>(hits) / static_cast<double>(total);

    char note[128];
    std::snprintf(note, sizeof(note), "overfit loss %.2e, identity-task token accuracy %.1f%%",
                  final_loss, accuracy * 100.0);
    return {final_loss < 0.01 && accuracy >= 0.95, note};
}

// ------------------------------------------------------- criteria 7 and 8
struct BenchmarkRun {
    std::size_t n;
    Algorithm algorithm;
    std::uint64_t seed;
    std::vector<ObjectiveVector> front;
    UpdateTrace trace;
    double hv = 0.0;
};

std::vector<BenchmarkRun> run_benchmark_batch(double& elapsed_out) {
    const auto start = Clock::now();
    std::vector<BenchmarkRun> jobs;
    for (std::size_t n : {std::size_t{15}, std::size_t{20}})
        for (Algorithm alg : {Algorithm::Moead, Algorithm::SeqmoMoead})
            for (std::uint64_t seed = 1; seed <= 10; ++seed)
                jobs.push_back({n, alg, seed, {}, {}, 0.0});

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            RunConfig cfg;  // desk profile defaults
            cfg.problem = ProblemKind::Motsp;
            cfg.problem_n = jobs[i].n;
            cfg.instance_seed = 7;
            cfg.algorithm = jobs[i].algorithm;
            cfg.pop_size = 100;
            cfg.max_fe = 50000;
            cfg.seed = jobs[i].seed;
            cfg.snapshot_every = 0;
            const RunResult result = run_algorithm(cfg);
            jobs[i].front = result.final_front;
            jobs[i].trace = result.trace;
        }
    };
    const std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // shared normalization bounds per instance size, reference (1,1)
    for (std::size_t n : {std::size_t{15}, std::size_t{20}}) {
        std::vector<std::pair<double, double>> bounds(2, {std::numeric_limits<double>::infinity(),
                                                          -std::numeric_limits<double>::infinity()});
        for (const auto& job : jobs)
            if (job.n == n)
                for (const auto& f : job.front)
                    for (int k = 0; k < 2; ++k) {
                        bounds[k].first = std::min(bounds[k].first, f[k]);
                        bounds[k].second = std::max(bounds[k].second, f[k]);
                    }
        for (auto& job : jobs)
            if (job.n == n)
                job.hv = hypervolume_2d(normalize_front(job.front, bounds), {1.0, 1.0});
    }

    elapsed_out = seconds_since(start);
    return jobs;
}

double mean_hv(const std::vector<BenchmarkRun>& jobs, std::size_t n, Algorithm alg) {
    double total = 0.0;
    int count = 0;
    for (const auto& j : jobs)
        if (j.n == n && j.algorithm == alg) {
            total += j.hv;
            ++count;
        }
    return total / count;
}

Outcome criterion_benchmark(const std::vector<BenchmarkRun>& jobs, double elapsed) {
    const double m15_host = mean_hv(jobs, 15, Algorithm::Moead);
    const double m15_seq = mean_hv(jobs, 15, Algorithm::SeqmoMoead);
    const double m20_host = mean_hv(jobs, 20, Algorithm::Moead);
    const double m20_seq = mean_hv(jobs, 20, Algorithm::SeqmoMoead);

    const bool within_15 = m15_seq >= m15_host - 0.01;
    const bool within_20 = m20_seq >= m20_host - 0.01;
    const int wins = (m15_seq >= m15_host) + (m20_seq >= m20_host);
    const bool in_time = elapsed < 3600.0;

    char note[240];
    std::snprintf(note, sizeof(note),
                  "MOTSP15 seqmo %.4f vs moead %.4f; MOTSP20 seqmo %.4f vs moead %.4f; "
                  "wins/ties %d/2; %.0f s",
                  m15_seq, m15_host, m20_seq, m20_host, wins, elapsed);
    return {within_15 && within_20 && wins >= 1 && in_time, note};
}

Outcome criterion_update_trend(const std::vector<BenchmarkRun>& jobs) {
    int checked = 0, ok = 0;
    long first_sum = 0, last_sum = 0;
    for (const auto& j : jobs) {
        if (j.n != 15 || j.algorithm != Algorithm::SeqmoMoead) continue;
        const auto& counts = j.trace.counts();
        ++checked;
        if (counts.size() >= 2 && counts.front() > counts.back() && counts.back() > 0) ++ok;
        if (!counts.empty()) {
            first_sum += counts.front();
            last_sum += counts.back();
        }
    }
    char note[160];
    std::snprintf(note, sizeof(note),
                  "%d/%d runs with first > last > 0 (mean first %.1f, mean last %.1f)", ok,
                  checked, first_sum / std::max(1.0, double(checked)),
                  last_sum / std::max(1.0, double(checked)));
    return {checked == 10 && ok == checked, note};
}

// ---------------------------------------------------------------- criterion 9
Outcome criterion_degenerate_wrapper() {
    struct Trajectory {
        std::vector<std::vector<std::vector<int>>> orders;
        bool operator==(const Trajectory& o) const { return orders == o.orders; }
    };
    int checked = 0, identical = 0;
    for (Algorithm alg : {Algorithm::SeqmoMoead, Algorithm::SeqmoNsga2}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            RunConfig cfg;
            cfg.problem = ProblemKind::Motsp;
            cfg.problem_n = 15;
            cfg.instance_seed = 9;
            cfg.algorithm = alg;
            cfg.pop_size = 30;
            cfg.max_fe = 3000;
            cfg.train_every = 0;  // wrapper with training disabled
            cfg.seed = seed;
            cfg.snapshot_every = 0;

            Trajectory wrapper, host;
            auto capture = [](Trajectory& t) {
                return [&t](std::size_t, const Population& pop) {
                    std::vector<std::vector<int>> gen;
                    for (const auto& m : pop) gen.push_back(m.genotype.order());
                    t.orders.push_back(std::move(gen));
                };
            };
            run_algorithm(cfg, capture(wrapper));
            run_baseline(cfg, capture(host));
            ++checked;
            identical += (wrapper == host);
        }
    }
    char note[96];
    std::snprintf(note, sizeof(note), "%d/%d trajectories bit-identical across both hosts",
                  identical, checked);
    return {identical == checked, note};
}

// --------------------------------------------------------------- criterion 10
Outcome criterion_determinism() {
    RunConfig cfg;
    cfg.problem = ProblemKind::Motsp;
    cfg.problem_n = 12;
    cfg.instance_seed = 3;
    cfg.algorithm = Algorithm::SeqmoMoead;
    cfg.pop_size = 40;
    cfg.max_fe = 4000;
    cfg.train_every = 2;
    cfg.snapshot_every = 2;
    cfg.train.epochs = 5;
    cfg.train.hidden_units = 24;
    cfg.train.embedding_dim = 12;
    cfg.seed = 99;

    auto render = [&](const fs::path& dir) {
        fs::create_directories(dir);
        const RunResult result = run_algorithm(cfg);
        write_result_csv(cfg, result, (dir / "result.csv").string());
        write_front_csv(result.final_front, (dir / "front.csv").string());
        write_update_trace_csv(result.trace, (dir / "update_trace.csv").string());
        emit_snapshots(result.snapshots, (dir / "snapshots.jsonl").string());
        std::ostringstream all;
        for (const char* name : {"result.csv", "front.csv", "update_trace.csv", "snapshots.jsonl"}) {
            std::ifstream in(dir / name, std::ios::binary);
            all << in.rdbuf() << '\0';
        }
        return all.str();
    };
    const fs::path base = fs::temp_directory_path() / "seqmo-acceptance-determinism";
    const std::string first = render(base / "a");
    const std::string second = render(base / "b");
    char note[96];
    std::snprintf(note, sizeof(note), "result/front/trace/snapshot bytes %s",
                  first == second ? "identical" : "differ");
    return {first == second, note};
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const std::string& name, const Outcome& outcome) {
        std::printf("[%s] criterion %2d: %s — %s\n", outcome.pass ? "PASS" : "FAIL", id,
                    name.c_str(), outcome.note.c_str());
        std::fflush(stdout);
        failures += !outcome.pass;
    };

    report(1, "Hungarian assignment equals exhaustive minimum", criterion_hungarian());
    report(2, "non-dominated sorting equals brute force", criterion_nondominated_sort());
    report(3, "hypervolume equals pixel-count oracle", criterion_hypervolume());
    report(4, "pointer-net gradients match finite differences", criterion_gradients());
    report(5, "masked decoding always yields valid permutations", criterion_decode_validity());
    report(6, "learning sanity: memorization and identity task", criterion_learning());

    double benchmark_elapsed = 0.0;
    const std::vector<BenchmarkRun> jobs = run_benchmark_batch(benchmark_elapsed);
    report(7, "desk-scale MOTSP benchmark direction", criterion_benchmark(jobs, benchmark_elapsed));
    report(8, "update counts trend downward and stay positive", criterion_update_trend(jobs));

    report(9, "disabled training reduces to the bare host EA", criterion_degenerate_wrapper());
    report(10, "fixed-seed reruns emit identical bytes", criterion_determinism());

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
