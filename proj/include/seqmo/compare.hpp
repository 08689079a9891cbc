#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "seqmo/harness.hpp"
#include "seqmo/metrics.hpp"
#include "seqmo/run_config.hpp"

namespace seqmo {

// Scientific notation in the "7.7289e-1" style used by the result tables.
inline std::string sci_notation(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) {
        std::ostringstream ss;
        ss << (std::isfinite(x) ? "0." + std::string(static_cast<std::size_t>(digits), '0') + "e0"
                                : "nan");
        return ss.str();
    }
    const double ax = std::abs(x);
    int e = static_cast<int>(std::floor(std::log10(ax)));
    double mant = ax / std::pow(10.0, e);
    // rounding can carry the mantissa to 10
    const double scale = std::pow(10.0, digits);
    mant = std::round(mant * scale) / scale;
    if (mant >= 10.0) {
        mant /= 10.0;
        ++e;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s%.*fe%d", x < 0 ? "-" : "", digits, mant, e);
    return buf;
}

struct RunRecord {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::vector<ObjectiveVector> front;
    double hypervolume = 0.0;
};

struct CompareCell {
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t runs = 0;

    std::string formatted() const {
        return sci_notation(mean, 4) + " (" + sci_notation(stddev, 2) + ")";
    }
};

struct CompareResult {
    std::vector<std::string> instances;   // row order
    std::vector<std::string> algorithms;  // column order
    std::vector<RunRecord> runs;          // every (instance, algorithm, seed) record
    std::map<std::pair<std::string, std::string>, CompareCell> cells;
};

// Normalization protocol: per instance, bounds are the componentwise
// min/max over the union of every compared run's final front; fronts map
// into the unit box and score against reference (1,1).
inline void score_hypervolumes(std::vector<RunRecord>& runs) {
    std::map<std::string, std::vector<std::pair<double, double>>> bounds;
    for (const auto& r : runs) {
        if (r.front.empty()) continue;
        auto& b = bounds[r.instance];
        if (b.empty())
            b.assign(r.front.front().size(), {std::numeric_limits<double>::infinity(),
                                              -std::numeric_limits<double>::infinity()});
        for (const auto& f : r.front)
            for (std::size_t k = 0; k < f.size(); ++k) {
                b[k].first = std::min(b[k].first, f[k]);
                b[k].second = std::max(b[k].second, f[k]);
            }
    }
    for (auto& [instance, b] : bounds)
        for (auto& [lo, hi] : b)
            if (!(hi > lo)) hi = lo + 1.0;

    for (auto& r : runs) {
        const auto& b = bounds.at(r.instance);
        r.hypervolume = hypervolume_2d(normalize_front(r.front, b), {1.0, 1.0});
    }
}

inline CompareCell aggregate_cell(const std::vector<double>& values) {
    CompareCell cell;
    cell.runs = values.size();
    if (values.empty()) return cell;
    double sum = 0.0;
    for (double v : values) sum += v;
    cell.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0.0;
        for (double v : values) sq += (v - cell.mean) * (v - cell.mean);
        cell.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    }
    return cell;
}

// Runs every (instance-config, algorithm, seed) combination; independent
// runs execute in a small worker pool and aggregation stays deterministic.
inline CompareResult compare(const std::vector<RunConfig>& instance_configs,
                             const std::vector<Algorithm>& algorithms,
                             const std::vector<std::uint64_t>& seeds, std::size_t jobs = 0) {
    if (instance_configs.empty() || algorithms.empty() || seeds.empty())
        throw ConfigError("compare: need at least one instance, algorithm and seed");

    struct Job {
        RunConfig cfg;
        std::string instance;
    };
    std::vector<Job> job_list;
    for (const auto& base : instance_configs)
        for (Algorithm alg : algorithms)
            for (std::uint64_t seed : seeds) {
                RunConfig cfg = base;
                cfg.algorithm = alg;
                cfg.seed = seed;
                cfg.snapshot_every = 0;  // batch runs skip snapshot payloads
                job_list.push_back({std::move(cfg), instance_label(base)});
            }

    std::vector<RunRecord> records(job_list.size());
    std::vector<std::string> errors(job_list.size());
    std::atomic<std::size_t> next{0};
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<std::size_t>(jobs, job_list.size());

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= job_list.size()) return;
            try {
                const RunResult result = run_algorithm(job_list[i].cfg);
                records[i] = {job_list[i].instance, algorithm_name(job_list[i].cfg.algorithm),
                              job_list[i].cfg.seed, result.final_front, 0.0};
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t + 1 < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("compare: run " + job_list[i].instance + "/" +
                                     algorithm_name(job_list[i].cfg.algorithm) + "/seed " +
                                     std::to_string(job_list[i].cfg.seed) + " failed: " + errors[i]);

    score_hypervolumes(records);

    CompareResult out;
    out.runs = std::move(records);
    for (const auto& base : instance_configs) out.instances.push_back(instance_label(base));
    for (Algorithm alg : algorithms) out.algorithms.push_back(algorithm_name(alg));
    for (const auto& instance : out.instances)
        for (const auto& algorithm : out.algorithms) {
            std::vector<double> values;
            for (const auto& r : out.runs)
                if (r.instance == instance && r.algorithm == algorithm)
                    values.push_back(r.hypervolume);
            out.cells[{instance, algorithm}] = aggregate_cell(values);
        }
    return out;
}

inline std::string render_raw_csv(const CompareResult& result) {
    std::ostringstream out;
    out << "instance,algorithm,seed,hv\n";
    for (const auto& r : result.runs) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", r.hypervolume);
        out << r.instance << ',' << r.algorithm << ',' << r.seed << ',' << buf << '\n';
    }
    return out.str();
}

inline std::string render_table_csv(const CompareResult& result) {
    std::ostringstream out;
    out << "instance";
    for (const auto& a : result.algorithms) out << ',' << a;
    out << '\n';
    for (const auto& inst : result.instances) {
        out << inst;
        for (const auto& a : result.algorithms)
            out << ',' << result.cells.at({inst, a}).formatted();
        out << '\n';
    }
    return out.str();
}

inline std::string render_table_text(const CompareResult& result) {
    std::size_t label_width = 8;
    for (const auto& inst : result.instances) label_width = std::max(label_width, inst.size());
    std::size_t cell_width = 0;
    for (const auto& [key, cell] : result.cells)
        cell_width = std::max(cell_width, cell.formatted().size());
    for (const auto& a : result.algorithms) cell_width = std::max(cell_width, a.size());
    cell_width += 2;

    std::ostringstream out;
    out << std::string(label_width, ' ');
    for (const auto& a : result.algorithms) {
        out << "  " << a << std::string(cell_width - 2 - a.size(), ' ');
    }
    out << '\n';
    for (const auto& inst : result.instances) {
        out << inst << std::string(label_width - inst.size(), ' ');
        for (const auto& a : result.algorithms) {
            const std::string cell = result.cells.at({inst, a}).formatted();
            out << "  " << cell << std::string(cell_width - 2 - cell.size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace seqmo
