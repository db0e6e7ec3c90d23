#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "polycycle/errors.hpp"
#include "polycycle/ga.hpp"
#include "polycycle/instance.hpp"
#include "polycycle/rng.hpp"

namespace polycycle {

/// The evaluation grid: every (sides, points, polygon, run, version) cell is
/// one GA invocation with a deterministically derived seed.
struct ExperimentSpec {
    std::vector<int> sides_list{10, 15, 20, 25};
    std::vector<int> points_list{5, 10, 15, 20, 25, 30};
    int polygons_per_config = 5;
    int runs_per_instance = 5;
    std::vector<GaVersion> versions{GaVersion::V1, GaVersion::V2};
    std::uint64_t base_seed = 0;
    int threads = 1;

    void check() const {
        if (sides_list.empty() || points_list.empty() || versions.empty())
            throw ConfigError("ExperimentSpec: sides, points and versions lists must be non-empty");
        for (const int s : sides_list)
            if (s < 3) throw ConfigError("ExperimentSpec: sides must be >= 3");
        for (const int p : points_list)
            if (p < 3) throw ConfigError("ExperimentSpec: points must be >= 3");
        if (polygons_per_config < 1 || runs_per_instance < 1)
            throw ConfigError("ExperimentSpec: polygon and run counts must be >= 1");
        if (threads < 1) throw ConfigError("ExperimentSpec: threads must be >= 1");
    }

    long long cell_count() const {
        return static_cast<long long>(sides_list.size()) * points_list.size() *
               polygons_per_config * runs_per_instance * versions.size();
    }
};

/// One CSV row. A failed cell keeps its grid coordinates, carries -1 in the
/// result columns and the failure text in `error` (never silently dropped).
struct ExperimentRecord {
    int sides = 0;
    int points = 0;
    int polygon_id = 0;
    int run_id = 0;
    GaVersion version = GaVersion::V1;
    int best_f = -1;
    int best_c1 = -1;
    int best_c2 = -1;
    int generations_used = -1;
    long long wall_ms = 0;
    std::uint64_t seed = 0;
    std::string error;

    bool failed() const { return !error.empty(); }
};

inline constexpr const char* kCsvHeader =
    "sides,points,polygon_id,run_id,version,best_f,best_c1,best_c2,generations_used,wall_ms,seed";

/// Seed of the instance shared by all runs/versions of one grid polygon.
inline std::uint64_t instance_seed(std::uint64_t base, int sides, int points, int polygon_id) {
    std::uint64_t s = seed_combine(base, 0x696e7374ULL);
    s = seed_combine(s, static_cast<std::uint64_t>(sides));
    s = seed_combine(s, static_cast<std::uint64_t>(points));
    s = seed_combine(s, static_cast<std::uint64_t>(polygon_id));
    return s;
}

/// Seed of one (instance, run, version) cell; any cell is reproducible in
/// isolation from its CSV row.
inline std::uint64_t run_seed(std::uint64_t base, int sides, int points, int polygon_id,
                              int run_id, GaVersion version) {
    std::uint64_t s = seed_combine(instance_seed(base, sides, points, polygon_id), 0x72756eULL);
    s = seed_combine(s, static_cast<std::uint64_t>(run_id));
    s = seed_combine(s, static_cast<std::uint64_t>(version_number(version)));
    return s;
}

inline Instance experiment_instance(std::uint64_t base, int sides, int points, int polygon_id) {
    GenSpec spec;
    spec.sides = sides;
    spec.points = points;
    spec.seed = instance_seed(base, sides, points, polygon_id);
    return generate_instance(spec);
}

namespace detail {

inline ExperimentRecord run_cell(std::uint64_t base, int sides, int points, int polygon_id,
                                 int run_id, GaVersion version) {
    ExperimentRecord rec;
    rec.sides = sides;
    rec.points = points;
    rec.polygon_id = polygon_id;
    rec.run_id = run_id;
    rec.version = version;
    rec.seed = run_seed(base, sides, points, polygon_id, run_id, version);
    try {
        const Instance inst = experiment_instance(base, sides, points, polygon_id);
        GaConfig cfg = GaConfig::defaults(version);
        cfg.seed = rec.seed;
        cfg.record_log = false;
        const RunResult rr = run_ga(inst, cfg);
        rec.best_f = rr.best_fitness.f();
        rec.best_c1 = rr.best_fitness.c1;
        rec.best_c2 = rr.best_fitness.c2;
        rec.generations_used = rr.generations_used;
        rec.wall_ms = static_cast<long long>(std::llround(rr.wall_seconds * 1000.0));
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

}  // namespace detail

/// Runs the whole grid. Records come back in grid order (sides, points,
/// polygon, run, version) regardless of how many worker threads execute the
/// cells.
inline std::vector<ExperimentRecord> run_experiment(const ExperimentSpec& spec,
                                                    std::ostream* progress = nullptr) {
    spec.check();
    struct Cell {
        int sides, points, polygon_id, run_id;
        GaVersion version;
    };
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(spec.cell_count()));
    for (const int sides : spec.sides_list)
        for (const int points : spec.points_list)
            for (int poly = 0; poly < spec.polygons_per_config; ++poly)
                for (int run = 0; run < spec.runs_per_instance; ++run)
                    for (const GaVersion ver : spec.versions)
                        cells.push_back({sides, points, poly, run, ver});

    std::vector<ExperimentRecord> records(cells.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    const auto worker = [&] {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= cells.size()) return;
            const Cell& c = cells[k];
            records[k] = detail::run_cell(spec.base_seed, c.sides, c.points, c.polygon_id,
                                          c.run_id, c.version);
            const std::size_t finished = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                *progress << "[" << finished << "/" << cells.size() << "] sides=" << c.sides
                          << " points=" << c.points << " poly=" << c.polygon_id
                          << " run=" << c.run_id << " v" << version_number(c.version)
                          << " best_f=" << records[k].best_f
                          << (records[k].failed() ? " FAILED" : "") << "\n";
            }
        }
    };
    if (spec.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int count = std::min<int>(spec.threads, static_cast<int>(cells.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return records;
}

inline void write_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
    out << kCsvHeader << "\n";
    for (const auto& r : records) {
        out << r.sides << "," << r.points << "," << r.polygon_id << "," << r.run_id << ","
            << version_number(r.version) << "," << r.best_f << "," << r.best_c1 << ","
            << r.best_c2 << "," << r.generations_used << "," << r.wall_ms << "," << r.seed
            << "\n";
    }
}

/// Exact mean as an integer ratio, so aggregate comparisons have no rounding.
struct MeanCell {
    long long sum = 0;
    long long count = 0;

    double mean() const { return count ? static_cast<double>(sum) / static_cast<double>(count) : 0.0; }

    friend bool operator==(const MeanCell&, const MeanCell&) = default;
};

// a/b vs c/d without division.
inline bool mean_less(const MeanCell& a, const MeanCell& b) {
    return a.sum * b.count < b.sum * a.count;
}

/// Mean best_f over the records matching version and the optional sides /
/// points filters. Failed cells are excluded (they carry no best_f).
inline MeanCell mean_best_f(const std::vector<ExperimentRecord>& records, GaVersion version,
                            std::optional<int> sides = std::nullopt,
                            std::optional<int> points = std::nullopt) {
    MeanCell cell;
    for (const auto& r : records) {
        if (r.failed() || r.version != version) continue;
        if (sides && r.sides != *sides) continue;
        if (points && r.points != *points) continue;
        cell.sum += r.best_f;
        ++cell.count;
    }
    return cell;
}

namespace detail {

inline int pick_fixed(const std::vector<int>& list, int preferred) {
    for (const int v : list)
        if (v == preferred) return preferred;
    return list[list.size() / 2];
}

inline void print_mean_table(const std::vector<ExperimentRecord>& records,
                             const std::vector<GaVersion>& versions, const std::string& title,
                             const std::string& axis, const std::vector<int>& axis_values,
                             bool axis_is_sides, std::optional<int> fixed_sides,
                             std::optional<int> fixed_points, std::ostream& out) {
    out << title << "\n";
    out << "  " << std::setw(8) << axis;
    for (const GaVersion v : versions) out << std::setw(12) << ("mean F v" + std::to_string(version_number(v)));
    out << "\n";
    for (const int a : axis_values) {
        out << "  " << std::setw(8) << a;
        for (const GaVersion v : versions) {
            const MeanCell cell = axis_is_sides
                                      ? mean_best_f(records, v, a, fixed_points)
                                      : mean_best_f(records, v, fixed_sides, a);
            out << std::setw(12) << std::fixed << std::setprecision(4) << cell.mean();
        }
        out << "\n";
    }
    out << "\n";
}

}  // namespace detail

/// The four aggregate views of the results: mean best F by sides at a fixed
/// point count, by points at a fixed side count, and both marginals.
inline void print_aggregates(const std::vector<ExperimentRecord>& records,
                             const ExperimentSpec& spec, std::ostream& out) {
    const int fixed_points = detail::pick_fixed(spec.points_list, 20);
    const int fixed_sides = detail::pick_fixed(spec.sides_list, 20);
    detail::print_mean_table(records, spec.versions,
                             "Mean best F by polygon sides (points = " + std::to_string(fixed_points) + ")",
                             "sides", spec.sides_list, true, std::nullopt, fixed_points, out);
    detail::print_mean_table(records, spec.versions,
                             "Mean best F by point count (sides = " + std::to_string(fixed_sides) + ")",
                             "points", spec.points_list, false, fixed_sides, std::nullopt, out);
    detail::print_mean_table(records, spec.versions, "Mean best F by polygon sides (all point counts)",
                             "sides", spec.sides_list, true, std::nullopt, std::nullopt, out);
    detail::print_mean_table(records, spec.versions, "Mean best F by point count (all side counts)",
                             "points", spec.points_list, false, std::nullopt, std::nullopt, out);
    long long failures = 0;
    for (const auto& r : records)
        if (r.failed()) ++failures;
    if (failures > 0) out << failures << " cell(s) failed; see CSV rows with best_f = -1\n";
}

}  // namespace polycycle
