#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polycycle/errors.hpp"
#include "polycycle/geometry.hpp"
#include "polycycle/instance.hpp"
#include "polycycle/rng.hpp"

namespace polycycle {

enum class GaVersion { V1 = 1, V2 = 2 };

inline int version_number(GaVersion v) { return v == GaVersion::V1 ? 1 : 2; }

/// Crossing counts of one embedding: c1 with itself, c2 with the polygon
/// sides, f() their sum — the quantity the GA minimizes.
struct FitnessBreakdown {
    int c1 = 0;
    int c2 = 0;

    int f() const { return c1 + c2; }

    friend bool operator==(const FitnessBreakdown&, const FitnessBreakdown&) = default;
};

/// A candidate embedding: permutation of point indices 0..n-1, visited in
/// cycle order. The coordinate view of gene i is instance.points[order[i]].
using Chromosome = std::vector<int>;

inline bool is_valid_permutation(const Chromosome& chrom, std::size_t n) {
    if (chrom.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (const int g : chrom) {
        if (g < 0 || static_cast<std::size_t>(g) >= n || seen[g]) return false;
        seen[g] = 1;
    }
    return true;
}

struct Individual {
    Chromosome order;
    FitnessBreakdown fit;
};

struct GaConfig {
    GaVersion version = GaVersion::V2;
    int population_multiplier = 3;  // population size = multiplier * n
    int children_num = 1;           // children per generation =
    int children_den = 3;           //   floor(population * num / den)
    double crossover_rate = 0.8;
    double swap_mutation_rate = 0.1;
    double uncross_mutation_rate = 0.1;
    int generation_cap = 1000;
    int restarts = 1;
    std::uint64_t seed = 0;
    bool parallel_fitness = false;  // evaluate children on worker threads,
                                    // merged in child index order
    bool record_log = true;

    static GaConfig defaults(GaVersion v) {
        GaConfig cfg;
        cfg.version = v;
        if (v == GaVersion::V1) {
            cfg.swap_mutation_rate = 0.2;
            cfg.uncross_mutation_rate = 0.0;
        }
        return cfg;
    }

    void check() const {
        const auto in_unit = [](double r) { return r >= 0.0 && r <= 1.0; };
        if (!in_unit(crossover_rate) || !in_unit(swap_mutation_rate) || !in_unit(uncross_mutation_rate))
            throw ConfigError("GaConfig: operator rates must lie in [0, 1]");
        const double sum = crossover_rate + swap_mutation_rate + uncross_mutation_rate;
        if (std::abs(sum - 1.0) > 1e-9)
            throw ConfigError("GaConfig: operator rates must sum to 1");
        if (version == GaVersion::V1 && uncross_mutation_rate != 0.0)
            throw ConfigError("GaConfig: version 1 uses no uncrossing mutation (rate must be 0)");
        if (population_multiplier < 1) throw ConfigError("GaConfig: population multiplier must be >= 1");
        if (children_num < 1 || children_den < 1)
            throw ConfigError("GaConfig: children fraction must be positive");
        if (generation_cap < 0) throw ConfigError("GaConfig: generation cap must be >= 0");
        if (restarts < 1) throw ConfigError("GaConfig: restarts must be >= 1");
    }
};

struct GenerationLogEntry {
    int restart = 0;
    int generation = 0;
    int best_f = 0;      // archived best-so-far within the restart
    double mean_f = 0.0;  // mean fitness of the current population
};

struct RunResult {
    Chromosome best;
    FitnessBreakdown best_fitness;
    int generations_used = 0;
    int restarts_used = 0;
    double wall_seconds = 0.0;
    std::vector<GenerationLogEntry> generation_log;
};

/// The minimized objective: F = C1 + C2.
inline FitnessBreakdown fitness(const Instance& inst, const Chromosome& chrom) {
    detail::require_cycle_input(inst.points, chrom);
    detail::require_polygon_sides(inst.polygon);
    return FitnessBreakdown{detail::self_crossings_unchecked(inst.points, chrom),
                            detail::polygon_crossings_unchecked(inst.points, chrom, inst.polygon)};
}

/// size independent uniform random permutations of 0..n-1.
inline std::vector<Chromosome> init_population(const Instance& inst, int size, Rng& rng) {
    if (size < 2) throw ConfigError("init_population: size must be >= 2");
    const std::size_t n = inst.points.size();
    std::vector<Chromosome> population;
    population.reserve(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) {
        Chromosome chrom(n);
        std::iota(chrom.begin(), chrom.end(), 0);
        for (std::size_t i = n; i > 1; --i)
            std::swap(chrom[i - 1], chrom[rng.below(i)]);
        population.push_back(std::move(chrom));
    }
    return population;
}

/// Single-point order-preserving crossover at split position r in {1..n}:
/// the child keeps parent1's genes 1..r-1 and fills the remaining positions
/// with the missing genes in parent2's order.
inline Chromosome crossover_at(const Chromosome& parent1, const Chromosome& parent2, int r) {
    const std::size_t n = parent1.size();
    if (parent2.size() != n) throw std::invalid_argument("crossover: parent length mismatch");
    if (!is_valid_permutation(parent1, n) || !is_valid_permutation(parent2, n))
        throw std::invalid_argument("crossover: parents must be permutations");
    if (r < 1 || static_cast<std::size_t>(r) > n)
        throw std::invalid_argument("crossover: split position out of range");
    Chromosome child(parent1.begin(), parent1.begin() + (r - 1));
    std::vector<char> used(n, 0);
    for (const int g : child) used[g] = 1;
    for (const int g : parent2)
        if (!used[g]) child.push_back(g);
    return child;
}

inline Chromosome crossover(const Chromosome& parent1, const Chromosome& parent2, Rng& rng) {
    const int r = 1 + static_cast<int>(rng.below(parent1.size()));
    return crossover_at(parent1, parent2, r);
}

/// Two-point mutation: exchange the genes at positions i and j.
inline Chromosome mutate_swap_at(const Chromosome& parent, std::size_t i, std::size_t j) {
    if (i >= parent.size() || j >= parent.size() || i == j)
        throw std::invalid_argument("mutate_swap: positions must be distinct and in range");
    Chromosome child = parent;
    std::swap(child[i], child[j]);
    return child;
}

inline Chromosome mutate_swap(const Chromosome& parent, Rng& rng) {
    const std::size_t n = parent.size();
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    return mutate_swap_at(parent, i, j);
}

/// All unordered pairs (i < j) of non-adjacent cycle edges whose segments
/// intersect. Collinear folds at a shared vertex are adjacent pairs and do
/// not appear here.
inline std::vector<std::pair<int, int>> find_crossing_edge_pairs(const Instance& inst,
                                                                 const Chromosome& chrom) {
    detail::require_cycle_input(inst.points, chrom);
    const std::size_t n = chrom.size();
    const auto pt = [&](std::size_t pos) { return inst.points[chrom[pos % n]]; };
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const Segment ei{pt(i), pt(i + 1)};
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(ei, Segment{pt(j), pt(j + 1)}))
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return pairs;
}

/// The 2-opt reversal behind the second mutation: removes edges edge_i and
/// edge_j (edge k joins positions k and k+1 mod n) and reconnects, by
/// reversing positions edge_i+1 .. edge_j. For i < j the reversed block never
/// wraps, and replacing the wrap edge (j = n-1) needs no rotation.
inline Chromosome uncross_at(const Chromosome& parent, int edge_i, int edge_j) {
    const int n = static_cast<int>(parent.size());
    if (edge_i < 0 || edge_j >= n || edge_i >= edge_j)
        throw std::invalid_argument("uncross: edge indices out of order");
    if (edge_j == edge_i + 1 || (edge_i == 0 && edge_j == n - 1))
        throw std::invalid_argument("uncross: edges must be non-adjacent");
    Chromosome child = parent;
    std::reverse(child.begin() + edge_i + 1, child.begin() + edge_j + 1);
    return child;
}

/// Second mutation: pick one currently-crossing edge pair uniformly at
/// random and uncross it; on a crossing-free parent, fall back to the
/// two-point mutation.
inline Chromosome mutate_uncross(const Instance& inst, const Chromosome& parent, Rng& rng) {
    const auto pairs = find_crossing_edge_pairs(inst, parent);
    if (pairs.empty()) return mutate_swap(parent, rng);
    const auto [i, j] = pairs[rng.below(pairs.size())];
    return uncross_at(parent, i, j);
}

namespace detail {

inline void evaluate_fitness(const Instance& inst, std::vector<Individual>& group,
                             bool parallel) {
    const auto eval_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            group[k].fit = fitness(inst, group[k].order);
    };
    const unsigned hw = std::thread::hardware_concurrency();
    if (!parallel || hw < 2 || group.size() < 2) {
        eval_range(0, group.size());
        return;
    }
    const std::size_t workers = std::min<std::size_t>(hw, group.size());
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (group.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(group.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(eval_range, lo, hi);
    }
    for (auto& t : threads) t.join();
}

}  // namespace detail

/// One reproduction step: floor(|population| * children_fraction) children,
/// each produced by exactly one operator drawn per the configured rates.
/// Crossover picks two distinct parents uniformly; mutations pick one.
inline std::vector<Individual> produce_children(const Instance& inst,
                                                const std::vector<Individual>& population,
                                                const GaConfig& config, Rng& rng) {
    config.check();
    const std::size_t pop = population.size();
    if (pop < 2) throw std::invalid_argument("produce_children: population must hold >= 2 individuals");
    const std::size_t count = pop * static_cast<std::size_t>(config.children_num) /
                              static_cast<std::size_t>(config.children_den);
    std::vector<Individual> children;
    children.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = rng.unit();
        Chromosome child;
        if (u < config.crossover_rate) {
            const std::size_t a = rng.below(pop);
            std::size_t b = rng.below(pop - 1);
            if (b >= a) ++b;
            child = crossover(population[a].order, population[b].order, rng);
        } else if (u < config.crossover_rate + config.swap_mutation_rate) {
            child = mutate_swap(population[rng.below(pop)].order, rng);
        } else {
            child = mutate_uncross(inst, population[rng.below(pop)].order, rng);
        }
        children.push_back(Individual{std::move(child), {}});
    }
    detail::evaluate_fitness(inst, children, config.parallel_fitness);
    return children;
}

/// Roulette-wheel selection over the combined parent+child pool, with
/// replacement. Fitness is minimized, so individual i gets weight
/// (f_max - f_i) + 1: always positive, proportional pull towards low f,
/// uniform when the pool is flat.
inline std::vector<Individual> select_next_generation(const std::vector<Individual>& parents,
                                                      const std::vector<Individual>& children,
                                                      int target_size, Rng& rng) {
    if (target_size < 1) throw std::invalid_argument("select_next_generation: target size must be >= 1");
    std::vector<const Individual*> pool;
    pool.reserve(parents.size() + children.size());
    for (const auto& p : parents) pool.push_back(&p);
    for (const auto& c : children) pool.push_back(&c);
    if (pool.empty()) throw std::invalid_argument("select_next_generation: empty pool");

    int f_max = 0;
    for (const Individual* ind : pool) f_max = std::max(f_max, ind->fit.f());
    std::vector<std::uint64_t> cumulative;
    cumulative.reserve(pool.size());
    std::uint64_t total = 0;
    for (const Individual* ind : pool) {
        total += static_cast<std::uint64_t>(f_max - ind->fit.f()) + 1;
        cumulative.push_back(total);
    }
    std::vector<Individual> next;
    next.reserve(static_cast<std::size_t>(target_size));
    for (int t = 0; t < target_size; ++t) {
        const std::uint64_t x = rng.below(total);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
        next.push_back(*pool[static_cast<std::size_t>(it - cumulative.begin())]);
    }
    return next;
}

namespace detail {

// First-encountered individual at the minimal fitness (stable tie-break).
inline const Individual& best_of(const std::vector<Individual>& group) {
    const Individual* best = &group.front();
    for (const Individual& ind : group)
        if (ind.fit.f() < best->fit.f()) best = &ind;
    return *best;
}

inline double mean_f(const std::vector<Individual>& group) {
    long long sum = 0;
    for (const Individual& ind : group) sum += ind.fit.f();
    return static_cast<double>(sum) / static_cast<double>(group.size());
}

}  // namespace detail

/// The full solver. Each restart: random initial population, then up to
/// generation_cap rounds of reproduce / archive the pool's best / select,
/// stopping early once the archived best reaches f = 0. The best archived
/// individual across restarts is returned, its fitness re-verified by a
/// fresh evaluation. Bit-reproducible for a fixed (instance, seed).
inline RunResult run_ga(const Instance& inst, const GaConfig& config) {
    config.check();
    if (const auto issues = validate(inst); !issues.empty())
        throw ValidationError("run_ga: invalid instance: " + issues.front());

    const auto t0 = std::chrono::steady_clock::now();
    const int n = inst.n();
    const int pop_size = config.population_multiplier * n;

    RunResult result;
    bool have_best = false;
    Individual overall_best;
    int overall_generations = 0;

    for (int rs = 0; rs < config.restarts; ++rs) {
        result.restarts_used = rs + 1;
        Rng rng(seed_combine(config.seed, static_cast<std::uint64_t>(rs)));

        std::vector<Individual> population;
        population.reserve(static_cast<std::size_t>(pop_size));
        for (auto& chrom : init_population(inst, pop_size, rng))
            population.push_back(Individual{std::move(chrom), {}});
        detail::evaluate_fitness(inst, population, config.parallel_fitness);

        Individual archived = detail::best_of(population);
        int generations = 0;
        if (config.record_log)
            result.generation_log.push_back(
                {rs, 0, archived.fit.f(), detail::mean_f(population)});

        for (int g = 1; g <= config.generation_cap && archived.fit.f() != 0; ++g) {
            auto children = produce_children(inst, population, config, rng);
            for (const Individual& child : children)
                if (child.fit.f() < archived.fit.f()) archived = child;
            population = select_next_generation(population, children, pop_size, rng);
            generations = g;
            if (config.record_log)
                result.generation_log.push_back(
                    {rs, g, archived.fit.f(), detail::mean_f(population)});
        }

        if (!have_best || archived.fit.f() < overall_best.fit.f()) {
            overall_best = archived;
            overall_generations = generations;
            have_best = true;
        }
        if (overall_best.fit.f() == 0) break;
    }

    result.best = overall_best.order;
    result.best_fitness = fitness(inst, overall_best.order);
    if (result.best_fitness != overall_best.fit)
        throw std::logic_error("run_ga: archived fitness does not match re-evaluation");
    result.generations_used = overall_generations;
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

/// A solved embedding as written to / read from solution files.
struct Solution {
    Chromosome order;
    FitnessBreakdown fitness;
    int generations = 0;
};

inline void write_solution(const Solution& sol, std::ostream& out) {
    out << "ORDER";
    for (const int idx : sol.order) out << " " << idx;
    out << "\n";
    out << "FITNESS " << sol.fitness.c1 << " " << sol.fitness.c2 << " " << sol.fitness.f() << "\n";
    out << "GENERATIONS " << sol.generations << "\n";
}

inline Solution read_solution(std::istream& in) {
    detail::LineReader lr{in};
    Solution sol;
    std::string line;

    if (!lr.next(line)) throw FormatError(lr.line_no + 1, "expected 'ORDER ...', got end of input");
    {
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag != "ORDER") throw FormatError(lr.line_no, "expected 'ORDER ...'");
        int idx = 0;
        while (iss >> idx) sol.order.push_back(idx);
        if (!iss.eof()) throw FormatError(lr.line_no, "ORDER entries must be integers");
        if (sol.order.empty()) throw FormatError(lr.line_no, "ORDER must list at least one index");
    }
    if (!lr.next(line)) throw FormatError(lr.line_no + 1, "expected 'FITNESS C1 C2 F', got end of input");
    {
        std::istringstream iss(line);
        std::string tag, extra;
        int c1 = 0, c2 = 0, f = 0;
        if (!(iss >> tag >> c1 >> c2 >> f) || tag != "FITNESS" || (iss >> extra))
            throw FormatError(lr.line_no, "expected 'FITNESS C1 C2 F'");
        if (c1 < 0 || c2 < 0 || c1 + c2 != f)
            throw ValidationError("solution FITNESS must satisfy F = C1 + C2 with C1, C2 >= 0");
        sol.fitness = FitnessBreakdown{c1, c2};
    }
    if (!lr.next(line)) throw FormatError(lr.line_no + 1, "expected 'GENERATIONS g', got end of input");
    {
        std::istringstream iss(line);
        std::string tag, extra;
        int g = 0;
        if (!(iss >> tag >> g) || tag != "GENERATIONS" || (iss >> extra))
            throw FormatError(lr.line_no, "expected 'GENERATIONS g'");
        if (g < 0) throw ValidationError("solution GENERATIONS must be >= 0");
        sol.generations = g;
    }
    if (lr.next(line)) throw FormatError(lr.line_no, "unexpected trailing content");
    return sol;
}

}  // namespace polycycle
