#pragma once

#include <limits>
#include <numeric>
#include <string>

#include "polycycle/errors.hpp"
#include "polycycle/ga.hpp"

namespace polycycle {

/// Exhaustive enumeration ceiling: (9-1)!/2 = 20160 orders.
inline constexpr int kOracleMaxPoints = 9;

struct OracleResult {
    int min_f = 0;
    int min_c1 = 0;
    int min_c2 = 0;
    Chromosome witness;
    long long orders_examined = 0;
};

/// Exact minimum over all distinct cyclic orders. Position 0 is pinned to
/// point 0 and reversal duplicates are skipped by requiring
/// order[1] < order[n-1], so (n-1)!/2 orders are evaluated. The witness is
/// the lexicographically least canonical order achieving the minimum.
inline OracleResult solve_exhaustive(const Instance& inst, int max_points = kOracleMaxPoints) {
    const int n = inst.n();
    if (n < 3) throw ValidationError("solve_exhaustive: need at least 3 points");
    if (n > max_points)
        throw ValidationError("solve_exhaustive: refusing n = " + std::to_string(n) +
                              " points (exhaustive limit is " + std::to_string(max_points) + ")");
    Chromosome order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    OracleResult best;
    best.min_f = std::numeric_limits<int>::max();
    do {
        if (order[1] > order[static_cast<std::size_t>(n) - 1]) continue;  // reversal duplicate
        ++best.orders_examined;
        const FitnessBreakdown fb = fitness(inst, order);
        if (fb.f() < best.min_f) {
            best.min_f = fb.f();
            best.min_c1 = fb.c1;
            best.min_c2 = fb.c2;
            best.witness = order;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

struct OracleComparison {
    OracleResult oracle;
    RunResult ga;
    int gap = 0;  // ga best f minus oracle minimum, always >= 0
};

/// Runs the exhaustive solver and the GA on the same instance and reports
/// the optimality gap.
inline OracleComparison verify_ga_against_oracle(const Instance& inst, const GaConfig& config) {
    OracleComparison cmp{solve_exhaustive(inst), run_ga(inst, config), 0};
    cmp.gap = cmp.ga.best_fitness.f() - cmp.oracle.min_f;
    if (cmp.gap < 0)
        throw std::logic_error("verify_ga_against_oracle: GA fitness below the exhaustive minimum");
    return cmp;
}

}  // namespace polycycle
