#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "support.hpp"

using namespace polycycle;
using namespace testsupport;

namespace {

long long half_factorial(int n) {  // (n-1)!/2
    long long f = 1;
    for (int k = 2; k < n; ++k) f *= k;
    return f / 2;
}

}  // namespace

TEST_CASE("oracle on four convex points") {
    const Instance inst = square_instance({{2, 2}, {8, 2}, {8, 8}, {2, 8}}, 0, 10);
    const OracleResult res = solve_exhaustive(inst);
    CHECK(res.min_f == 0);
    CHECK(res.orders_examined == 3);
    CHECK(fitness(inst, res.witness).f() == 0);
    CHECK(res.witness[0] == 0);
    CHECK(res.witness[1] < res.witness[3]);
}

TEST_CASE("oracle enumeration counts") {
    const Instance five = square_instance({{2, 2}, {8, 2}, {8, 8}, {2, 8}, {5, 5}}, 0, 10);
    CHECK(solve_exhaustive(five).orders_examined == 12);  // (5-1)!/2
    for (const int n : {3, 6, 7}) {
        const Polygon poly = convex_polygon(8, 400);
        const Instance inst{poly, generate_points(poly, n, static_cast<std::uint64_t>(n)), ""};
        CHECK(solve_exhaustive(inst).orders_examined == half_factorial(n));
    }
}

TEST_CASE("oracle minimum is a true lower bound over every order") {
    // re-check the definition: enumerate all canonical orders independently
    for (int k = 0; k < 100; ++k) {
        GenSpec spec;
        spec.sides = 10;
        spec.points = 6;
        spec.seed = 3000 + static_cast<std::uint64_t>(k);
        const Instance inst = generate_instance(spec);
        const OracleResult res = solve_exhaustive(inst);

        Chromosome order(6);
        std::iota(order.begin(), order.end(), 0);
        long long seen = 0;
        bool witness_found = false;
        do {
            if (order[1] > order[5]) continue;
            ++seen;
            CHECK(fitness(inst, order).f() >= res.min_f);
            if (order == res.witness) witness_found = true;
        } while (std::next_permutation(order.begin() + 1, order.end()));
        CHECK(seen == 60);
        CHECK(seen == res.orders_examined);
        CHECK(witness_found);
        CHECK(res.min_c1 + res.min_c2 == res.min_f);
    }
}

TEST_CASE("oracle result is invariant under point relabeling") {
    GenSpec spec;
    spec.sides = 9;
    spec.points = 7;
    spec.seed = 4004;
    const Instance inst = generate_instance(spec);
    const OracleResult base = solve_exhaustive(inst);

    Instance shuffled = inst;
    std::rotate(shuffled.points.begin(), shuffled.points.begin() + 3, shuffled.points.end());
    const OracleResult moved = solve_exhaustive(shuffled);
    CHECK(moved.min_f == base.min_f);
    CHECK(moved.orders_examined == base.orders_examined);
}

TEST_CASE("oracle agrees with the forced-crossing construction") {
    const Instance forced = u_instance_forced_crossings();
    const OracleResult res = solve_exhaustive(forced);
    CHECK(res.min_f == 2);
    CHECK(res.min_c1 == 0);
    CHECK(res.min_c2 == 2);
    CHECK(res.orders_examined == 1);
}

TEST_CASE("oracle refuses oversized instances") {
    const Polygon poly = convex_polygon(8, 450);
    const Instance inst{poly, generate_points(poly, 10, 77), ""};
    CHECK_THROWS_AS(solve_exhaustive(inst), ValidationError);
    CHECK_NOTHROW(solve_exhaustive(inst, 10));  // raised ceiling
}

TEST_CASE("convex containers reduce the oracle to self crossings") {
    const Polygon poly = convex_polygon(10, 470);
    const Instance inst{poly, generate_points(poly, 7, 88), ""};
    const OracleResult res = solve_exhaustive(inst);
    CHECK(res.min_c2 == 0);
    CHECK(res.min_f == res.min_c1);
    CHECK(res.min_f == 0);  // a simple polygonization always exists
}

TEST_CASE("verify_ga_against_oracle reports a non-negative gap") {
    GenSpec spec;
    spec.sides = 10;
    spec.points = 6;
    spec.seed = 505;
    const Instance inst = generate_instance(spec);
    GaConfig cfg = GaConfig::defaults(GaVersion::V2);
    cfg.seed = 606;
    const OracleComparison cmp = verify_ga_against_oracle(inst, cfg);
    CHECK(cmp.gap >= 0);
    CHECK(cmp.ga.best_fitness.f() == cmp.oracle.min_f + cmp.gap);
}

TEST_CASE("n = 3 has a single order, so the GA matches the oracle exactly") {
    const Instance inst = square_instance({{10, 10}, {40, 15}, {25, 35}}, 0, 60);
    GaConfig cfg = GaConfig::defaults(GaVersion::V1);
    cfg.seed = 707;
    const OracleComparison cmp = verify_ga_against_oracle(inst, cfg);
    CHECK(cmp.gap == 0);
    CHECK(cmp.oracle.orders_examined == 1);
}
