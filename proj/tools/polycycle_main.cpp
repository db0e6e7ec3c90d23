// Command-line front end: instance generation, solving, the exhaustive
// oracle, the experiment grid and SVG rendering.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <polycycle/polycycle.hpp>

namespace {

using namespace polycycle;

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    Instance inst = read_instance(in);
    inst.name = path;
    return inst;
}

Solution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open solution file: " + path);
    return read_solution(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file for writing: " + path);
    return out;
}

GaVersion parse_version(int v) {
    return v == 1 ? GaVersion::V1 : GaVersion::V2;
}

struct GenerateArgs {
    int sides = 0;
    int points = 0;
    std::uint64_t seed = 0;
    long long box = 500;
    std::string out_path;
};

void cmd_generate(const GenerateArgs& args) {
    GenSpec spec;
    spec.sides = args.sides;
    spec.points = args.points;
    spec.box = args.box;
    spec.seed = args.seed;
    const Instance inst = generate_instance(spec);
    auto out = open_out(args.out_path);
    write_instance(inst, out);
    std::cout << args.out_path << "\n";
}

struct SolveArgs {
    std::string instance_path;
    int version = 2;
    std::uint64_t seed = 0;
    int generations = 1000;
    int restarts = 1;
    int pop_mult = 3;
    std::vector<double> rates;
    std::string out_path;
    std::string svg_path;
    std::string log_path;
    bool parallel = false;
};

void cmd_solve(const SolveArgs& args) {
    const Instance inst = load_instance(args.instance_path);
    GaConfig cfg = GaConfig::defaults(parse_version(args.version));
    cfg.seed = args.seed;
    cfg.generation_cap = args.generations;
    cfg.restarts = args.restarts;
    cfg.population_multiplier = args.pop_mult;
    cfg.parallel_fitness = args.parallel;
    if (!args.rates.empty()) {
        if (args.rates.size() != 3)
            throw ConfigError("--rates expects three values: CX,SWAP,UNCROSS");
        cfg.crossover_rate = args.rates[0];
        cfg.swap_mutation_rate = args.rates[1];
        cfg.uncross_mutation_rate = args.rates[2];
    }
    cfg.check();

    const RunResult rr = run_ga(inst, cfg);
    {
        auto out = open_out(args.out_path);
        write_solution(Solution{rr.best, rr.best_fitness, rr.generations_used}, out);
    }
    if (!args.svg_path.empty()) {
        auto out = open_out(args.svg_path);
        render_svg(inst, rr.best, out);
    }
    if (!args.log_path.empty()) {
        auto out = open_out(args.log_path);
        out << "restart,generation,best_f,mean_f\n";
        for (const auto& e : rr.generation_log)
            out << e.restart << "," << e.generation << "," << e.best_f << "," << e.mean_f << "\n";
    }
    std::cout << "best F=" << rr.best_fitness.f() << " (C1=" << rr.best_fitness.c1
              << " C2=" << rr.best_fitness.c2 << ") generations=" << rr.generations_used
              << " restarts=" << rr.restarts_used << " time=" << detail::fmt2(rr.wall_seconds)
              << "s -> " << args.out_path << "\n";
}

void cmd_oracle(const std::string& instance_path) {
    const Instance inst = load_instance(instance_path);
    const OracleResult res = solve_exhaustive(inst);
    std::cout << "min_f=" << res.min_f << " (c1=" << res.min_c1 << " c2=" << res.min_c2
              << ") examined=" << res.orders_examined << "\nwitness:";
    for (const int idx : res.witness) std::cout << " " << idx;
    std::cout << "\n";
}

struct ExperimentArgs {
    ExperimentSpec spec;
    std::vector<int> versions{1, 2};
    std::string csv_path;
    bool quiet = false;
};

void cmd_experiment(ExperimentArgs& args) {
    args.spec.versions.clear();
    for (const int v : args.versions) args.spec.versions.push_back(parse_version(v));
    args.spec.check();
    const auto records = run_experiment(args.spec, args.quiet ? nullptr : &std::cerr);
    {
        auto out = open_out(args.csv_path);
        write_csv(records, out);
    }
    print_aggregates(records, args.spec, std::cout);
    std::cout << records.size() << " rows -> " << args.csv_path << "\n";
}

struct RenderArgs {
    std::string instance_path;
    std::string solution_path;
    std::string svg_path;
};

void cmd_render(const RenderArgs& args) {
    const Instance inst = load_instance(args.instance_path);
    const Solution sol = load_solution(args.solution_path);
    if (!is_valid_permutation(sol.order, inst.points.size()))
        throw ValidationError("solution ORDER is not a permutation of the instance's points");
    auto out = open_out(args.svg_path);
    render_svg(inst, sol.order, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Straight-line embedding of a cycle onto points inside a simple polygon"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "Generate a random instance");
    cmd_gen->add_option("--sides", gen.sides, "Polygon side count")->required()->check(CLI::Range(3, 1000000));
    cmd_gen->add_option("--points", gen.points, "Interior point count")->required()->check(CLI::Range(3, 1000000));
    cmd_gen->add_option("--seed", gen.seed, "Generator seed")->required();
    cmd_gen->add_option("--box", gen.box, "Coordinate half-width")->check(CLI::Range(10LL, 1000000LL));
    cmd_gen->add_option("--out", gen.out_path, "Instance file to write")->required();

    SolveArgs solve;
    auto* cmd_sol = app.add_subcommand("solve", "Run the genetic algorithm on an instance");
    cmd_sol->add_option("--instance", solve.instance_path, "Instance file")->required();
    cmd_sol->add_option("--version", solve.version, "Algorithm version")->required()->check(CLI::IsMember({1, 2}));
    cmd_sol->add_option("--seed", solve.seed, "Run seed")->required();
    cmd_sol->add_option("--generations", solve.generations, "Generation cap G")->check(CLI::Range(0, 100000000));
    cmd_sol->add_option("--restarts", solve.restarts, "Independent restarts")->check(CLI::Range(1, 1000000));
    cmd_sol->add_option("--pop-mult", solve.pop_mult, "Population size multiplier")->check(CLI::Range(1, 1000000));
    cmd_sol->add_option("--rates", solve.rates, "Operator rates CX,SWAP,UNCROSS")->delimiter(',')->expected(0, 3);
    cmd_sol->add_option("--out", solve.out_path, "Solution file to write")->required();
    cmd_sol->add_option("--svg", solve.svg_path, "Also render the embedding to this SVG file");
    cmd_sol->add_option("--log", solve.log_path, "Write the per-generation log to this CSV file");
    cmd_sol->add_flag("--parallel-fitness", solve.parallel, "Evaluate child fitness on worker threads");

    std::string oracle_path;
    auto* cmd_ora = app.add_subcommand("oracle", "Exhaustive exact solve (small n)");
    cmd_ora->add_option("--instance", oracle_path, "Instance file")->required();

    ExperimentArgs exp;
    auto* cmd_exp = app.add_subcommand("experiment", "Run the evaluation grid and export CSV");
    cmd_exp->add_option("--sides", exp.spec.sides_list, "Side counts")->delimiter(',');
    cmd_exp->add_option("--points", exp.spec.points_list, "Point counts")->delimiter(',');
    cmd_exp->add_option("--polygons", exp.spec.polygons_per_config, "Polygons per configuration")->check(CLI::Range(1, 1000000));
    cmd_exp->add_option("--runs", exp.spec.runs_per_instance, "Runs per instance")->check(CLI::Range(1, 1000000));
    cmd_exp->add_option("--versions", exp.versions, "Algorithm versions")->delimiter(',')->check(CLI::IsMember({1, 2}));
    cmd_exp->add_option("--seed", exp.spec.base_seed, "Base seed")->required();
    cmd_exp->add_option("--csv", exp.csv_path, "CSV file to write")->required();
    cmd_exp->add_option("--threads", exp.spec.threads, "Worker threads for grid cells")->check(CLI::Range(1, 4096));
    cmd_exp->add_flag("--quiet", exp.quiet, "Suppress per-cell progress on stderr");

    RenderArgs render;
    auto* cmd_ren = app.add_subcommand("render", "Render an instance plus solution to SVG");
    cmd_ren->add_option("--instance", render.instance_path, "Instance file")->required();
    cmd_ren->add_option("--solution", render.solution_path, "Solution file")->required();
    cmd_ren->add_option("--svg", render.svg_path, "SVG file to write")->required();

    try {
        app.parse(argc, argv);
        if (cmd_gen->parsed()) cmd_generate(gen);
        if (cmd_sol->parsed()) cmd_solve(solve);
        if (cmd_ora->parsed()) cmd_oracle(oracle_path);
        if (cmd_exp->parsed()) cmd_experiment(exp);
        if (cmd_ren->parsed()) cmd_render(render);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
