// Command-line front end: run/verify contraction, generate graphs, estimate
// contraction factors, check the small-graph bounds, emit the SQL form.

#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "randcc/baselines.hpp"
#include "randcc/bounds.hpp"
#include "randcc/engine.hpp"
#include "randcc/generators.hpp"
#include "randcc/rng.hpp"
#include "randcc/sql_emit.hpp"

namespace {

using namespace randcc;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::uint64_t parse_seed(const std::string& text) {
    if (text == "random") {
        std::random_device entropy;
        return (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
    }
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("--seed expects an unsigned integer or 'random'");
    return value;
}

EdgeTable load_edge_list(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

Labeling load_labeling(const std::string& path) {
    if (path == "-") return read_labeling(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_labeling(in);
}

// Run `writer` against the chosen sink; "-" is standard output.
template <typename Writer>
void with_output(const std::string& path, Writer&& writer) {
    if (path == "-") {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("write to standard output failed");
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

OrderingFamily method_from_name(const std::string& name) {
    if (name == "minid") return OrderingFamily::min_id;
    if (name == "random") return OrderingFamily::random_keys;
    if (name == "affine") return OrderingFamily::affine;
    return OrderingFamily::keyed_permutation;
}

std::string rational_text(const Rational& r) {
    std::ostringstream out;
    if (r.denominator() == 1)
        out << r.numerator();
    else
        out << r.numerator() << '/' << r.denominator();
    return out.str();
}

struct EngineFlags {
    std::string input = "-";
    std::string method = "affine";
    std::string variant = "lean";
    std::string seed = std::to_string(EngineConfig::kDefaultSeed);
    std::uint64_t max_rounds = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("-i,--input", input, "Edge-list file ('-' for standard input)");
        cmd->add_option("--method", method, "Ordering method")
            ->check(CLI::IsMember({"minid", "random", "affine", "keyed"}))
            ->capture_default_str();
        cmd->add_option("--variant", variant, "Engine variant")
            ->check(CLI::IsMember({"lean", "fast"}))
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Seed (unsigned integer, or 'random' for entropy)")
            ->capture_default_str();
        cmd->add_option("--max-rounds", max_rounds,
                        "Round budget (0 = default; the minid method on adversarial inputs "
                        "needs an explicit budget)");
    }

    EngineConfig config() const {
        EngineConfig cfg;
        cfg.method = method_from_name(method);
        cfg.variant = variant == "fast" ? Variant::fast : Variant::lean;
        cfg.seed = parse_seed(seed);
        cfg.max_rounds = max_rounds;
        return cfg;
    }
};

int cmd_run(const EngineFlags& flags, const std::string& output, bool canonical,
            const std::string& trace_path) {
    const EdgeTable input = load_edge_list(flags.input);
    EngineResult result;
    try {
        result = run(input, flags.config());
    } catch (const engine_abort_error& e) {
        if (!trace_path.empty())
            with_output(trace_path, [&](std::ostream& out) { e.trace().write_tsv(out); });
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    if (canonical) result.labeling = canonicalize(result.labeling);
    with_output(output, [&](std::ostream& out) { write_labeling(result.labeling, out); });
    if (!trace_path.empty())
        with_output(trace_path, [&](std::ostream& out) { result.trace.write_tsv(out); });
    return kExitOk;
}

int cmd_verify(const EngineFlags& flags, const std::string& against,
               const std::string& labeling_path) {
    const EdgeTable input = load_edge_list(flags.input);
    const EngineResult result = run(input, flags.config());
    const Labeling reference = against == "oracle"
                                   ? union_find_components(symmetrize(input))
                                   : load_labeling(labeling_path);
    const auto mismatch = compare_partitions(result.labeling, reference);
    if (!mismatch) {
        std::cout << "partitions agree on " << result.labeling.size() << " vertices\n";
        return kExitOk;
    }
    std::cerr << "partitions differ: vertices " << mismatch->u << " and " << mismatch->v
              << (mismatch->together_in_first
                      ? " share a component in the engine output but not in the reference\n"
                      : " share a component in the reference but not in the engine output\n");
    return kExitMismatch;
}

int cmd_stats(const std::string& input_path, const std::string& method,
              std::uint64_t samples, const std::string& seed) {
    const EdgeTable input = load_edge_list(input_path);
    const GammaMethod m = method == "full"     ? GammaMethod::full
                          : method == "affine" ? GammaMethod::affine
                                               : GammaMethod::keyed;
    const GammaEstimate estimate = monte_carlo_gamma(input, m, samples, parse_seed(seed));
    std::cout << "# mean\tstd_error\tsamples\n";
    std::cout << estimate.mean << '\t' << estimate.std_error << '\t' << estimate.samples
              << '\n';
    return kExitOk;
}

int cmd_bounds(std::uint32_t n, const std::string& graphs, std::uint64_t count,
               const std::string& seed_text) {
    if (n < 2) throw std::invalid_argument("--n must be at least 2");
    const std::uint64_t seed = parse_seed(seed_text);

    std::vector<std::pair<std::string, Digraph>> cases;
    if (graphs == "cycle" || graphs == "all")
        cases.emplace_back("cycle", gen_directed_cycle(n));
    if (graphs == "random" || graphs == "all") {
        SplitMix64 pick(derive_seed(seed, 0));
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint32_t size = 2 + static_cast<std::uint32_t>(pick.next_below(n - 1));
            const double p = 0.15 + 0.7 * pick.next_unit();
            cases.emplace_back("random[" + std::to_string(i) + "]",
                               gen_random_digraph(size, p, derive_seed(seed, i + 1)));
        }
    }

    std::cout << "# graph\tn\texpected_reps\tbound_2n/3\twithin_bound\tcensus_identity\tlemma1\n";
    std::uint64_t violations = 0;
    for (const auto& [name, graph] : cases) {
        const std::uint32_t size = graph.vertex_count();
        const Rational expected = exact_expected_representatives(graph);
        const Rational bound(2 * static_cast<long long>(size), 3);
        const bool within = expected <= bound;

        const TypeCensus census = type_census(graph);
        const Rational identity =
            census.expected_type0() + census.expected_type1() + census.expected_type2plus();
        const bool identity_ok = identity == Rational(size);

        const Lemma1Result lemma = lemma1_check(graph);
        if (!within || !identity_ok || !lemma.holds) ++violations;

        std::cout << name << '\t' << size << '\t' << rational_text(expected) << '\t'
                  << rational_text(bound) << '\t' << (within ? "yes" : "NO") << '\t'
                  << (identity_ok ? "ok" : "BROKEN") << '\t'
                  << (lemma.holds ? "holds" : "VIOLATED") << '\n';
    }
    std::cout << "# violations\t" << violations << '\n';
    return violations == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connected components on edge tables via randomised contraction"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Contract a graph and write its labeling");
    EngineFlags run_flags;
    run_flags.attach(run_cmd);
    std::string run_output = "-";
    bool run_canonical = false;
    std::string run_trace;
    run_cmd->add_option("-o,--output", run_output, "Labeling file ('-' for standard output)");
    run_cmd->add_flag("--canonical", run_canonical,
                      "Relabel components by their minimum vertex");
    run_cmd->add_option("--trace", run_trace, "Write per-round statistics to this TSV file");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Write a benchmark graph as an edge list");
    gen_cmd->require_subcommand(1);
    std::string gen_out = "-";

    auto* gen_path_cmd = gen_cmd->add_subcommand("path", "Path graph");
    std::uint64_t path_n = 100;
    std::string path_numbering = "sequential";
    std::string path_seed = "0";
    gen_path_cmd->add_option("--n", path_n, "Vertex count")->capture_default_str();
    gen_path_cmd->add_option("--numbering", path_numbering, "Vertex numbering")
        ->check(CLI::IsMember({"sequential", "optimal", "shuffled"}))
        ->capture_default_str();
    gen_path_cmd->add_option("--seed", path_seed, "Seed for the shuffled numbering")
        ->capture_default_str();

    auto* gen_union_cmd = gen_cmd->add_subcommand("path-union", "Disjoint union of paths");
    std::vector<std::uint64_t> union_lengths;
    std::string union_seed = "0";
    gen_union_cmd->add_option("--lengths", union_lengths, "Path lengths (vertex counts)")
        ->required()
        ->delimiter(',');
    gen_union_cmd->add_option("--seed", union_seed, "Nonzero: shuffle identifiers")
        ->capture_default_str();

    auto* gen_rmat_cmd = gen_cmd->add_subcommand("rmat", "Recursive-quadrant random graph");
    std::uint32_t rmat_scale = 12;
    std::uint64_t rmat_edges = 100000;
    std::string rmat_seed = "1";
    RmatParams rmat_params;
    bool rmat_no_shuffle = false;
    gen_rmat_cmd->add_option("--scale", rmat_scale, "log2 of the vertex-space size")
        ->capture_default_str();
    gen_rmat_cmd->add_option("--edges", rmat_edges, "Rows to sample")->capture_default_str();
    gen_rmat_cmd->add_option("--seed", rmat_seed, "Seed")->capture_default_str();
    gen_rmat_cmd->add_option("--a", rmat_params.a, "Quadrant probability a")
        ->capture_default_str();
    gen_rmat_cmd->add_option("--b", rmat_params.b, "Quadrant probability b")
        ->capture_default_str();
    gen_rmat_cmd->add_option("--c", rmat_params.c, "Quadrant probability c")
        ->capture_default_str();
    gen_rmat_cmd->add_option("--d", rmat_params.d, "Quadrant probability d")
        ->capture_default_str();
    gen_rmat_cmd->add_flag("--no-shuffle", rmat_no_shuffle,
                           "Keep the raw recursive-descent identifiers");

    auto* gen_grid_cmd = gen_cmd->add_subcommand("grid", "Percolated lattice");
    std::uint32_t grid_width = 100;
    std::uint32_t grid_height = 100;
    double grid_keep = 0.6;
    std::string grid_seed = "1";
    gen_grid_cmd->add_option("--width", grid_width, "Lattice width")->capture_default_str();
    gen_grid_cmd->add_option("--height", grid_height, "Lattice height")->capture_default_str();
    gen_grid_cmd->add_option("--keep", grid_keep, "Probability of keeping each lattice edge")
        ->capture_default_str();
    gen_grid_cmd->add_option("--seed", grid_seed, "Seed")->capture_default_str();

    auto* gen_er_cmd = gen_cmd->add_subcommand("erdos-renyi", "Uniform random graph G(n, p)");
    std::uint64_t er_n = 1000;
    double er_p = 0.002;
    std::string er_seed = "1";
    gen_er_cmd->add_option("--n", er_n, "Vertex count")->capture_default_str();
    gen_er_cmd->add_option("--p", er_p, "Edge probability")->capture_default_str();
    gen_er_cmd->add_option("--seed", er_seed, "Seed")->capture_default_str();

    auto* gen_fig11_cmd =
        gen_cmd->add_subcommand("fig11", "Fixed 20-vertex pendant-cycle benchmark graph");

    for (CLI::App* sub : {gen_path_cmd, gen_union_cmd, gen_rmat_cmd, gen_grid_cmd, gen_er_cmd,
                          gen_fig11_cmd})
        sub->add_option("-o,--out", gen_out, "Output file ('-' for standard output)");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Compare the engine partition against a reference");
    EngineFlags verify_flags;
    verify_flags.attach(verify_cmd);
    std::string verify_against = "oracle";
    std::string verify_labeling;
    verify_cmd->add_option("--against", verify_against, "Reference to compare with")
        ->check(CLI::IsMember({"oracle", "file"}))
        ->capture_default_str();
    verify_cmd->add_option("--labeling", verify_labeling,
                           "Labeling file (required with --against file)");

    // stats
    auto* stats_cmd = app.add_subcommand(
        "stats", "Monte-Carlo estimate of the one-round contraction factor");
    std::string stats_input = "-";
    std::string stats_method = "affine";
    std::uint64_t stats_samples = 10000;
    std::string stats_seed = std::to_string(EngineConfig::kDefaultSeed);
    stats_cmd->add_option("-i,--input", stats_input, "Edge-list file ('-' for standard input)");
    stats_cmd->add_option("--method", stats_method, "Ordering model")
        ->check(CLI::IsMember({"full", "affine", "keyed"}))
        ->capture_default_str();
    stats_cmd->add_option("--samples", stats_samples, "Sample count")->capture_default_str();
    stats_cmd->add_option("--seed", stats_seed, "Seed")->capture_default_str();

    // bounds
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Exhaustive small-digraph checks of the contraction-factor bounds");
    std::uint32_t bounds_n = 6;
    std::string bounds_graphs = "all";
    std::uint64_t bounds_count = 200;
    std::string bounds_seed = std::to_string(EngineConfig::kDefaultSeed);
    bounds_cmd->add_option("--n", bounds_n, "Vertex count (cycle) / maximum size (random)")
        ->capture_default_str();
    bounds_cmd->add_option("--graphs", bounds_graphs, "Which graphs to check")
        ->check(CLI::IsMember({"random", "cycle", "all"}))
        ->capture_default_str();
    bounds_cmd->add_option("--count", bounds_count, "Number of random digraphs")
        ->capture_default_str();
    bounds_cmd->add_option("--seed", bounds_seed, "Seed")->capture_default_str();

    // emit-sql
    auto* sql_cmd =
        app.add_subcommand("emit-sql", "Print the contraction loop as templated SQL");
    std::string sql_variant = "lean";
    std::string sql_field = "gf64-udf";
    std::string sql_table = "G";
    std::uint64_t sql_prime = kDefaultSqlPrime;
    sql_cmd->add_option("--variant", sql_variant, "Engine variant")
        ->check(CLI::IsMember({"lean", "fast"}))
        ->capture_default_str();
    sql_cmd->add_option("--field", sql_field, "Arithmetic backend")
        ->check(CLI::IsMember({"gf64-udf", "prime-modulus"}))
        ->capture_default_str();
    sql_cmd->add_option("--table", sql_table, "Input table name")->capture_default_str();
    sql_cmd->add_option("--prime", sql_prime, "Modulus for prime-modulus mode")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_flags, run_output, run_canonical, run_trace);

        if (gen_cmd->parsed()) {
            EdgeTable table;
            std::string banner;
            if (gen_path_cmd->parsed()) {
                const PathNumbering numbering =
                    path_numbering == "sequential" ? PathNumbering::sequential
                    : path_numbering == "optimal"  ? PathNumbering::optimal
                                                   : PathNumbering::shuffled;
                table = gen_path(path_n, numbering, parse_seed(path_seed));
                banner = "# path n=" + std::to_string(path_n) + " numbering=" + path_numbering;
            } else if (gen_union_cmd->parsed()) {
                table = gen_path_union(union_lengths, parse_seed(union_seed));
                banner = "# path-union blocks=" + std::to_string(union_lengths.size());
            } else if (gen_rmat_cmd->parsed()) {
                table = gen_rmat(rmat_scale, rmat_edges, rmat_params, parse_seed(rmat_seed),
                                 !rmat_no_shuffle);
                banner = "# rmat scale=" + std::to_string(rmat_scale) +
                         " edges=" + std::to_string(rmat_edges);
            } else if (gen_grid_cmd->parsed()) {
                table = gen_grid(grid_width, grid_height, grid_keep, parse_seed(grid_seed));
                banner = "# grid " + std::to_string(grid_width) + "x" +
                         std::to_string(grid_height);
            } else if (gen_er_cmd->parsed()) {
                table = gen_erdos_renyi(er_n, er_p, parse_seed(er_seed));
                banner = "# erdos-renyi n=" + std::to_string(er_n);
            } else {
                table = gen_fig11();
                banner = "# pendant-cycle benchmark, 20 vertices";
            }
            with_output(gen_out, [&](std::ostream& out) {
                out << banner << '\n';
                write_edge_list(table, out);
            });
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (verify_against == "file" && verify_labeling.empty())
                throw std::invalid_argument("--against file requires --labeling");
            return cmd_verify(verify_flags, verify_against, verify_labeling);
        }

        if (stats_cmd->parsed())
            return cmd_stats(stats_input, stats_method, stats_samples, stats_seed);

        if (bounds_cmd->parsed())
            return cmd_bounds(bounds_n, bounds_graphs, bounds_count, bounds_seed);

        if (sql_cmd->parsed()) {
            const Variant variant = sql_variant == "fast" ? Variant::fast : Variant::lean;
            const SqlField field =
                sql_field == "gf64-udf" ? SqlField::gf64_udf : SqlField::prime_modulus;
            std::cout << emit_sql(variant, field, sql_table, sql_prime);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
