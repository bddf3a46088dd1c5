// Command-line front end: exact multistar face distributions, sampling and
// brute-force statistics for arbitrary multigraphs from edge-list files,
// degree-based bounds, and scan workflows.  All randomness is seeded and
// reported, so identical invocations produce identical bytes.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rembed/bounds.hpp"
#include "rembed/enumerate.hpp"
#include "rembed/errors.hpp"
#include "rembed/multigraph.hpp"
#include "rembed/multistar.hpp"
#include "rembed/sampling.hpp"

using json = nlohmann::ordered_json;
using namespace rembed;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;
constexpr int kMaxIntervalScan = 40;
constexpr int kMaxConjectureScan = 200;

struct Options {
    std::string partition;
    std::string input;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    std::string format = "table";
    std::uint64_t budget = 10000000;
    int max_n = 12;
    std::string order_file;
    std::string cycles_file;
};

json rational_json(const Rational& v) {
    return json{{"exact", to_string(v)}, {"decimal", to_decimal(v)}};
}

void print_config_comment(std::ostream& out, const json& config) {
    for (const auto& [key, value] : config.items()) {
        out << "# " << key << "="
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void print_config_table(std::ostream& out, const json& config) {
    out << "config:";
    for (const auto& [key, value] : config.items()) {
        out << " " << key << "="
            << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << "\n";
}

void distribution_csv(std::ostream& out, const FaceDistribution& dist) {
    out << "faces,count,probability,probability_decimal\n";
    for (const auto& [faces, weight] : dist.weights()) {
        Rational p = dist.probability(faces);
        out << faces << "," << to_string(weight) << "," << to_string(p) << ","
            << to_decimal(p) << "\n";
    }
}

json distribution_json(const FaceDistribution& dist) {
    json rows = json::array();
    for (const auto& [faces, weight] : dist.weights()) {
        Rational p = dist.probability(faces);
        rows.push_back(json{{"faces", faces},
                            {"count", to_string(weight)},
                            {"probability", to_string(p)},
                            {"probability_decimal", to_decimal(p)}});
    }
    return rows;
}

void distribution_table(std::ostream& out, const FaceDistribution& dist) {
    out << "faces  count  probability\n";
    for (const auto& [faces, weight] : dist.weights()) {
        Rational p = dist.probability(faces);
        out << faces << "  " << to_string(weight) << "  " << to_string(p) << " ("
            << to_decimal(p) << ")\n";
    }
}

int run_multistar(const Options& opt) {
    json config{{"command", "multistar"}, {"partition", opt.partition}, {"format", opt.format}};
    MultistarSpec spec = reduce_partition(parse_partition(opt.partition));
    Rational expectation = multistar_expected_faces(spec.original);

    json doc{{"config", config},
             {"partition", spec.original.to_string()},
             {"weight", spec.weight},
             {"reduced_partition", spec.reduced.to_string()},
             {"leaf_parts_removed", spec.ones_removed},
             {"reduced_weight", spec.reduced_weight}};

    FaceDistribution dist;
    if (spec.reduced_weight == 0) {
        doc["tree"] = true;
        dist.add(1, 1);
    } else {
        dist = multistar_face_distribution(spec.reduced);
        doc["class_size"] = to_string(dist.total());
    }
    doc["distribution"] = distribution_json(dist);
    doc["expected_faces"] = rational_json(expectation);
    if (spec.reduced_weight >= 2) {
        IntervalReport report = interval_check(spec.original);
        doc["dipole_reference"] = rational_json(report.dipole_value);
        doc["gap"] = rational_json(report.gap);
        doc["radius"] = rational_json(report.radius);
        doc["inside_interval"] = report.inside;
    }

    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        print_config_comment(std::cout, config);
        std::cout << "# expected_faces=" << to_string(expectation) << "\n";
        distribution_csv(std::cout, dist);
    } else {
        print_config_table(std::cout, config);
        std::cout << "partition: " << spec.original.to_string() << " (weight " << spec.weight
                  << ")\n"
                  << "reduced: " << spec.reduced.to_string() << " (weight "
                  << spec.reduced_weight << ", " << spec.ones_removed
                  << " leaf parts removed)\n";
        if (spec.reduced_weight == 0) {
            std::cout << "tree: every embedding has exactly one face\n";
        } else {
            std::cout << "rotations counted: " << to_string(dist.total()) << "\n";
            distribution_table(std::cout, dist);
        }
        std::cout << "expected faces: " << to_string(expectation) << " ("
                  << to_decimal(expectation) << ")\n";
        if (spec.reduced_weight >= 2) {
            IntervalReport report = interval_check(spec.original);
            std::cout << "dipole reference: " << to_string(report.dipole_value) << " ("
                      << to_decimal(report.dipole_value) << ")\n"
                      << "gap: " << to_string(report.gap)
                      << ", allowed radius: " << to_string(report.radius)
                      << ", inside: " << (report.inside ? "true" : "false") << "\n";
        }
    }
    return 0;
}

std::vector<int> read_ordering_file(const std::string& path, const LabeledGraph& lg) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ordering file '" + path + "'");
    std::vector<int> order;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token)) continue;
        std::string extra;
        if (fields >> extra) throw ParseError("ordering file: one vertex token per line");
        order.push_back(lg.vertex_of(token));
    }
    return order;
}

std::vector<std::vector<int>> read_cycles_file(const std::string& path,
                                               const LabeledGraph& lg) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cycle file '" + path + "'");
    std::vector<std::vector<int>> cycles;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<int> cycle;
        std::string token;
        while (fields >> token) cycle.push_back(lg.vertex_of(token));
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    return cycles;
}

json bounds_json(const Multigraph& g, const OrderingReport& order,
                 const std::vector<std::string>& labels) {
    json ordering = json::array();
    for (int v : order.ordering) ordering.push_back(labels[v]);
    return json{{"ordering", ordering},
                {"back_degrees", order.back_degrees},
                {"degeneracy", order.max_back_degree},
                {"harmonic_bound", rational_json(face_bound_harmonic(g, order))},
                {"log_bound", to_decimal(face_bound_log(g, order))},
                {"stahl_bound", to_decimal(stahl_bound(g))}};
}

void bounds_table(std::ostream& out, const json& b) {
    out << "ordering:";
    for (const auto& token : b["ordering"]) out << " " << token.get<std::string>();
    out << "\nback degrees:";
    for (const auto& d : b["back_degrees"]) out << " " << d.get<int>();
    out << "\ndegeneracy (max back-degree): " << b["degeneracy"].get<int>() << "\n"
        << "harmonic upper bound: " << b["harmonic_bound"]["exact"].get<std::string>() << " ("
        << b["harmonic_bound"]["decimal"].get<std::string>() << ")\n"
        << "log upper bound: " << b["log_bound"].get<std::string>() << "\n"
        << "stahl comparison bound: " << b["stahl_bound"].get<std::string>() << "\n";
}

int run_graph(const std::string& mode, const Options& opt) {
    json config{{"command", "graph"},   {"mode", mode},
                {"input", opt.input},   {"samples", opt.samples},
                {"seed", opt.seed},     {"budget", opt.budget},
                {"format", opt.format}};
    LabeledGraph lg = read_edge_list_file(opt.input);
    const Multigraph& g = lg.graph;

    json doc{{"config", config},
             {"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"components", g.component_count()}};

    if (mode == "brute") {
        FaceDistribution dist = brute_force_distribution(g, BigInt(opt.budget));
        Rational expectation = dist.expectation();
        doc["rotation_systems"] = to_string(dist.total());
        doc["distribution"] = distribution_json(dist);
        doc["expected_faces"] = rational_json(expectation);
        if (opt.format == "json") {
            std::cout << doc.dump(2) << "\n";
        } else if (opt.format == "csv") {
            print_config_comment(std::cout, config);
            std::cout << "# expected_faces=" << to_string(expectation) << "\n";
            distribution_csv(std::cout, dist);
        } else {
            print_config_table(std::cout, config);
            std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
                      << " edges, " << g.component_count() << " component(s)\n"
                      << "rotation systems: " << to_string(dist.total()) << "\n";
            distribution_table(std::cout, dist);
            std::cout << "expected faces: " << to_string(expectation) << " ("
                      << to_decimal(expectation) << ")\n";
        }
        return 0;
    }

    if (mode == "sample") {
        EstimateReport report = monte_carlo_faces(g, opt.samples, opt.seed);
        doc["mean"] = rational_json(report.mean);
        doc["variance"] = rational_json(report.variance);
        doc["standard_error"] = to_decimal(report.standard_error);
        doc["min_faces_seen"] = report.min_observed;
        doc["max_faces_seen"] = report.max_observed;
        const bool bounds_apply = g.connected() && !g.has_loops();
        if (bounds_apply) {
            doc["bounds"] = bounds_json(g, degeneracy_order(g), lg.labels);
        } else {
            doc["bounds"] = nullptr;
        }
        if (opt.format == "json") {
            std::cout << doc.dump(2) << "\n";
        } else if (opt.format == "csv") {
            print_config_comment(std::cout, config);
            std::cout << "samples,seed,mean,mean_decimal,standard_error,min_faces,max_faces\n"
                      << opt.samples << "," << opt.seed << "," << to_string(report.mean) << ","
                      << to_decimal(report.mean) << "," << to_decimal(report.standard_error)
                      << "," << report.min_observed << "," << report.max_observed << "\n";
        } else {
            print_config_table(std::cout, config);
            std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
                      << " edges, " << g.component_count() << " component(s)\n"
                      << "samples: " << opt.samples << " (seed " << opt.seed << ")\n"
                      << "mean faces: " << to_string(report.mean) << " ("
                      << to_decimal(report.mean) << ")\n"
                      << "standard error: " << to_decimal(report.standard_error) << "\n"
                      << "face range seen: [" << report.min_observed << ", "
                      << report.max_observed << "]\n";
            if (bounds_apply) {
                bounds_table(std::cout, doc["bounds"]);
            } else {
                std::cout << "bounds: not applicable (graph must be connected and loopless)\n";
            }
        }
        return 0;
    }

    // bounds
    OrderingReport order = opt.order_file.empty()
                               ? degeneracy_order(g)
                               : ordering_report(g, read_ordering_file(opt.order_file, lg));
    doc["bounds"] = bounds_json(g, order, lg.labels);
    if (!opt.cycles_file.empty()) {
        CycleFamilyBound cfb =
            cycle_family_lower_bound(g, read_cycles_file(opt.cycles_file, lg));
        doc["cycle_lower_bound"] = json{{"cycles", cfb.cycle_count},
                                        {"sharp", rational_json(cfb.sharp)},
                                        {"coarse", rational_json(cfb.coarse)},
                                        {"max_degree", cfb.max_degree},
                                        {"max_length", cfb.max_length}};
    }
    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        print_config_comment(std::cout, config);
        std::cout << "bound,value,value_decimal\n";
        const json& b = doc["bounds"];
        std::cout << "harmonic," << b["harmonic_bound"]["exact"].get<std::string>() << ","
                  << b["harmonic_bound"]["decimal"].get<std::string>() << "\n"
                  << "log,," << b["log_bound"].get<std::string>() << "\n"
                  << "stahl,," << b["stahl_bound"].get<std::string>() << "\n";
        if (doc.contains("cycle_lower_bound")) {
            const json& c = doc["cycle_lower_bound"];
            std::cout << "cycle_sharp," << c["sharp"]["exact"].get<std::string>() << ","
                      << c["sharp"]["decimal"].get<std::string>() << "\n"
                      << "cycle_coarse," << c["coarse"]["exact"].get<std::string>() << ","
                      << c["coarse"]["decimal"].get<std::string>() << "\n";
        }
    } else {
        print_config_table(std::cout, config);
        bounds_table(std::cout, doc["bounds"]);
        if (doc.contains("cycle_lower_bound")) {
            const json& c = doc["cycle_lower_bound"];
            std::cout << "cycle family lower bound (" << c["cycles"].get<int>()
                      << " cycles): " << c["sharp"]["exact"].get<std::string>() << " ("
                      << c["sharp"]["decimal"].get<std::string>() << ")\n"
                      << "coarse form: " << c["coarse"]["exact"].get<std::string>() << " ("
                      << c["coarse"]["decimal"].get<std::string>() << ")\n";
        }
    }
    return 0;
}

int run_scan(const std::string& kind, const Options& opt) {
    json config{{"command", "scan"},       {"kind", kind},
                {"max_n", opt.max_n},      {"samples", opt.samples},
                {"seed", opt.seed},        {"format", opt.format}};

    if (kind == "interval") {
        if (opt.max_n > kMaxIntervalScan) {
            throw BudgetError("interval scan limit is n <= " + std::to_string(kMaxIntervalScan) +
                                  " (requested " + std::to_string(opt.max_n) + ")",
                              std::to_string(opt.max_n));
        }
        json rows = json::array();
        std::ostringstream csv;
        csv << "n,partition,n_prime,expected_faces,expected_decimal,dipole_reference,gap,"
               "radius,inside\n";
        std::map<Partition, Rational> memo; // many partitions share a reduction
        for (int n = 2; n <= opt.max_n; ++n) {
            for (const Partition& lam : PartitionRange(n)) {
                Partition reduced = lam.without_ones();
                if (reduced.weight() < 2) continue;
                auto it = memo.find(reduced);
                if (it == memo.end()) {
                    it = memo
                             .emplace(reduced,
                                      multistar_face_distribution(reduced).expectation())
                             .first;
                }
                int n_prime = reduced.weight();
                const Rational& expectation = it->second;
                Rational center = delta(n_prime);
                Rational gap = abs(expectation - center);
                Rational radius(1, n_prime + 1);
                bool inside = gap < radius;
                csv << n << "," << lam.to_string() << "," << n_prime << ","
                    << to_string(expectation) << "," << to_decimal(expectation) << ","
                    << to_string(center) << "," << to_string(gap) << "," << to_string(radius)
                    << "," << (inside ? "true" : "false") << "\n";
                if (opt.format == "json") {
                    rows.push_back(json{{"n", n},
                                        {"partition", lam.to_string()},
                                        {"n_prime", n_prime},
                                        {"expected_faces", to_string(expectation)},
                                        {"expected_decimal", to_decimal(expectation)},
                                        {"dipole_reference", to_string(center)},
                                        {"gap", to_string(gap)},
                                        {"radius", to_string(radius)},
                                        {"inside", inside}});
                }
            }
        }
        if (opt.format == "json") {
            std::cout << json{{"config", config}, {"rows", rows}}.dump(2) << "\n";
        } else {
            print_config_comment(std::cout, config);
            std::cout << csv.str();
        }
        return 0;
    }

    // conjecture: exploratory ratios, no verdicts.  Paths whose every second
    // edge is a parallel bundle keep E[F] linear in the vertex count.
    if (opt.max_n > kMaxConjectureScan) {
        throw BudgetError("conjecture scan limit is " + std::to_string(kMaxConjectureScan) +
                              " vertices (requested " + std::to_string(opt.max_n) + ")",
                          std::to_string(opt.max_n));
    }
    json rows = json::array();
    std::ostringstream csv;
    csv << "family,mu,vertices,edges,samples,seed,mean_decimal,standard_error,"
           "faces_per_vertex\n";
    for (int mu : {2, 4, 8}) {
        for (int m = 3; m <= opt.max_n; m += 2) {
            Multigraph g = make_dipole_chain(m, mu);
            EstimateReport r = monte_carlo_faces(g, opt.samples, opt.seed);
            Rational ratio = r.mean / m;
            csv << "dipole-chain," << mu << "," << m << "," << g.edge_count() << ","
                << opt.samples << "," << opt.seed << "," << to_decimal(r.mean) << ","
                << to_decimal(r.standard_error) << "," << to_decimal(ratio) << "\n";
            if (opt.format == "json") {
                rows.push_back(json{{"family", "dipole-chain"},
                                    {"mu", mu},
                                    {"vertices", m},
                                    {"edges", g.edge_count()},
                                    {"samples", opt.samples},
                                    {"seed", opt.seed},
                                    {"mean_decimal", to_decimal(r.mean)},
                                    {"standard_error", to_decimal(r.standard_error)},
                                    {"faces_per_vertex", to_decimal(ratio)}});
            }
        }
    }
    if (opt.format == "json") {
        std::cout << json{{"config", config}, {"rows", rows}}.dump(2) << "\n";
    } else {
        print_config_comment(std::cout, config);
        std::cout << csv.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"face statistics of random 2-cell embeddings"};
    app.require_subcommand(1);

    Options opt;
    std::string graph_mode;
    std::string scan_kind;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: table, csv, or json")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
    };

    CLI::App* multistar =
        app.add_subcommand("multistar", "exact face distribution of a multistar");
    multistar
        ->add_option("--partition", opt.partition,
                     "edge multiplicities, e.g. \"2,2\" or \"5 4^3 2^2\"")
        ->required();
    add_format(multistar);

    CLI::App* graph = app.add_subcommand("graph", "statistics for an edge-list graph");
    graph->add_option("mode", graph_mode, "sample | brute | bounds")
        ->required()
        ->check(CLI::IsMember({"sample", "brute", "bounds"}));
    graph->add_option("--input", opt.input, "edge list file (\"u v\" per line)")->required();
    graph->add_option("--samples", opt.samples, "Monte Carlo sample count")
        ->capture_default_str();
    graph->add_option("--seed", opt.seed, "master random seed")->capture_default_str();
    graph->add_option("--budget", opt.budget, "enumeration budget (rotation systems)")
        ->capture_default_str();
    graph->add_option("--order-file", opt.order_file,
                      "vertex ordering for the bounds (one token per line)");
    graph->add_option("--cycles-file", opt.cycles_file,
                      "cycle family for the lower bound (tokens per line)");
    add_format(graph);

    CLI::App* scan = app.add_subcommand("scan", "sweep workflows");
    scan->add_option("kind", scan_kind, "interval | conjecture")
        ->required()
        ->check(CLI::IsMember({"interval", "conjecture"}));
    scan->add_option("--max-n", opt.max_n, "scan limit")->capture_default_str();
    scan->add_option("--samples", opt.samples, "samples per row (conjecture scan)")
        ->capture_default_str();
    scan->add_option("--seed", opt.seed, "master random seed")->capture_default_str();
    add_format(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (multistar->parsed()) return run_multistar(opt);
        if (graph->parsed()) return run_graph(graph_mode, opt);
        if (scan->parsed()) return run_scan(scan_kind, opt);
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
