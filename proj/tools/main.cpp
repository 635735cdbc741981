#include "ultranear/datasets.hpp"
#include "ultranear/enumerate.hpp"
#include "ultranear/extend.hpp"
#include "ultranear/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ultranear;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDisagreement = 2;

struct Options {
    std::string format = "json";
    std::string output;
    std::string epsilon = "1";
    bool oracle = true;
    std::string quantifier = "all-resolutions";
    unsigned long long seed = 20240801;
    int trials = 100;
};

MobilityQuantifier quantifier_of(const std::string& name) {
    return name == "per-resolution" ? MobilityQuantifier::PerResolution
                                    : MobilityQuantifier::AllResolutions;
}

/// Inputs are either a bundled dataset name or a path to a matrix file.
RatMatrix load_matrix(const std::string& source) {
    if (auto builtin = builtin_dataset(source)) return builtin->square();
    std::ifstream in(source);
    if (!in) throw ValidationError("cannot open input '" + source + "'");
    return parse_matrix(in);
}

DissimilarityMap load_input(const std::string& source) {
    if (auto builtin = builtin_dataset(source)) return *builtin;
    return validate_dissimilarity(load_matrix(source));
}

/// Candidates may carry zero or negative entries, so only structure is checked.
Ultrametric load_candidate(const std::string& source, const DissimilarityMap& d) {
    DissimilarityMap map = DissimilarityMap::from_square(load_matrix(source), d.labels());
    if (map.size() != d.size())
        throw ValidationError("candidate size does not match the input map");
    return Ultrametric(std::move(map));
}

void write_output(const Options& options, const std::string& text) {
    if (options.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(options.output);
    if (!out) throw ValidationError("cannot open output '" + options.output + "'");
    out << text;
}

void write_json(const Options& options, const Json& value) {
    write_output(options, value.dump(2) + "\n");
}

const std::vector<std::vector<Rat>>* reference_for(const std::string& source) {
    if (source == "paper-n4") return &reference_rays_n4();
    if (source == "paper-n8") return &reference_rays_n8();
    return nullptr;
}

int cmd_nearest(const Options& options, const std::string& input) {
    const DissimilarityMap d = load_input(input);
    const NearestResult nr = nearest_ultrametric(d);
    if (options.format == "csv")
        write_output(options, matrix_csv(nr.delta_star.map().square()));
    else if (options.format == "newick")
        write_output(options, to_newick(tree_from_ultrametric(nr.delta_star),
                                        NewickStyle::NodeWeights, d.labels()) +
                                  "\n");
    else
        write_json(options, nearest_json(nr, d));
    return kExitOk;
}

int cmd_cone(const Options& options, const std::string& input) {
    const DissimilarityMap d = load_input(input);
    const TropicalSystem sys = build_exterior(d, nearest_ultrametric(d).q);
    if (sys.triple_rows == 0)
        std::cerr << "warning: fewer than three items, no triangle rows emitted\n";
    if (options.format == "csv")
        write_output(options, system_csv(sys));
    else
        write_json(options, system_json(sys));
    return kExitOk;
}

int cmd_candidates(const Options& options, const std::string& input) {
    const DissimilarityMap d = load_input(input);
    const CandidateSet set = bernstein_candidates(d, quantifier_of(options.quantifier));
    if (options.format == "newick") {
        std::ostringstream out;
        for (int idx : set.bernstein)
            out << to_newick(set.all[static_cast<std::size_t>(idx)].state.tree,
                             NewickStyle::NodeWeights, d.labels())
                << '\n';
        write_output(options, out.str());
    } else {
        write_json(options, candidates_json(d, set));
    }
    return kExitOk;
}

int cmd_extremes(const Options& options, const std::string& input) {
    const DissimilarityMap d = load_input(input);
    ExtremeReport report = enumerate_extremes(d, quantifier_of(options.quantifier), options.oracle);
    std::cerr << "enumerated " << report.extremes.size() << " extreme rays in " << report.seconds
              << " s\n";
    const bool probe_ok = options.trials <= 0 ||
                          polytope_probe(d, report, options.trials, options.seed);
    if (options.format == "csv") {
        write_output(options, rays_csv(report));
    } else if (options.format == "newick") {
        write_output(options, newick_batch(report, d));
    } else {
        Json out = report_json(report, d, reference_for(input));
        if (options.trials > 0)
            out["probe"] = Json{{"trials", options.trials},
                                {"seed", options.seed},
                                {"all_members", probe_ok}};
        write_json(options, out);
    }
    if (options.oracle && !report.oracle_agreement) {
        std::cerr << "error: certificate and residuation oracle disagree\n";
        return kExitDisagreement;
    }
    if (!probe_ok) {
        std::cerr << "error: a random combination of the extremes left the polytope\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

int cmd_check(const Options& options, const std::string& input, const std::string& candidate_path) {
    const DissimilarityMap d = load_input(input);
    const Ultrametric candidate = load_candidate(candidate_path, d);
    const NearestResult nr = nearest_ultrametric(d);
    const Rat gap = linf_distance(candidate.map(), d);
    if (gap != nr.q)
        throw ValidationError("candidate is not nearest: distance " + rat_str(gap) +
                              ", optimum " + rat_str(nr.q));
    const TropicalSystem sys = build_exterior(d, nr.q);
    const ExtremalityCertificate cert = is_extreme(sys, homogenize(candidate));
    if (options.format == "dot") {
        write_output(options, hypergraph_dot(cert.hypergraph, sys.indexer, &cert.scc));
    } else {
        Json out = certificate_json(cert, sys.indexer);
        out["q"] = rat_str(nr.q);
        write_json(options, out);
    }
    return kExitOk;
}

int cmd_extend(const Options& options, const std::string& input, const std::string& candidate_path) {
    const DissimilarityMap d = load_input(input);
    const Ultrametric candidate = load_candidate(candidate_path, d);
    const ExtensionResult ext = extend_instance(d, candidate, parse_rational(options.epsilon));

    Json out = extension_json(ext);
    const NearestResult base = nearest_ultrametric(d);
    const NearestResult grown = nearest_ultrametric(ext.d_ext);
    const ExtremalityCertificate before =
        is_extreme(build_exterior(d, base.q), homogenize(candidate));
    const ExtremalityCertificate after =
        is_extreme(build_exterior(ext.d_ext, grown.q), homogenize(ext.delta_ext));
    out["verification"] = Json{{"q", rat_str(base.q)},
                               {"q_extended", rat_str(grown.q)},
                               {"extreme_before", before.extreme},
                               {"extreme_after", after.extreme},
                               {"extremality_preserved", before.extreme == after.extreme}};
    write_json(options, out);
    return before.extreme == after.extreme ? kExitOk : kExitDisagreement;
}

int cmd_counterexample(const Options& options, int n_target) {
    const Counterexample built = build_counterexample(n_target, parse_rational(options.epsilon));
    if (options.format == "csv") {
        write_output(options, matrix_csv(built.d.square()));
        return kExitOk;
    }
    if (options.format == "newick") {
        write_output(options, to_newick(tree_from_ultrametric(built.witness),
                                        NewickStyle::NodeWeights, built.d.labels()) +
                                  "\n");
        return kExitOk;
    }

    ExtremeReport report =
        enumerate_extremes(built.d, quantifier_of(options.quantifier), options.oracle);
    bool in_filtered = false;
    bool witness_extreme = false;
    for (int idx : report.extremes)
        if (report.candidates[static_cast<std::size_t>(idx)].state.metric == built.witness) {
            in_filtered = true;
            witness_extreme = true;
        }
    for (int idx : report.satisfying_nonextremes)
        if (report.candidates[static_cast<std::size_t>(idx)].state.metric == built.witness)
            in_filtered = true;

    Json out;
    out["n"] = built.d.size();
    out["d"] = matrix_json(built.d);
    out["delta_star"] = matrix_json(report.nearest.delta_star.map());
    out["witness"] = matrix_json(built.witness.map());
    out["witness_newick"] = to_newick(tree_from_ultrametric(built.witness),
                                      NewickStyle::NodeWeights, built.d.labels());
    out["witness_root_weight"] = rat_str(root_weight(built.witness));
    out["verification"] = Json{{"q", rat_str(report.nearest.q)},
                               {"witness_distance", rat_str(linf_distance(built.witness.map(), built.d))},
                               {"witness_in_filtered_set", in_filtered},
                               {"witness_extreme", witness_extreme},
                               {"extreme_count", report.extremes.size()},
                               {"satisfying_nonextreme_count", report.satisfying_nonextremes.size()}};
    write_json(options, out);
    if (!in_filtered || witness_extreme) {
        std::cerr << "error: witness verification failed\n";
        return kExitDisagreement;
    }
    if (options.oracle && !report.oracle_agreement) {
        std::cerr << "error: certificate and residuation oracle disagree\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical polytope of nearest ultrametrics: construction, certificates, "
                 "candidate generation and extreme-ray enumeration"};
    app.require_subcommand(1);
    app.fallthrough();

    Options options;
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "newick", "dot"}))
        ->capture_default_str();
    app.add_option("--output", options.output, "Write output to a file instead of stdout");
    app.add_option("--epsilon", options.epsilon, "Extension gap (positive rational)")
        ->capture_default_str();
    app.add_flag("--oracle,!--no-oracle", options.oracle,
                 "Cross-check certificates with the residuation oracle");
    app.add_option("--quantifier", options.quantifier,
                   "How mobility is counted across resolutions")
        ->check(CLI::IsMember({"all-resolutions", "per-resolution"}))
        ->capture_default_str();
    app.add_option("--seed", options.seed, "Random seed for probes")->capture_default_str();
    app.add_option("--trials", options.trials, "Probe trial count")->capture_default_str();

    std::string input, candidate;
    int n_target = 5;

    CLI::App* nearest = app.add_subcommand("nearest", "One nearest ultrametric, the optimal "
                                                      "distance and the subdominant map");
    nearest->add_option("input", input, "Matrix file or bundled dataset name")->required();

    CLI::App* cone = app.add_subcommand("cone", "Homogenized exterior description of the polytope");
    cone->add_option("input", input, "Matrix file or bundled dataset name")->required();

    CLI::App* candidates =
        app.add_subcommand("candidates", "Sliding closure and the filtered candidate set");
    candidates->add_option("input", input, "Matrix file or bundled dataset name")->required();

    CLI::App* extremes =
        app.add_subcommand("extremes", "Enumerate extreme rays with certificates");
    extremes->add_option("input", input, "Matrix file or bundled dataset name")->required();

    CLI::App* check = app.add_subcommand("check", "Certify one candidate ultrametric");
    check->add_option("input", input, "Matrix file or bundled dataset name")->required();
    check->add_option("candidate", candidate, "Candidate matrix file")->required();

    CLI::App* extend = app.add_subcommand("extend", "Extend an instance by one item, preserving "
                                                    "extremality status");
    extend->add_option("input", input, "Matrix file or bundled dataset name")->required();
    extend->add_option("candidate", candidate, "Candidate matrix file")->required();

    CLI::App* counterexample = app.add_subcommand(
        "counterexample", "Instance whose filtered candidate set exceeds its extreme set");
    counterexample->add_option("n", n_target, "Target item count (>= 4)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (nearest->parsed()) return cmd_nearest(options, input);
        if (cone->parsed()) return cmd_cone(options, input);
        if (candidates->parsed()) return cmd_candidates(options, input);
        if (extremes->parsed()) return cmd_extremes(options, input);
        if (check->parsed()) return cmd_check(options, input, candidate);
        if (extend->parsed()) return cmd_extend(options, input, candidate);
        if (counterexample->parsed()) return cmd_counterexample(options, n_target);
    } catch (const ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitDisagreement;
    }
    return kExitInputError;
}
