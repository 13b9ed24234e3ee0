// Command-line front end: ingestion, distance analysis, fitting, null-model
// ensembles, channel-capacity bounds, the brute-force oracle, self tests,
// and benchmarks. All outputs are CSV/JSON files or stdout JSON; every
// command except `bench` is byte-deterministic given its inputs and seed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swpaths/analysis.hpp"
#include "swpaths/bottleneck.hpp"
#include "swpaths/classic_paths.hpp"
#include "swpaths/ensembles.hpp"
#include "swpaths/graph.hpp"
#include "swpaths/neuro.hpp"
#include "swpaths/oracle.hpp"
#include "swpaths/stats.hpp"
#include "swpaths/synthetic.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace swp;

namespace {

// ---------- shared plumbing ----------

std::size_t default_workers() {
    if (const char* env = std::getenv("SWPATHS_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

WeightMode parse_mode(const std::string& mode) {
    if (mode == "weights") return WeightMode::weights;
    if (mode == "multiplicities") return WeightMode::multiplicities;
    throw std::invalid_argument("unknown mode '" + mode + "' (expected weights|multiplicities)");
}

AllPairsStrategy parse_strategy(const std::string& s) {
    if (s == "parallel-sssp") return AllPairsStrategy::parallel_sssp;
    if (s == "labelset-fw") return AllPairsStrategy::labelset_fw;
    throw std::invalid_argument("unknown strategy '" + s +
                                "' (expected parallel-sssp|labelset-fw)");
}

WeightedGraph load_graph(const std::string& path, const std::string& mode) {
    try {
        return load_edge_list(path, parse_mode(mode));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

double json_safe(double v) { return v; } // nlohmann maps non-finite to null

struct ScopedGraph {
    WeightedGraph whole;
    WeightedGraph analyzed; // giant component unless --whole-graph
    bool whole_graph_scope = false;
    std::size_t components = 0;
    std::size_t unreachable_pairs = 0; // over the whole graph
};

ScopedGraph scope_graph(WeightedGraph g, bool whole_graph) {
    ScopedGraph s;
    auto parts = connected_components(g);
    s.components = parts.sizes.size();
    std::size_t n = g.node_count();
    std::size_t reachable = 0;
    for (std::size_t size : parts.sizes) reachable += size * (size - 1) / 2;
    s.unreachable_pairs = n * (n - 1) / 2 - reachable;
    s.whole_graph_scope = whole_graph;
    if (whole_graph) {
        s.analyzed = g;
    } else {
        s.analyzed = giant_component(g);
    }
    s.whole = std::move(g);
    return s;
}

ordered_json scope_json(const ScopedGraph& s, const std::string& input, const std::string& mode) {
    ordered_json j;
    j["input"] = input;
    j["mode"] = mode;
    j["whole_graph"] = {{"nodes", s.whole.node_count()},
                        {"edges", s.whole.edge_count()},
                        {"components", s.components},
                        {"unreachable_pairs", s.unreachable_pairs}};
    j["analysis_scope"] = s.whole_graph_scope ? "whole_graph" : "giant_component";
    j["analyzed"] = {{"nodes", s.analyzed.node_count()},
                     {"edges", s.analyzed.edge_count()},
                     {"distinct_weights", distinct_weight_count(s.analyzed)}};
    return j;
}

ordered_json notion_summary(const DistanceDistribution& d, double threshold) {
    ordered_json j;
    if (d.empty()) {
        j["pairs"] = 0;
        j["infinite_pairs"] = d.infinite_count();
        j["diameter"] = nullptr;
        j["effective_diameter"] = nullptr;
        j["mean"] = nullptr;
        return j;
    }
    j["pairs"] = d.size();
    j["infinite_pairs"] = d.infinite_count();
    j["diameter"] = json_safe(d.diameter());
    j["effective_diameter"] = json_safe(d.effective_diameter(threshold));
    j["mean"] = json_safe(d.mean());
    return j;
}

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string sample_tag(std::size_t idx) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04zu", idx);
    return buf;
}

// ---------- distances / survival ----------

struct AnalyzeOpts {
    std::string input;
    std::string mode = "weights";
    std::string out_dir = ".";
    std::string strategy = "parallel-sssp";
    double threshold = 0.95;
    std::size_t workers = default_workers();
    bool whole_graph = false;
    std::vector<std::string> path_pairs; // each "from,to"
};

void add_analyze_flags(CLI::App* cmd, AnalyzeOpts& o) {
    cmd->add_option("input", o.input, "edge-list file")->required();
    cmd->add_option("--mode", o.mode, "edge value interpretation: weights|multiplicities")
        ->default_val(o.mode);
    cmd->add_option("--out", o.out_dir, "output directory")->default_val(o.out_dir);
    cmd->add_option("--strategy", o.strategy, "all-pairs strategy: parallel-sssp|labelset-fw")
        ->default_val(o.strategy);
    cmd->add_option("--threshold", o.threshold, "effective-diameter quantile")
        ->default_val(o.threshold);
    cmd->add_option("--workers", o.workers, "concurrent per-source computations")
        ->default_val(o.workers);
    cmd->add_flag("--whole-graph", o.whole_graph,
                  "analyze the whole graph instead of the giant component");
}

ordered_json reconstructed_path_json(const WeightedGraph& g, const std::string& pair_spec) {
    auto comma = pair_spec.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == pair_spec.size())
        throw std::invalid_argument("--path expects FROM,TO; got '" + pair_spec + "'");
    std::string from = pair_spec.substr(0, comma);
    std::string to = pair_spec.substr(comma + 1);
    auto resolve = [&](const std::string& name) {
        auto id = g.find(name);
        if (!id)
            throw std::invalid_argument("node '" + name +
                                        "' not in the analysis scope (giant component unless "
                                        "--whole-graph)");
        return *id;
    };
    NodeId s = resolve(from);
    NodeId t = resolve(to);
    auto r = one_to_all_bottleneck(g, s);
    ordered_json j{{"from", from}, {"to", to}};
    if (!r.reachable(t)) {
        j["distance"] = nullptr;
        j["path"] = nullptr;
        return j;
    }
    auto path = reconstruct_path(r, t);
    std::string joined = g.name(path.front());
    double width = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        joined += "->" + g.name(path[i]);
        width = std::max(width, *g.edge_weight(path[i - 1], path[i]));
    }
    j["distance"] = r.distance[static_cast<std::size_t>(t)];
    j["hops"] = path.size() - 1;
    j["max_width"] = width;
    j["path"] = joined;
    return j;
}

int cmd_distances(const AnalyzeOpts& o) {
    if (!(o.threshold > 0.0 && o.threshold < 1.0))
        throw std::invalid_argument("threshold must lie in (0,1)");
    ScopedGraph s = scope_graph(load_graph(o.input, o.mode), o.whole_graph);
    fs::create_directories(o.out_dir);
    DistanceMatrices m = compute_all_distances(s.analyzed, parse_strategy(o.strategy), o.workers);

    auto write_matrix = [&](const char* name, const std::vector<double>& matrix) {
        std::ostringstream os;
        write_matrix_csv(os, s.analyzed, matrix);
        write_text_file(fs::path(o.out_dir) / name, os.str());
    };
    write_matrix("geodesic.csv", m.geodesic);
    write_matrix("weighted.csv", m.weighted);
    write_matrix("bottleneck.csv", m.bottleneck);
    write_matrix("minimax.csv", m.minimax);

    ordered_json j = scope_json(s, o.input, o.mode);
    j["threshold"] = o.threshold;
    if (!o.path_pairs.empty()) {
        ordered_json paths = ordered_json::array();
        for (const auto& spec : o.path_pairs)
            paths.push_back(reconstructed_path_json(s.analyzed, spec));
        j["paths"] = paths;
    }
    j["notions"] = {
        {"geodesic", notion_summary(upper_triangle_distribution(m.geodesic, m.n), o.threshold)},
        {"weighted", notion_summary(upper_triangle_distribution(m.weighted, m.n), o.threshold)},
        {"bottleneck",
         notion_summary(upper_triangle_distribution(m.bottleneck, m.n), o.threshold)},
        {"minimax_width",
         notion_summary(upper_triangle_distribution(m.minimax, m.n), o.threshold)},
    };
    write_text_file(fs::path(o.out_dir) / "summary.json", json_text(j));
    std::cout << json_text(j);
    return 0;
}

int cmd_survival(const AnalyzeOpts& o) {
    ScopedGraph s = scope_graph(load_graph(o.input, o.mode), o.whole_graph);
    if (s.analyzed.node_count() < 2)
        throw std::runtime_error("analysis scope has fewer than two nodes: no pairs to analyze");
    fs::create_directories(o.out_dir);
    DistanceMatrices m = compute_all_distances(s.analyzed, parse_strategy(o.strategy), o.workers);

    auto write_survival = [&](const char* name, const std::vector<double>& matrix) {
        DistanceDistribution d = upper_triangle_distribution(matrix, m.n);
        if (d.empty())
            throw std::runtime_error("no finite pairs for survival curve");
        std::ostringstream os;
        write_survival_csv(os, d.survival());
        write_text_file(fs::path(o.out_dir) / name, os.str());
    };
    write_survival("survival_geodesic.csv", m.geodesic);
    write_survival("survival_weighted.csv", m.weighted);
    write_survival("survival_bottleneck.csv", m.bottleneck);
    write_survival("survival_minimax.csv", m.minimax);

    ordered_json j = scope_json(s, o.input, o.mode);
    j["files"] = {"survival_geodesic.csv", "survival_weighted.csv", "survival_bottleneck.csv",
                  "survival_minimax.csv"};
    write_text_file(fs::path(o.out_dir) / "survival.json", json_text(j));
    std::cout << json_text(j);
    return 0;
}

// ---------- fit ----------

std::vector<double> parse_value_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                values.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(path + ": line " + std::to_string(lineno) +
                                 ": not a number: '" + tok + "'");
            }
        }
    }
    return values;
}

ordered_json fit_json(const GammaFit& f) {
    return ordered_json{{"shape", f.shape},         {"location", f.location},
                        {"scale", f.scale},         {"chi_square", f.chi_square},
                        {"p_value", f.p_value},     {"ks_statistic", f.ks_statistic},
                        {"bins", f.bins}};
}

struct FitOpts {
    AnalyzeOpts base;
    bool values = false;
    std::string notion = "all";
};

int cmd_fit(const FitOpts& o) {
    fs::create_directories(o.base.out_dir);
    ordered_json j;
    if (o.values) {
        auto sample = parse_value_file(o.base.input);
        j["input"] = o.base.input;
        j["kind"] = "sample";
        j["count"] = sample.size();
        j["fits"] = {{"sample", fit_json(fit_gamma(sample))}};
    } else {
        ScopedGraph s = scope_graph(load_graph(o.base.input, o.base.mode), o.base.whole_graph);
        DistanceMatrices m =
            compute_all_distances(s.analyzed, parse_strategy(o.base.strategy), o.base.workers);
        j = scope_json(s, o.base.input, o.base.mode);
        j["kind"] = "distances";
        ordered_json fits;
        auto fit_one = [&](const char* name, const std::vector<double>& matrix) {
            fits[name] = fit_json(fit_gamma(upper_triangle_distribution(matrix, m.n)));
        };
        if (o.notion == "all" || o.notion == "geodesic") fit_one("geodesic", m.geodesic);
        if (o.notion == "all" || o.notion == "weighted") fit_one("weighted", m.weighted);
        if (o.notion == "all" || o.notion == "bottleneck") fit_one("bottleneck", m.bottleneck);
        if (fits.empty())
            throw std::invalid_argument("unknown notion '" + o.notion +
                                        "' (expected all|geodesic|weighted|bottleneck)");
        j["fits"] = fits;
    }
    write_text_file(fs::path(o.base.out_dir) / "fit.json", json_text(j));
    std::cout << json_text(j);
    return 0;
}

// ---------- ensemble ----------

struct EnsembleOpts {
    std::string kind = "er";
    std::size_t nodes = 0;
    double prob = 0.0;
    std::string reference;
    std::string reference_mode = "weights";
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    double exponent = 2.76;
    int mult_max = 50;
    std::string histogram;
    std::string out_dir = ".";
    std::size_t analysis_cap = static_cast<std::size_t>(-1);
    std::size_t workers = default_workers();
    double threshold = 0.95;
};

int cmd_ensemble(const EnsembleOpts& o) {
    EnsembleSpec spec;
    if (o.kind == "er" || o.kind == "erdos-renyi")
        spec.kind = EnsembleKind::erdos_renyi;
    else if (o.kind == "degree-matched")
        spec.kind = EnsembleKind::degree_matched;
    else
        throw std::invalid_argument("unknown kind '" + o.kind + "' (expected er|degree-matched)");
    spec.n = o.nodes;
    spec.p = o.prob;
    spec.seed = o.seed;
    spec.multiplicity.exponent = o.exponent;
    spec.multiplicity.max = o.mult_max;
    if (!o.histogram.empty()) spec.multiplicity.histogram = parse_value_file(o.histogram);

    WeightedGraph reference;
    bool have_reference = !o.reference.empty();
    if (have_reference) reference = load_graph(o.reference, o.reference_mode);
    if (spec.kind == EnsembleKind::degree_matched) {
        if (!have_reference)
            throw std::invalid_argument("degree-matched ensemble requires --reference");
        spec.n = reference.node_count();
    } else {
        if (spec.n < 1) throw std::invalid_argument("ER ensemble requires --nodes");
    }

    EnsembleRun run = run_ensemble(spec, have_reference ? &reference : nullptr, o.samples,
                                   o.workers, o.analysis_cap, o.threshold);

    fs::create_directories(fs::path(o.out_dir) / "samples");

    ordered_json j;
    j["kind"] = o.kind == "erdos-renyi" ? "er" : o.kind;
    j["samples"] = o.samples;
    j["seed"] = o.seed;
    j["threshold"] = o.threshold;
    j["multiplicities"] =
        ordered_json{{"source", run.empirical_multiplicities ? "empirical_histogram" : "power_law"},
                     {"exponent", o.exponent},
                     {"max", o.mult_max}};
    if (spec.kind == EnsembleKind::erdos_renyi) {
        j["nodes"] = spec.n;
        j["prob"] = spec.p;
    } else {
        j["reference"] = o.reference;
        j["nodes"] = spec.n;
    }

    double mean_edges = 0.0;
    std::vector<double> eff_g, eff_w, eff_b;
    ordered_json per_sample = ordered_json::array();
    for (std::size_t i = 0; i < run.per_sample.size(); ++i) {
        const auto& st = run.per_sample[i];
        mean_edges += static_cast<double>(st.edges);
        ordered_json row{{"index", i},
                         {"nodes", st.nodes},
                         {"edges", st.edges},
                         {"giant_nodes", st.giant_nodes},
                         {"giant_edges", st.giant_edges},
                         {"analyzed", st.analyzed}};
        row["effective_diameter"] = {{"geodesic", json_safe(st.eff_diameter_geodesic)},
                                     {"weighted", json_safe(st.eff_diameter_weighted)},
                                     {"bottleneck", json_safe(st.eff_diameter_bottleneck)}};
        per_sample.push_back(row);
        if (st.analyzed) {
            eff_g.push_back(st.eff_diameter_geodesic);
            eff_w.push_back(st.eff_diameter_weighted);
            eff_b.push_back(st.eff_diameter_bottleneck);
        }
    }
    mean_edges /= static_cast<double>(run.per_sample.size());
    j["mean_edges"] = mean_edges;
    j["analyzed_samples"] = eff_b.size();
    j["median_effective_diameter"] = {{"geodesic", json_safe(median(eff_g))},
                                      {"weighted", json_safe(median(eff_w))},
                                      {"bottleneck", json_safe(median(eff_b))}};

    if (have_reference) {
        WeightedGraph ref_giant = giant_component(reference);
        double ref_eff = std::numeric_limits<double>::quiet_NaN();
        if (ref_giant.node_count() >= 2) {
            auto ap = all_pairs_bottleneck(ref_giant, AllPairsStrategy::parallel_sssp, o.workers);
            ref_eff = upper_triangle_distribution(ap.dist, ref_giant.node_count())
                          .effective_diameter(o.threshold);
        }
        double ens_median = median(eff_b);
        j["comparison"] = {
            {"reference_bottleneck_effective_diameter", json_safe(ref_eff)},
            {"ensemble_median_bottleneck_effective_diameter", json_safe(ens_median)},
            {"ensemble_below_reference",
             std::isfinite(ref_eff) && std::isfinite(ens_median) ? ordered_json(ens_median < ref_eff)
                                                                 : ordered_json(nullptr)}};
    }
    j["per_sample"] = per_sample;

    // Pooled and per-sample survival curves.
    auto write_pooled = [&](const char* name, const DistanceDistribution& d) {
        if (d.empty()) return;
        std::ostringstream os;
        write_survival_csv(os, d.survival());
        write_text_file(fs::path(o.out_dir) / name, os.str());
    };
    write_pooled("pooled_survival_geodesic.csv", run.pooled_geodesic);
    write_pooled("pooled_survival_weighted.csv", run.pooled_weighted);
    write_pooled("pooled_survival_bottleneck.csv", run.pooled_bottleneck);

    for (std::size_t i = 0; i < run.per_sample.size(); ++i) {
        if (!run.per_sample[i].analyzed) continue;
        WeightedGraph g = spec.kind == EnsembleKind::erdos_renyi
                              ? sample_er_weighted(spec, i)
                              : sample_degree_matched(reference, spec, i);
        WeightedGraph giant = giant_component(g);
        DistanceMatrices m = compute_all_distances(giant, AllPairsStrategy::parallel_sssp, 1);
        auto write_one = [&](const char* notion, const std::vector<double>& matrix) {
            DistanceDistribution d = upper_triangle_distribution(matrix, m.n);
            if (d.empty()) return;
            std::ostringstream os;
            write_survival_csv(os, d.survival());
            write_text_file(fs::path(o.out_dir) / "samples" /
                                ("sample_" + sample_tag(i) + "_" + notion + ".csv"),
                            os.str());
        };
        write_one("geodesic", m.geodesic);
        write_one("weighted", m.weighted);
        write_one("bottleneck", m.bottleneck);
    }

    write_text_file(fs::path(o.out_dir) / "run.json", json_text(j));
    std::cout << json_text(j);
    return 0;
}

// ---------- neuro ----------

struct NeuroOpts {
    ChannelModel model;
    double diameter = 7.0;
    double log_m = 10.0;
    double junctions = 1.0;
    double refractory_ms = 0.0;
    std::string out_dir;
};

int cmd_neuro(const NeuroOpts& o) {
    CapacityResult cap = gap_junction_capacity(o.model);
    double rate = o.model.bandwidth;
    if (o.refractory_ms > 0.0) rate = std::min(rate, 1000.0 / o.refractory_ms);
    double effective_bps = cap.bits_per_use * rate;
    double link_bps = effective_bps * o.junctions;
    BoundInput bound{o.diameter, o.log_m, link_bps};
    double seconds = consensus_time_bound(bound);

    ordered_json j;
    j["model"] = {{"resistance_ohm", o.model.resistance},
                  {"temperature_k", o.model.temperature},
                  {"bandwidth_hz", o.model.bandwidth},
                  {"v0_volts", o.model.v0},
                  {"v1_volts", o.model.v1},
                  {"boltzmann_j_per_k", o.model.boltzmann}};
    j["noise_rms"] = cap.noise_rms;
    j["snr"] = cap.snr;
    j["bits_per_use"] = cap.bits_per_use;
    j["bits_per_second"] = cap.bits_per_second;
    j["seconds_per_bit"] = json_safe(cap.seconds_per_bit);
    j["refractory_ms"] = o.refractory_ms;
    j["effective_symbol_rate_hz"] = rate;
    j["effective_bits_per_second"] = effective_bps;
    j["junction_count"] = o.junctions;
    j["link_bits_per_second"] = link_bps;
    j["bound"] = {{"effective_diameter", o.diameter},
                  {"log_m_bits", o.log_m},
                  {"capacity_bits_per_second", link_bps},
                  {"bound_seconds", seconds},
                  {"bound_milliseconds", seconds * 1000.0}};
    j["bound_seconds"] = seconds;
    if (!o.out_dir.empty()) {
        fs::create_directories(o.out_dir);
        write_text_file(fs::path(o.out_dir) / "neuro.json", json_text(j));
    }
    std::cout << json_text(j);
    return 0;
}

// ---------- oracle ----------

struct OracleOpts {
    std::string input;
    std::string mode = "weights";
    std::string source;
    std::string target;
    std::size_t max_nodes = kDefaultOracleNodeGuard;
    bool paths = false;
};

ordered_json oracle_pair_json(const WeightedGraph& g, const OracleResult& r, bool with_paths) {
    ordered_json j;
    j["source"] = g.name(r.s);
    j["target"] = g.name(r.t);
    j["geodesic"] = json_safe(r.geodesic);
    j["weighted"] = json_safe(r.weighted);
    j["bottleneck"] = json_safe(r.bottleneck);
    j["minimax_width"] = json_safe(r.minimax_width);
    j["simple_paths"] = r.simple_path_count;
    if (with_paths) {
        auto path_list = [&](const std::vector<std::vector<NodeId>>& paths) {
            ordered_json arr = ordered_json::array();
            for (const auto& p : paths) {
                ordered_json one = ordered_json::array();
                for (NodeId v : p) one.push_back(g.name(v));
                arr.push_back(one);
            }
            return arr;
        };
        j["optimal_paths"] = {{"geodesic", path_list(r.geodesic_paths)},
                              {"weighted", path_list(r.weighted_paths)},
                              {"bottleneck", path_list(r.bottleneck_paths)},
                              {"minimax_width", path_list(r.minimax_width_paths)}};
    }
    return j;
}

int cmd_oracle(const OracleOpts& o) {
    WeightedGraph g = load_graph(o.input, o.mode);
    auto resolve = [&](const std::string& name) {
        auto id = g.find(name);
        if (!id) throw std::invalid_argument("node '" + name + "' not in graph");
        return *id;
    };
    ordered_json j;
    j["input"] = o.input;
    j["nodes"] = g.node_count();
    if (!o.source.empty() && !o.target.empty()) {
        OracleResult r = oracle_distances(g, resolve(o.source), resolve(o.target), o.max_nodes);
        j["pair"] = oracle_pair_json(g, r, o.paths);
    } else if (o.source.empty() && o.target.empty()) {
        ordered_json pairs = ordered_json::array();
        const auto n = static_cast<NodeId>(g.node_count());
        for (NodeId s = 0; s < n; ++s)
            for (NodeId t = static_cast<NodeId>(s + 1); t < n; ++t)
                pairs.push_back(oracle_pair_json(g, oracle_distances(g, s, t, o.max_nodes), o.paths));
        j["pairs"] = pairs;
    } else {
        throw std::invalid_argument("--source and --target must be given together");
    }
    std::cout << json_text(j);
    return 0;
}

// ---------- self-test ----------

struct SelfTestOpts {
    std::string data_dir;
    bool quick = false;
};

struct Checker {
    int failures = 0;
    void check(bool ok, const std::string& name, const std::string& detail = "") {
        if (ok) {
            std::cout << "ok " << name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    }
    void skip(const std::string& name, const std::string& why) {
        std::cout << "skip " << name << ": " << why << "\n";
    }
};

bool matrices_match_oracle(const WeightedGraph& g, std::string& detail) {
    auto fw = all_pairs_bottleneck(g, AllPairsStrategy::labelset_fw, 1);
    auto ps = all_pairs_bottleneck(g, AllPairsStrategy::parallel_sssp, 1);
    const auto n = static_cast<NodeId>(g.node_count());
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = static_cast<NodeId>(s + 1); t < n; ++t) {
            OracleResult r = oracle_distances(g, s, t);
            double want = r.bottleneck;
            if (fw.at(s, t) != want || ps.at(s, t) != want) {
                detail = "pair (" + g.name(s) + "," + g.name(t) + ") oracle=" +
                         format_number(want) + " fw=" + format_number(fw.at(s, t)) +
                         " sssp=" + format_number(ps.at(s, t));
                return false;
            }
        }
    }
    return true;
}

int cmd_self_test(const SelfTestOpts& o) {
    Checker c;

    // Bundled micro-fixtures, exercised against the exhaustive oracle.
    const std::pair<const char*, const char*> fixtures[] = {
        {"triangle", "a b 5\na c 1\nc b 1\n"},
        {"substructure", "s x 3\ns a 1\na x 1\nx t 3\n"},
        {"star", "h a 1\nh b 1\nh c 1\nh d 1\n"},
        {"path", "a b 1\nb c 1\nc d 1\n"},
        {"k4", "a b 1\na c 0.5\na d 0.25\nb c 1\nb d 0.5\nc d 0.25\n"},
    };
    for (const auto& [name, text] : fixtures) {
        WeightedGraph g = parse_edge_list(std::string(text), WeightMode::weights);
        std::string detail;
        c.check(matrices_match_oracle(g, detail), std::string("oracle_equivalence_") + name,
                detail);
    }

    // Random graphs, both weight styles.
    const std::size_t graphs = o.quick ? 10 : 40;
    bool all_match = true, props_hold = true;
    std::string detail;
    CounterRng rng(20240817, 0);
    for (std::size_t i = 0; i < graphs && (all_match || props_hold); ++i) {
        std::size_t n = 3 + rng.next_below(6); // 3..8 nodes
        WeightStyle style = i % 2 == 0 ? WeightStyle::discrete : WeightStyle::continuous;
        WeightedGraph g = random_connected_graph(n, rng.next_below(n + 3), style, rng);
        if (!matrices_match_oracle(g, detail)) all_match = false;
        DistanceMatrices m = compute_all_distances(g, AllPairsStrategy::parallel_sssp, 1);
        bool all_le_one = true;
        for (const auto& e : g.edges()) all_le_one = all_le_one && e.weight <= 1.0;
        for (std::size_t k = 0; k < m.n * m.n; ++k) {
            if (m.weighted[k] > m.bottleneck[k] + 1e-12) props_hold = false;
            if (all_le_one && m.bottleneck[k] > m.geodesic[k] + 1e-12) props_hold = false;
        }
    }
    c.check(all_match, "oracle_equivalence_random", detail);
    c.check(props_hold, "distance_orderings_random");

    // Quantile definition.
    {
        std::vector<double> v;
        for (int i = 1; i <= 20; ++i) v.push_back(i);
        DistanceDistribution d(std::move(v));
        c.check(d.quantile(0.95) == 19.0, "quantile_definition",
                "Q(0.95) of 1..20 = " + format_number(d.quantile(0.95)));
    }

    // Golden channel numbers.
    {
        ChannelModel model;
        CapacityResult cap = gap_junction_capacity(model);
        c.check(std::fabs(cap.noise_rms - 3.74e-4) / 3.74e-4 < 0.005, "thermal_noise",
                format_number(cap.noise_rms));
        c.check(std::fabs(cap.snr - 2.2e3) / 2.2e3 < 0.01, "snr", format_number(cap.snr));
        c.check(cap.bits_per_use >= 0.999, "bits_per_use", format_number(cap.bits_per_use));
        c.check(std::fabs(cap.bits_per_second - 1700.0) / 1700.0 < 0.002, "capacity",
                format_number(cap.bits_per_second));
        double b1 = consensus_time_bound({7, 10, 1700});
        double b2 = consensus_time_bound({2, 10, 1700});
        double b3 = consensus_time_bound({7, 10, 1000});
        c.check(std::fabs(b1 - 0.0412) < 0.001 && std::fabs(b2 - 0.0118) < 0.0005 &&
                    std::fabs(b3 - 0.070) < 0.0015,
                "consensus_bounds",
                format_number(b1) + " " + format_number(b2) + " " + format_number(b3));
    }

    // Hub-and-spoke verification.
    {
        bool ok = true;
        for (int n = 3; n <= (o.quick ? 6 : 7); ++n) {
            HubSpokeReport r = verify_hub_and_spoke(n);
            ok = ok && r.min_diameter == 2 && r.all_minimizers_star;
            if (n >= 4) ok = ok && r.minimizer_count == static_cast<std::size_t>(n);
        }
        c.check(ok, "hub_and_spoke");
    }

    if (!o.data_dir.empty()) {
        fs::path dir(o.data_dir);
        fs::path connectome = dir / "celegans.edges";
        if (fs::exists(connectome)) {
            WeightedGraph g = load_graph(connectome.string(), "multiplicities");
            WeightedGraph giant = giant_component(g);
            c.check(giant.node_count() == 248, "data_giant_component",
                    std::to_string(giant.node_count()) + " nodes");
            DistanceMatrices m = compute_all_distances(giant, AllPairsStrategy::parallel_sssp,
                                                       default_workers());
            auto geo = upper_triangle_distribution(m.geodesic, m.n);
            c.check(std::fabs(geo.mean() - 4.52) <= 0.02, "data_mean_geodesic",
                    format_number(geo.mean()));
            auto btl = upper_triangle_distribution(m.bottleneck, m.n);
            double de = btl.effective_diameter(0.95);
            c.check(de >= 6.0 && de <= 7.0, "data_bottleneck_effective_diameter",
                    format_number(de));
        } else {
            c.skip("data_checks", "no celegans.edges under " + dir.string());
        }
    }

    std::cout << (c.failures == 0 ? "self-test passed\n" : "self-test FAILED\n");
    return c.failures == 0 ? 0 : 1;
}

// ---------- bench ----------

struct BenchOpts {
    std::vector<std::size_t> sizes{50, 100, 200};
    std::uint64_t seed = 1;
    std::size_t workers = default_workers();
};

int cmd_bench(const BenchOpts& o) {
    auto rows = complexity_probe(o.sizes, o.seed, o.workers);
    std::cout << "nodes,edges,distinct_weights,sec_one_to_all,sec_labelset_fw,sec_parallel_sssp,"
                 "max_frontier\n";
    for (const auto& r : rows) {
        std::cout << r.nodes << ',' << r.edges << ',' << r.distinct_weights << ','
                  << format_number(r.seconds_one_to_all) << ','
                  << format_number(r.seconds_labelset_fw) << ','
                  << format_number(r.seconds_parallel_sssp) << ',' << r.max_frontier << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"short-and-wide path analytics"};
    app.require_subcommand(0, 1);

    AnalyzeOpts dist_opts;
    auto* dist_cmd = app.add_subcommand("distances",
                                        "all-pairs distance matrices and summary statistics");
    add_analyze_flags(dist_cmd, dist_opts);
    dist_cmd->add_option("--path", dist_opts.path_pairs,
                         "FROM,TO pair: also report one optimal short-and-wide path (repeatable)");

    AnalyzeOpts surv_opts;
    auto* surv_cmd = app.add_subcommand("survival", "survival curves for each distance notion");
    add_analyze_flags(surv_cmd, surv_opts);

    FitOpts fit_opts;
    auto* fit_cmd = app.add_subcommand("fit", "three-parameter gamma fits with goodness of fit");
    add_analyze_flags(fit_cmd, fit_opts.base);
    fit_cmd->add_flag("--values", fit_opts.values,
                      "treat input as a plain list of numbers, not an edge list");
    fit_cmd->add_option("--notion", fit_opts.notion,
                        "which distance notion to fit: all|geodesic|weighted|bottleneck")
        ->default_val(fit_opts.notion);

    EnsembleOpts ens_opts;
    auto* ens_cmd = app.add_subcommand("ensemble", "random null-model ensembles");
    ens_cmd->add_option("--kind", ens_opts.kind, "er|degree-matched")->default_val(ens_opts.kind);
    ens_cmd->add_option("--nodes", ens_opts.nodes, "node count (er)");
    ens_cmd->add_option("--prob", ens_opts.prob, "connection probability (er)");
    ens_cmd->add_option("--reference", ens_opts.reference,
                        "reference edge list (required for degree-matched; enables comparison)");
    ens_cmd->add_option("--reference-mode", ens_opts.reference_mode, "weights|multiplicities")
        ->default_val(ens_opts.reference_mode);
    ens_cmd->add_option("--samples", ens_opts.samples, "number of samples")
        ->default_val(ens_opts.samples);
    ens_cmd->add_option("--seed", ens_opts.seed, "random seed")->default_val(ens_opts.seed);
    ens_cmd->add_option("--exponent", ens_opts.exponent, "multiplicity power-law exponent")
        ->default_val(ens_opts.exponent);
    ens_cmd->add_option("--mult-max", ens_opts.mult_max, "multiplicity cutoff")
        ->default_val(ens_opts.mult_max);
    ens_cmd->add_option("--histogram", ens_opts.histogram,
                        "empirical multiplicity histogram file (mass for m=1,2,...)");
    ens_cmd->add_option("--out", ens_opts.out_dir, "output directory")
        ->default_val(ens_opts.out_dir);
    ens_cmd->add_option("--analysis-cap", ens_opts.analysis_cap,
                        "compute distance distributions for at most this many samples");
    ens_cmd->add_option("--workers", ens_opts.workers, "concurrent samples")
        ->default_val(ens_opts.workers);
    ens_cmd->add_option("--threshold", ens_opts.threshold, "effective-diameter quantile")
        ->default_val(ens_opts.threshold);

    NeuroOpts neuro_opts;
    auto* neuro_cmd = app.add_subcommand("neuro", "channel capacity and consensus-time bound");
    neuro_cmd->add_option("--resistance", neuro_opts.model.resistance, "junction resistance, ohm")
        ->default_val(neuro_opts.model.resistance);
    neuro_cmd->add_option("--temperature", neuro_opts.model.temperature, "temperature, kelvin")
        ->default_val(neuro_opts.model.temperature);
    neuro_cmd->add_option("--bandwidth", neuro_opts.model.bandwidth, "bandwidth, hertz")
        ->default_val(neuro_opts.model.bandwidth);
    neuro_cmd->add_option("--v0", neuro_opts.model.v0, "lower level, volts")
        ->default_val(neuro_opts.model.v0);
    neuro_cmd->add_option("--v1", neuro_opts.model.v1, "upper level, volts")
        ->default_val(neuro_opts.model.v1);
    neuro_cmd->add_option("--boltzmann", neuro_opts.model.boltzmann, "boltzmann constant")
        ->default_val(neuro_opts.model.boltzmann);
    neuro_cmd->add_option("--diameter", neuro_opts.diameter, "effective diameter, hops")
        ->default_val(neuro_opts.diameter);
    neuro_cmd->add_option("--log-m", neuro_opts.log_m, "message volume, bits")
        ->default_val(neuro_opts.log_m);
    neuro_cmd->add_option("--junctions", neuro_opts.junctions,
                          "parallel junction count (mean allowed)")
        ->default_val(neuro_opts.junctions);
    neuro_cmd->add_option("--refractory-ms", neuro_opts.refractory_ms,
                          "minimum inter-transition time, milliseconds (caps symbol rate)")
        ->default_val(neuro_opts.refractory_ms);
    neuro_cmd->add_option("--out", neuro_opts.out_dir, "also write neuro.json here");

    OracleOpts oracle_opts;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive simple-path ground truth");
    oracle_cmd->add_option("input", oracle_opts.input, "edge-list file")->required();
    oracle_cmd->add_option("--mode", oracle_opts.mode, "weights|multiplicities")
        ->default_val(oracle_opts.mode);
    oracle_cmd->add_option("--source", oracle_opts.source, "source node name");
    oracle_cmd->add_option("--target", oracle_opts.target, "target node name");
    oracle_cmd->add_option("--max-nodes", oracle_opts.max_nodes, "enumeration size guard")
        ->default_val(oracle_opts.max_nodes);
    oracle_cmd->add_flag("--paths", oracle_opts.paths, "include optimal path lists");

    SelfTestOpts self_opts;
    auto* self_cmd = app.add_subcommand("self-test", "built-in correctness checks");
    self_cmd->add_option("--with-data", self_opts.data_dir,
                         "directory with optional reference datasets");
    self_cmd->add_flag("--quick", self_opts.quick, "smaller random suite");
    bool self_test_flag = false;
    app.add_flag("--self-test", self_test_flag, "run the built-in correctness checks");

    BenchOpts bench_opts;
    auto* bench_cmd = app.add_subcommand("bench", "timing probe (not deterministic)");
    bench_cmd->add_option("--sizes", bench_opts.sizes, "graph sizes")->delimiter(',');
    bench_cmd->add_option("--seed", bench_opts.seed, "random seed")->default_val(bench_opts.seed);
    bench_cmd->add_option("--workers", bench_opts.workers, "worker threads")
        ->default_val(bench_opts.workers);

    try {
        app.parse(argc, argv);
        if (dist_cmd->parsed()) return cmd_distances(dist_opts);
        if (surv_cmd->parsed()) return cmd_survival(surv_opts);
        if (fit_cmd->parsed()) return cmd_fit(fit_opts);
        if (ens_cmd->parsed()) return cmd_ensemble(ens_opts);
        if (neuro_cmd->parsed()) return cmd_neuro(neuro_opts);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_opts);
        if (self_cmd->parsed()) return cmd_self_test(self_opts);
        if (bench_cmd->parsed()) return cmd_bench(bench_opts);
        if (self_test_flag) return cmd_self_test(self_opts);
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        ordered_json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    } catch (const ParseError& e) {
        ordered_json err{{"error", {{"type", "parse"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const FitError& e) {
        ordered_json err{{"error", {{"type", "fit"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        ordered_json err{{"error", {{"type", "invalid_argument"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json err{{"error", {{"type", "runtime"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
