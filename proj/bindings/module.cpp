#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "swpaths/analysis.hpp"
#include "swpaths/bottleneck.hpp"
#include "swpaths/classic_paths.hpp"
#include "swpaths/ensembles.hpp"
#include "swpaths/graph.hpp"
#include "swpaths/neuro.hpp"
#include "swpaths/oracle.hpp"
#include "swpaths/stats.hpp"
#include "swpaths/synthetic.hpp"

namespace py = pybind11;
using namespace swp;

namespace {

WeightMode mode_from(const std::string& mode) {
    if (mode == "weights") return WeightMode::weights;
    if (mode == "multiplicities") return WeightMode::multiplicities;
    throw std::invalid_argument("mode must be 'weights' or 'multiplicities'");
}

AllPairsStrategy strategy_from(const std::string& s) {
    if (s == "parallel-sssp") return AllPairsStrategy::parallel_sssp;
    if (s == "labelset-fw") return AllPairsStrategy::labelset_fw;
    throw std::invalid_argument("strategy must be 'parallel-sssp' or 'labelset-fw'");
}

NodeId resolve(const WeightedGraph& g, const std::string& name) {
    auto id = g.find(name);
    if (!id) throw std::invalid_argument("node '" + name + "' not in graph");
    return *id;
}

py::list matrix_to_list(const std::vector<double>& m, std::size_t n) {
    py::list rows;
    for (std::size_t i = 0; i < n; ++i) {
        py::list row;
        for (std::size_t j = 0; j < n; ++j) row.append(m[i * n + j]);
        rows.append(row);
    }
    return rows;
}

py::dict fit_to_dict(const GammaFit& f) {
    py::dict d;
    d["shape"] = f.shape;
    d["location"] = f.location;
    d["scale"] = f.scale;
    d["chi_square"] = f.chi_square;
    d["p_value"] = f.p_value;
    d["ks_statistic"] = f.ks_statistic;
    d["bins"] = f.bins;
    return d;
}

py::list names_of(const WeightedGraph& g, const std::vector<NodeId>& path) {
    py::list out;
    for (NodeId v : path) out.append(g.name(v));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Short-and-wide path analytics: bottleneck distances, distance "
              "distributions, null models, and information bounds";

    py::class_<WeightedGraph>(m, "Graph")
        .def_property_readonly("node_count", &WeightedGraph::node_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def_property_readonly("names", [](const WeightedGraph& g) { return g.names(); })
        .def("degree",
             [](const WeightedGraph& g, const std::string& name) {
                 return g.degree(resolve(g, name));
             })
        .def("has_edge",
             [](const WeightedGraph& g, const std::string& u, const std::string& v) {
                 return g.has_edge(resolve(g, u), resolve(g, v));
             })
        .def("edges",
             [](const WeightedGraph& g) {
                 py::list out;
                 for (const auto& e : g.edges())
                     out.append(py::make_tuple(g.name(e.u), g.name(e.v), e.weight));
                 return out;
             })
        .def("giant_component", [](const WeightedGraph& g) { return giant_component(g); })
        .def("distinct_weight_count",
             [](const WeightedGraph& g) { return distinct_weight_count(g); })
        .def("__repr__", [](const WeightedGraph& g) {
            std::ostringstream os;
            os << "Graph(nodes=" << g.node_count() << ", edges=" << g.edge_count() << ")";
            return os.str();
        });

    m.def(
        "parse_edge_list",
        [](const std::string& text, const std::string& mode) {
            return parse_edge_list(text, mode_from(mode));
        },
        py::arg("text"), py::arg("mode") = "weights");
    m.def(
        "load_edge_list",
        [](const std::string& path, const std::string& mode) {
            return load_edge_list(path, mode_from(mode));
        },
        py::arg("path"), py::arg("mode") = "weights");
    m.def("serialize_edge_list", &serialize_edge_list, py::arg("graph"));

    m.def(
        "bottleneck_distances",
        [](const WeightedGraph& g, const std::string& source) {
            auto r = one_to_all_bottleneck(g, resolve(g, source));
            py::dict out;
            for (std::size_t v = 0; v < g.node_count(); ++v)
                out[py::str(g.name(static_cast<NodeId>(v)))] = r.distance[v];
            return out;
        },
        py::arg("graph"), py::arg("source"),
        "Bottleneck distance from one source to every node (inf if unreachable).");

    m.def(
        "bottleneck_labels",
        [](const WeightedGraph& g, const std::string& source) {
            auto r = one_to_all_bottleneck(g, resolve(g, source));
            py::dict out;
            for (std::size_t v = 0; v < g.node_count(); ++v) {
                py::list labels;
                for (const auto& l : r.frontiers[v].labels)
                    labels.append(py::make_tuple(l.hops, l.max_width));
                out[py::str(g.name(static_cast<NodeId>(v)))] = labels;
            }
            return out;
        },
        py::arg("graph"), py::arg("source"),
        "Pareto frontier of (hops, max_width) labels at every node.");

    m.def(
        "bottleneck_path",
        [](const WeightedGraph& g, const std::string& source, const std::string& target) {
            auto r = one_to_all_bottleneck(g, resolve(g, source));
            NodeId t = resolve(g, target);
            if (!r.reachable(t)) throw std::runtime_error("target unreachable from source");
            auto path = reconstruct_path(r, t);
            return py::make_tuple(r.distance[static_cast<std::size_t>(t)], names_of(g, path));
        },
        py::arg("graph"), py::arg("source"), py::arg("target"),
        "(distance, node names) of one optimal short-and-wide path.");

    m.def(
        "distance_matrices",
        [](const WeightedGraph& g, const std::string& strategy, std::size_t workers) {
            auto m0 = compute_all_distances(g, strategy_from(strategy), workers);
            py::dict out;
            out["names"] = g.names();
            out["geodesic"] = matrix_to_list(m0.geodesic, m0.n);
            out["weighted"] = matrix_to_list(m0.weighted, m0.n);
            out["bottleneck"] = matrix_to_list(m0.bottleneck, m0.n);
            out["minimax_width"] = matrix_to_list(m0.minimax, m0.n);
            return out;
        },
        py::arg("graph"), py::arg("strategy") = "parallel-sssp", py::arg("workers") = 1,
        "All-pairs matrices for the four distance notions.");

    m.def(
        "quantile",
        [](const std::vector<double>& values, double p) {
            return DistanceDistribution(values).quantile(p);
        },
        py::arg("values"), py::arg("p"));
    m.def(
        "effective_diameter",
        [](const std::vector<double>& values, double threshold) {
            return DistanceDistribution(values).effective_diameter(threshold);
        },
        py::arg("values"), py::arg("threshold") = 0.95);
    m.def(
        "survival",
        [](const std::vector<double>& values) {
            py::list out;
            for (const auto& pt : DistanceDistribution(values).survival().points)
                out.append(py::make_tuple(pt.value, pt.fraction));
            return out;
        },
        py::arg("values"));
    m.def(
        "fit_gamma",
        [](const std::vector<double>& values) { return fit_to_dict(fit_gamma(values)); },
        py::arg("values"));

    m.def(
        "oracle_distances",
        [](const WeightedGraph& g, const std::string& source, const std::string& target,
           std::size_t max_nodes) {
            auto r = oracle_distances(g, resolve(g, source), resolve(g, target), max_nodes);
            py::dict out;
            out["geodesic"] = r.geodesic;
            out["weighted"] = r.weighted;
            out["bottleneck"] = r.bottleneck;
            out["minimax_width"] = r.minimax_width;
            out["simple_paths"] = r.simple_path_count;
            py::list best;
            for (const auto& p : r.bottleneck_paths) best.append(names_of(g, p));
            out["bottleneck_paths"] = best;
            return out;
        },
        py::arg("graph"), py::arg("source"), py::arg("target"),
        py::arg("max_nodes") = kDefaultOracleNodeGuard);

    m.def(
        "sample_er",
        [](std::size_t n, double p, std::uint64_t seed, std::uint64_t index, double exponent,
           int mult_max) {
            EnsembleSpec spec;
            spec.kind = EnsembleKind::erdos_renyi;
            spec.n = n;
            spec.p = p;
            spec.seed = seed;
            spec.multiplicity.exponent = exponent;
            spec.multiplicity.max = mult_max;
            return sample_er_weighted(spec, index);
        },
        py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("index") = 0,
        py::arg("exponent") = 2.76, py::arg("mult_max") = 50,
        "Weighted Erdos-Renyi draw (weights 1/m, power-law multiplicities).");

    m.def(
        "sample_degree_matched",
        [](const WeightedGraph& reference, std::uint64_t seed, std::uint64_t index,
           double exponent, int mult_max) {
            EnsembleSpec spec;
            spec.kind = EnsembleKind::degree_matched;
            spec.seed = seed;
            spec.multiplicity.exponent = exponent;
            spec.multiplicity.max = mult_max;
            return sample_degree_matched(reference, spec, index);
        },
        py::arg("reference"), py::arg("seed") = 0, py::arg("index") = 0,
        py::arg("exponent") = 2.76, py::arg("mult_max") = 50,
        "Degree-preserving rewired draw with resampled multiplicities.");

    m.def(
        "thermal_noise_rms",
        [](double resistance, double temperature, double bandwidth) {
            ChannelModel model;
            model.resistance = resistance;
            model.temperature = temperature;
            model.bandwidth = bandwidth;
            return thermal_noise_rms(model);
        },
        py::arg("resistance") = 5e9, py::arg("temperature") = 298.0,
        py::arg("bandwidth") = 1700.0);

    m.def(
        "gap_junction_capacity",
        [](double resistance, double temperature, double bandwidth, double v0, double v1) {
            ChannelModel model;
            model.resistance = resistance;
            model.temperature = temperature;
            model.bandwidth = bandwidth;
            model.v0 = v0;
            model.v1 = v1;
            CapacityResult r = gap_junction_capacity(model);
            py::dict out;
            out["noise_rms"] = r.noise_rms;
            out["snr"] = r.snr;
            out["bits_per_use"] = r.bits_per_use;
            out["bits_per_second"] = r.bits_per_second;
            out["seconds_per_bit"] = r.seconds_per_bit;
            return out;
        },
        py::arg("resistance") = 5e9, py::arg("temperature") = 298.0, py::arg("bandwidth") = 1700.0,
        py::arg("v0") = -70e-3, py::arg("v1") = -35e-3);

    m.def(
        "consensus_time_bound",
        [](double effective_diameter, double log_m_bits, double capacity_bits_per_second) {
            return consensus_time_bound({effective_diameter, log_m_bits, capacity_bits_per_second});
        },
        py::arg("effective_diameter"), py::arg("log_m_bits"),
        py::arg("capacity_bits_per_second"));

    m.def("mixture_entropy_bits", &mixture_entropy_bits, py::arg("mu"));

    m.def(
        "verify_hub_and_spoke",
        [](int n) {
            HubSpokeReport r = verify_hub_and_spoke(n);
            py::dict out;
            out["n"] = r.n;
            out["tree_count"] = r.tree_count;
            out["min_diameter"] = r.min_diameter;
            out["minimizer_count"] = r.minimizer_count;
            out["star_count"] = r.star_count;
            out["all_minimizers_star"] = r.all_minimizers_star;
            return out;
        },
        py::arg("n"));
}
