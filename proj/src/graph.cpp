#include "swpaths/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace swp {

bool WeightedGraph::has_edge(NodeId u, NodeId v) const {
    if (!has_node(u) || !has_node(v)) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    const NodeId target = a.size() <= b.size() ? v : u;
    for (const auto& nb : shorter) {
        if (nb.node == target) return true;
    }
    return false;
}

std::optional<double> WeightedGraph::edge_weight(NodeId u, NodeId v) const {
    if (!has_node(u) || !has_node(v)) return std::nullopt;
    for (const auto& nb : adj_[static_cast<std::size_t>(u)]) {
        if (nb.node == v) return nb.weight;
    }
    return std::nullopt;
}

GraphBuilder::GraphBuilder(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        add_node(std::to_string(i));
    }
}

NodeId GraphBuilder::add_node(std::string name) {
    if (g_.index_.count(name)) {
        throw std::invalid_argument("duplicate node name: " + name);
    }
    const NodeId id = static_cast<NodeId>(g_.names_.size());
    g_.index_.emplace(name, id);
    g_.names_.push_back(std::move(name));
    g_.adj_.emplace_back();
    return id;
}

NodeId GraphBuilder::node(const std::string& name) {
    auto it = g_.index_.find(name);
    if (it != g_.index_.end()) return it->second;
    const NodeId id = static_cast<NodeId>(g_.names_.size());
    g_.index_.emplace(name, id);
    g_.names_.push_back(name);
    g_.adj_.emplace_back();
    return id;
}

void GraphBuilder::add_edge(NodeId u, NodeId v, double weight) {
    if (!g_.has_node(u) || !g_.has_node(v)) {
        throw std::invalid_argument("add_edge: unknown node id");
    }
    if (u == v) {
        throw std::invalid_argument("self-loop on node " + g_.names_[static_cast<std::size_t>(u)]);
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw std::invalid_argument("edge weight must be positive and finite");
    }
    if (g_.has_edge(u, v)) {
        throw std::invalid_argument("duplicate edge " + g_.names_[static_cast<std::size_t>(u)] +
                                    " -- " + g_.names_[static_cast<std::size_t>(v)]);
    }
    if (u > v) std::swap(u, v);
    g_.adj_[static_cast<std::size_t>(u)].push_back({v, weight});
    g_.adj_[static_cast<std::size_t>(v)].push_back({u, weight});
    g_.edges_.push_back({u, v, weight});
}

WeightedGraph GraphBuilder::build() {
    return std::move(g_);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',')) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ',') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_value(std::string_view field, WeightMode mode, std::size_t line_no) {
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (mode == WeightMode::multiplicities) {
        long long m = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), m);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            throw ParseError(where + "multiplicity must be a positive integer, got '" + std::string(field) + "'");
        }
        if (m <= 0) {
            throw ParseError(where + "multiplicity must be positive, got " + std::to_string(m));
        }
        return 1.0 / static_cast<double>(m);
    }
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(where + "malformed weight '" + std::string(field) + "'");
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw ParseError(where + "weight must be positive and finite, got '" + std::string(field) + "'");
    }
    return w;
}

} // namespace

WeightedGraph parse_edge_list(std::istream& in, WeightMode mode) {
    GraphBuilder b;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        const auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 3) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v value', got " +
                             std::to_string(fields.size()) + " fields");
        }
        const NodeId u = b.node(std::string(fields[0]));
        const NodeId v = b.node(std::string(fields[1]));
        const double w = parse_value(fields[2], mode, line_no);
        try {
            b.add_edge(u, v, w);
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return b.build();
}

WeightedGraph parse_edge_list(const std::string& text, WeightMode mode) {
    std::istringstream in(text);
    return parse_edge_list(in, mode);
}

WeightedGraph load_edge_list(const std::string& path, WeightMode mode) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open edge list file: " + path);
    }
    return parse_edge_list(in, mode);
}

std::string serialize_edge_list(const WeightedGraph& g) {
    std::string out;
    char buf[64];
    for (const auto& e : g.edges()) {
        out += g.name(e.u);
        out += ' ';
        out += g.name(e.v);
        out += ' ';
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.weight);
        out.append(buf, ptr);
        out += '\n';
    }
    return out;
}

ComponentPartition connected_components(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<int> comp(n, -1);
    std::vector<NodeId> stack;
    std::vector<std::size_t> sizes;
    int next_id = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = next_id++;
        std::size_t size = 0;
        stack.push_back(static_cast<NodeId>(s));
        comp[s] = id;
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& nb : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(nb.node)] < 0) {
                    comp[static_cast<std::size_t>(nb.node)] = id;
                    stack.push_back(nb.node);
                }
            }
        }
        sizes.push_back(size);
    }
    // Relabel so ids run in (size desc, discovery order asc); discovery
    // order equals smallest-contained-node order.
    std::vector<int> order(sizes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)]; });
    std::vector<int> relabel(sizes.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        relabel[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank);
    }
    ComponentPartition part;
    part.component_of.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        part.component_of[v] = relabel[static_cast<std::size_t>(comp[v])];
    }
    part.sizes.resize(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        part.sizes[relabel[i]] = sizes[i];
    }
    return part;
}

WeightedGraph giant_component(const WeightedGraph& g) {
    if (g.empty()) {
        throw std::invalid_argument("giant_component: empty graph");
    }
    const ComponentPartition part = connected_components(g);
    GraphBuilder b;
    std::vector<NodeId> remap(g.node_count(), -1);
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        if (part.component_of[v] == 0) {
            remap[v] = b.add_node(g.name(static_cast<NodeId>(v)));
        }
    }
    for (const auto& e : g.edges()) {
        if (part.component_of[static_cast<std::size_t>(e.u)] == 0) {
            b.add_edge(remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)], e.weight);
        }
    }
    return b.build();
}

std::size_t distinct_weight_count(const WeightedGraph& g) {
    std::vector<double> ws;
    ws.reserve(g.edge_count());
    for (const auto& e : g.edges()) ws.push_back(e.weight);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws.size();
}

} // namespace swp
