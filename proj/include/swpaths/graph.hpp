#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swp {

using NodeId = std::int32_t;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected, simple, positively weighted. Immutable once built; safe to
// share across threads.
class WeightedGraph {
public:
    struct Edge {
        NodeId u;
        NodeId v;
        double weight;
    };

    struct Neighbor {
        NodeId node;
        double weight;
    };

    WeightedGraph() = default;

    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return names_.empty(); }

    const std::string& name(NodeId v) const { return names_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<NodeId> find(std::string_view node_name) const {
        auto it = index_.find(std::string(node_name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::span<const Neighbor> neighbors(NodeId v) const {
        return adj_.at(static_cast<std::size_t>(v));
    }

    std::size_t degree(NodeId v) const { return adj_.at(static_cast<std::size_t>(v)).size(); }

    // Edges in insertion order, u < v normalized at build time.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_node(NodeId v) const {
        return v >= 0 && static_cast<std::size_t>(v) < names_.size();
    }

    bool has_edge(NodeId u, NodeId v) const;
    std::optional<double> edge_weight(NodeId u, NodeId v) const;

private:
    friend class GraphBuilder;

    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<Neighbor>> adj_;
    std::vector<Edge> edges_;
};

// Incremental construction with invariant checks; the only way to make a
// non-empty WeightedGraph.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(std::size_t n); // nodes named "0".."n-1"

    NodeId add_node(std::string name);
    NodeId node(const std::string& name); // add if missing
    void add_edge(NodeId u, NodeId v, double weight);
    std::size_t node_count() const { return g_.names_.size(); }

    WeightedGraph build();

private:
    WeightedGraph g_;
};

enum class WeightMode { weights, multiplicities };

// Edge-list text: one "u v value" triple per line, '#' starts a comment,
// fields split on whitespace or commas. In multiplicities mode the value
// must be a positive integer m and the stored weight is 1/m.
WeightedGraph parse_edge_list(std::istream& in, WeightMode mode);
WeightedGraph parse_edge_list(const std::string& text, WeightMode mode);
WeightedGraph load_edge_list(const std::string& path, WeightMode mode);

// Inverse of parse_edge_list in weights mode; weights use shortest
// round-trip formatting so re-parsing is bit-exact.
std::string serialize_edge_list(const WeightedGraph& g);

struct ComponentPartition {
    std::vector<int> component_of;    // per node; ids contiguous from 0
    std::vector<std::size_t> sizes;   // indexed by component id, descending
};

// Component ids ordered by (size descending, smallest contained node id).
ComponentPartition connected_components(const WeightedGraph& g);

// Induced subgraph of the largest component; ties go to the component
// containing the smallest node id. Node names are preserved.
WeightedGraph giant_component(const WeightedGraph& g);

// Number of distinct edge-weight values, exact on the stored doubles.
std::size_t distinct_weight_count(const WeightedGraph& g);

} // namespace swp
