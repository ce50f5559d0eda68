#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace reforcite {

/// Nodes are identified by arrival order: the node added at step t has id t-1.
using NodeId = std::uint32_t;

/// Spacing of lifetime snapshots, in number of nodes.
struct SnapshotSchedule {
    std::size_t step_size = 5000;
};

/// Append-only directed graph grown one node per time step.
///
/// A node's out-neighbourhood is frozen at birth (a paper's reference list
/// never changes after publication); its in-neighbourhood grows as later
/// nodes cite it. Growth models only create edges pointing backward in
/// arrival order, so grown graphs are DAGs. Graphs built from real edge
/// lists (via from_edges) may contain forward edges; callers that care
/// count them at load time.
///
/// A graph under construction has a single writer. Once complete it is
/// immutable and safe to read from any number of threads.
class EvolvingDigraph {
public:
    EvolvingDigraph() = default;

    /// Appends a node citing `targets` and returns its id (== old node
    /// count). Targets must be existing nodes without repetition.
    NodeId add_node(std::span<const NodeId> targets);
    NodeId add_node(std::initializer_list<NodeId> targets) {
        return add_node(std::span<const NodeId>(targets.begin(), targets.size()));
    }

    /// Builds a graph with `n` nodes from a fixed edge list. Edges may point
    /// forward in arrival order; self-loops and duplicate edges are rejected
    /// (the ingest layer filters and counts them first).
    static EvolvingDigraph from_edges(std::size_t n,
                                      std::span<const std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }

    std::span<const NodeId> out_neighbors(NodeId u) const {
        check_node(u);
        return out_[u];
    }
    std::span<const NodeId> in_neighbors(NodeId u) const {
        check_node(u);
        return in_[u];
    }

    std::uint32_t out_degree(NodeId u) const { return std::uint32_t(out_neighbors(u).size()); }
    std::uint32_t in_degree(NodeId u) const { return std::uint32_t(in_neighbors(u).size()); }
    std::uint32_t total_degree(NodeId u) const { return out_degree(u) + in_degree(u); }

    /// Out-degree at birth, k^0. Equal to out_degree(u) at all times.
    std::uint32_t birth_out_degree(NodeId u) const {
        check_node(u);
        return birth_out_[u];
    }

    /// 2m/n; 0 for an empty graph.
    double average_degree() const {
        return out_.empty() ? 0.0 : 2.0 * double(edges_) / double(out_.size());
    }
    /// m/n; 0 for an empty graph.
    double average_in_degree() const {
        return out_.empty() ? 0.0 : double(edges_) / double(out_.size());
    }

private:
    void check_node(NodeId u) const;

    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
    std::vector<std::uint32_t> birth_out_;
    std::size_t edges_ = 0;

    // scratch for duplicate detection in add_node; stamp = id of the node
    // whose target list is being validated
    mutable std::vector<NodeId> seen_stamp_;
};

struct DegreeTriple {
    std::uint32_t in = 0;
    std::uint32_t out = 0;
    std::uint32_t total = 0;
};

/// (k_in, k_out, k_total) of one node; k_total = k_in + k_out.
DegreeTriple degree_views(const EvolvingDigraph& g, NodeId node);

}  // namespace reforcite
