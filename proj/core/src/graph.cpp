#include "reforcite/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace reforcite {

void EvolvingDigraph::check_node(NodeId u) const {
    if (u >= out_.size())
        throw std::out_of_range("node " + std::to_string(u) + " out of range (n=" +
                                std::to_string(out_.size()) + ")");
}

NodeId EvolvingDigraph::add_node(std::span<const NodeId> targets) {
    const auto id = NodeId(out_.size());
    for (NodeId v : targets) {
        if (v >= id)
            throw std::out_of_range("target " + std::to_string(v) +
                                    " out of range (n=" + std::to_string(id) + ")");
    }
    if (seen_stamp_.size() < out_.size()) seen_stamp_.resize(out_.size() + 1, NodeId(-1));
    for (NodeId v : targets) {
        if (seen_stamp_[v] == id)
            throw std::invalid_argument("duplicate target " + std::to_string(v));
        seen_stamp_[v] = id;
    }

    out_.emplace_back(targets.begin(), targets.end());
    in_.emplace_back();
    birth_out_.push_back(std::uint32_t(targets.size()));
    for (NodeId v : targets) in_[v].push_back(id);
    edges_ += targets.size();
    return id;
}

EvolvingDigraph EvolvingDigraph::from_edges(std::size_t n,
                                            std::span<const std::pair<NodeId, NodeId>> edges) {
    EvolvingDigraph g;
    g.out_.resize(n);
    g.in_.resize(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range (n=" + std::to_string(n) + ")");
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    g.edges_ = edges.size();
    g.birth_out_.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        auto sorted = g.out_[u];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate edge from node " + std::to_string(u));
        g.birth_out_[u] = std::uint32_t(g.out_[u].size());
    }
    return g;
}

DegreeTriple degree_views(const EvolvingDigraph& g, NodeId node) {
    DegreeTriple d;
    d.in = g.in_degree(node);
    d.out = g.out_degree(node);
    d.total = d.in + d.out;
    return d;
}

}  // namespace reforcite
