#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "reforcite/metrics.hpp"

namespace reforcite {

/// Malformed or inconsistent input data (as opposed to bad parameters).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// How arrival order is established for a real edge list.
enum class OrderStrategy {
    FirstAppearance,  // per edge line: source registered first, then target
    Timestamps,       // companion "id timestamp" file, ascending timestamp
    GivenFile,        // companion file listing external ids in arrival order
};

struct ArrivalOrder {
    std::vector<std::string> external_ids;             // NodeId -> external id
    std::unordered_map<std::string, NodeId> to_node;   // external id -> NodeId
};

struct LoadStats {
    std::size_t duplicate_edges = 0;  // collapsed
    std::size_t self_loops = 0;       // dropped
    std::size_t forward_edges = 0;    // kept: target arrived after source
};

struct LoadedGraph {
    EvolvingDigraph graph;
    ArrivalOrder order;
    LoadStats stats;
};

/// Parses a SNAP-style edge list ("from to" per line, '#' comments),
/// renumbers nodes by arrival order, collapses duplicates and drops
/// self-loops (counting both), and keeps forward edges flagged in the
/// stats. Timestamps/GivenFile strategies read the companion file.
LoadedGraph load_graph(const std::filesystem::path& edge_file, OrderStrategy strategy,
                       const std::filesystem::path& companion_file = {});

/// Everything fitting and comparison need from a real network.
struct ObservedStats {
    std::size_t n = 0;
    std::size_t m = 0;
    double avg_in_degree = 0.0;
    DegreeDistribution in_degrees;
    std::vector<std::uint32_t> out_degree_sequence;  // by arrival index
    std::uint64_t triangles = 0;
    std::uint32_t h_index = 0;
};

ObservedStats observed_stats(const EvolvingDigraph& g);

/// Canonical serialization: one "from to" line per edge, nodes as arrival
/// indices, sources ascending.
void write_edge_list(const EvolvingDigraph& g, std::ostream& out);
void write_edge_list(const EvolvingDigraph& g, const std::filesystem::path& path);

}  // namespace reforcite
