#include "reforcite/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace reforcite {

namespace {

struct RawEdge {
    std::string from, to;
};

std::vector<RawEdge> parse_edge_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list: " + path.string());
    std::vector<RawEdge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        RawEdge e;
        std::string extra;
        if (!(ss >> e.from >> e.to) || (ss >> extra))
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": expected \"from to\", got \"" + line + "\"");
        edges.push_back(std::move(e));
    }
    if (edges.empty()) throw DataError(path.string() + ": no edges found");
    return edges;
}

NodeId register_id(ArrivalOrder& order, const std::string& id) {
    auto [it, inserted] = order.to_node.try_emplace(id, NodeId(order.external_ids.size()));
    if (inserted) order.external_ids.push_back(id);
    return it->second;
}

ArrivalOrder order_by_first_appearance(const std::vector<RawEdge>& edges) {
    ArrivalOrder order;
    for (const auto& e : edges) {
        register_id(order, e.from);
        register_id(order, e.to);
    }
    return order;
}

ArrivalOrder order_by_timestamps(const std::vector<RawEdge>& edges,
                                 const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open timestamp file: " + path.string());
    std::vector<std::pair<long long, std::string>> stamped;
    std::unordered_map<std::string, std::size_t> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string id;
        long long ts;
        std::string extra;
        if (!(ss >> id >> ts) || (ss >> extra))
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": expected \"id timestamp\", got \"" + line + "\"");
        if (!seen.try_emplace(id, lineno).second)
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": duplicate timestamp for id " + id);
        stamped.emplace_back(ts, std::move(id));
    }
    std::stable_sort(stamped.begin(), stamped.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    ArrivalOrder order;
    for (auto& [ts, id] : stamped) register_id(order, id);
    for (const auto& e : edges) {
        if (!order.to_node.count(e.from))
            throw DataError("id " + e.from + " missing from timestamp file " + path.string());
        if (!order.to_node.count(e.to))
            throw DataError("id " + e.to + " missing from timestamp file " + path.string());
    }
    return order;
}

ArrivalOrder order_by_given_file(const std::vector<RawEdge>& edges,
                                 const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open order file: " + path.string());
    ArrivalOrder order;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string id;
        ss >> id;
        if (id.empty()) continue;
        register_id(order, id);
    }
    for (const auto& e : edges) {
        if (!order.to_node.count(e.from))
            throw DataError("id " + e.from + " missing from order file " + path.string());
        if (!order.to_node.count(e.to))
            throw DataError("id " + e.to + " missing from order file " + path.string());
    }
    return order;
}

}  // namespace

LoadedGraph load_graph(const std::filesystem::path& edge_file, OrderStrategy strategy,
                       const std::filesystem::path& companion_file) {
    const auto raw = parse_edge_lines(edge_file);

    LoadedGraph loaded;
    switch (strategy) {
        case OrderStrategy::FirstAppearance:
            loaded.order = order_by_first_appearance(raw);
            break;
        case OrderStrategy::Timestamps:
            loaded.order = order_by_timestamps(raw, companion_file);
            break;
        case OrderStrategy::GivenFile:
            loaded.order = order_by_given_file(raw, companion_file);
            break;
    }

    const std::size_t n = loaded.order.external_ids.size();
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(raw.size() * 2);
    for (const auto& e : raw) {
        const NodeId u = loaded.order.to_node.at(e.from);
        const NodeId v = loaded.order.to_node.at(e.to);
        if (u == v) {
            ++loaded.stats.self_loops;
            continue;
        }
        if (!seen.insert((std::uint64_t(u) << 32) | v).second) {
            ++loaded.stats.duplicate_edges;
            continue;
        }
        if (v > u) ++loaded.stats.forward_edges;
        edges.emplace_back(u, v);
    }
    loaded.graph = EvolvingDigraph::from_edges(n, edges);
    return loaded;
}

ObservedStats observed_stats(const EvolvingDigraph& g) {
    ObservedStats s;
    s.n = g.node_count();
    s.m = g.edge_count();
    s.avg_in_degree = g.average_in_degree();
    s.in_degrees = in_degree_distribution(g);
    s.out_degree_sequence.reserve(s.n);
    for (NodeId u = 0; u < s.n; ++u) s.out_degree_sequence.push_back(g.out_degree(u));
    s.triangles = count_triangles(g);
    s.h_index = network_h_index(g);
    return s;
}

void write_edge_list(const EvolvingDigraph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.out_neighbors(u)) out << u << ' ' << v << '\n';
}

void write_edge_list(const EvolvingDigraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path.string());
    write_edge_list(g, out);
    if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace reforcite
