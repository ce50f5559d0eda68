#include "reforcite/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "reforcite/models.hpp"

namespace reforcite {

DegreeDistribution degree_distribution(const EvolvingDigraph& g, DegreeKind kind) {
    DegreeDistribution d;
    d.kind = kind;
    d.n = g.node_count();
    for (NodeId u = 0; u < g.node_count(); ++u)
        ++d.counts[kind == DegreeKind::In ? g.in_degree(u) : g.total_degree(u)];
    return d;
}

DegreeDistribution in_degree_distribution(const EvolvingDigraph& g) {
    return degree_distribution(g, DegreeKind::In);
}

double l1_distance(const DegreeDistribution& a, const DegreeDistribution& b) {
    if (a.kind != b.kind)
        throw std::invalid_argument("cannot compare distributions of different degree kinds");
    if (a.n == 0 || b.n == 0) throw std::invalid_argument("empty degree distribution");
    double sum = 0.0;
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    while (ia != a.counts.end() || ib != b.counts.end()) {
        double pa = 0.0, pb = 0.0;
        if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
            pa = double(ia->second) / double(a.n);
            ++ia;
        } else if (ia == a.counts.end() || ib->first < ia->first) {
            pb = double(ib->second) / double(b.n);
            ++ib;
        } else {
            pa = double(ia->second) / double(a.n);
            pb = double(ib->second) / double(b.n);
            ++ia;
            ++ib;
        }
        sum += std::abs(pa - pb);
    }
    return sum;
}

std::uint64_t count_triangles(const EvolvingDigraph& g) {
    const std::size_t n = g.node_count();
    // undirected simplification; dedup guards ingested graphs that contain
    // both directions of a pair
    std::vector<std::vector<NodeId>> und(n);
    for (NodeId u = 0; u < n; ++u) {
        auto& a = und[u];
        const auto out = g.out_neighbors(u);
        const auto in = g.in_neighbors(u);
        a.reserve(out.size() + in.size());
        a.insert(a.end(), out.begin(), out.end());
        a.insert(a.end(), in.begin(), in.end());
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    // orient each edge from lower to higher (degree, id); every triangle has
    // exactly one node with two out-arrows under this orientation
    std::vector<std::vector<NodeId>> higher(n);
    auto before = [&](NodeId a, NodeId b) {
        const auto da = und[a].size(), db = und[b].size();
        return da != db ? da < db : a < b;
    };
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : und[u])
            if (before(u, v)) higher[u].push_back(v);
        std::sort(higher[u].begin(), higher[u].end());
    }

    std::uint64_t total = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : higher[u]) {
            const auto& hu = higher[u];
            const auto& hv = higher[v];
            std::size_t i = 0, j = 0;
            while (i < hu.size() && j < hv.size()) {
                if (hu[i] < hv[j])
                    ++i;
                else if (hv[j] < hu[i])
                    ++j;
                else {
                    ++total;
                    ++i;
                    ++j;
                }
            }
        }
    }
    return total;
}

namespace {

// CSR-style undirected view of the prefix [0, size)
struct PrefixView {
    std::vector<std::size_t> offset;
    std::vector<NodeId> neigh;
};

PrefixView build_prefix(const EvolvingDigraph& g, std::size_t size) {
    PrefixView v;
    v.offset.assign(size + 1, 0);
    for (NodeId u = 0; u < size; ++u) {
        for (NodeId w : g.out_neighbors(u))
            if (w < size) {
                ++v.offset[u + 1];
                ++v.offset[w + 1];
            }
    }
    for (std::size_t i = 1; i <= size; ++i) v.offset[i] += v.offset[i - 1];
    v.neigh.resize(v.offset[size]);
    std::vector<std::size_t> cursor(v.offset.begin(), v.offset.end() - 1);
    for (NodeId u = 0; u < size; ++u) {
        for (NodeId w : g.out_neighbors(u))
            if (w < size) {
                v.neigh[cursor[u]++] = w;
                v.neigh[cursor[w]++] = u;
            }
    }
    return v;
}

struct BfsResult {
    NodeId farthest = 0;
    std::uint32_t ecc = 0;
};

BfsResult bfs(const PrefixView& view, NodeId src, std::vector<std::uint32_t>& dist,
              std::vector<NodeId>& queue) {
    constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
    std::fill(dist.begin(), dist.end(), unseen);
    queue.clear();
    queue.push_back(src);
    dist[src] = 0;
    BfsResult r{src, 0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const NodeId u = queue[qi];
        const auto d = dist[u];
        if (d > r.ecc) {
            r.ecc = d;
            r.farthest = u;
        }
        for (std::size_t e = view.offset[u]; e < view.offset[u + 1]; ++e) {
            const NodeId w = view.neigh[e];
            if (dist[w] == unseen) {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    return r;
}

std::uint32_t prefix_diameter(const PrefixView& view, std::size_t size,
                              const DiameterOptions& opts, std::uint64_t snapshot_seed) {
    std::vector<std::uint32_t> dist(size);
    std::vector<NodeId> queue;
    queue.reserve(size);

    // largest weakly-connected component
    std::vector<NodeId> component(size, NodeId(-1));
    std::vector<NodeId> best_members;
    std::vector<NodeId> members;
    NodeId comp = 0;
    for (NodeId s = 0; s < size; ++s) {
        if (component[s] != NodeId(-1)) continue;
        members.clear();
        queue.clear();
        queue.push_back(s);
        component[s] = comp;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const NodeId u = queue[qi];
            members.push_back(u);
            for (std::size_t e = view.offset[u]; e < view.offset[u + 1]; ++e) {
                const NodeId w = view.neigh[e];
                if (component[w] == NodeId(-1)) {
                    component[w] = comp;
                    queue.push_back(w);
                }
            }
        }
        if (members.size() > best_members.size()) best_members = members;
        ++comp;
    }
    if (best_members.size() <= 1) return 0;

    std::uint32_t best = 0;
    if (opts.exact) {
        for (NodeId s : best_members) best = std::max(best, bfs(view, s, dist, queue).ecc);
        return best;
    }
    std::mt19937_64 rng(snapshot_seed);
    for (std::uint32_t k = 0; k < opts.sample_sources; ++k) {
        const NodeId src = best_members[std::uniform_int_distribution<std::size_t>(
            0, best_members.size() - 1)(rng)];
        const auto sweep1 = bfs(view, src, dist, queue);
        best = std::max(best, sweep1.ecc);
        const auto sweep2 = bfs(view, sweep1.farthest, dist, queue);
        best = std::max(best, sweep2.ecc);
    }
    return best;
}

}  // namespace

std::vector<SnapshotDiameter> snapshot_diameters(const EvolvingDigraph& g,
                                                 const DiameterOptions& opts) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (opts.schedule.step_size < 1) throw std::invalid_argument("step_size must be >= 1");
    if (opts.sample_sources < 1) throw std::invalid_argument("sample_sources must be >= 1");

    std::vector<std::size_t> sizes;
    for (std::size_t s = opts.schedule.step_size; s < n; s += opts.schedule.step_size)
        sizes.push_back(s);
    sizes.push_back(n);

    std::vector<SnapshotDiameter> result;
    result.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto view = build_prefix(g, sizes[i]);
        result.push_back(
            {sizes[i], prefix_diameter(view, sizes[i], opts, derive_seed(opts.seed, i))});
    }
    return result;
}

double avg_diameter(const EvolvingDigraph& g, const DiameterOptions& opts) {
    const auto snaps = snapshot_diameters(g, opts);
    double sum = 0.0;
    for (const auto& s : snaps) sum += s.diameter;
    return sum / double(snaps.size());
}

std::uint32_t network_h_index(const EvolvingDigraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> count(n + 1, 0);
    for (NodeId u = 0; u < n; ++u) ++count[std::min<std::size_t>(g.in_degree(u), n)];
    std::size_t at_least = 0;
    for (std::size_t h = n; h > 0; --h) {
        at_least += count[h];
        if (at_least >= h) return std::uint32_t(h);
    }
    return 0;
}

ObsolescenceCurve obsolescence_curve(const EvolvingDigraph& g, std::span<const double> o_grid,
                                     DegreeKind kind) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph");
    double prev = 0.0;
    for (double o : o_grid) {
        if (!(o > 0.0 && o <= 1.0))
            throw std::invalid_argument("o values must lie in (0,1] (got " + std::to_string(o) +
                                        ")");
        if (o < prev) throw std::invalid_argument("o grid must be sorted ascending");
        prev = o;
    }

    std::vector<double> prefix(n + 1, 0.0);
    for (NodeId u = 0; u < n; ++u)
        prefix[u + 1] =
            prefix[u] + (kind == DegreeKind::In ? g.in_degree(u) : g.total_degree(u));
    const double total = prefix[n];
    if (total == 0.0) throw std::runtime_error("graph has no edges: total degree is zero");

    ObsolescenceCurve curve;
    curve.reserve(o_grid.size());
    for (double o : o_grid) {
        // small epsilon so that e.g. o = 0.3 with n = 10 takes 3 nodes, not 2
        const auto cut = std::size_t(std::floor(o * double(n) + 1e-9));
        curve.push_back({o, prefix[std::min(cut, n)] / total});
    }
    return curve;
}

std::vector<double> default_o_grid() {
    std::vector<double> grid;
    grid.reserve(100);
    for (int i = 1; i <= 100; ++i) grid.push_back(double(i) / 100.0);
    return grid;
}

}  // namespace reforcite
