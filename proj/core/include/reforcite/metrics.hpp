#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "reforcite/graph.hpp"

namespace reforcite {

enum class DegreeKind { In, Total };

/// Empirical degree histogram; counts sum to n.
struct DegreeDistribution {
    std::map<std::uint32_t, std::size_t> counts;
    std::size_t n = 0;
    DegreeKind kind = DegreeKind::In;
};

DegreeDistribution in_degree_distribution(const EvolvingDigraph& g);
DegreeDistribution degree_distribution(const EvolvingDigraph& g, DegreeKind kind);

/// L1 distance between the normalized PMFs over the union of supports;
/// a metric with values in [0, 2]. Both distributions must be of the same
/// kind and nonempty.
double l1_distance(const DegreeDistribution& a, const DegreeDistribution& b);

/// Exact triangle count of the undirected simplification (each unordered
/// triple counted once).
std::uint64_t count_triangles(const EvolvingDigraph& g);

struct DiameterOptions {
    SnapshotSchedule schedule;
    std::uint32_t sample_sources = 10;
    bool exact = false;  // all-pairs BFS instead of double sweep
    std::uint64_t seed = 0;
};

struct SnapshotDiameter {
    std::size_t nodes = 0;
    std::uint32_t diameter = 0;
};

/// Diameter of each snapshot prefix (first s*step nodes plus the edges
/// among them, the full graph always included last). Per snapshot: the
/// largest weakly-connected component of the undirected view is located and
/// its diameter estimated by double-sweep BFS from `sample_sources` random
/// seeds, keeping the largest eccentricity found. The estimate is a lower
/// bound on, and never exceeds, the true diameter.
std::vector<SnapshotDiameter> snapshot_diameters(const EvolvingDigraph& g,
                                                 const DiameterOptions& opts);

/// Mean of the snapshot diameters.
double avg_diameter(const EvolvingDigraph& g, const DiameterOptions& opts);

/// Largest h such that at least h nodes have in-degree >= h.
std::uint32_t network_h_index(const EvolvingDigraph& g);

struct ObsolescencePoint {
    double o = 0;  // fraction of oldest nodes, in (0,1]
    double r = 0;  // their share of final degree
};
using ObsolescenceCurve = std::vector<ObsolescencePoint>;

/// r(o) = degree held by the floor(o*n) oldest nodes divided by the total
/// degree, for each o in the grid (sorted, values in (0,1]). r is
/// non-decreasing and reaches 1 at o = 1. Degree means in-degree unless
/// kind says otherwise.
ObsolescenceCurve obsolescence_curve(const EvolvingDigraph& g, std::span<const double> o_grid,
                                     DegreeKind kind = DegreeKind::In);

/// 100 evenly spaced points in (0,1].
std::vector<double> default_o_grid();

}  // namespace reforcite
