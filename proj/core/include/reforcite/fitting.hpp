#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reforcite/metrics.hpp"
#include "reforcite/models.hpp"

namespace reforcite {

/// Grid-search fitting of model parameters against a reference in-degree
/// distribution: simulate at each grid point with the same node count as
/// the reference network, average the L1 distance over a few realizations,
/// keep the argmin.
struct FitConfig {
    double grid_step = 0.01;
    int realizations = 3;
    DegreeDistribution target;  // kind must be DegreeKind::In
    std::size_t n = 0;          // nodes to simulate (the real network's count)
    std::uint64_t master_seed = 1;
};

struct GridPoint {
    ModelParams params;
    double mean_l1 = 0.0;
};

struct FitResult {
    ModelParams best;
    double l1 = 0.0;  // == min over trace
    std::vector<GridPoint> trace;
};

enum class SingleParamModel { RefOrCite1, Cp };

/// p swept over {k * grid_step : 0 < k * grid_step < 1}. Ties keep the
/// smaller p.
FitResult fit_single_parameter(SingleParamModel kind, const FitConfig& config);

/// Solves avg_in_degree(t, c) == observed for c in (0,2) by bisection
/// (the function is strictly increasing in c). Throws if the observed value
/// is outside the attainable range at this t.
double solve_p_sum(double observed_avg_in_degree, double t);

/// One-dimensional sweep along the constraint p1 + p2 = c, with
/// p1 in [max(0, c-1), min(c, 1)].
FitResult fit_reforcite2(const FitConfig& config, double c);

/// Two-dimensional sweep over (alpha, beta); the out-degree sequence (from
/// the real network) is replayed in every simulation.
FitResult fit_cpt(const FitConfig& config, std::span<const double> alpha_grid,
                  std::span<const double> beta_grid,
                  std::span<const std::uint32_t> out_degree_sequence);

/// Two-dimensional sweep over (p_forward, b_backward).
FitResult fit_forest_fire(const FitConfig& config, std::span<const double> pa_grid,
                          std::span<const double> b_grid);

}  // namespace reforcite
