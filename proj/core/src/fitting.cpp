#include "reforcite/fitting.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "reforcite/meanfield.hpp"

namespace reforcite {

namespace {

void check_config(const FitConfig& config) {
    if (!(config.grid_step > 0.0 && config.grid_step < 1.0))
        throw std::invalid_argument("grid_step must be in (0,1) (got " +
                                    std::to_string(config.grid_step) + ")");
    if (config.realizations < 1)
        throw std::invalid_argument("realizations must be >= 1 (got " +
                                    std::to_string(config.realizations) + ")");
    if (config.target.counts.empty() || config.target.n == 0)
        throw std::invalid_argument("target degree distribution is empty");
    if (config.n < 2)
        throw std::invalid_argument("n must be >= 2 (got " + std::to_string(config.n) + ")");
}

// mean L1 of per-realization in-degree distributions against the target;
// seeds derive from (master, grid index, realization) so the whole sweep is
// reproducible and order-independent
double mean_l1(const ModelParams& params, const FitConfig& config, std::size_t grid_index) {
    double sum = 0.0;
    for (int r = 0; r < config.realizations; ++r) {
        const auto g = grow(params, config.n,
                            derive_seed(config.master_seed, grid_index, std::uint64_t(r)));
        sum += l1_distance(in_degree_distribution(g), config.target);
    }
    return sum / double(config.realizations);
}

FitResult sweep(const FitConfig& config, std::span<const ModelParams> grid) {
    if (grid.empty()) throw std::invalid_argument("parameter grid is empty");
    FitResult result;
    result.trace.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double l1 = mean_l1(grid[i], config, i);
        result.trace.push_back({grid[i], l1});
        if (i == 0 || l1 < result.l1) {  // strict < keeps the earliest (smallest) params on ties
            result.l1 = l1;
            result.best = grid[i];
        }
    }
    return result;
}

std::vector<double> probability_grid(double step) {
    std::vector<double> ps;
    for (std::size_t k = 1; double(k) * step < 1.0 - 1e-12; ++k) ps.push_back(double(k) * step);
    return ps;
}

}  // namespace

FitResult fit_single_parameter(SingleParamModel kind, const FitConfig& config) {
    check_config(config);
    std::vector<ModelParams> grid;
    for (double p : probability_grid(config.grid_step)) {
        if (kind == SingleParamModel::RefOrCite1)
            grid.push_back(RefOrCite1Params{p});
        else
            grid.push_back(CpParams{p});
    }
    return sweep(config, grid);
}

double solve_p_sum(double observed_avg_in_degree, double t) {
    if (!(observed_avg_in_degree > 0.0))
        throw std::invalid_argument("observed average in-degree must be > 0 (got " +
                                    std::to_string(observed_avg_in_degree) + ")");
    if (!(t >= 2.0))
        throw std::invalid_argument("t must be >= 2 (got " + std::to_string(t) + ")");

    // The boundary branch of avg_in_degree carries an integration constant 1
    // below the smooth-branch limit, so the curve as published is not
    // invertible in a unit-wide window around c = 1. Map the boundary value
    // back to c = 1 exactly and bisect the smooth continuation elsewhere;
    // expm1 keeps it stable arbitrarily close to c = 1.
    const double log_t2 = std::log(t / 2.0);
    if (std::abs(observed_avg_in_degree - (log_t2 - 0.5)) <= 1e-9) return 1.0;
    const auto smooth = [log_t2](double c) {
        const double d = c - 1.0;
        if (d == 0.0) return log_t2 + 0.5;
        return std::expm1(d * log_t2) / d + 0.5 * std::exp(d * log_t2);
    };

    double lo = 1e-9, hi = 2.0 - 1e-9;
    const double f_lo = smooth(lo);
    const double f_hi = smooth(hi);
    if (observed_avg_in_degree < f_lo || observed_avg_in_degree > f_hi)
        throw std::invalid_argument(
            "observed average in-degree " + std::to_string(observed_avg_in_degree) +
            " outside attainable range [" + std::to_string(f_lo) + ", " + std::to_string(f_hi) +
            "] at t=" + std::to_string(t));

    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (smooth(mid) < observed_avg_in_degree)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

FitResult fit_reforcite2(const FitConfig& config, double c) {
    check_config(config);
    if (!(c > 0.0 && c < 2.0))
        throw std::invalid_argument("c must be in (0,2) (got " + std::to_string(c) + ")");
    const double lo = std::max(0.0, c - 1.0);
    const double hi = std::min(c, 1.0);
    if (lo > hi + 1e-12) throw std::invalid_argument("empty feasible interval for p1");

    std::vector<ModelParams> grid;
    for (std::size_t k = 0;; ++k) {
        const double p1 = lo + double(k) * config.grid_step;
        if (p1 > hi + 1e-12) break;
        grid.push_back(RefOrCite2Params{std::min(p1, hi), std::max(c - std::min(p1, hi), 0.0)});
    }
    return sweep(config, grid);
}

FitResult fit_cpt(const FitConfig& config, std::span<const double> alpha_grid,
                  std::span<const double> beta_grid,
                  std::span<const std::uint32_t> out_degree_sequence) {
    check_config(config);
    if (out_degree_sequence.size() < config.n)
        throw std::invalid_argument("out-degree sequence has " +
                                    std::to_string(out_degree_sequence.size()) +
                                    " entries, need >= n = " + std::to_string(config.n));
    std::vector<ModelParams> grid;
    for (double alpha : alpha_grid)
        for (double beta : beta_grid)
            grid.push_back(CptParams{
                alpha, beta,
                std::vector<std::uint32_t>(out_degree_sequence.begin(),
                                           out_degree_sequence.end())});
    return sweep(config, grid);
}

FitResult fit_forest_fire(const FitConfig& config, std::span<const double> pa_grid,
                          std::span<const double> b_grid) {
    check_config(config);
    std::vector<ModelParams> grid;
    for (double pa : pa_grid)
        for (double b : b_grid) {
            const ModelParams params = ForestFireParams{pa, b};
            validate(params);
            grid.push_back(params);
        }
    return sweep(config, grid);
}

}  // namespace reforcite
