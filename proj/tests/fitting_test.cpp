#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "reforcite/fitting.hpp"
#include "reforcite/meanfield.hpp"

using namespace reforcite;

namespace {

FitConfig config_for(const EvolvingDigraph& g, double step, int realizations,
                     std::size_t n = 0) {
    FitConfig c;
    c.grid_step = step;
    c.realizations = realizations;
    c.target = in_degree_distribution(g);
    c.n = n == 0 ? g.node_count() : n;
    c.master_seed = 77;
    return c;
}

}  // namespace

TEST_CASE("solve_p_sum hits the log branch exactly") {
    const double t = 1e4;
    CHECK(solve_p_sum(std::log(t / 2.0) - 0.5, t) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("solve_p_sum round-trips avg_in_degree") {
    for (double c : {0.3, 0.8, 1.0, 1.3, 1.7}) {
        for (double t : {1e3, 1e4, 1e5}) {
            const double observed = meanfield::avg_in_degree(t, c / 2, c / 2);
            CHECK(solve_p_sum(observed, t) == doctest::Approx(c).epsilon(1e-6));
        }
    }
}

TEST_CASE("solve_p_sum rejects unattainable observations") {
    CHECK_THROWS_AS(solve_p_sum(0.5, 1e4), std::invalid_argument);   // below the c->0 limit
    CHECK_THROWS_AS(solve_p_sum(1e9, 1e4), std::invalid_argument);   // above the c->2 bound
    CHECK_THROWS_AS(solve_p_sum(-1.0, 1e4), std::invalid_argument);
    CHECK_THROWS_AS(solve_p_sum(3.0, 1.0), std::invalid_argument);
}

TEST_CASE("fit bookkeeping: returned l1 is the trace minimum") {
    const auto target = grow_reforcite1(1500, 0.4, 5);
    const auto fit = fit_single_parameter(SingleParamModel::RefOrCite1,
                                          config_for(target, 0.2, 1));
    REQUIRE(!fit.trace.empty());
    double best = fit.trace.front().mean_l1;
    for (const auto& pt : fit.trace) best = std::min(best, pt.mean_l1);
    CHECK(fit.l1 == best);
    CHECK(fit.trace.size() == 4);  // 0.2, 0.4, 0.6, 0.8
}

TEST_CASE("self-distance is zero at the generating grid point") {
    // when the target itself was simulated from a grid point with the same
    // seed derivation, that point's first realization reproduces it exactly
    const auto target = grow_reforcite1(800, 0.4, derive_seed(77, 1, 0));
    auto cfg = config_for(target, 0.2, 1);
    const auto fit = fit_single_parameter(SingleParamModel::RefOrCite1, cfg);
    CHECK(fit.l1 == 0.0);
    CHECK(std::get<RefOrCite1Params>(fit.best).p == doctest::Approx(0.4));
}

TEST_CASE("small self-consistency recovery") {
    const auto target = grow_reforcite1(2000, 0.5, 123);
    const auto fit = fit_single_parameter(SingleParamModel::RefOrCite1,
                                          config_for(target, 0.1, 2));
    const double p = std::get<RefOrCite1Params>(fit.best).p;
    CHECK(p >= 0.3);
    CHECK(p <= 0.7);
}

TEST_CASE("refining the grid never hurts beyond noise") {
    const auto target = grow_reforcite1(2000, 0.5, 31);
    const auto coarse = fit_single_parameter(SingleParamModel::RefOrCite1,
                                             config_for(target, 0.2, 2));
    const auto fine = fit_single_parameter(SingleParamModel::RefOrCite1,
                                           config_for(target, 0.1, 2));
    CHECK(fine.l1 <= coarse.l1 + 0.05);
}

TEST_CASE("fit_reforcite2 sweeps the constraint line") {
    const auto target = grow_reforcite2(2000, 0.5, 0.3, 17);
    auto cfg = config_for(target, 0.1, 1);
    const auto fit = fit_reforcite2(cfg, 0.8);
    for (const auto& pt : fit.trace) {
        const auto& p = std::get<RefOrCite2Params>(pt.params);
        CHECK(p.p1 + p.p2 == doctest::Approx(0.8));
        CHECK(p.p1 >= 0.0);
        CHECK(p.p1 <= 0.8 + 1e-12);
    }
    CHECK(fit.trace.size() == 9);  // p1 in {0, 0.1, ..., 0.8}
    CHECK_THROWS_AS(fit_reforcite2(cfg, 2.5), std::invalid_argument);

    // c > 1 clamps the feasible interval to [c-1, 1]
    const auto high = fit_reforcite2(cfg, 1.5);
    for (const auto& pt : high.trace) {
        const auto& p = std::get<RefOrCite2Params>(pt.params);
        CHECK(p.p1 >= 0.5 - 1e-12);
        CHECK(p.p1 <= 1.0 + 1e-12);
        CHECK(p.p2 <= 1.0 + 1e-12);
    }
}

TEST_CASE("fit_cpt degenerate grid returns that point") {
    const auto target = grow_reforcite1(500, 0.3, 3);
    auto cfg = config_for(target, 0.1, 1);
    std::vector<std::uint32_t> seq(cfg.n, 2);
    const double alphas[] = {-1.0};
    const double betas[] = {0.99};
    const auto fit = fit_cpt(cfg, alphas, betas, seq);
    REQUIRE(fit.trace.size() == 1);
    const auto& best = std::get<CptParams>(fit.best);
    CHECK(best.alpha == -1.0);
    CHECK(best.beta == 0.99);

    std::vector<std::uint32_t> tooshort(3, 1);
    CHECK_THROWS_AS(fit_cpt(cfg, alphas, betas, tooshort), std::invalid_argument);
}

TEST_CASE("fit_cpt self-consistency on alpha") {
    // a synthetic CPT target; alpha recovered within one grid step
    const std::size_t n = 1500;
    std::vector<std::uint32_t> seq(n, 3);
    const auto target = grow_cpt(n, -1.0, 0.6, seq, 9);
    auto cfg = config_for(target, 0.1, 2);
    const double alphas[] = {-2.0, -1.0, 0.0, 1.0};
    const double betas[] = {0.6};
    const auto fit = fit_cpt(cfg, alphas, betas, seq);
    CHECK(std::abs(std::get<CptParams>(fit.best).alpha - (-1.0)) <= 1.0);
}

TEST_CASE("fit_forest_fire grids") {
    const auto target = grow_forest_fire(800, 0.2, 1.0, 19);
    auto cfg = config_for(target, 0.1, 1);
    const double pas[] = {0.2};
    const double bs[] = {1.0};
    const auto one = fit_forest_fire(cfg, pas, bs);
    REQUIRE(one.trace.size() == 1);

    const double pa_grid[] = {0.01, 0.2, 0.4};
    const double b_grid[] = {0.5, 1.0};
    const auto fit = fit_forest_fire(cfg, pa_grid, b_grid);
    CHECK(fit.trace.size() == 6);
    const auto& best = std::get<ForestFireParams>(fit.best);
    CHECK(best.p_forward >= 0.01);

    const double bad_pa[] = {1.5};
    CHECK_THROWS_AS(fit_forest_fire(cfg, bad_pa, bs), std::invalid_argument);
}

TEST_CASE("fit configuration validation") {
    FitConfig cfg;
    cfg.n = 100;
    CHECK_THROWS_AS(fit_single_parameter(SingleParamModel::Cp, cfg),
                    std::invalid_argument);  // empty target
    cfg.target = in_degree_distribution(grow_cp(100, 0.5, 1));
    cfg.grid_step = 0.0;
    CHECK_THROWS_AS(fit_single_parameter(SingleParamModel::Cp, cfg), std::invalid_argument);
    cfg.grid_step = 0.5;
    cfg.realizations = 0;
    CHECK_THROWS_AS(fit_single_parameter(SingleParamModel::Cp, cfg), std::invalid_argument);
}
