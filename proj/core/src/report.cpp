#include "reforcite/report.hpp"

#include <cmath>

namespace reforcite {

namespace {

double ratio(double sim, double obs) {
    if (obs == 0.0 && sim == 0.0) return 1.0;
    return sim / obs;
}

AggregateStat aggregate(const std::vector<EvaluationReport>& runs,
                        double (*pick)(const EvaluationReport&)) {
    AggregateStat s;
    const auto r = runs.size();
    for (const auto& run : runs) s.mean += pick(run);
    s.mean /= double(r);
    if (r > 1) {
        double ss = 0.0;
        for (const auto& run : runs) {
            const double d = pick(run) - s.mean;
            ss += d * d;
        }
        s.stddev = std::sqrt(ss / double(r - 1));
    }
    return s;
}

}  // namespace

ObservedSummary summarize_observed(const EvolvingDigraph& g, const EvalOptions& opts) {
    ObservedSummary s;
    s.n = g.node_count();
    s.m = g.edge_count();
    s.in_degrees = in_degree_distribution(g);
    s.triangles = count_triangles(g);
    s.avg_diameter = avg_diameter(g, opts.diameter);
    s.h_index = network_h_index(g);
    s.obsolescence = obsolescence_curve(g, opts.o_grid, opts.obsolescence_kind);
    s.out_degree_sequence.reserve(s.n);
    for (NodeId u = 0; u < s.n; ++u) s.out_degree_sequence.push_back(g.out_degree(u));
    return s;
}

EvaluationReport evaluate_against(const ObservedSummary& observed, const EvolvingDigraph& sim,
                                  const EvalOptions& opts) {
    EvaluationReport r;
    r.l1_error = l1_distance(in_degree_distribution(sim), observed.in_degrees);
    r.triangles = count_triangles(sim);
    r.triangle_ratio = ratio(double(r.triangles), double(observed.triangles));
    r.avg_diameter = avg_diameter(sim, opts.diameter);
    r.diameter_ratio = ratio(r.avg_diameter, observed.avg_diameter);
    r.h_index = network_h_index(sim);
    r.h_index_ratio = ratio(double(r.h_index), double(observed.h_index));
    r.obsolescence = obsolescence_curve(sim, opts.o_grid, opts.obsolescence_kind);
    return r;
}

EvaluationReport evaluate_pair(const EvolvingDigraph& observed, const EvolvingDigraph& sim,
                               const EvalOptions& opts) {
    return evaluate_against(summarize_observed(observed, opts), sim, opts);
}

ModelComparison compare_model(const EvolvingDigraph& real, ModelParams params,
                              const CompareOptions& opts) {
    if (opts.realizations < 1) throw std::invalid_argument("realizations must be >= 1");

    ModelComparison cmp;
    cmp.observed = summarize_observed(real, opts.eval);

    // CPT replays the real out-degree sequence unless one was supplied
    if (auto* cpt = std::get_if<CptParams>(&params); cpt && cpt->out_degrees.empty())
        cpt->out_degrees = cmp.observed.out_degree_sequence;
    validate(params);

    cmp.runs.reserve(std::size_t(opts.realizations));
    for (int r = 0; r < opts.realizations; ++r) {
        const auto sim = grow(params, real.node_count(),
                              derive_seed(opts.master_seed, std::uint64_t(r)));
        cmp.runs.push_back(evaluate_against(cmp.observed, sim, opts.eval));
    }

    cmp.l1 = aggregate(cmp.runs, [](const EvaluationReport& r) { return r.l1_error; });
    cmp.triangle_ratio =
        aggregate(cmp.runs, [](const EvaluationReport& r) { return r.triangle_ratio; });
    cmp.diameter_ratio =
        aggregate(cmp.runs, [](const EvaluationReport& r) { return r.diameter_ratio; });
    cmp.h_index_ratio =
        aggregate(cmp.runs, [](const EvaluationReport& r) { return r.h_index_ratio; });

    cmp.mean_obsolescence = cmp.runs.front().obsolescence;
    for (std::size_t i = 1; i < cmp.runs.size(); ++i)
        for (std::size_t k = 0; k < cmp.mean_obsolescence.size(); ++k)
            cmp.mean_obsolescence[k].r += cmp.runs[i].obsolescence[k].r;
    for (auto& pt : cmp.mean_obsolescence) pt.r /= double(cmp.runs.size());

    return cmp;
}

}  // namespace reforcite
