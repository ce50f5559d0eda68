#pragma once

#include <cstdint>
#include <vector>

#include "reforcite/ingest.hpp"
#include "reforcite/metrics.hpp"
#include "reforcite/models.hpp"

namespace reforcite {

struct EvalOptions {
    DiameterOptions diameter;
    std::vector<double> o_grid = default_o_grid();
    DegreeKind obsolescence_kind = DegreeKind::In;
};

/// Reference-side measurements, computed once per comparison.
struct ObservedSummary {
    std::size_t n = 0;
    std::size_t m = 0;
    DegreeDistribution in_degrees;
    std::uint64_t triangles = 0;
    double avg_diameter = 0.0;
    std::uint32_t h_index = 0;
    ObsolescenceCurve obsolescence;
    std::vector<std::uint32_t> out_degree_sequence;
};

ObservedSummary summarize_observed(const EvolvingDigraph& g, const EvalOptions& opts);

/// One simulated network against the observed summary. Ratios are
/// simulated/observed; a zero/zero pair yields ratio 1.
struct EvaluationReport {
    double l1_error = 0.0;
    std::uint64_t triangles = 0;
    double triangle_ratio = 0.0;
    double avg_diameter = 0.0;
    double diameter_ratio = 0.0;
    std::uint32_t h_index = 0;
    double h_index_ratio = 0.0;
    ObsolescenceCurve obsolescence;
};

EvaluationReport evaluate_against(const ObservedSummary& observed, const EvolvingDigraph& sim,
                                  const EvalOptions& opts);

/// Convenience: full pairwise report (observed side computed on the fly).
EvaluationReport evaluate_pair(const EvolvingDigraph& observed, const EvolvingDigraph& sim,
                               const EvalOptions& opts = {});

struct AggregateStat {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for one realization
};

struct CompareOptions {
    int realizations = 30;
    std::uint64_t master_seed = 1;
    EvalOptions eval;
};

/// Many realizations of one model against one real network; per-metric
/// ratio means and standard deviations, plus the pointwise-mean simulated
/// obsolescence curve.
struct ModelComparison {
    ObservedSummary observed;
    std::vector<EvaluationReport> runs;
    AggregateStat l1;
    AggregateStat triangle_ratio;
    AggregateStat diameter_ratio;
    AggregateStat h_index_ratio;
    ObsolescenceCurve mean_obsolescence;
};

/// A CPT params value with an empty sequence is completed with the real
/// network's out-degree sequence.
ModelComparison compare_model(const EvolvingDigraph& real, ModelParams params,
                              const CompareOptions& opts);

}  // namespace reforcite
