#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reforcite/graph.hpp"

namespace reforcite {

// Per-model parameter sets. Probabilities follow the reference/citation
// naming: p1 (and CP's p) applies to out-neighbours of the base node,
// p2 to in-neighbours.
struct RefOrCite1Params {
    double p = 0.5;
};
struct RefOrCite2Params {
    double p1 = 0.5;
    double p2 = 0.5;
};
struct CpParams {
    double p = 0.5;
};
struct CptParams {
    double alpha = -1.0;
    double beta = 0.99;
    std::vector<std::uint32_t> out_degrees;  // desired out-degree of node i at index i
};
struct ForestFireParams {
    double p_forward = 0.2;   // forward burning probability, in (0,1)
    double b_backward = 0.3;  // backward burning ratio, >= 0 with b*p_forward < 1
};
struct PaParams {
    std::uint32_t m = 1;  // edges per new node
};

using ModelParams = std::variant<RefOrCite1Params, RefOrCite2Params, CpParams, CptParams,
                                 ForestFireParams, PaParams>;

const char* model_name(const ModelParams& params);

// Growth processes. Determinism contract: identical (params, n, seed)
// produces a bit-identical graph.
EvolvingDigraph grow_reforcite1(std::size_t n, double p, std::uint64_t seed);
EvolvingDigraph grow_reforcite2(std::size_t n, double p1, double p2, std::uint64_t seed);
EvolvingDigraph grow_cp(std::size_t n, double p, std::uint64_t seed);
EvolvingDigraph grow_cpt(std::size_t n, double alpha, double beta,
                         std::span<const std::uint32_t> out_degrees, std::uint64_t seed);
EvolvingDigraph grow_forest_fire(std::size_t n, double p_forward, double b_backward,
                                 std::uint64_t seed);
EvolvingDigraph grow_pa(std::size_t n, std::uint32_t m, std::uint64_t seed);

EvolvingDigraph grow(const ModelParams& params, std::size_t n, std::uint64_t seed);

/// Validates parameter domains without growing; throws std::invalid_argument
/// naming the violated bound.
void validate(const ModelParams& params);

/// Stateless seed derivation (splitmix64 mix) so that sweeps can hand every
/// (grid point, realization) its own independent stream.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

/// Samples ages with weight(age) = age^alpha over 1..max_age via incremental
/// prefix sums. Used by the CPT model's base selection; exposed so tests can
/// check the sampled frequencies directly.
class AgeBiasedSampler {
public:
    explicit AgeBiasedSampler(double alpha);

    /// Draws an age in [1, max_age].
    std::size_t sample(std::size_t max_age, std::mt19937_64& rng);

    double weight(std::size_t age) const;

private:
    void extend(std::size_t max_age);

    double alpha_;
    std::vector<double> cum_;  // cum_[a] = sum of weights for ages 1..a
};

}  // namespace reforcite
