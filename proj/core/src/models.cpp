#include "reforcite/models.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace reforcite {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be in [0,1] (got " +
                                    std::to_string(p) + ")");
}

void check_n(std::size_t n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2 (got " + std::to_string(n) + ")");
}

double uniform_unit(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

NodeId uniform_node(std::mt19937_64& rng, NodeId bound) {
    return std::uniform_int_distribution<NodeId>(0, bound - 1)(rng);
}

std::uint32_t sample_geometric(std::mt19937_64& rng, double success) {
    // support {0,1,2,...}; success == 1 never burns and draws nothing
    if (success >= 1.0) return 0;
    return std::geometric_distribution<std::uint32_t>(success)(rng);
}

// Shared step for RefOrCite1/2 and CP: uniform base, then one coin per
// neighbour of the base. In a grown DAG the in- and out-neighbourhoods of
// the base are disjoint and exclude the base itself, so the collected
// target list is duplicate-free by construction.
EvolvingDigraph grow_copying(std::size_t n, double p_out, double p_in, std::uint64_t seed) {
    check_n(n);
    EvolvingDigraph g;
    g.add_node({});
    std::mt19937_64 rng(seed);
    std::vector<NodeId> targets;
    for (NodeId j = 1; j < n; ++j) {
        const NodeId base = uniform_node(rng, j);
        targets.clear();
        targets.push_back(base);
        if (p_out > 0)
            for (NodeId x : g.out_neighbors(base))
                if (uniform_unit(rng) < p_out) targets.push_back(x);
        if (p_in > 0)
            for (NodeId x : g.in_neighbors(base))
                if (uniform_unit(rng) < p_in) targets.push_back(x);
        g.add_node(targets);
    }
    return g;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(master) ^ a) ^ b);
}

EvolvingDigraph grow_reforcite1(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p, "p");
    return grow_copying(n, p, p, seed);
}

EvolvingDigraph grow_reforcite2(std::size_t n, double p1, double p2, std::uint64_t seed) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    return grow_copying(n, p1, p2, seed);
}

EvolvingDigraph grow_cp(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p, "p");
    return grow_copying(n, p, 0.0, seed);
}

AgeBiasedSampler::AgeBiasedSampler(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("alpha must be finite (got " + std::to_string(alpha) + ")");
    cum_.push_back(0.0);
}

double AgeBiasedSampler::weight(std::size_t age) const {
    return std::pow(double(age), alpha_);
}

void AgeBiasedSampler::extend(std::size_t max_age) {
    while (cum_.size() <= max_age) {
        const double w = weight(cum_.size());
        if (!std::isfinite(w))
            throw std::invalid_argument("alpha=" + std::to_string(alpha_) +
                                        " produces non-finite age weights");
        cum_.push_back(cum_.back() + w);
    }
}

std::size_t AgeBiasedSampler::sample(std::size_t max_age, std::mt19937_64& rng) {
    extend(max_age);
    const double total = cum_[max_age];
    if (!(total > 0.0))
        throw std::invalid_argument("alpha=" + std::to_string(alpha_) +
                                    " makes all age weights zero");
    const double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    const auto it = std::upper_bound(cum_.begin() + 1, cum_.begin() + std::ptrdiff_t(max_age) + 1, u);
    auto age = std::size_t(it - cum_.begin());
    return std::min(age, max_age);
}

EvolvingDigraph grow_cpt(std::size_t n, double alpha, double beta,
                         std::span<const std::uint32_t> out_degrees, std::uint64_t seed) {
    check_n(n);
    check_probability(beta, "beta");
    if (out_degrees.empty()) throw std::invalid_argument("out-degree sequence is empty");
    if (out_degrees.size() < n)
        throw std::invalid_argument("out-degree sequence has " +
                                    std::to_string(out_degrees.size()) +
                                    " entries, need >= n = " + std::to_string(n));

    EvolvingDigraph g;
    g.add_node({});
    std::mt19937_64 rng(seed);
    AgeBiasedSampler ages(alpha);

    // targeted_stamp[v] == j while node j is being wired
    std::vector<NodeId> targeted_stamp(n, NodeId(-1));
    std::vector<NodeId> targets, avail;

    for (NodeId j = 1; j < n; ++j) {
        // node j realizes the j-th entry of the sequence, capped by the
        // number of older nodes
        const std::size_t want = std::min<std::size_t>(out_degrees[j], j);
        targets.clear();
        if (want == 0) {
            g.add_node(targets);
            continue;
        }

        auto mark = [&](NodeId v) {
            targeted_stamp[v] = j;
            targets.push_back(v);
        };
        auto draw_by_age = [&]() -> std::optional<NodeId> {
            for (int tries = 0; tries < 64; ++tries) {
                const NodeId v = NodeId(j - ages.sample(j, rng));
                if (targeted_stamp[v] != j) return v;
            }
            return std::nullopt;
        };
        auto refill_avail = [&](NodeId base) {
            avail.clear();
            for (NodeId x : g.out_neighbors(base))
                if (targeted_stamp[x] != j) avail.push_back(x);
            for (NodeId x : g.in_neighbors(base))
                if (targeted_stamp[x] != j) avail.push_back(x);
        };

        std::size_t reselects_left = 10 * want;
        NodeId base = NodeId(j - ages.sample(j, rng));
        mark(base);
        refill_avail(base);

        while (targets.size() < want && targets.size() < j) {
            if (uniform_unit(rng) < beta) {
                // uniformly random not-yet-targeted neighbour of the base
                NodeId picked = NodeId(-1);
                while (!avail.empty()) {
                    const auto idx = std::uniform_int_distribution<std::size_t>(
                        0, avail.size() - 1)(rng);
                    const NodeId v = avail[idx];
                    avail[idx] = avail.back();
                    avail.pop_back();
                    if (targeted_stamp[v] != j) {
                        picked = v;
                        break;
                    }
                }
                if (picked != NodeId(-1)) {
                    mark(picked);
                    continue;
                }
                // neighbourhood exhausted: select a fresh base, which itself
                // consumes a stub, and keep going from there
                if (reselects_left == 0) break;
                --reselects_left;
                const auto fresh = draw_by_age();
                if (!fresh) break;
                base = *fresh;
                mark(base);
                refill_avail(base);
            } else {
                const auto older = draw_by_age();
                if (older) {
                    mark(*older);
                    continue;
                }
                if (reselects_left == 0) break;
                --reselects_left;
            }
        }
        g.add_node(targets);
    }
    return g;
}

EvolvingDigraph grow_forest_fire(std::size_t n, double p_forward, double b_backward,
                                 std::uint64_t seed) {
    check_n(n);
    if (!(p_forward > 0.0 && p_forward < 1.0))
        throw std::invalid_argument("p_forward must be in (0,1) (got " +
                                    std::to_string(p_forward) + ")");
    if (!(b_backward >= 0.0))
        throw std::invalid_argument("b_backward must be >= 0 (got " +
                                    std::to_string(b_backward) + ")");
    if (!(b_backward * p_forward < 1.0))
        throw std::invalid_argument("b_backward * p_forward must be < 1 (got " +
                                    std::to_string(b_backward * p_forward) + ")");

    EvolvingDigraph g;
    g.add_node({});
    std::mt19937_64 rng(seed);

    std::vector<NodeId> visited_stamp(n, NodeId(-1));
    std::vector<NodeId> queue, targets, scratch;

    auto burn = [&](NodeId v, std::span<const NodeId> neighbors, std::uint32_t count,
                    NodeId stamp) {
        (void)v;
        scratch.clear();
        for (NodeId x : neighbors)
            if (visited_stamp[x] != stamp) scratch.push_back(x);
        const auto take = std::min<std::size_t>(count, scratch.size());
        for (std::size_t k = 0; k < take; ++k) {
            const auto idx =
                std::uniform_int_distribution<std::size_t>(k, scratch.size() - 1)(rng);
            std::swap(scratch[k], scratch[idx]);
            const NodeId x = scratch[k];
            visited_stamp[x] = stamp;
            targets.push_back(x);
            queue.push_back(x);
        }
    };

    for (NodeId j = 1; j < n; ++j) {
        const NodeId w = uniform_node(rng, j);
        targets.clear();
        queue.clear();
        visited_stamp[w] = j;
        targets.push_back(w);
        queue.push_back(w);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const NodeId u = queue[qi];
            const auto x = sample_geometric(rng, 1.0 - p_forward);
            const auto y = sample_geometric(rng, 1.0 - b_backward * p_forward);
            burn(u, g.out_neighbors(u), x, j);
            burn(u, g.in_neighbors(u), y, j);
        }
        g.add_node(targets);
    }
    return g;
}

EvolvingDigraph grow_pa(std::size_t n, std::uint32_t m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("m must be >= 1 (got " + std::to_string(m) + ")");
    if (n <= m)
        throw std::invalid_argument("n must be > m (got n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m) + ")");

    EvolvingDigraph g;
    g.add_node({});
    std::mt19937_64 rng(seed);

    // token list: node v appears in_degree(v) + 1 times, so a uniform draw
    // attaches proportionally to citations received (plus one)
    std::vector<NodeId> tokens{0};
    std::vector<NodeId> targets;
    for (NodeId j = 1; j < n; ++j) {
        const auto k = std::min<std::size_t>(m, j);
        targets.clear();
        while (targets.size() < k) {
            const NodeId v = tokens[std::uniform_int_distribution<std::size_t>(
                0, tokens.size() - 1)(rng)];
            if (std::find(targets.begin(), targets.end(), v) == targets.end())
                targets.push_back(v);
        }
        g.add_node(targets);
        tokens.insert(tokens.end(), targets.begin(), targets.end());
        tokens.push_back(j);
    }
    return g;
}

const char* model_name(const ModelParams& params) {
    struct Visitor {
        const char* operator()(const RefOrCite1Params&) const { return "reforcite1"; }
        const char* operator()(const RefOrCite2Params&) const { return "reforcite2"; }
        const char* operator()(const CpParams&) const { return "cp"; }
        const char* operator()(const CptParams&) const { return "cpt"; }
        const char* operator()(const ForestFireParams&) const { return "forestfire"; }
        const char* operator()(const PaParams&) const { return "pa"; }
    };
    return std::visit(Visitor{}, params);
}

void validate(const ModelParams& params) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RefOrCite1Params>) {
                check_probability(p.p, "p");
            } else if constexpr (std::is_same_v<T, RefOrCite2Params>) {
                check_probability(p.p1, "p1");
                check_probability(p.p2, "p2");
            } else if constexpr (std::is_same_v<T, CpParams>) {
                check_probability(p.p, "p");
            } else if constexpr (std::is_same_v<T, CptParams>) {
                check_probability(p.beta, "beta");
                if (!std::isfinite(p.alpha))
                    throw std::invalid_argument("alpha must be finite");
            } else if constexpr (std::is_same_v<T, ForestFireParams>) {
                if (!(p.p_forward > 0.0 && p.p_forward < 1.0))
                    throw std::invalid_argument("p_forward must be in (0,1) (got " +
                                                std::to_string(p.p_forward) + ")");
                if (!(p.b_backward >= 0.0 && p.b_backward * p.p_forward < 1.0))
                    throw std::invalid_argument(
                        "b_backward must be >= 0 with b_backward * p_forward < 1");
            } else if constexpr (std::is_same_v<T, PaParams>) {
                if (p.m < 1) throw std::invalid_argument("m must be >= 1");
            }
        },
        params);
}

EvolvingDigraph grow(const ModelParams& params, std::size_t n, std::uint64_t seed) {
    return std::visit(
        [&](const auto& p) -> EvolvingDigraph {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RefOrCite1Params>) {
                return grow_reforcite1(n, p.p, seed);
            } else if constexpr (std::is_same_v<T, RefOrCite2Params>) {
                return grow_reforcite2(n, p.p1, p.p2, seed);
            } else if constexpr (std::is_same_v<T, CpParams>) {
                return grow_cp(n, p.p, seed);
            } else if constexpr (std::is_same_v<T, CptParams>) {
                return grow_cpt(n, p.alpha, p.beta, p.out_degrees, seed);
            } else if constexpr (std::is_same_v<T, ForestFireParams>) {
                return grow_forest_fire(n, p.p_forward, p.b_backward, seed);
            } else {
                return grow_pa(n, p.m, seed);
            }
        },
        params);
}

}  // namespace reforcite
