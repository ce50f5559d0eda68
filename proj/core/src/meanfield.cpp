#include "reforcite/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reforcite::meanfield {

namespace {

// guard around the singular denominators at the phase boundary
constexpr double kBoundaryEps = 1e-9;

void check_t(double t, double min_t) {
    if (!(t >= min_t))
        throw std::invalid_argument("t must be >= " + std::to_string(min_t) + " (got " +
                                    std::to_string(t) + ")");
}

}  // namespace

double ccdf_rescaled(double x, double p) {
    if (!(x >= 1.0))
        throw std::invalid_argument("x must be >= 1 (got " + std::to_string(x) + ")");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("p must be in (0,1] (got " + std::to_string(p) + ")");
    return std::pow(x, -1.0 / p);
}

double avg_degree(double t, double p) {
    check_t(t, 2.0);
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("p must be in [0,1] (got " + std::to_string(p) + ")");
    const double d = 2.0 * p - 1.0;
    if (std::abs(d) <= kBoundaryEps) return 2.0 * std::log(t / 2.0) - 1.0;
    return (2.0 / d) * std::pow(t / 2.0, d) - 2.0 / d;
}

double avg_in_degree(double t, double p1, double p2) {
    check_t(t, 2.0);
    const double c = p1 + p2;
    const double d = c - 1.0;
    if (std::abs(d) <= kBoundaryEps) return std::log(t / 2.0) - 0.5;
    return (1.0 / d + 0.5) * std::pow(t / 2.0, d) - 1.0 / d;
}

double triangle_count(double t, double p) {
    check_t(t, 4.0);
    if (!(p >= 0.0 && p < 1.0))
        throw std::invalid_argument("p must be in [0,1) (got " + std::to_string(p) + ")");
    if (p == 0.0) return 0.0;
    const double d = 2.0 * p - 1.0;
    if (std::abs(d) <= kBoundaryEps) return 2.0 * p * t * std::log(t);
    if (d > 0.0) return (4.0 * p / d) * std::pow(t / 2.0, 2.0 * p);
    return (2.0 * p / -d) * t;
}

double degree_ccdf(double k, double k0, double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("p must be in (0,1] (got " + std::to_string(p) + ")");
    if (!(k0 >= 0.0) || !(k >= k0))
        throw std::invalid_argument("need k >= k0 >= 0 (got k=" + std::to_string(k) +
                                    ", k0=" + std::to_string(k0) + ")");
    const double s = 1.0 / p;
    const double v = std::pow((k + s) / (k0 + s), -s);
    return std::clamp(v, 0.0, 1.0);
}

std::vector<double> rescale_degrees(const EvolvingDigraph& g, double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("p must be in (0,1] (got " + std::to_string(p) + ")");
    const double s = 1.0 / p;
    std::vector<double> x;
    x.reserve(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        x.push_back((g.total_degree(u) + s) / (g.birth_out_degree(u) + s));
    return x;
}

std::vector<double> rescale_degrees(const EvolvingDigraph& g, double p1, double p2) {
    if (!(p1 > 0.0 && p1 <= 1.0))
        throw std::invalid_argument("p1 must be in (0,1] (got " + std::to_string(p1) + ")");
    std::vector<double> x;
    x.reserve(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const double k0 = g.birth_out_degree(u);
        const double shift = (1.0 + (p2 - p1) * k0) / p1;  // = F_i / p1, > 0 for p2 in [0,1]
        x.push_back((g.total_degree(u) + shift) / (k0 + shift));
    }
    return x;
}

}  // namespace reforcite::meanfield
