#pragma once

#include <vector>

#include "reforcite/graph.hpp"

// Closed-form mean-field predictions for the copying models: degree CCDF,
// rescaled degree law, average-degree evolution (with the phase transition
// at p = 1/2, resp. p1 + p2 = 1) and triangle-count growth. All pure
// functions of the parameters; used as oracles against simulation.
namespace reforcite::meanfield {

/// Pr(X > x) = x^(-1/p) for the rescaled degree variable; x >= 1, p in (0,1].
double ccdf_rescaled(double x, double p);

/// Average total degree at time t (t = node count, >= 2):
///   (2/(2p-1)) (t/2)^(2p-1) - 2/(2p-1)   for p != 1/2
///   2 ln(t/2) - 1                        for p == 1/2
double avg_degree(double t, double p);

/// Average in-degree at time t under two-parameter copying:
///   ln(t/2) - 1/2                                      for p1+p2 == 1
///   (1/(c-1) + 1/2) (t/2)^(c-1) - 1/(c-1), c = p1+p2   otherwise
double avg_in_degree(double t, double p1, double p2);

/// Expected triangle count at time t (large-t closed forms):
///   (4p/(2p-1)) (t/2)^(2p)  for p > 1/2
///   (2p/(1-2p)) t           for p < 1/2
///   2 p t ln t              for p == 1/2
/// Returns 0 for p == 0.
double triangle_count(double t, double p);

/// Pr(k_i > k | birth out-degree k0) = ((k + 1/p)/(k0 + 1/p))^(-1/p),
/// normalized to 1 at k == k0 and clamped to [0,1].
double degree_ccdf(double k, double k0, double p);

/// One X value per node: X_i = (k_i + 1/p)/(k_i^0 + 1/p) with k_i the final
/// total degree and k_i^0 the out-degree at birth. Under single-parameter
/// copying, Pr(X > x) = x^(-1/p).
std::vector<double> rescale_degrees(const EvolvingDigraph& g, double p);

/// Two-parameter analogue. A node's citation growth is driven by the
/// out-copy probability p1 (each citer of the base exposes it through its
/// reference list), so X_i = (k_i + F_i/p1)/(k_i^0 + F_i/p1) with
/// F_i = 1 + (p2 - p1) k_i^0, and Pr(X > x) = x^(-1/p1).
std::vector<double> rescale_degrees(const EvolvingDigraph& g, double p1, double p2);

}  // namespace reforcite::meanfield
