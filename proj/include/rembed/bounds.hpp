#ifndef REMBED_BOUNDS_HPP
#define REMBED_BOUNDS_HPP

#include <vector>

#include "rembed/multigraph.hpp"
#include "rembed/numbers.hpp"

namespace rembed {

// Cap on the expected number of faces containing a newly added vertex of
// degree d: the dipole expectation Delta_d for d <= 4, Delta_d + 1/(d+1) for
// d >= 5 (Delta_1 = 1 via H_0 = 0).  d >= 1.
Rational h_bound(int d);

// A vertex ordering with its back-degrees (number of edges to earlier
// vertices, counted with multiplicity, with 0 replaced by 1) and the
// adjusted values d* feeding the log bound (d* = e when d = 2).
struct OrderingReport {
    std::vector<int> ordering;
    std::vector<int> back_degrees;
    std::vector<double> adjusted;
    int max_back_degree = 0; // the graph's degeneracy for a smallest-last order
};

// Smallest-last ordering (repeatedly peel a minimum-degree vertex; ties to
// the smallest index): its maximum back-degree equals the degeneracy.
// Requires a connected, loopless graph.
OrderingReport degeneracy_order(const Multigraph& g);

// Report for a caller-supplied ordering (must be a permutation of the
// vertices).  Same connectivity/looplessness requirements.
OrderingReport ordering_report(const Multigraph& g, const std::vector<int>& ordering);

// Upper bounds on E[F] from a vertex ordering.  Both assume the first two
// ordered vertices span at most one edge (the build-up starts from a one-face
// embedding); that holds for every simple connected graph.
double face_bound_log(const Multigraph& g, const OrderingReport& order);   // 1 + sum_{i>=3} log d_i*
Rational face_bound_harmonic(const Multigraph& g, const OrderingReport& order); // 1 + sum_{i>=3} H_{d_i - 1}

// The earlier general bound this improves on: 2n + sum_v log deg(v).
double stahl_bound(const Multigraph& g);

struct CycleFamilyBound {
    Rational sharp;      // sum over cycles of 2 * prod_{u in C} 1/(deg(u)-1)
    Rational coarse;     // 2 |C| / (d-1)^l
    int cycle_count = 0;
    int max_degree = 0;  // d: max degree over listed cycle vertices
    int max_length = 0;  // l: longest listed cycle
};

// Lower bound on E[F] from a family of cycles (each a closed vertex walk
// with distinct vertices; length 2 means two parallel edges).  Every listed
// cycle must exist in g and contain a vertex of degree >= 3.
CycleFamilyBound cycle_family_lower_bound(const Multigraph& g,
                                          const std::vector<std::vector<int>>& cycles);

} // namespace rembed

#endif
