#include "rembed/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "rembed/errors.hpp"
#include "rembed/multistar.hpp"

namespace rembed {

Rational h_bound(int d) {
    if (d < 1) throw PreconditionError("h is defined for degrees >= 1");
    // Delta_d with H_0 = 0 covers d = 1
    Rational value = harmonic(d - 1) + Rational(1, (d + 1) / 2);
    if (d >= 5) value += Rational(1, d + 1);
    return value;
}

namespace {

void require_ordering_input(const Multigraph& g) {
    if (!g.connected()) {
        throw PreconditionError("ordering bounds are stated for connected graphs");
    }
    if (g.has_loops()) {
        throw PreconditionError("ordering bounds do not support loops");
    }
}

OrderingReport report_for(const Multigraph& g, std::vector<int> ordering) {
    OrderingReport report;
    report.ordering = std::move(ordering);
    std::vector<int> rank(g.vertex_count());
    for (std::size_t i = 0; i < report.ordering.size(); ++i) {
        rank[report.ordering[i]] = static_cast<int>(i);
    }
    report.back_degrees.reserve(report.ordering.size());
    report.adjusted.reserve(report.ordering.size());
    for (std::size_t i = 0; i < report.ordering.size(); ++i) {
        int v = report.ordering[i];
        int back = 0;
        for (int d : g.darts_at(v)) {
            if (rank[g.head(d)] < static_cast<int>(i)) ++back; // edges, with multiplicity
        }
        if (back == 0) back = 1;
        report.back_degrees.push_back(back);
        report.adjusted.push_back(back == 2 ? std::numbers::e : static_cast<double>(back));
        report.max_back_degree = std::max(report.max_back_degree, back);
    }
    return report;
}

} // namespace

OrderingReport degeneracy_order(const Multigraph& g) {
    require_ordering_input(g);

    // smallest-last: peel a minimum-degree vertex (ties to the lowest index),
    // record in reverse
    std::vector<int> deg(g.vertex_count());
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);

    std::set<std::pair<int, int>> queue; // (degree, vertex)
    for (int v = 0; v < g.vertex_count(); ++v) queue.emplace(deg[v], v);

    std::vector<int> ordering(g.vertex_count());
    for (int i = g.vertex_count() - 1; i >= 0; --i) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        ordering[i] = v;
        for (int dart : g.darts_at(v)) {
            int u = g.head(dart);
            if (removed[u]) continue;
            queue.erase({deg[u], u});
            --deg[u];
            queue.emplace(deg[u], u);
        }
    }
    return report_for(g, std::move(ordering));
}

OrderingReport ordering_report(const Multigraph& g, const std::vector<int>& ordering) {
    require_ordering_input(g);
    if (static_cast<int>(ordering.size()) != g.vertex_count()) {
        throw PreconditionError("ordering must list every vertex exactly once");
    }
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : ordering) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) {
            throw PreconditionError("ordering must list every vertex exactly once");
        }
        seen[v] = 1;
    }
    return report_for(g, ordering);
}

double face_bound_log(const Multigraph& g, const OrderingReport& order) {
    (void)g;
    double bound = 1.0;
    for (std::size_t i = 2; i < order.adjusted.size(); ++i) {
        bound += std::log(order.adjusted[i]);
    }
    return bound;
}

Rational face_bound_harmonic(const Multigraph& g, const OrderingReport& order) {
    (void)g;
    Rational bound = 1;
    for (std::size_t i = 2; i < order.back_degrees.size(); ++i) {
        bound += harmonic(order.back_degrees[i] - 1);
    }
    return bound;
}

double stahl_bound(const Multigraph& g) {
    double bound = 2.0 * g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        bound += std::log(static_cast<double>(g.degree(v)));
    }
    return bound;
}

CycleFamilyBound cycle_family_lower_bound(const Multigraph& g,
                                          const std::vector<std::vector<int>>& cycles) {
    CycleFamilyBound result;
    result.cycle_count = static_cast<int>(cycles.size());
    for (const auto& cycle : cycles) {
        if (cycle.size() < 2) {
            throw PreconditionError("cycles need at least two vertices");
        }
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) {
            throw PreconditionError("cycle vertices must be distinct");
        }
        int max_deg = 0;
        Rational term = 2;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i];
            int w = cycle[(i + 1) % cycle.size()];
            if (u < 0 || u >= g.vertex_count()) {
                throw PreconditionError("cycle vertex outside the graph");
            }
            // a 2-cycle traverses two distinct parallel edges
            int needed = cycle.size() == 2 ? 2 : 1;
            if (g.multiplicity(u, w) < needed) {
                throw PreconditionError("listed cycle is not present in the graph");
            }
            max_deg = std::max(max_deg, g.degree(u));
            term *= Rational(1, g.degree(u) - 1);
        }
        if (max_deg < 3) {
            throw PreconditionError("a cycle whose vertices all have degree 2 is excluded");
        }
        result.sharp += term;
        result.max_degree = std::max(result.max_degree, max_deg);
        result.max_length = std::max(result.max_length, static_cast<int>(cycle.size()));
    }
    if (result.cycle_count > 0) {
        BigInt power = 1;
        for (int i = 0; i < result.max_length; ++i) power *= result.max_degree - 1;
        result.coarse = Rational(2 * result.cycle_count) / Rational(power);
    }
    return result;
}

} // namespace rembed
