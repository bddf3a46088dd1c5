#include "rembed/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rembed/enumerate.hpp"
#include "rembed/errors.hpp"

namespace rembed {

namespace {

// Write cycle(positions) of `perm` onto the given darts, anchored at darts[0].
void set_cycle_from_perm(RotationSystem& rot, const std::vector<int>& darts,
                         const Permutation& perm) {
    std::vector<int> seq;
    seq.reserve(darts.size());
    int pos = 0;
    do {
        seq.push_back(darts[pos]);
        pos = perm(pos);
    } while (pos != 0);
    rot.set_cycle(seq);
}

struct InsertionPlan {
    // (u, dart-at-u) for each edge between v and a placed vertex, neighbors
    // ascending then edges ascending; insertions happen in this order.
    std::vector<std::pair<int, int>> inserts;
    std::vector<int> v_darts; // v-side darts of those edges, ascending
};

void validate_prefix_rotation(const Multigraph& g, const RotationSystem& pi,
                              const std::vector<char>& placed) {
    if (pi.dart_count() != g.dart_count()) {
        throw PreconditionError("rotation system built for a different graph");
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        bool expected = placed[a] && placed[b];
        if (pi.contains(2 * e) != expected || pi.contains(2 * e + 1) != expected) {
            throw PreconditionError(
                "rotation must cover exactly the edges among placed vertices");
        }
    }
}

InsertionPlan plan_addition(const Multigraph& g, int v, const std::vector<char>& placed) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex outside the graph");
    if (placed[v]) throw PreconditionError("vertex is already placed");
    if (g.has_loop_at(v)) throw PreconditionError("adding a vertex with a loop is unsupported");

    InsertionPlan plan;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        if (a == v && placed[b]) {
            plan.inserts.emplace_back(b, 2 * e + 1);
            plan.v_darts.push_back(2 * e);
        } else if (b == v && placed[a]) {
            plan.inserts.emplace_back(a, 2 * e);
            plan.v_darts.push_back(2 * e + 1);
        }
    }
    std::stable_sort(plan.inserts.begin(), plan.inserts.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    return plan;
}

std::vector<char> all_but(const Multigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex outside the graph");
    std::vector<char> placed(g.vertex_count(), 1);
    placed[v] = 0;
    return placed;
}

RotationSystem add_with_plan(const Multigraph& g, const InsertionPlan& plan,
                             const RotationSystem& pi, RandomStream& rng) {
    RotationSystem rot = pi;
    for (auto [u, udart] : plan.inserts) {
        std::vector<int> cycle = rot.rotation_at(g, u);
        if (cycle.empty()) {
            rot.set_singleton(udart);
        } else {
            rot.insert_after(cycle[uniform_below(rng, cycle.size())], udart);
        }
    }
    if (!plan.v_darts.empty()) {
        Permutation order = random_full_cycle(static_cast<int>(plan.v_darts.size()), rng);
        set_cycle_from_perm(rot, plan.v_darts, order);
    }
    return rot;
}

std::vector<std::pair<RotationSystem, Rational>>
enumerate_with_plan(const Multigraph& g, const InsertionPlan& plan, const RotationSystem& pi) {
    std::vector<RotationSystem> states{pi};
    for (auto [u, udart] : plan.inserts) {
        std::vector<RotationSystem> grown;
        for (const RotationSystem& s : states) {
            std::vector<int> cycle = s.rotation_at(g, u);
            if (cycle.empty()) {
                RotationSystem t = s;
                t.set_singleton(udart);
                grown.push_back(std::move(t));
            } else {
                for (int after : cycle) {
                    RotationSystem t = s;
                    t.insert_after(after, udart);
                    grown.push_back(std::move(t));
                }
            }
        }
        states = std::move(grown);
    }

    std::vector<std::pair<RotationSystem, Rational>> out;
    const int m = static_cast<int>(plan.v_darts.size());
    if (m == 0) {
        Rational p(1, static_cast<long>(states.size()));
        for (RotationSystem& s : states) out.emplace_back(std::move(s), p);
        return out;
    }
    // all (m-1)! cyclic orders of v's darts, the least dart anchored
    std::vector<int> arrangement(plan.v_darts.begin() + 1, plan.v_darts.end());
    BigInt outcomes = BigInt(states.size()) * factorial(m - 1);
    Rational p = Rational(1) / Rational(outcomes);
    do {
        for (const RotationSystem& s : states) {
            RotationSystem t = s;
            std::vector<int> cycle{plan.v_darts.front()};
            cycle.insert(cycle.end(), arrangement.begin(), arrangement.end());
            t.set_cycle(cycle);
            out.emplace_back(std::move(t), p);
        }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

// Faces of rot that contain at least one dart based at v.
int count_faces_at(const Multigraph& g, const RotationSystem& rot, int v) {
    std::vector<char> visited(g.dart_count(), 0);
    const auto& next = rot.successors();
    int count = 0;
    for (int start : g.darts_at(v)) {
        if (visited[start]) continue;
        ++count;
        int d = start;
        do {
            visited[d] = 1;
            d = next[d ^ 1];
        } while (d != start);
    }
    return count;
}

} // namespace

RotationSystem random_embedding(const Multigraph& g, RandomStream& rng) {
    RotationSystem rot(g.dart_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& darts = g.darts_at(v);
        Permutation order = random_full_cycle(static_cast<int>(darts.size()), rng);
        set_cycle_from_perm(rot, darts, order);
    }
    return rot;
}

RotationSystem add_vertex_randomly(const Multigraph& g, int v, const RotationSystem& pi,
                                   RandomStream& rng) {
    const std::vector<char> placed = all_but(g, v);
    validate_prefix_rotation(g, pi, placed);
    return add_with_plan(g, plan_addition(g, v, placed), pi, rng);
}

RotationSystem add_vertex_to_prefix(const Multigraph& g, int v, const RotationSystem& pi,
                                    const std::vector<char>& placed, RandomStream& rng) {
    if (static_cast<int>(placed.size()) != g.vertex_count()) {
        throw PreconditionError("placed mask does not match the graph");
    }
    validate_prefix_rotation(g, pi, placed);
    return add_with_plan(g, plan_addition(g, v, placed), pi, rng);
}

std::vector<std::pair<RotationSystem, Rational>>
enumerate_vertex_additions(const Multigraph& g, int v, const RotationSystem& pi) {
    const std::vector<char> placed = all_but(g, v);
    validate_prefix_rotation(g, pi, placed);
    return enumerate_with_plan(g, plan_addition(g, v, placed), pi);
}

std::vector<std::pair<RotationSystem, Rational>>
enumerate_prefix_additions(const Multigraph& g, int v, const RotationSystem& pi,
                           const std::vector<char>& placed) {
    if (static_cast<int>(placed.size()) != g.vertex_count()) {
        throw PreconditionError("placed mask does not match the graph");
    }
    validate_prefix_rotation(g, pi, placed);
    return enumerate_with_plan(g, plan_addition(g, v, placed), pi);
}

Permutation face_permutation_at(const Multigraph& g, const RotationSystem& rot, int v) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex outside the graph");
    if (g.has_loop_at(v)) {
        throw PreconditionError("face permutation is undefined at a vertex with loops");
    }
    if (!rot.complete()) {
        throw PreconditionError("face permutation needs a complete rotation system");
    }

    const auto& darts = g.darts_at(v);
    std::vector<int> position(g.dart_count(), -1);
    for (std::size_t i = 0; i < darts.size(); ++i) position[darts[i]] = static_cast<int>(i);

    std::vector<int> images(darts.size());
    for (std::size_t i = 0; i < darts.size(); ++i) {
        int x = darts[i];
        int steps = 0;
        do {
            x = rot.successor(Multigraph::mate(x)); // facial walk
            if (++steps > g.dart_count()) {
                throw std::logic_error("facial walk failed to return to the vertex");
            }
        } while (g.tail(Multigraph::mate(x)) != v);
        images[i] = position[Multigraph::mate(x)];
    }
    return Permutation(std::move(images));
}

EstimateReport monte_carlo_faces(const Multigraph& g, std::uint64_t n_samples,
                                 std::uint64_t seed, int threads) {
    if (n_samples < 2) throw PreconditionError("Monte Carlo needs at least two samples");

    constexpr std::uint64_t kShardSize = 16384;
    const std::uint64_t shards = (n_samples + kShardSize - 1) / kShardSize;

    struct ShardAcc {
        std::uint64_t count = 0;
        std::uint64_t sum = 0;
        std::uint64_t sumsq = 0;
        int min = INT_MAX;
        int max = 0;
    };
    std::vector<ShardAcc> acc(shards);

    auto run_shard = [&](std::uint64_t s) {
        const std::uint64_t begin = s * kShardSize;
        const std::uint64_t end = std::min(n_samples, begin + kShardSize);
        RandomStream rng = make_shard_stream(seed, s);
        ShardAcc& a = acc[s];
        for (std::uint64_t i = begin; i < end; ++i) {
            RotationSystem rot = random_embedding(g, rng);
            int f = count_faces(g, rot);
            ++a.count;
            a.sum += static_cast<std::uint64_t>(f);
            a.sumsq += static_cast<std::uint64_t>(f) * static_cast<std::uint64_t>(f);
            a.min = std::min(a.min, f);
            a.max = std::max(a.max, f);
        }
    };

    unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shards));
    if (workers <= 1) {
        for (std::uint64_t s = 0; s < shards; ++s) run_shard(s);
    } else {
        std::atomic<std::uint64_t> next_shard{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::uint64_t s; (s = next_shard.fetch_add(1)) < shards;) run_shard(s);
            });
        }
        for (auto& t : pool) t.join();
    }

    // integer accumulators merged in shard order
    BigInt sum = 0;
    BigInt sumsq = 0;
    EstimateReport report;
    report.sample_count = n_samples;
    report.seed = seed;
    report.min_observed = INT_MAX;
    for (const ShardAcc& a : acc) {
        sum += a.sum;
        sumsq += a.sumsq;
        report.min_observed = std::min(report.min_observed, a.min);
        report.max_observed = std::max(report.max_observed, a.max);
    }
    const BigInt n = n_samples;
    report.mean = Rational(sum, n);
    report.variance = Rational(n * sumsq - sum * sum, n * (n - 1));
    report.standard_error = std::sqrt((report.variance / Rational(n)).convert_to<double>());
    return report;
}

Rational expected_faces_at_new_vertex(const Multigraph& g, int v, const BigInt& budget) {
    const std::vector<char> placed = all_but(g, v);
    InsertionPlan plan = plan_addition(g, v, placed);
    if (plan.v_darts.empty()) {
        throw PreconditionError("vertex has no edges to the rest of the graph");
    }

    std::vector<char> mask(g.dart_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        if (a != v && b != v) mask[2 * e] = mask[2 * e + 1] = 1;
    }

    // total work: embeddings of g - v, times gap products, times (deg v - 1)!
    BigInt base = 1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u == v) continue;
        int non_v = 0;
        for (int d : g.darts_at(u)) {
            if (mask[d]) ++non_v;
        }
        if (non_v > 0) base *= factorial(non_v - 1);
    }
    BigInt gap_product = 1;
    {
        std::vector<int> current(g.vertex_count(), 0);
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int d : g.darts_at(u)) {
                if (mask[d]) ++current[u];
            }
        }
        for (auto [u, udart] : plan.inserts) {
            gap_product *= std::max(current[u], 1);
            ++current[u];
        }
    }
    BigInt total_outcomes =
        base * gap_product * factorial(static_cast<int>(plan.v_darts.size()) - 1);
    if (total_outcomes > budget) {
        throw BudgetError("exhaustive vertex addition over " + total_outcomes.str() +
                              " outcomes exceeds the budget of " + budget.str(),
                          total_outcomes.str());
    }

    EmbeddingEnumeration base_embeddings(g, mask, budget);
    BigInt face_sum = 0;
    BigInt outcome_count = 0;
    RotationSystem pi;
    while (base_embeddings.next(pi)) {
        for (const auto& [rot, prob] : enumerate_with_plan(g, plan, pi)) {
            face_sum += count_faces_at(g, rot, v);
            ++outcome_count;
        }
    }
    if (outcome_count != total_outcomes) {
        throw std::logic_error("outcome enumeration does not match the predicted count");
    }
    return Rational(face_sum, outcome_count);
}

} // namespace rembed
