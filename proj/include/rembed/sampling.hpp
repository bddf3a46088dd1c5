#ifndef REMBED_SAMPLING_HPP
#define REMBED_SAMPLING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rembed/embedding.hpp"
#include "rembed/multigraph.hpp"
#include "rembed/permutation.hpp"
#include "rembed/rng.hpp"

namespace rembed {

// Uniform random embedding: an independent uniform cyclic order at every
// vertex (random_full_cycle mapped onto the vertex's darts).
RotationSystem random_embedding(const Multigraph& g, RandomStream& rng);

// Randomly add v to an embedding of g - v.
//
// pi must cover exactly the darts of edges avoiding v.  Step 1 inserts each
// dart between v and a neighbor u into u's rotation uniformly at random among
// the current gaps (a rotation with d darts has d gaps; a bare vertex has one
// trivial gap; multiple darts toward the same u are inserted sequentially, the
// gap count growing by one each time).  Step 2 places a uniform full cycle on
// v's darts.  Insertion order is fixed (neighbors ascending, edges ascending)
// so a seeded stream reproduces the result.  Loops at v are not supported.
RotationSystem add_vertex_randomly(const Multigraph& g, int v, const RotationSystem& pi,
                                   RandomStream& rng);

// Same process restricted to a prefix of placed vertices: only v's edges
// toward `placed` vertices are embedded, and pi must cover exactly the darts
// of edges within `placed`.  Building a graph one vertex at a time this way
// samples its rotation systems uniformly.
RotationSystem add_vertex_to_prefix(const Multigraph& g, int v, const RotationSystem& pi,
                                    const std::vector<char>& placed, RandomStream& rng);

// Every outcome of the random addition process with its exact probability
// (all outcomes are equally likely and distinct, so each pair carries
// 1 / (#gap choices * (deg v - 1)!)).
std::vector<std::pair<RotationSystem, Rational>>
enumerate_vertex_additions(const Multigraph& g, int v, const RotationSystem& pi);

std::vector<std::pair<RotationSystem, Rational>>
enumerate_prefix_additions(const Multigraph& g, int v, const RotationSystem& pi,
                           const std::vector<char>& placed);

// Face permutation of v relative to the complete system rot: for a dart d at
// v, follow the facial walk until it next enters v; phi_v(d) is the dart of v
// that reverses that entering dart.  Its cycles group v's darts by the face
// of rot-without-v they sit in, in facial order.  Returned over positions in
// darts_at(v) (ascending dart order).  v must have degree >= 1 and no loops.
Permutation face_permutation_at(const Multigraph& g, const RotationSystem& rot, int v);

struct EstimateReport {
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    Rational mean;            // exact sample mean
    Rational variance;        // exact sample variance (N - 1 denominator)
    double standard_error = 0.0; // sqrt(variance / N)
    int min_observed = 0;
    int max_observed = 0;
};

// Streaming face-count statistics over n_samples independent uniform
// embeddings.  Work is split into fixed-size shards, shard s drawing from
// make_shard_stream(seed, s); per-shard integer accumulators are merged in
// shard order, so the report does not depend on the worker count.
// n_samples >= 2.  threads = 0 picks the hardware concurrency.
EstimateReport monte_carlo_faces(const Multigraph& g, std::uint64_t n_samples,
                                 std::uint64_t seed, int threads = 0);

// Exhaustive expectation of the number of faces containing v after randomly
// adding v to a uniform embedding of g - v: averages over every embedding of
// g - v, every insertion outcome, and every rotation at v, tracing the full
// face structure each time.  Budget-guarded like enumeration.
Rational expected_faces_at_new_vertex(const Multigraph& g, int v,
                                      const BigInt& budget = BigInt(10'000'000));

} // namespace rembed

#endif
