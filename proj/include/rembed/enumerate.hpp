#ifndef REMBED_ENUMERATE_HPP
#define REMBED_ENUMERATE_HPP

#include <vector>

#include "rembed/distribution.hpp"
#include "rembed/embedding.hpp"
#include "rembed/multigraph.hpp"

namespace rembed {

inline const BigInt& default_enumeration_budget() {
    static const BigInt budget = 10'000'000;
    return budget;
}

// Exhaustive iteration over rotation systems: the Cartesian product of the
// per-vertex cyclic orders, each vertex contributing (deg - 1)! orders
// (least dart anchored, remaining darts permuted).  Refuses to start if the
// total exceeds the budget, reporting the exact product.
class EmbeddingEnumeration {
public:
    EmbeddingEnumeration(const Multigraph& g,
                         const BigInt& budget = default_enumeration_budget());

    // Restricted variant: only darts with dart_present[d] != 0 participate
    // (the support must consist of whole edges).  Used to enumerate
    // embeddings of a subgraph in the ambient dart numbering.
    EmbeddingEnumeration(const Multigraph& g, const std::vector<char>& dart_present,
                         const BigInt& budget);

    const BigInt& total() const { return total_; }

    // Fills `out` with the next system (absent darts stay -1); false once
    // exhausted.  Deterministic order.
    bool next(RotationSystem& out);

    static BigInt count_embeddings(const Multigraph& g);

private:
    Multigraph g_; // kept by value so temporaries are safe
    std::vector<std::vector<int>> anchored_; // per vertex: anchor + arrangement
    BigInt total_ = 1;
    bool first_ = true;
    bool done_ = false;

    void write(RotationSystem& out) const;
};

// Histogram of face counts over every rotation system.
FaceDistribution brute_force_distribution(const Multigraph& g,
                                          const BigInt& budget = default_enumeration_budget());

} // namespace rembed

#endif
