#ifndef REMBED_PERMUTATION_HPP
#define REMBED_PERMUTATION_HPP

#include <string>
#include <vector>

#include "rembed/partition.hpp"
#include "rembed/rng.hpp"

namespace rembed {

// Bijection on {0, ..., m-1}.  Immutable after construction.
//
// Composition is left-to-right throughout the library:
// compose(p, q)(x) = q(p(x)), i.e. p acts first.  Cycle counts of a product
// are the same under either convention (the two products are conjugate), but
// facial walks and the worked permutation identities depend on this one.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);

    // Unlisted elements are fixed points.  Cycles use values in {0..m-1}.
    static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    // Canonical cycle decomposition: every cycle starts at its minimum
    // element, cycles sorted by first element, fixed points included.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;
    Partition cycle_type() const;

    bool is_identity() const;

    // "(0 2)(1 4 5 6 3)" in canonical order; identity of size m prints all
    // fixed points.
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// result(x) = q(p(x)); p and q must share a ground set.
Permutation compose(const Permutation& p, const Permutation& q);

// Uniform over the (m-1)! full cycles on {0..m-1}: element 0 is fixed as the
// anchor and the remaining m-1 elements are arranged around the cycle in a
// uniformly random order (Fisher-Yates on the arrangement).
Permutation random_full_cycle(int m, RandomStream& rng);

} // namespace rembed

#endif
