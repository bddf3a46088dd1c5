#ifndef REMBED_STIRLING_HPP
#define REMBED_STIRLING_HPP

#include <vector>

#include "rembed/numbers.hpp"

namespace rembed {

// Triangular table of unsigned Stirling numbers of the first kind,
// c(n, k) = #{permutations of S_n with exactly k cycles}, built up to a
// bound fixed at construction via c(n+1, k) = n*c(n, k) + c(n, k-1).
// Immutable after construction.
class StirlingTable {
public:
    explicit StirlingTable(int max_n);

    int bound() const { return static_cast<int>(rows_.size()) - 1; }

    // c(n, k); requires 0 <= k <= n <= bound().
    const BigInt& unsigned_value(int n, int k) const;

    // s(n, k) = (-1)^(n-k) c(n, k).
    BigInt signed_value(int n, int k) const;

    // Row n: c(n, 0), ..., c(n, n).
    const std::vector<BigInt>& row(int n) const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

// Convenience for one-off lookups; builds a table of bound n.
BigInt stirling_unsigned(int n, int k);

} // namespace rembed

#endif
