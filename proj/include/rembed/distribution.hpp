#ifndef REMBED_DISTRIBUTION_HPP
#define REMBED_DISTRIBUTION_HPP

#include <map>

#include "rembed/numbers.hpp"

namespace rembed {

// Exact histogram of face counts: face count j -> nonnegative big-integer
// weight.  Zero weights are not stored.
class FaceDistribution {
public:
    FaceDistribution() = default;

    void add(int faces, const BigInt& weight = 1);

    const std::map<int, BigInt>& weights() const { return weights_; }
    const BigInt& total() const { return total_; }
    BigInt weight(int faces) const;
    bool empty() const { return weights_.empty(); }

    // Sum j * w_j / total; requires a nonempty distribution.
    Rational expectation() const;
    Rational probability(int faces) const;

    // Equality of normalized distributions (probabilities), for comparing
    // histograms with different totals.
    bool same_probabilities(const FaceDistribution& other) const;

    friend bool operator==(const FaceDistribution&, const FaceDistribution&) = default;

private:
    std::map<int, BigInt> weights_;
    BigInt total_ = 0;
};

} // namespace rembed

#endif
