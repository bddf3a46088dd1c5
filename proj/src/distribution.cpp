#include "rembed/distribution.hpp"

#include <stdexcept>

#include "rembed/errors.hpp"

namespace rembed {

void FaceDistribution::add(int faces, const BigInt& weight) {
    if (weight < 0) throw PreconditionError("negative distribution weight");
    if (weight == 0) return;
    if (faces < 1) throw PreconditionError("face counts are positive");
    weights_[faces] += weight;
    total_ += weight;
}

BigInt FaceDistribution::weight(int faces) const {
    auto it = weights_.find(faces);
    return it == weights_.end() ? BigInt(0) : it->second;
}

Rational FaceDistribution::expectation() const {
    if (total_ == 0) throw PreconditionError("expectation of an empty distribution");
    BigInt sum = 0;
    for (const auto& [faces, w] : weights_) sum += faces * w;
    return Rational(sum, total_);
}

Rational FaceDistribution::probability(int faces) const {
    if (total_ == 0) throw PreconditionError("probability in an empty distribution");
    return Rational(weight(faces), total_);
}

bool FaceDistribution::same_probabilities(const FaceDistribution& other) const {
    if (weights_.size() != other.weights_.size()) return false;
    auto it = other.weights_.begin();
    for (const auto& [faces, w] : weights_) {
        if (it->first != faces) return false;
        // w / total == w' / total'
        if (w * other.total_ != it->second * total_) return false;
        ++it;
    }
    return true;
}

} // namespace rembed
