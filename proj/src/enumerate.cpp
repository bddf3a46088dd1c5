#include "rembed/enumerate.hpp"

#include <algorithm>

#include "rembed/errors.hpp"

namespace rembed {

namespace {

std::vector<char> all_darts_present(const Multigraph& g) {
    return std::vector<char>(g.dart_count(), 1);
}

} // namespace

EmbeddingEnumeration::EmbeddingEnumeration(const Multigraph& g, const BigInt& budget)
    : EmbeddingEnumeration(g, all_darts_present(g), budget) {}

EmbeddingEnumeration::EmbeddingEnumeration(const Multigraph& g,
                                           const std::vector<char>& dart_present,
                                           const BigInt& budget)
    : g_(g) {
    if (static_cast<int>(dart_present.size()) != g.dart_count()) {
        throw PreconditionError("dart mask does not match the graph");
    }
    for (int d = 0; d < g.dart_count(); ++d) {
        if (dart_present[d] != dart_present[Multigraph::mate(d)]) {
            throw PreconditionError("dart mask must consist of whole edges");
        }
    }
    anchored_.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int d : g.darts_at(v)) {
            if (dart_present[d]) anchored_[v].push_back(d);
        }
        if (!anchored_[v].empty()) {
            total_ *= factorial(static_cast<int>(anchored_[v].size()) - 1);
        }
    }
    if (total_ > budget) {
        throw BudgetError("enumeration of " + total_.str() +
                              " rotation systems exceeds the budget of " + budget.str(),
                          total_.str());
    }
}

void EmbeddingEnumeration::write(RotationSystem& out) const {
    out = RotationSystem(g_.dart_count());
    for (const auto& cycle : anchored_) {
        if (!cycle.empty()) out.set_cycle(cycle);
    }
}

bool EmbeddingEnumeration::next(RotationSystem& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        write(out);
        return true;
    }
    // odometer over per-vertex arrangements: permute positions after the
    // anchor, low vertex fastest
    for (auto& cycle : anchored_) {
        if (cycle.size() > 2 &&
            std::next_permutation(cycle.begin() + 1, cycle.end())) {
            write(out);
            return true;
        }
        // wrapped (next_permutation already restored ascending order); carry
    }
    done_ = true;
    return false;
}

BigInt EmbeddingEnumeration::count_embeddings(const Multigraph& g) {
    return g.embedding_count();
}

FaceDistribution brute_force_distribution(const Multigraph& g, const BigInt& budget) {
    EmbeddingEnumeration enumeration(g, budget);
    FaceDistribution dist;
    RotationSystem rot;
    while (enumeration.next(rot)) {
        dist.add(count_faces(g, rot));
    }
    return dist;
}

} // namespace rembed
