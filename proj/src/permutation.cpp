#include "rembed/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "rembed/errors.hpp"

namespace rembed {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int y : images_) {
        if (y < 0 || y >= size() || seen[y]) {
            throw PreconditionError("permutation images are not a bijection on {0..m-1}");
        }
        seen[y] = 1;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i) images[i] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i) images[i] = i;
    std::vector<char> used(m, 0);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int x = cycle[i];
            int y = cycle[(i + 1) % cycle.size()];
            if (x < 0 || x >= m || used[x]) {
                throw PreconditionError("invalid cycle list for permutation");
            }
            used[x] = 1;
            images[x] = y;
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 0; x < size(); ++x) inv[images_[x]] = x;
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int x = start; !seen[x]; x = images_[x]) {
            seen[x] = 1;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out; // start points ascend, so cycles are already min-first and sorted
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[start]) continue;
        ++count;
        for (int x = start; !seen[x]; x = images_[x]) seen[x] = 1;
    }
    return count;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    for (const auto& cycle : cycles()) lengths.push_back(static_cast<int>(cycle.size()));
    return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
    for (int x = 0; x < size(); ++x) {
        if (images_[x] != x) return false;
    }
    return true;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    for (const auto& cycle : cycles()) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out << ' ';
            out << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
        throw PreconditionError("composing permutations on different ground sets");
    }
    std::vector<int> images(p.size());
    for (int x = 0; x < p.size(); ++x) images[x] = q(p(x));
    return Permutation(std::move(images));
}

Permutation random_full_cycle(int m, RandomStream& rng) {
    if (m < 1) throw PreconditionError("full cycle needs at least one element");
    std::vector<int> order(m - 1);
    for (int i = 0; i < m - 1; ++i) order[i] = i + 1;
    for (int i = m - 2; i > 0; --i) {
        int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    std::vector<int> images(m);
    int prev = 0;
    for (int x : order) {
        images[prev] = x;
        prev = x;
    }
    images[prev] = 0;
    return Permutation(std::move(images));
}

} // namespace rembed
