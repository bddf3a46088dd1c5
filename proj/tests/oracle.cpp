#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "rembed/rng.hpp"
#include "rembed/sampling.hpp"

namespace rembed::oracle {

int cycle_count_of(const std::vector<int>& images) {
    std::vector<char> seen(images.size(), 0);
    int count = 0;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        ++count;
        for (std::size_t x = start; !seen[x]; x = images[x]) seen[x] = 1;
    }
    return count;
}

std::vector<int> cycle_lengths_of(const std::vector<int>& images) {
    std::vector<char> seen(images.size(), 0);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (std::size_t x = start; !seen[x]; x = images[x]) {
            seen[x] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return lengths;
}

std::uint64_t count_perms_with_k_cycles(int n, int k) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::uint64_t count = 0;
    do {
        if (cycle_count_of(images) == k) ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    return count;
}

std::uint64_t count_perms_of_type(int n, const std::vector<int>& lambda_sorted_desc) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::uint64_t count = 0;
    do {
        if (cycle_lengths_of(images) == lambda_sorted_desc) ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    return count;
}

std::uint64_t partition_count(int n) {
    // table[m] = #partitions of m with parts <= current cap
    std::vector<std::uint64_t> table(n + 1, 0);
    table[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int m = part; m <= n; ++m) table[m] += table[m - part];
    }
    return table[n];
}

std::vector<std::vector<int>> all_full_cycles(int m) {
    std::vector<std::vector<int>> out;
    if (m == 1) {
        out.push_back({0});
        return out;
    }
    std::vector<int> rest(m - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        std::vector<int> images(m);
        int prev = 0;
        for (int x : rest) {
            images[prev] = x;
            prev = x;
        }
        images[prev] = 0;
        out.push_back(std::move(images));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

FaceDistribution dipole_distribution(int n) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = (i + 1) % n;
    FaceDistribution dist;
    for (const auto& tau : all_full_cycles(n)) {
        std::vector<int> product(n);
        for (int x = 0; x < n; ++x) product[x] = sigma[tau[x]];
        dist.add(cycle_count_of(product));
    }
    return dist;
}

Multigraph random_cubic_graph(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("cubic graphs need even n >= 4");
    RandomStream rng = make_stream(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        // pairing model: 3n points, random perfect matching
        std::vector<int> points(3 * n);
        std::iota(points.begin(), points.end(), 0);
        for (int i = static_cast<int>(points.size()) - 1; i > 0; --i) {
            int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
            std::swap(points[i], points[j]);
        }
        std::vector<std::pair<int, int>> edges;
        bool simple = true;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            int u = points[i] / 3;
            int v = points[i + 1] / 3;
            if (u == v || seen[u][v]) {
                simple = false;
                break;
            }
            seen[u][v] = seen[v][u] = 1;
            edges.emplace_back(u, v);
        }
        if (!simple) continue;
        Multigraph g(n, std::move(edges));
        if (g.connected()) return g;
    }
    throw std::runtime_error("failed to sample a connected cubic graph");
}

std::map<RotationSystem, Rational> construction_distribution(const Multigraph& g,
                                                             const std::vector<int>& order) {
    std::map<RotationSystem, Rational> dist;
    dist.emplace(RotationSystem(g.dart_count()), Rational(1));
    std::vector<char> placed(g.vertex_count(), 0);
    for (int v : order) {
        std::map<RotationSystem, Rational> grown;
        for (const auto& [pi, p] : dist) {
            for (const auto& [next, q] : enumerate_prefix_additions(g, v, pi, placed)) {
                grown[next] += p * q;
            }
        }
        placed[v] = 1;
        dist = std::move(grown);
    }
    return dist;
}

} // namespace rembed::oracle
