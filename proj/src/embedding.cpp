#include "rembed/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rembed/errors.hpp"

namespace rembed {

RotationSystem RotationSystem::from_vertex_orders(const Multigraph& g,
                                                  const std::vector<std::vector<int>>& orders) {
    if (static_cast<int>(orders.size()) != g.vertex_count()) {
        throw PreconditionError("vertex order list does not match the graph");
    }
    RotationSystem rot(g.dart_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& cycle = orders[v];
        if (cycle.empty()) continue;
        std::vector<int> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.darts_at(v)) {
            throw PreconditionError("vertex order does not cover exactly the darts at vertex " +
                                    std::to_string(v));
        }
        rot.set_cycle(cycle);
    }
    return rot;
}

bool RotationSystem::complete() const {
    return std::find(next_.begin(), next_.end(), -1) == next_.end();
}

int RotationSystem::support_size() const {
    return static_cast<int>(next_.size() -
                            std::count(next_.begin(), next_.end(), -1));
}

std::vector<int> RotationSystem::rotation_at(const Multigraph& g, int v) const {
    int start = -1;
    for (int d : g.darts_at(v)) {
        if (contains(d)) {
            start = d;
            break;
        }
    }
    std::vector<int> cycle;
    if (start < 0) return cycle;
    int d = start;
    do {
        cycle.push_back(d);
        d = next_[d];
        if (d < 0 || cycle.size() > g.darts_at(v).size()) {
            throw PreconditionError("broken rotation at vertex " + std::to_string(v));
        }
    } while (d != start);
    return cycle;
}

void RotationSystem::insert_after(int after, int dart) {
    next_[dart] = next_[after];
    next_[after] = dart;
}

void RotationSystem::set_cycle(const std::vector<int>& darts) {
    for (std::size_t i = 0; i < darts.size(); ++i) {
        next_[darts[i]] = darts[(i + 1) % darts.size()];
    }
}

namespace {

void check_vertex_cycles(const Multigraph& g, const RotationSystem& rot, bool partial) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& darts = g.darts_at(v);
        std::vector<int> present;
        for (int d : darts) {
            if (rot.contains(d)) present.push_back(d);
        }
        if (present.empty()) {
            if (!partial) throw PreconditionError("rotation missing all darts at vertex " +
                                                  std::to_string(v));
            continue;
        }
        if (!partial && present.size() != darts.size()) {
            throw PreconditionError("rotation missing a dart at vertex " + std::to_string(v));
        }
        // present darts must form a single cycle through exactly themselves
        std::size_t steps = 0;
        int d = present.front();
        do {
            int n = rot.successor(d);
            if (n < 0) throw PreconditionError("rotation cycle leaves the support");
            if (g.tail(n) != v) {
                throw PreconditionError("rotation at vertex " + std::to_string(v) +
                                        " contains a foreign dart");
            }
            if (!std::binary_search(present.begin(), present.end(), n)) {
                throw PreconditionError("rotation at vertex " + std::to_string(v) +
                                        " skips a present dart");
            }
            d = n;
            ++steps;
        } while (d != present.front() && steps <= present.size());
        if (steps != present.size()) {
            throw PreconditionError("darts at vertex " + std::to_string(v) +
                                    " do not form a single cycle");
        }
    }
}

int find_ufroot(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

FaceStructure trace_impl(const Multigraph& g, const RotationSystem& rot, bool partial) {
    if (rot.dart_count() != g.dart_count()) {
        throw PreconditionError("rotation system built for a different graph");
    }
    if (partial) {
        for (int d = 0; d < g.dart_count(); ++d) {
            if (rot.contains(d) != rot.contains(Multigraph::mate(d))) {
                throw PreconditionError("rotation support must consist of whole edges");
            }
        }
    }
    check_vertex_cycles(g, rot, partial);

    FaceStructure fs;
    std::vector<char> visited(g.dart_count(), 0);
    for (int start = 0; start < g.dart_count(); ++start) {
        if (visited[start] || !rot.contains(start)) continue;
        std::vector<int> face;
        int d = start;
        do {
            visited[d] = 1;
            face.push_back(d);
            d = rot.successor(Multigraph::mate(d));
        } while (d != start);
        fs.faces.push_back(std::move(face));
    }
    fs.face_count = static_cast<int>(fs.faces.size());

    // Components of the traced subgraph; with a complete rotation these are
    // the graph's own components.
    std::vector<int> comp_of(g.vertex_count(), -1);
    std::vector<int> comp_vertices;
    std::vector<int> comp_edges;
    int comp_count = 0;
    if (!partial) {
        comp_count = g.component_count();
        comp_vertices.resize(comp_count);
        comp_edges.resize(comp_count);
        for (int v = 0; v < g.vertex_count(); ++v) {
            comp_of[v] = g.component_of(v);
            ++comp_vertices[comp_of[v]];
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            ++comp_edges[g.component_of(g.edges()[e].first)];
        }
    } else {
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!rot.contains(2 * e)) continue;
            parent[find_ufroot(parent, g.edges()[e].first)] =
                find_ufroot(parent, g.edges()[e].second);
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool present = false;
            for (int d : g.darts_at(v)) present = present || rot.contains(d);
            if (!present) continue;
            int root = find_ufroot(parent, v);
            if (comp_of[root] < 0) {
                comp_of[root] = comp_count++;
                comp_vertices.push_back(0);
                comp_edges.push_back(0);
            }
            comp_of[v] = comp_of[root];
            ++comp_vertices[comp_of[v]];
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (rot.contains(2 * e)) ++comp_edges[comp_of[g.edges()[e].first]];
        }
    }

    std::vector<int> comp_faces(comp_count, 0);
    for (const auto& face : fs.faces) {
        ++comp_faces[comp_of[g.tail(face.front())]];
    }
    fs.components.resize(comp_count);
    for (int c = 0; c < comp_count; ++c) {
        int euler = comp_edges[c] - comp_vertices[c] + 2 - comp_faces[c];
        if (euler < 0 || euler % 2 != 0) {
            throw std::logic_error("Euler invariant violated while tracing faces");
        }
        fs.components[c] = ComponentStats{comp_vertices[c], comp_edges[c], comp_faces[c],
                                          euler / 2};
        fs.total_genus += euler / 2;
    }
    return fs;
}

} // namespace

FaceStructure trace_faces(const Multigraph& g, const RotationSystem& rot) {
    return trace_impl(g, rot, false);
}

FaceStructure trace_faces_partial(const Multigraph& g, const RotationSystem& rot) {
    return trace_impl(g, rot, true);
}

std::vector<std::vector<int>> FaceStructure::faces_at(const Multigraph& g, int v) const {
    std::vector<std::vector<int>> out;
    for (const auto& face : faces) {
        std::vector<int> mine;
        for (int d : face) {
            if (g.tail(d) == v) mine.push_back(d);
        }
        if (mine.empty()) continue;
        auto min_it = std::min_element(mine.begin(), mine.end());
        std::rotate(mine.begin(), min_it, mine.end());
        out.push_back(std::move(mine));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

int count_faces(const Multigraph& g, const RotationSystem& rot) {
    thread_local std::vector<char> visited;
    thread_local std::vector<int> comp_faces;
    visited.assign(g.dart_count(), 0);
    comp_faces.assign(g.component_count(), 0);

    int total = 0;
    const auto& next = rot.successors();
    for (int start = 0; start < g.dart_count(); ++start) {
        if (visited[start]) continue;
        ++total;
        ++comp_faces[g.component_of(g.tail(start))];
        int d = start;
        do {
            visited[d] = 1;
            d = next[d ^ 1];
        } while (d != start);
    }
    for (int c = 0; c < g.component_count(); ++c) {
        int euler = g.component_edges(c) - g.component_vertices(c) + 2 - comp_faces[c];
        if (euler < 0 || euler % 2 != 0) {
            throw std::logic_error("Euler invariant violated while counting faces");
        }
    }
    return total;
}

} // namespace rembed
