#include "rembed/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "rembed/errors.hpp"

namespace rembed {

namespace {

// union-find over vertices
int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

} // namespace

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ <= 0) throw PreconditionError("graph needs at least one vertex");
    if (edges_.empty()) throw PreconditionError("graph needs at least one edge");

    darts_at_.resize(vertex_count_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
            throw PreconditionError("edge endpoint outside vertex range");
        }
        darts_at_[u].push_back(static_cast<int>(2 * e));
        darts_at_[v].push_back(static_cast<int>(2 * e + 1));
    }
    for (int v = 0; v < vertex_count_; ++v) {
        if (darts_at_[v].empty()) {
            throw PreconditionError("isolated vertex " + std::to_string(v) +
                                    " (every vertex must lie on an edge)");
        }
    }

    std::vector<int> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [u, v] : edges_) {
        parent[find_root(parent, u)] = find_root(parent, v);
    }
    component_of_.assign(vertex_count_, -1);
    for (int v = 0; v < vertex_count_; ++v) {
        int root = find_root(parent, v);
        if (component_of_[root] < 0) {
            component_of_[root] = component_count_++;
        }
        component_of_[v] = component_of_[root];
    }
    comp_vertices_.assign(component_count_, 0);
    comp_edges_.assign(component_count_, 0);
    for (int v = 0; v < vertex_count_; ++v) ++comp_vertices_[component_of_[v]];
    for (auto [u, v] : edges_) ++comp_edges_[component_of_[u]];
}

int Multigraph::tail(int dart) const {
    const auto& e = edges_[edge_of(dart)];
    return (dart & 1) == 0 ? e.first : e.second;
}

bool Multigraph::has_loop_at(int v) const {
    for (int d : darts_at_[v]) {
        if (head(d) == v) return true;
    }
    return false;
}

bool Multigraph::has_loops() const {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (is_loop(static_cast<int>(e))) return true;
    }
    return false;
}

std::vector<int> Multigraph::neighbors(int v) const {
    std::vector<int> out;
    for (int d : darts_at_[v]) out.push_back(head(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Multigraph::multiplicity(int u, int v) const {
    int count = 0;
    for (auto [a, b] : edges_) {
        if ((a == u && b == v) || (a == v && b == u)) ++count;
    }
    return count;
}

BigInt Multigraph::embedding_count() const {
    BigInt total = 1;
    for (int v = 0; v < vertex_count_; ++v) total *= factorial(degree(v) - 1);
    return total;
}

int Multigraph::max_faces() const {
    return edge_count() - vertex_count() + 2 * component_count();
}

int LabeledGraph::vertex_of(const std::string& token) const {
    auto it = index.find(token);
    if (it == index.end()) throw ParseError("unknown vertex token '" + token + "'");
    return it->second;
}

LabeledGraph build_graph(const std::vector<std::pair<std::string, std::string>>& edges) {
    if (edges.empty()) throw ParseError("empty edge list");
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    auto intern = [&](const std::string& token) {
        auto [it, fresh] = index.try_emplace(token, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(token);
        return it->second;
    };
    std::vector<std::pair<int, int>> indexed;
    indexed.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        int ui = intern(u);
        int vi = intern(v);
        indexed.emplace_back(ui, vi);
    }
    return LabeledGraph{Multigraph(static_cast<int>(labels.size()), std::move(indexed)),
                        std::move(labels), std::move(index)};
}

LabeledGraph read_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string u, v, extra;
        if (!(fields >> u)) continue; // blank
        if (!(fields >> v) || (fields >> extra)) {
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected exactly two vertex tokens");
        }
        edges.emplace_back(std::move(u), std::move(v));
    }
    return build_graph(edges);
}

LabeledGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list '" + path + "'");
    return read_edge_list(in);
}

Multigraph make_dipole(int n_edges) {
    if (n_edges < 1) throw PreconditionError("dipole needs at least one edge");
    std::vector<std::pair<int, int>> edges(n_edges, {0, 1});
    return Multigraph(2, std::move(edges));
}

Multigraph make_bouquet(int n_loops) {
    if (n_loops < 1) throw PreconditionError("bouquet needs at least one loop");
    std::vector<std::pair<int, int>> edges(n_loops, {0, 0});
    return Multigraph(1, std::move(edges));
}

Multigraph make_multistar(const Partition& lambda) {
    if (lambda.empty()) throw PreconditionError("multistar needs a nonempty partition");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.parts()[i]; ++j) edges.emplace_back(0, i + 1);
    }
    return Multigraph(lambda.length() + 1, std::move(edges));
}

Multigraph make_path(int n_vertices) {
    if (n_vertices < 2) throw PreconditionError("path needs at least two vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n_vertices; ++i) edges.emplace_back(i, i + 1);
    return Multigraph(n_vertices, std::move(edges));
}

Multigraph make_cycle(int n_vertices) {
    if (n_vertices < 3) throw PreconditionError("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_vertices; ++i) edges.emplace_back(i, (i + 1) % n_vertices);
    return Multigraph(n_vertices, std::move(edges));
}

Multigraph make_complete(int n_vertices) {
    if (n_vertices < 2) throw PreconditionError("complete graph needs at least two vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_vertices; ++u) {
        for (int v = u + 1; v < n_vertices; ++v) edges.emplace_back(u, v);
    }
    return Multigraph(n_vertices, std::move(edges));
}

Multigraph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("bipartite sides must be nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    }
    return Multigraph(a + b, std::move(edges));
}

Multigraph make_dipole_chain(int n_vertices, int mu) {
    if (n_vertices < 2) throw PreconditionError("chain needs at least two vertices");
    if (mu < 2) throw PreconditionError("chain multiplicity must be >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n_vertices; ++i) {
        int copies = (i % 2 == 0) ? 1 : mu;
        for (int c = 0; c < copies; ++c) edges.emplace_back(i, i + 1);
    }
    return Multigraph(n_vertices, std::move(edges));
}

} // namespace rembed
