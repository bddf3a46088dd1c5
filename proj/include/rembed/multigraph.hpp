#ifndef REMBED_MULTIGRAPH_HPP
#define REMBED_MULTIGRAPH_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rembed/numbers.hpp"
#include "rembed/partition.hpp"

namespace rembed {

// Dart-based multigraph.  Edge e owns darts 2e (based at its first endpoint)
// and 2e+1 (at its second); the edge involution is mate(d) = d ^ 1, a
// fixed-point-free involution on the darts.  Loops and parallel edges are
// allowed; isolated vertices are rejected (a 2-cell embedding needs every
// vertex on some edge).  Immutable after construction.
class Multigraph {
public:
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    static int mate(int dart) { return dart ^ 1; }
    static int edge_of(int dart) { return dart / 2; }

    int tail(int dart) const;                              // vertex the dart is based at
    int head(int dart) const { return tail(mate(dart)); }  // other end

    int degree(int v) const { return static_cast<int>(darts_at_[v].size()); }
    // Darts based at v, ascending.
    const std::vector<int>& darts_at(int v) const { return darts_at_[v]; }

    bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }
    bool has_loop_at(int v) const;
    bool has_loops() const;

    // Distinct other-endpoints of v's edges, ascending (includes v itself
    // when v has a loop).
    std::vector<int> neighbors(int v) const;
    int multiplicity(int u, int v) const;

    int component_count() const { return component_count_; }
    int component_of(int v) const { return component_of_[v]; }
    int component_vertices(int c) const { return comp_vertices_[c]; }
    int component_edges(int c) const { return comp_edges_[c]; }
    bool connected() const { return component_count_ == 1; }

    // prod_v (deg(v) - 1)!: the number of rotation systems.
    BigInt embedding_count() const;

    // Upper bound on the number of faces of any embedding,
    // E - V + 2 * components (all components planar).
    int max_faces() const;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> darts_at_;
    std::vector<int> component_of_;
    std::vector<int> comp_vertices_;
    std::vector<int> comp_edges_;
    int component_count_ = 0;
};

// Multigraph plus the vertex tokens it was built from.
struct LabeledGraph {
    Multigraph graph;
    std::vector<std::string> labels;           // vertex index -> token
    std::map<std::string, int> index;          // token -> vertex index

    int vertex_of(const std::string& token) const; // throws ParseError if unknown
};

// Vertices are tokens, indexed densely by first appearance.  Repeated pairs
// give parallel edges; "u u" gives a loop.  Rejects an empty edge list.
LabeledGraph build_graph(const std::vector<std::pair<std::string, std::string>>& edges);

// Edge-list text: one edge per line as "u v", '#' starts a comment line,
// blank lines ignored.
LabeledGraph read_edge_list(std::istream& in);
LabeledGraph read_edge_list_file(const std::string& path);

// Standard shapes used by the CLI and tests.
Multigraph make_dipole(int n_edges);
Multigraph make_bouquet(int n_loops);
Multigraph make_multistar(const Partition& lambda); // center 0, outer vertex i gets lambda_i edges
Multigraph make_path(int n_vertices);
Multigraph make_cycle(int n_vertices);
Multigraph make_complete(int n_vertices);
Multigraph make_complete_bipartite(int a, int b);
// Path on n_vertices with edge multiplicities alternating 1, mu, 1, mu, ...
Multigraph make_dipole_chain(int n_vertices, int mu);

} // namespace rembed

#endif
