#ifndef REMBED_EMBEDDING_HPP
#define REMBED_EMBEDDING_HPP

#include <compare>
#include <vector>

#include "rembed/multigraph.hpp"

namespace rembed {

// Rotation system: for each vertex, a cyclic order of the darts based there,
// stored as a successor array (next_[d] = next dart clockwise at tail(d)).
// A system may cover only part of the graph (-1 marks absent darts); a
// complete system covers every dart.  The successor array is itself the
// canonical representation, so equality and ordering are plain vector
// comparisons.
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(int dart_count) : next_(dart_count, -1) {}

    // orders[v] lists the darts at v in cyclic sequence; every vertex order
    // must cover exactly the darts based at that vertex.
    static RotationSystem from_vertex_orders(const Multigraph& g,
                                             const std::vector<std::vector<int>>& orders);

    int dart_count() const { return static_cast<int>(next_.size()); }
    bool contains(int dart) const { return next_[dart] >= 0; }
    int successor(int dart) const { return next_[dart]; }
    const std::vector<int>& successors() const { return next_; }

    bool complete() const;
    int support_size() const;

    // Canonical listing of the cycle at v (starts at v's least present
    // dart); empty if v has no present darts.
    std::vector<int> rotation_at(const Multigraph& g, int v) const;

    // Low-level builders; insert_after requires `after` present.
    void set_singleton(int dart) { next_[dart] = dart; }
    void insert_after(int after, int dart);
    void set_cycle(const std::vector<int>& darts);

    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
    friend std::strong_ordering operator<=>(const RotationSystem& a, const RotationSystem& b) {
        return a.next_ <=> b.next_;
    }

private:
    std::vector<int> next_;
};

struct ComponentStats {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int genus = 0;
};

// Faces of an embedding: the orbits of d -> pi_{tail(mate(d))}(mate(d)).
struct FaceStructure {
    // Canonical: each face cycle starts at its least dart; faces sorted by
    // first dart.
    std::vector<std::vector<int>> faces;
    int face_count = 0;
    std::vector<ComponentStats> components; // of the traced subgraph
    int total_genus = 0;

    // Faces containing at least one dart based at v, restricted to v's darts
    // in facial order (used to compare against the face permutation at v).
    std::vector<std::vector<int>> faces_at(const Multigraph& g, int v) const;
};

// Full trace: rot must cover every dart of g, with each vertex's darts
// forming one cycle (a missing or foreign dart is an error).  Genus comes
// from Euler's formula per connected component and must be a nonnegative
// integer.
FaceStructure trace_faces(const Multigraph& g, const RotationSystem& rot);

// Trace of a partial system: the support must consist of whole edges and
// form valid vertex cycles; faces/components are those of the covered
// subgraph.
FaceStructure trace_faces_partial(const Multigraph& g, const RotationSystem& rot);

// Face count only, for hot loops (enumeration, Monte Carlo).  Skips
// structural validation (callers construct valid systems) but still checks
// the Euler invariant per component, so every traced embedding in a run is
// covered by the check.
int count_faces(const Multigraph& g, const RotationSystem& rot);

} // namespace rembed

#endif
