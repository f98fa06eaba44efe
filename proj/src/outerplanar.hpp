#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace trilength {

struct OuterplanarVerdict {
    bool outerplanar = false;
    std::string reason; // filled on rejection
};

/// Decides outerplanarity block by block with an ear-collapsing degree-2
/// reduction (see reduce_block in the implementation).  Accepts the empty
/// graph and all graphs with n <= 2.
OuterplanarVerdict is_outerplanar(const Graph& g);

/// True iff g is a maximal outerplanar graph ("fan-triangulated": built from
/// a triangle by repeatedly attaching a vertex across an outer edge).
/// Equivalent test: 2n-3 edges, one biconnected block, and the ear reduction
/// plucks g down to a single edge without ever inventing a chord.
bool pluck_check(const Graph& g);

/// Adds edges until g (outerplanar, n >= 3) is biconnected, keeping it
/// outerplanar at every step.  Deterministic: each round picks the first
/// candidate pair (lexicographic, components joined before cut vertices are
/// resolved) whose addition passes is_outerplanar and lowers the potential
/// 2*(#components) + #blocks.
Graph augment_biconnected(const Graph& g);

/// A triangulated outerplanar graph together with its face structure:
/// graph          -- maximal outerplanar supergraph of the input
/// faces          -- vertex triples, one per bounded face
/// face_adjacency -- pairs of face indices sharing an edge (forms a tree)
/// boundary       -- the outer cycle in cyclic order
/// added_edges    -- edges of graph not present in the input it was built from
struct DeltaTree {
    Graph graph;
    std::vector<std::array<int, 3>> faces;
    std::vector<std::pair<int, int>> face_adjacency;
    std::vector<int> boundary;
    std::vector<std::pair<int, int>> added_edges;
};

/// Triangulates a biconnected outerplanar graph (n >= 3) by recording the
/// triangles the ear reduction eliminates.  Rejects inputs that are not
/// biconnected or not outerplanar.
DeltaTree triangulate_block(const Graph& g);

/// Full preparation of an arbitrary outerplanar input for embedding:
/// augment to biconnected, then triangulate.  n == 2 is handled by adding
/// one synthetic vertex to close a triangle (reported in synthetic_vertex);
/// n <= 1 needs no tree and yields nullopt tree with the graph untouched.
struct DeltaTreeBuild {
    std::optional<DeltaTree> tree;
    int synthetic_vertex = -1; // id of the added vertex for n == 2, else -1
};

DeltaTreeBuild build_delta_tree(const Graph& g);

/// The face-adjacency tree of a DeltaTree, rooted and oriented for the
/// embedding walk.  The root is the smallest-index leaf face.  roles[f] lists
/// face f's vertices as (left, right, apex): (left, right) is the edge shared
/// with the parent (for the root: the edge shared with its single child is
/// (right, apex)), and each child hangs across (left, apex) or (right, apex).
struct FaceTree {
    int root = 0;
    std::vector<int> parent;                 // -1 at root
    std::vector<std::vector<int>> children;  // sorted by face index
    std::vector<std::array<int, 3>> roles;   // (left, right, apex) per face
};

FaceTree face_tree(const DeltaTree& dt);

} // namespace trilength
