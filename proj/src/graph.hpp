#pragma once

#include <string>
#include <utility>
#include <vector>

namespace trilength {

/// Simple undirected graph on dense vertex ids 0..n-1.  Edges are stored
/// canonically: each pair ordered (u < v), the list sorted and duplicate-free.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int u, int v) const;
    /// Neighbour lists, each sorted ascending.
    std::vector<std::vector<int>> adjacency() const;
};

/// Builds a graph from possibly unordered/unsorted edge pairs, enforcing the
/// canonical representation.  Throws on self-loops, duplicates, or ids
/// outside [0, n).
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// Returns g plus one edge (keeps canonical form).
Graph with_edge(const Graph& g, int u, int v);

/// Parses either the plain-text edge list or the JSON object form.
///
/// Text: one `<u> <v>` pair per line, `#` starts a comment, blank lines are
/// ignored, and an optional `n=<int>` header raises the vertex count above
/// max-id+1 (isolated vertices).  Without a header the count is max-id+1.
///
/// JSON (detected by a leading `{`): {"n": int, "edges": [[u, v], ...]}.
///
/// Rejections name the offending line: malformed tokens, negative ids,
/// self-loops, duplicate edges, ids at or above a declared n.
Graph parse_graph(const std::string& text);

/// Serializes in the plain-text form (with header), parse round-trip stable.
std::string graph_to_text(const Graph& g);

/// Biconnected components.  Every edge lies in exactly one block; an
/// isolated vertex forms a singleton block.  The block-cut tree lists
/// (block index, cut vertex id) incidences and is a forest with one tree
/// per connected component.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;         // sorted vertex lists
    std::vector<int> cut_vertices;                // sorted
    std::vector<std::pair<int, int>> block_cut_tree;
};

BlockDecomposition blocks(const Graph& g);

} // namespace trilength
