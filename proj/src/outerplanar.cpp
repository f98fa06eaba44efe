#include "outerplanar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace trilength {

namespace {

std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

/// Outcome of the ear-by-ear reduction of one biconnected block.
struct Reduction {
    bool accepted = false;
    std::string reason;
    /// Triangles in elimination order, each sorted ascending.
    std::vector<std::array<int, 3>> faces;
    /// Chords inserted where an ear's far endpoints were not yet adjacent.
    std::vector<std::pair<int, int>> added;
};

/// Repeatedly removes the smallest-id degree-2 vertex v, fusing its
/// neighbours u, w into a triangle face.  Each surviving edge carries a
/// load: one if it was inserted rather than given, plus one per triangle
/// already fused onto it.  A load above two means three internally
/// disjoint u-w paths besides the edge itself; a load of exactly two is
/// only admissible when u, w and one last ear are all that remain.  Either
/// way the offending configuration contains a subdivided K4 or K23, so the
/// block is rejected.  Blocks that run out of degree-2 vertices early are
/// rejected for the same reason: a fan of ears always exposes one if the
/// block has an outerplanar layout.
Reduction reduce_block(const std::vector<int>& vertices,
                       const std::vector<std::pair<int, int>>& edges) {
    Reduction out;
    if (vertices.size() < 3) {
        out.accepted = true;
        return out;
    }

    std::map<int, std::set<int>> adj;
    for (int v : vertices) adj[v];
    std::map<std::pair<int, int>, int> load;
    for (auto [u, w] : edges) {
        adj[u].insert(w);
        adj[w].insert(u);
        load[ordered(u, w)] = 0;
    }

    std::set<int> deg2;
    for (const auto& [v, nbrs] : adj)
        if (nbrs.size() == 2) deg2.insert(v);

    auto update_deg2 = [&](int v) {
        if (adj[v].size() == 2)
            deg2.insert(v);
        else
            deg2.erase(v);
    };

    std::size_t remaining = vertices.size();
    while (remaining > 2) {
        if (deg2.empty()) {
            std::ostringstream os;
            os << "no degree-2 vertex left among " << remaining
               << " vertices; the block interlocks like K4";
            out.reason = os.str();
            return out;
        }
        int v = *deg2.begin();
        deg2.erase(deg2.begin());
        auto it = adj[v].begin();
        int u = *it++;
        int w = *it;

        load.erase(ordered(v, u));
        load.erase(ordered(v, w));
        adj[u].erase(v);
        adj[w].erase(v);
        adj.erase(v);
        --remaining;

        auto key = ordered(u, w);
        auto lit = load.find(key);
        if (lit == load.end()) {
            lit = load.emplace(key, 1).first;
            out.added.push_back(key);
            adj[u].insert(w);
            adj[w].insert(u);
        } else {
            ++lit->second;
        }

        std::array<int, 3> tri{v, u, w};
        std::sort(tri.begin(), tri.end());
        out.faces.push_back(tri);

        if (lit->second > 2 || (lit->second == 2 && remaining > 2)) {
            std::ostringstream os;
            os << "edge (" << key.first << ", " << key.second
               << ") would separate three or more ears; the block contains a "
                  "K4 or K23 pattern";
            out.reason = os.str();
            return out;
        }

        update_deg2(u);
        update_deg2(w);
    }

    out.accepted = true;
    return out;
}

/// Edges of g restricted to the given vertex set.
std::vector<std::pair<int, int>> induced_edges(const Graph& g,
                                               const std::vector<int>& verts) {
    std::set<int> in(verts.begin(), verts.end());
    std::vector<std::pair<int, int>> out;
    for (auto [u, w] : g.edges)
        if (in.count(u) && in.count(w)) out.push_back({u, w});
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : adj[v])
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

/// Twice the component count plus the block count: strictly decreases with
/// every admissible augmentation edge, and bottoms out at 3 exactly when
/// the graph is one biconnected block.
long potential(const Graph& g) {
    return 2 * static_cast<long>(components(g).size()) +
           static_cast<long>(blocks(g).blocks.size());
}

} // namespace

OuterplanarVerdict is_outerplanar(const Graph& g) {
    // Any outerplanar graph has at most 2n - 3 edges; cheap global prune.
    if (g.n >= 2 &&
        g.edges.size() > static_cast<std::size_t>(2 * g.n - 3)) {
        std::ostringstream os;
        os << "too many edges: " << g.edges.size() << " > 2*" << g.n << "-3";
        return {false, os.str()};
    }
    auto bd = blocks(g);
    for (const auto& blk : bd.blocks) {
        if (blk.size() < 3) continue;
        auto es = induced_edges(g, blk);
        if (es.size() > 2 * blk.size() - 3) {
            std::ostringstream os;
            os << "block containing vertex " << blk.front()
               << " has too many edges";
            return {false, os.str()};
        }
        auto red = reduce_block(blk, es);
        if (!red.accepted) return {false, red.reason};
    }
    return {true, ""};
}

bool pluck_check(const Graph& g) {
    if (g.n < 3) return false;
    if (g.edges.size() != static_cast<std::size_t>(2 * g.n - 3)) return false;
    auto bd = blocks(g);
    if (bd.blocks.size() != 1) return false;
    auto red = reduce_block(bd.blocks.front(), g.edges);
    return red.accepted && red.added.empty();
}

Graph augment_biconnected(const Graph& g) {
    if (g.n < 3) throw_internal("augment_biconnected needs at least 3 vertices");
    Graph cur = g;
    while (true) {
        auto comps = components(cur);
        auto bd = blocks(cur);
        if (comps.size() == 1 && bd.blocks.size() == 1) return cur;

        // Collect candidate endpoints (u, w) whose edge is sure to lower the
        // potential, then accept the first one that keeps the graph
        // outerplanar.
        std::vector<std::pair<int, int>> cands;
        if (comps.size() > 1) {
            // Bridge the two components with the smallest minima; such an
            // edge can never create a forbidden pattern.
            const auto& c1 = comps[0];
            const auto& c2 = comps[1];
            for (int u : c1)
                for (int w : c2) cands.push_back(ordered(u, w));
        } else {
            // One component, several blocks: pick the smallest cut vertex and
            // the first two blocks through it, and tie them together.  Edges
            // between neighbours of the cut vertex sit on the two block
            // boundaries and are tried first.
            int c = bd.cut_vertices.front();
            std::vector<const std::vector<int>*> at_c;
            for (const auto& blk : bd.blocks)
                if (std::binary_search(blk.begin(), blk.end(), c))
                    at_c.push_back(&blk);
            if (at_c.size() < 2)
                throw_internal("cut vertex not shared by two blocks");
            auto adjc = cur.adjacency()[c];
            std::set<int> adjset(adjc.begin(), adjc.end());
            auto side = [&](const std::vector<int>* blk, bool nbrs_only) {
                std::vector<int> out;
                for (int v : *blk) {
                    if (v == c) continue;
                    if (nbrs_only && !adjset.count(v)) continue;
                    out.push_back(v);
                }
                return out;
            };
            for (bool nbrs_only : {true, false})
                for (int u : side(at_c[0], nbrs_only))
                    for (int w : side(at_c[1], nbrs_only))
                        cands.push_back(ordered(u, w));
        }

        long before = potential(cur);
        bool advanced = false;
        for (auto [u, w] : cands) {
            if (cur.has_edge(u, w)) continue;
            Graph next = with_edge(cur, u, w);
            if (!is_outerplanar(next).outerplanar) continue;
            if (potential(next) >= before) continue;
            cur = std::move(next);
            advanced = true;
            break;
        }
        if (!advanced)
            throw_internal("no admissible augmentation edge found");
    }
}

DeltaTree triangulate_block(const Graph& g) {
    if (g.n < 3) throw_domain("triangulation needs at least 3 vertices");
    auto bd = blocks(g);
    if (bd.blocks.size() != 1 ||
        bd.blocks.front().size() != static_cast<std::size_t>(g.n))
        throw_domain("graph is not a single biconnected block");

    auto red = reduce_block(bd.blocks.front(), g.edges);
    if (!red.accepted) throw_domain("graph is not outerplanar: " + red.reason);

    DeltaTree dt;
    dt.added_edges = red.added;
    {
        auto all = g.edges;
        all.insert(all.end(), red.added.begin(), red.added.end());
        dt.graph = make_graph(g.n, all);
    }
    dt.faces = red.faces;

    if (dt.faces.size() != static_cast<std::size_t>(g.n - 2))
        throw_internal("triangulation produced a wrong face count");
    if (dt.graph.edges.size() != static_cast<std::size_t>(2 * g.n - 3))
        throw_internal("triangulation produced a wrong edge count");

    // Faces sharing an edge are adjacent; shared edges are the chords, the
    // rest is the outer boundary.
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (std::size_t f = 0; f < dt.faces.size(); ++f) {
        const auto& t = dt.faces[f];
        edge_faces[ordered(t[0], t[1])].push_back(static_cast<int>(f));
        edge_faces[ordered(t[0], t[2])].push_back(static_cast<int>(f));
        edge_faces[ordered(t[1], t[2])].push_back(static_cast<int>(f));
    }
    std::map<int, std::vector<int>> boundary_adj;
    for (const auto& [e, fs] : edge_faces) {
        if (fs.size() > 2) throw_internal("edge shared by three faces");
        if (fs.size() == 2)
            dt.face_adjacency.push_back({std::min(fs[0], fs[1]),
                                         std::max(fs[0], fs[1])});
        else {
            boundary_adj[e.first].push_back(e.second);
            boundary_adj[e.second].push_back(e.first);
        }
    }
    std::sort(dt.face_adjacency.begin(), dt.face_adjacency.end());
    if (dt.face_adjacency.size() + 1 != dt.faces.size())
        throw_internal("face adjacencies do not form a tree");

    // Walk the outer cycle from vertex 0 towards its smaller neighbour.
    for (auto& [v, nbrs] : boundary_adj) {
        if (nbrs.size() != 2) throw_internal("outer boundary is not a cycle");
        std::sort(nbrs.begin(), nbrs.end());
    }
    if (static_cast<int>(boundary_adj.size()) != g.n)
        throw_internal("outer boundary misses a vertex");
    int prev = -1, cur = 0;
    do {
        dt.boundary.push_back(cur);
        const auto& nb = boundary_adj[cur];
        int next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    } while (cur != 0);
    if (static_cast<int>(dt.boundary.size()) != g.n)
        throw_internal("outer boundary walk is short");

    return dt;
}

DeltaTreeBuild build_delta_tree(const Graph& g) {
    auto verdict = is_outerplanar(g);
    if (!verdict.outerplanar)
        throw_domain("graph is not outerplanar: " + verdict.reason);

    DeltaTreeBuild out;
    if (g.n <= 1) return out;

    if (g.n == 2) {
        // Too small to triangulate: close a triangle with one extra vertex.
        out.synthetic_vertex = 2;
        Graph tri = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
        out.tree = triangulate_block(tri);
        auto& dt = *out.tree;
        dt.added_edges.clear();
        for (auto e : dt.graph.edges)
            if (!g.has_edge(e.first, e.second)) dt.added_edges.push_back(e);
        return out;
    }

    Graph aug = augment_biconnected(g);
    out.tree = triangulate_block(aug);
    auto& dt = *out.tree;
    dt.added_edges.clear();
    for (auto e : dt.graph.edges)
        if (!g.has_edge(e.first, e.second)) dt.added_edges.push_back(e);
    return out;
}

FaceTree face_tree(const DeltaTree& dt) {
    const int nf = static_cast<int>(dt.faces.size());
    if (nf == 0) throw_internal("face tree of an empty triangulation");

    std::vector<std::vector<int>> adj(nf);
    for (auto [a, b] : dt.face_adjacency) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());

    FaceTree ft;
    ft.root = -1;
    for (int f = 0; f < nf; ++f)
        if (adj[f].size() <= 1) {
            ft.root = f;
            break;
        }
    if (ft.root < 0) throw_internal("face adjacency tree has no leaf");

    ft.parent.assign(nf, -1);
    ft.children.assign(nf, {});
    ft.roles.assign(nf, {-1, -1, -1});

    // Breadth-first orientation away from the root leaf.
    std::vector<int> order{ft.root};
    std::vector<char> seen(nf, 0);
    seen[ft.root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int f = order[i];
        for (int c : adj[f])
            if (!seen[c]) {
                seen[c] = 1;
                ft.parent[c] = f;
                ft.children[f].push_back(c);
                order.push_back(c);
            }
    }
    if (order.size() != static_cast<std::size_t>(nf))
        throw_internal("face adjacency tree is disconnected");

    auto shared_pair = [&](int f, int p) {
        std::array<int, 2> s{};
        int k = 0;
        for (int a : dt.faces[f])
            for (int b : dt.faces[p])
                if (a == b) {
                    if (k == 2) throw_internal("faces share three vertices");
                    s[k++] = a;
                }
        if (k != 2) throw_internal("adjacent faces share no edge");
        if (s[0] > s[1]) std::swap(s[0], s[1]);
        return s;
    };
    auto third_vertex = [&](int f, int a, int b) {
        for (int v : dt.faces[f])
            if (v != a && v != b) return v;
        throw_internal("degenerate face");
        return -1;
    };

    // Root roles: when the root has a child, the shared edge takes the
    // (right, apex) slots in ascending order so the child hangs across it;
    // otherwise plain ascending order.
    if (ft.children[ft.root].empty()) {
        auto t = dt.faces[ft.root];
        ft.roles[ft.root] = {t[0], t[1], t[2]};
    } else {
        auto s = shared_pair(ft.children[ft.root].front(), ft.root);
        ft.roles[ft.root] = {third_vertex(ft.root, s[0], s[1]), s[0], s[1]};
    }

    // Children inherit (left, right) = (parent slot vertex, parent apex) and
    // introduce their own vertex as apex.
    for (std::size_t i = 1; i < order.size(); ++i) {
        int f = order[i];
        int p = ft.parent[f];
        auto s = shared_pair(f, p);
        auto [pl, pr, pa] = ft.roles[p];
        int slot;
        if ((s[0] == std::min(pl, pa) && s[1] == std::max(pl, pa)))
            slot = pl;
        else if ((s[0] == std::min(pr, pa) && s[1] == std::max(pr, pa)))
            slot = pr;
        else {
            throw_internal("child face does not sit on an apex edge");
            return ft;
        }
        ft.roles[f] = {slot, pa, third_vertex(f, s[0], s[1])};
    }

    return ft;
}

} // namespace trilength
