#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace trilength {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw_parse("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) throw_parse("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0) throw_parse("negative vertex id");
        if (u >= n || v >= n)
            throw_parse("vertex id " + std::to_string(std::max(u, v)) +
                        " exceeds vertex count " + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw_parse("duplicate edge " + std::to_string(dup->first) + " " +
                    std::to_string(dup->second));
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

Graph with_edge(const Graph& g, int u, int v) {
    if (u == v) throw_parse("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0) throw_parse("negative vertex id");
    if (u >= g.n || v >= g.n)
        throw_parse("vertex id " + std::to_string(std::max(u, v)) +
                    " exceeds vertex count " + std::to_string(g.n));
    if (u > v) std::swap(u, v);
    Graph out = g;
    auto it = std::lower_bound(out.edges.begin(), out.edges.end(),
                               std::make_pair(u, v));
    if (it != out.edges.end() && *it == std::make_pair(u, v))
        throw_parse("duplicate edge " + std::to_string(u) + " " +
                    std::to_string(v));
    out.edges.insert(it, {u, v});
    return out;
}

namespace {

struct PendingEdge {
    int u, v;
    int line; // 1-based source line, 0 when from JSON
};

[[noreturn]] void fail_line(int line, const std::string& msg) {
    if (line > 0)
        throw_parse("line " + std::to_string(line) + ": " + msg);
    throw_parse(msg);
}

Graph assemble(long long declared_n, const std::vector<PendingEdge>& pending,
               int declared_line) {
    long long max_id = -1;
    for (const auto& e : pending) max_id = std::max({max_id, (long long)e.u, (long long)e.v});
    long long n = max_id + 1;
    if (declared_n >= 0) {
        if (declared_n < n)
            fail_line(declared_line, "declared n=" + std::to_string(declared_n) +
                                         " but vertex id " + std::to_string(max_id) +
                                         " is referenced");
        n = declared_n;
    }
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : pending) {
        int u = e.u, v = e.v;
        if (u == v) fail_line(e.line, "self-loop " + std::to_string(u) + " " + std::to_string(v));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            fail_line(e.line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back({u, v});
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array())
        throw_parse("JSON graph must be {\"n\": int, \"edges\": [[u, v], ...]}");
    long long declared = doc["n"].get<long long>();
    if (declared < 0) throw_parse("negative vertex count n=" + std::to_string(declared));
    std::vector<PendingEdge> pending;
    size_t idx = 0;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw_parse("edges[" + std::to_string(idx) + "] must be a pair of integers");
        long long u = item[0].get<long long>();
        long long v = item[1].get<long long>();
        if (u < 0 || v < 0)
            throw_parse("edges[" + std::to_string(idx) + "]: negative vertex id");
        pending.push_back({static_cast<int>(u), static_cast<int>(v), 0});
        ++idx;
    }
    return assemble(declared, pending, 0);
}

} // namespace

Graph parse_graph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_graph_json(text);

    long long declared_n = -1;
    int declared_line = 0;
    bool header_allowed = true;
    std::vector<PendingEdge> pending;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank or comment-only

        if (header_allowed && tok.rfind("n=", 0) == 0) {
            header_allowed = false;
            std::string num = tok.substr(2);
            try {
                size_t pos = 0;
                declared_n = std::stoll(num, &pos);
                if (pos != num.size()) throw std::invalid_argument(num);
            } catch (const std::exception&) {
                fail_line(lineno, "malformed header '" + tok + "'");
            }
            if (declared_n < 0) fail_line(lineno, "negative vertex count in header");
            declared_line = lineno;
            if (ls >> tok) fail_line(lineno, "unexpected token '" + tok + "' after header");
            continue;
        }
        header_allowed = false;

        long long u, v;
        std::string vtok;
        if (!(ls >> vtok)) fail_line(lineno, "expected two vertex ids");
        try {
            size_t pos = 0;
            u = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            pos = 0;
            v = std::stoll(vtok, &pos);
            if (pos != vtok.size()) throw std::invalid_argument(vtok);
        } catch (const std::exception&) {
            fail_line(lineno, "expected two vertex ids, got '" + tok + " " + vtok + "'");
        }
        if (ls >> tok) fail_line(lineno, "unexpected token '" + tok + "'");
        if (u < 0 || v < 0) fail_line(lineno, "negative vertex id");
        pending.push_back({static_cast<int>(u), static_cast<int>(v), lineno});
    }
    return assemble(declared_n, pending, declared_line);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

namespace {

/// Iterative Hopcroft-Tarjan lowpoint search.  Blocks are split off the edge
/// stack whenever a child subtree cannot reach above the current vertex.
struct BlockFinder {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::set<int>> block_sets;
    std::vector<bool> is_cut;
    int counter = 0;

    explicit BlockFinder(const std::vector<std::vector<int>>& a)
        : adj(a), num(a.size(), -1), low(a.size(), 0), is_cut(a.size(), false) {}

    void pop_block(int u, int v) {
        std::set<int> verts;
        while (!estack.empty()) {
            auto e = estack.back();
            estack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == std::make_pair(u, v)) break;
        }
        block_sets.push_back(std::move(verts));
    }

    void run(int root) {
        struct Frame {
            int v, parent;
            size_t i = 0;
        };
        std::vector<Frame> stack{{root, -1}};
        num[root] = low[root] = counter++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.i < adj[v].size()) {
                int w = adj[v][f.i++];
                if (w == f.parent) {
                    // Skip one occurrence of the tree edge (simple graph: only one).
                    continue;
                }
                if (num[w] == -1) {
                    estack.push_back({v, w});
                    num[w] = low[w] = counter++;
                    stack.push_back({w, v});
                } else if (num[w] < num[v]) {
                    estack.push_back({v, w});
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[v]);
                if (p.v == root) ++root_children;
                if (low[v] >= num[p.v]) {
                    if (p.v != root) is_cut[p.v] = true;
                    pop_block(p.v, v);
                }
            }
        }
        if (root_children >= 2) is_cut[root] = true;
    }
};

} // namespace

BlockDecomposition blocks(const Graph& g) {
    auto adj = g.adjacency();
    BlockFinder finder(adj);
    for (int v = 0; v < g.n; ++v) {
        if (finder.num[v] != -1) continue;
        if (adj[v].empty()) {
            finder.num[v] = finder.counter++;
            finder.block_sets.push_back({v});
            continue;
        }
        finder.run(v);
    }

    BlockDecomposition out;
    for (auto& s : finder.block_sets)
        out.blocks.emplace_back(s.begin(), s.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    for (int v = 0; v < g.n; ++v)
        if (finder.is_cut[v]) out.cut_vertices.push_back(v);
    for (size_t b = 0; b < out.blocks.size(); ++b)
        for (int v : out.blocks[b])
            if (finder.is_cut[v]) out.block_cut_tree.push_back({static_cast<int>(b), v});
    return out;
}

} // namespace trilength
