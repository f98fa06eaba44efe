#include "oracle.hpp"

#include <cstdint>

#include "errors.hpp"

namespace trilength {

bool has_k4_or_k23_minor(const Graph& g) {
    if (g.n > 10) throw_limit("minor oracle supports at most 10 vertices");
    if (g.n < 4) return false;
    // Anything beyond 2n - 3 edges already forces one of the two minors.
    if (g.edges.size() > static_cast<std::size_t>(2 * g.n - 3)) return true;

    const int n = g.n;
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }

    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> nbrmask(full + 1, 0);
    std::vector<std::uint32_t> conn;
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::uint32_t nm = 0;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1u) nm |= nbr[v];
        nbrmask[m] = nm & ~m;

        std::uint32_t reach = m & (~m + 1); // lowest bit
        for (;;) {
            std::uint32_t grow = reach;
            for (int v = 0; v < n; ++v)
                if (reach >> v & 1u) grow |= nbr[v];
            grow &= m;
            if (grow == reach) break;
            reach = grow;
        }
        if (reach == m) conn.push_back(m);
    }

    auto touches = [&](std::uint32_t a, std::uint32_t b) {
        return (nbrmask[a] & b) != 0;
    };

    // K4: four disjoint connected branch sets, pairwise touching.
    const std::size_t C = conn.size();
    for (std::size_t i = 0; i < C; ++i) {
        std::uint32_t a = conn[i];
        for (std::size_t j = i + 1; j < C; ++j) {
            std::uint32_t b = conn[j];
            if ((a & b) || !touches(a, b)) continue;
            for (std::size_t k = j + 1; k < C; ++k) {
                std::uint32_t c = conn[k];
                if ((c & (a | b)) || !touches(a, c) || !touches(b, c))
                    continue;
                for (std::size_t l = k + 1; l < C; ++l) {
                    std::uint32_t d = conn[l];
                    if ((d & (a | b | c))) continue;
                    if (touches(a, d) && touches(b, d) && touches(c, d))
                        return true;
                }
            }
        }
    }

    // K23: two disjoint connected hubs plus three disjoint connected branch
    // sets, each touching both hubs.  Extra adjacencies are harmless.
    if (n >= 5) {
        for (std::size_t i = 0; i < C; ++i) {
            std::uint32_t a1 = conn[i];
            for (std::size_t j = i + 1; j < C; ++j) {
                std::uint32_t a2 = conn[j];
                if (a1 & a2) continue;
                std::vector<std::uint32_t> mids;
                for (std::uint32_t m : conn)
                    if (!(m & (a1 | a2)) && touches(m, a1) && touches(m, a2))
                        mids.push_back(m);
                const std::size_t M = mids.size();
                for (std::size_t p = 0; p < M; ++p)
                    for (std::size_t q = p + 1; q < M; ++q) {
                        if (mids[p] & mids[q]) continue;
                        std::uint32_t pq = mids[p] | mids[q];
                        for (std::size_t r = q + 1; r < M; ++r)
                            if (!(mids[r] & pq)) return true;
                    }
            }
        }
    }
    return false;
}

Graph random_delta_tree(int n, SplitMix64& rng) {
    if (n < 3) throw_domain("a maximal outerplanar graph needs 3 vertices");

    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::pair<int, int>> boundary{{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < n; ++v) {
        auto slot = static_cast<std::size_t>(
            rng.next_below(static_cast<std::uint64_t>(boundary.size())));
        auto [a, b] = boundary[slot];
        edges.push_back({a, v});
        edges.push_back({b, v});
        boundary[slot] = {a, v};
        boundary.push_back({b, v});
    }
    return make_graph(n, edges);
}

Graph random_outerplanar(int n, double keep_prob, SplitMix64& rng) {
    if (n < 0) throw_domain("vertex count must be non-negative");
    if (n <= 2) {
        std::vector<std::pair<int, int>> edges;
        if (n == 2 && rng.next_double() < keep_prob) edges.push_back({0, 1});
        return make_graph(n, edges);
    }
    Graph full = random_delta_tree(n, rng);
    std::vector<std::pair<int, int>> kept;
    for (auto e : full.edges)
        if (rng.next_double() < keep_prob) kept.push_back(e);
    return make_graph(n, kept);
}

void enumerate_addresses(int depth,
                         const std::function<void(const Address&)>& fn) {
    if (depth < 0) throw_domain("depth must be non-negative");
    if (depth > 12) throw_limit("address enumeration is capped at depth 12");

    Address a;
    a.reserve(depth);
    std::function<void()> rec = [&] {
        fn(a);
        if (static_cast<int>(a.size()) == depth) return;
        for (Label l : {Label::Fwd, Label::Left, Label::Right}) {
            a.push_back(l);
            rec();
            a.pop_back();
        }
    };
    rec();
}

std::vector<Address> enumerate_addresses(int depth) {
    std::vector<Address> out;
    enumerate_addresses(depth, [&](const Address& a) { out.push_back(a); });
    return out;
}

} // namespace trilength
