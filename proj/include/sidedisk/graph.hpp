#pragma once

// Intersection graph of side disks, its circular chord diagram, the chord
// conflict graph, bipartiteness with certificates, and an independent
// brute-force planarity oracle (topological-subdivision search).
//
// Planarity of the intersection graph of a bounded polygon's side disks is
// decided by 2-coloring the conflict graph of its chord diagram: place the
// disks on a circle in side order (consecutive disks always intersect, so
// the Hamiltonian cycle is free), draw every non-cycle edge as a chord, and
// the graph is planar exactly when no two crossing chords are forced onto
// the same side, i.e. when the crossing ("conflict") graph is bipartite.

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sidedisk/geom.hpp"
#include "sidedisk/scalar.hpp"

namespace sidedisk {

using VertexPair = std::pair<std::size_t, std::size_t>;  // stored with first < second
using Chord = VertexPair;

inline VertexPair ordered_pair(std::size_t a, std::size_t b) {
    if (a == b) throw domain_error("loops are not allowed");
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

struct IntersectGraph {
    std::size_t n = 0;
    std::set<VertexPair> edges;

    bool has_edge(std::size_t a, std::size_t b) const {
        return edges.count(ordered_pair(a, b)) > 0;
    }
    void add_edge(std::size_t a, std::size_t b) {
        if (a >= n || b >= n) throw domain_error("edge endpoint out of range");
        edges.insert(ordered_pair(a, b));
    }

    std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(n);
        for (const auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
        return adj;
    }
};

// Pairwise intersection tests over the side disks, in index order.
inline IntersectGraph build_graph(const std::vector<GDisk>& disks) {
    IntersectGraph g;
    g.n = disks.size();
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j)
            if (gdisks_intersect(disks[i], disks[j])) g.edges.insert({i, j});
    return g;
}

// One vertex per line: "i: j k l" with sorted neighbors.
inline std::string adjacency_dump(const IntersectGraph& g) {
    std::ostringstream out;
    const auto adj = g.adjacency();
    for (std::size_t i = 0; i < g.n; ++i) {
        out << i << ":";
        for (std::size_t j : adj[i]) out << ' ' << j;
        out << '\n';
    }
    return out.str();
}

struct ChordDiagram {
    std::size_t n = 0;            // number of circle positions
    std::vector<Chord> chords;    // sorted, no cycle pairs
};

// Non-cycle edges of a Hamiltonian graph, as chords of the circular layout.
inline ChordDiagram chords_of(const IntersectGraph& g) {
    if (g.n < 3) throw domain_error("chord diagram needs at least 3 positions");
    ChordDiagram cd;
    cd.n = g.n;
    for (std::size_t i = 0; i < g.n; ++i)
        if (!g.has_edge(i, (i + 1) % g.n))
            throw domain_error("graph is missing a Hamiltonian cycle edge");
    for (const auto& e : g.edges) {
        const bool cycle_pair = (e.second == e.first + 1) || (e.first == 0 && e.second == g.n - 1);
        if (!cycle_pair) cd.chords.push_back(e);
    }
    return cd;  // std::set iteration keeps chords sorted
}

// Two chords cross iff their four endpoints are distinct and exactly one
// endpoint of the second lies strictly inside one of the arcs cut by the
// first.
inline bool chords_cross(std::size_t n, const Chord& c1, const Chord& c2) {
    const std::size_t i = c1.first, j = c1.second, k = c2.first, l = c2.second;
    if (i == k || i == l || j == k || j == l) return false;
    const std::size_t e = (j + n - i) % n;
    const std::size_t s = (k + n - i) % n;
    const std::size_t t = (l + n - i) % n;
    const bool k_inside = s > 0 && s < e;
    const bool l_inside = t > 0 && t < e;
    return k_inside != l_inside;
}

struct ConflictGraph {
    std::size_t n_positions = 0;
    std::vector<Chord> chords;                    // sorted; graph vertices
    std::vector<std::vector<std::size_t>> adj;    // sorted adjacency lists
    std::size_t num_edges = 0;
};

inline ConflictGraph conflict_graph(const ChordDiagram& cd) {
    ConflictGraph cg;
    cg.n_positions = cd.n;
    cg.chords = cd.chords;
    cg.adj.assign(cg.chords.size(), {});
    for (std::size_t a = 0; a < cg.chords.size(); ++a)
        for (std::size_t b = a + 1; b < cg.chords.size(); ++b)
            if (chords_cross(cd.n, cg.chords[a], cg.chords[b])) {
                cg.adj[a].push_back(b);
                cg.adj[b].push_back(a);
                ++cg.num_edges;
            }
    for (auto& row : cg.adj) std::sort(row.begin(), row.end());
    return cg;
}

// Either a proper 2-coloring of the chords or an explicit odd cycle.
struct BipartiteCert {
    bool bipartite = true;
    std::vector<int> coloring;      // aligned with ConflictGraph::chords
    std::vector<Chord> odd_cycle;   // consecutive entries (and last-first) cross
};

// Iterative BFS 2-coloring; components and neighbors are visited in
// ascending chord order, and the first color conflict yields the odd cycle
// through the BFS tree (both endpoint-to-ancestor paths plus the conflict
// edge, which has odd total length since the endpoints share a color).
inline BipartiteCert bipartite(const ConflictGraph& cg) {
    const std::size_t m = cg.chords.size();
    BipartiteCert cert;
    cert.coloring.assign(m, -1);
    std::vector<std::size_t> parent(m, m);
    for (std::size_t root = 0; root < m; ++root) {
        if (cert.coloring[root] != -1) continue;
        cert.coloring[root] = 0;
        std::vector<std::size_t> queue = {root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v : cg.adj[u]) {
                if (cert.coloring[v] == -1) {
                    cert.coloring[v] = 1 - cert.coloring[u];
                    parent[v] = u;
                    queue.push_back(v);
                    continue;
                }
                if (cert.coloring[v] != cert.coloring[u]) continue;
                // Odd cycle: walk both vertices up to their common ancestor.
                std::vector<std::size_t> up_u = {u}, up_v = {v};
                auto depth = [&](std::size_t x) {
                    std::size_t d = 0;
                    while (parent[x] != m) { x = parent[x]; ++d; }
                    return d;
                };
                std::size_t du = depth(u), dv = depth(v);
                while (du > dv) { up_u.push_back(parent[up_u.back()]); --du; }
                while (dv > du) { up_v.push_back(parent[up_v.back()]); --dv; }
                while (up_u.back() != up_v.back()) {
                    up_u.push_back(parent[up_u.back()]);
                    up_v.push_back(parent[up_v.back()]);
                }
                cert.bipartite = false;
                cert.coloring.clear();
                for (std::size_t x : up_u) cert.odd_cycle.push_back(cg.chords[x]);
                for (std::size_t i2 = up_v.size() - 1; i2-- > 0;)
                    cert.odd_cycle.push_back(cg.chords[up_v[i2]]);
                return cert;
            }
        }
    }
    return cert;
}

struct PlanarityResult {
    bool planar = true;
    ChordDiagram diagram;
    ConflictGraph conflicts;
    BipartiteCert cert;
};

// Planarity of a Hamiltonian intersection graph via chord-conflict
// bipartiteness.
inline PlanarityResult is_planar_hamiltonian(const IntersectGraph& g) {
    PlanarityResult r;
    r.diagram = chords_of(g);
    r.conflicts = conflict_graph(r.diagram);
    r.cert = bipartite(r.conflicts);
    r.planar = r.cert.bipartite;
    return r;
}

namespace detail {

// Backtracking search for vertex-disjoint paths joining given terminal
// pairs: the certificate of a topological K5/K33 subdivision.
struct SubdivisionSearch {
    const std::vector<std::vector<std::size_t>>& adj;
    std::vector<char> used;  // branch vertices and path internals

    explicit SubdivisionSearch(const std::vector<std::vector<std::size_t>>& a)
        : adj(a), used(a.size(), 0) {}

    bool connect(const std::vector<VertexPair>& pairs, std::size_t k) {
        if (k == pairs.size()) return true;
        return grow(pairs[k].first, pairs[k].second, pairs, k);
    }

    bool grow(std::size_t cur, std::size_t target, const std::vector<VertexPair>& pairs,
              std::size_t k) {
        for (std::size_t w : adj[cur]) {
            if (w == target) {
                if (connect(pairs, k + 1)) return true;
                continue;
            }
            if (used[w]) continue;
            used[w] = 1;
            if (grow(w, target, pairs, k)) { used[w] = 0; return true; }
            used[w] = 0;
        }
        return false;
    }
};

inline bool has_k5_subdivision(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> cand;
    for (std::size_t v = 0; v < n; ++v)
        if (adj[v].size() >= 4) cand.push_back(v);
    if (cand.size() < 5) return false;
    std::vector<std::size_t> pick(5);
    // Enumerate 5-subsets of candidate branch vertices.
    std::vector<std::size_t> idx = {0, 1, 2, 3, 4};
    while (true) {
        for (std::size_t i = 0; i < 5; ++i) pick[i] = cand[idx[i]];
        SubdivisionSearch s(adj);
        for (std::size_t v : pick) s.used[v] = 1;
        std::vector<VertexPair> pairs;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) pairs.push_back({pick[i], pick[j]});
        if (s.connect(pairs, 0)) return true;
        // next combination
        std::size_t i = 5;
        while (i-- > 0) {
            if (idx[i] + (5 - i) < cand.size()) {
                ++idx[i];
                for (std::size_t j2 = i + 1; j2 < 5; ++j2) idx[j2] = idx[j2 - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

inline bool has_k33_subdivision(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> cand;
    for (std::size_t v = 0; v < n; ++v)
        if (adj[v].size() >= 3) cand.push_back(v);
    if (cand.size() < 6) return false;
    const std::size_t c = cand.size();
    std::vector<std::size_t> idx = {0, 1, 2, 3, 4, 5};
    while (true) {
        // Split the chosen 6 into two sides of 3; fixing the first vertex's
        // side halves the symmetric duplicates.
        for (std::size_t mask = 0; mask < 32; ++mask) {
            std::vector<std::size_t> left = {cand[idx[0]]}, right;
            for (std::size_t b = 0; b < 5; ++b)
                ((mask >> b) & 1 ? left : right).push_back(cand[idx[b + 1]]);
            if (left.size() != 3) continue;
            SubdivisionSearch s(adj);
            for (std::size_t v : left) s.used[v] = 1;
            for (std::size_t v : right) s.used[v] = 1;
            std::vector<VertexPair> pairs;
            for (std::size_t a : left)
                for (std::size_t b : right) pairs.push_back({a, b});
            if (s.connect(pairs, 0)) return true;
        }
        std::size_t i = 6;
        while (i-- > 0) {
            if (idx[i] + (6 - i) < c) {
                ++idx[i];
                for (std::size_t j2 = i + 1; j2 < 6; ++j2) idx[j2] = idx[j2 - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

}  // namespace detail

// Independent planarity oracle: searches for a topological subdivision of
// K5 or K33 by enumerating branch-vertex subsets and vertex-disjoint
// connecting paths.  Exponential, but exact and entirely unrelated to the
// chord-conflict criterion it cross-checks.
inline bool brute_force_planar(const IntersectGraph& g) {
    if (g.n > 12) throw domain_error("brute-force planarity oracle is limited to 12 vertices");
    if (g.n < 5) return true;
    if (g.n >= 3 && g.edges.size() > 3 * g.n - 6) return false;  // edge bound
    const auto adj = g.adjacency();
    if (detail::has_k5_subdivision(adj)) return false;
    if (detail::has_k33_subdivision(adj)) return false;
    return true;
}

}  // namespace sidedisk
