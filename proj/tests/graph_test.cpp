#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <vector>

#include "sidedisk/geom.hpp"
#include "sidedisk/graph.hpp"
#include "sidedisk/polygon.hpp"
#include "sidedisk/prng.hpp"

using namespace sidedisk;

namespace {

Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

IntersectGraph complete(std::size_t n) {
    IntersectGraph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.edges.insert({i, j});
    return g;
}

IntersectGraph cycle_plus(std::size_t n, const std::vector<Chord>& chords) {
    IntersectGraph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (const Chord& c : chords) g.add_edge(c.first, c.second);
    return g;
}

// All chordable pairs of an n-cycle, in sorted order.
std::vector<Chord> all_chords(std::size_t n) {
    std::vector<Chord> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool cycle_pair = (j == i + 1) || (i == 0 && j == n - 1);
            if (!cycle_pair) out.push_back({i, j});
        }
    return out;
}

bool coloring_is_proper(const ConflictGraph& cg, const std::vector<int>& col) {
    for (std::size_t u = 0; u < cg.adj.size(); ++u)
        for (std::size_t v : cg.adj[u])
            if (col[u] == col[v]) return false;
    return true;
}

bool odd_cycle_is_sound(std::size_t n, const std::vector<Chord>& cyc) {
    if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!chords_cross(n, cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

// Rational point on the unit circle, t = tan(angle/2).
Point circle_point(const Rat& t) {
    const Rat d = 1 + t * t;
    return Point{(1 - t * t) / d, 2 * t / d};
}

ConvexPolygon rational_pentagon() {
    std::vector<Point> v;
    for (const Rat& t : {Rat(-3), Rat(-3, 4), Rat(0), Rat(3, 4), Rat(3)})
        v.push_back(circle_point(t));
    return ConvexPolygon::bounded(std::move(v));
}

ConvexPolygon paper_pentagon() {
    return ConvexPolygon::bounded({pt(1, 9), pt(0, 3), pt(0, -3), pt(1, -9), pt(60, 0)}, true);
}

}  // namespace

TEST_CASE("build_graph: unit square side disks form K4") {
    ConvexPolygon p =
        ConvexPolygon::bounded({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    IntersectGraph g = build_graph(side_disks(p));
    REQUIRE(g.n == 4);
    REQUIRE(g.edges.size() == 6);  // adjacent disks share a vertex, opposite ones are tangent
    REQUIRE(adjacency_dump(g) == "0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n");
}

TEST_CASE("build_graph: near-regular pentagon gives the bare cycle") {
    IntersectGraph g = build_graph(side_disks(rational_pentagon()));
    REQUIRE(g.n == 5);
    REQUIRE(g.edges.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) REQUIRE(g.has_edge(i, (i + 1) % 5));
}

TEST_CASE("build_graph: the flat pentagon drops exactly one disk pair") {
    // Vertices store as (0,-3),(1,-9),(60,0),(1,9),(0,3): side 3 runs
    // (1,9)->(0,3) and side 0 runs (0,-3)->(1,-9); those two Thales disks
    // are the famous disjoint pair.
    ConvexPolygon p = paper_pentagon();
    REQUIRE(p.vertices().front() == pt(0, -3));
    IntersectGraph g = build_graph(side_disks(p));
    REQUIRE(!g.has_edge(0, 3));
    const std::vector<Chord> expect_chords = {{0, 2}, {1, 3}, {1, 4}, {2, 4}};
    REQUIRE(chords_of(g).chords == expect_chords);
    PlanarityResult r = is_planar_hamiltonian(g);
    REQUIRE(r.planar);
    REQUIRE(coloring_is_proper(r.conflicts, r.cert.coloring));
}

TEST_CASE("chords_of strips the Hamiltonian cycle") {
    REQUIRE(chords_of(complete(4)).chords == (std::vector<Chord>{{0, 2}, {1, 3}}));
    REQUIRE(chords_of(cycle_plus(5, {})).chords.empty());
    REQUIRE(chords_of(complete(5)).chords.size() == 5);
    IntersectGraph broken = complete(5);
    broken.edges.erase({2, 3});
    REQUIRE_THROWS_AS(chords_of(broken), domain_error);
}

TEST_CASE("chords_cross: fixed cases") {
    REQUIRE(chords_cross(4, {0, 2}, {1, 3}));
    REQUIRE(!chords_cross(5, {0, 2}, {2, 4}));  // shared endpoint
    REQUIRE(!chords_cross(6, {0, 2}, {3, 5}));  // disjoint arcs
    REQUIRE(chords_cross(6, {0, 3}, {2, 5}));
    REQUIRE(!chords_cross(6, {0, 3}, {1, 2}));  // nested
}

TEST_CASE("chords_cross: symmetry and rotation invariance") {
    SplitMix64 rng(derive_seed(0xC0FFEE, 1));
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 5 + static_cast<std::size_t>(rng.next_in(0, 7));
        auto rand_chord = [&]() {
            while (true) {
                auto a = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(n) - 1));
                auto b = static_cast<std::size_t>(rng.next_in(0, static_cast<long>(n) - 1));
                if (a == b || (a + 1) % n == b || (b + 1) % n == a) continue;
                return ordered_pair(a, b);
            }
        };
        const Chord c1 = rand_chord(), c2 = rand_chord();
        const bool x = chords_cross(n, c1, c2);
        REQUIRE(chords_cross(n, c2, c1) == x);
        auto rot = [n](const Chord& c) {
            return ordered_pair((c.first + 1) % n, (c.second + 1) % n);
        };
        REQUIRE(chords_cross(n, rot(c1), rot(c2)) == x);
    }
}

TEST_CASE("conflict_graph on small diagrams") {
    ConflictGraph k4 = conflict_graph(chords_of(complete(4)));
    REQUIRE(k4.chords.size() == 2);
    REQUIRE(k4.num_edges == 1);

    ConflictGraph c5 = conflict_graph(chords_of(cycle_plus(5, {})));
    REQUIRE(c5.chords.empty());
    REQUIRE(c5.num_edges == 0);

    // K5's five chords cross pairwise in a pentagram: a 5-cycle.
    ConflictGraph k5 = conflict_graph(chords_of(complete(5)));
    REQUIRE(k5.chords.size() == 5);
    REQUIRE(k5.num_edges == 5);
    for (const auto& row : k5.adj) REQUIRE(row.size() == 2);
}

TEST_CASE("bipartite: colorings and odd cycles") {
    ConflictGraph empty = conflict_graph(chords_of(cycle_plus(6, {})));
    BipartiteCert c0 = bipartite(empty);
    REQUIRE(c0.bipartite);
    REQUIRE(c0.coloring.empty());

    ConflictGraph one = conflict_graph(chords_of(complete(4)));
    BipartiteCert c1 = bipartite(one);
    REQUIRE(c1.bipartite);
    REQUIRE(c1.coloring == (std::vector<int>{0, 1}));

    ConflictGraph penta = conflict_graph(chords_of(complete(5)));
    BipartiteCert c2 = bipartite(penta);
    REQUIRE(!c2.bipartite);
    REQUIRE(c2.odd_cycle.size() == 5);
    REQUIRE(odd_cycle_is_sound(5, c2.odd_cycle));
}

TEST_CASE("is_planar_hamiltonian on the classics") {
    REQUIRE(is_planar_hamiltonian(complete(4)).planar);

    PlanarityResult k5 = is_planar_hamiltonian(complete(5));
    REQUIRE(!k5.planar);
    REQUIRE(odd_cycle_is_sound(5, k5.cert.odd_cycle));

    // K33 with parts {0,2,4} and {1,3,5} is Hamiltonian as the 6-cycle plus
    // three long chords; the chords pairwise cross: a conflict triangle.
    PlanarityResult k33 = is_planar_hamiltonian(cycle_plus(6, {{0, 3}, {1, 4}, {2, 5}}));
    REQUIRE(!k33.planar);
    REQUIRE(k33.cert.odd_cycle.size() == 3);
    REQUIRE(odd_cycle_is_sound(6, k33.cert.odd_cycle));
}

TEST_CASE("brute-force oracle on known graphs") {
    REQUIRE(brute_force_planar(complete(4)));
    REQUIRE(!brute_force_planar(complete(5)));
    REQUIRE(!brute_force_planar(complete(6)));
    REQUIRE(brute_force_planar(cycle_plus(5, {{0, 2}, {0, 3}})));
    REQUIRE(!brute_force_planar(cycle_plus(6, {{0, 3}, {1, 4}, {2, 5}})));

    // Petersen graph: degree 3 everywhere, so no K5 subdivision exists and
    // non-planarity must be found through the K33 branch.
    IntersectGraph pet;
    pet.n = 10;
    for (std::size_t i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    REQUIRE(!brute_force_planar(pet));

    IntersectGraph big;
    big.n = 13;
    REQUIRE_THROWS_AS(brute_force_planar(big), domain_error);
}

TEST_CASE("chord criterion matches the brute-force oracle exhaustively to n=6") {
    for (std::size_t n = 4; n <= 6; ++n) {
        const std::vector<Chord> pool = all_chords(n);
        REQUIRE(pool.size() <= 16);
        for (unsigned long mask = 0; mask < (1ul << pool.size()); ++mask) {
            std::vector<Chord> chosen;
            for (std::size_t b = 0; b < pool.size(); ++b)
                if ((mask >> b) & 1) chosen.push_back(pool[b]);
            IntersectGraph g = cycle_plus(n, chosen);
            const bool fast = is_planar_hamiltonian(g).planar;
            const bool slow = brute_force_planar(g);
            INFO("n=" << n << " mask=" << mask);
            REQUIRE(fast == slow);
        }
    }
}

TEST_CASE("chord criterion matches the brute-force oracle on random n=8 graphs") {
    const std::vector<Chord> pool = all_chords(8);  // 20 candidates
    SplitMix64 rng(derive_seed(0xD1FF, 2));
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Chord> chosen;
        for (const Chord& c : pool)
            if (rng.next() & 1) chosen.push_back(c);
        IntersectGraph g = cycle_plus(8, chosen);
        PlanarityResult r = is_planar_hamiltonian(g);
        REQUIRE(r.planar == brute_force_planar(g));
        if (r.planar) {
            REQUIRE(coloring_is_proper(r.conflicts, r.cert.coloring));
        } else {
            REQUIRE(odd_cycle_is_sound(8, r.cert.odd_cycle));
        }
    }
}

TEST_CASE("side-disk graphs of polygon fixtures are planar") {
    std::vector<ConvexPolygon> fixtures;
    fixtures.push_back(ConvexPolygon::bounded({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}));
    fixtures.push_back(ConvexPolygon::bounded(
        {pt(0, 0), pt(2, 0), pt(3, 2), pt(2, 4), pt(0, 4), pt(-1, 2)}));
    fixtures.push_back(rational_pentagon());
    fixtures.push_back(paper_pentagon());
    {
        std::vector<Point> v;
        for (const Rat& t : {Rat(-6), Rat(-3), Rat(-3, 2), Rat(-2, 3), Rat(-1, 3), Rat(-1, 10),
                             Rat(1, 10), Rat(1, 3), Rat(2, 3), Rat(3, 2), Rat(3), Rat(6)})
            v.push_back(circle_point(t));
        fixtures.push_back(ConvexPolygon::bounded(std::move(v)));
    }
    for (const ConvexPolygon& p : fixtures) {
        IntersectGraph g = build_graph(side_disks(p));
        PlanarityResult r = is_planar_hamiltonian(g);
        REQUIRE(r.planar);
        REQUIRE(coloring_is_proper(r.conflicts, r.cert.coloring));
        if (g.n <= 12) REQUIRE(brute_force_planar(g));
    }
}
