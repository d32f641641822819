#include <doctest.h>

#include <bit>
#include <set>

#include "fixtures.hpp"
#include "mshopf/multiscale.hpp"
#include "mshopf/wick.hpp"

using namespace mshopf;

TEST_CASE("high enumeration: primitive bubble has no inner divergent subgraphs") {
    const auto b = fixtures::bubble(1, 1, 1, false);
    CHECK(enumerate_high_divergent(b).empty());
}

TEST_CASE("high enumeration: chain with a high inner bubble") {
    const auto g = fixtures::chain3(1, 2, 3, 3, 3, false);
    const auto masks = enumerate_high_divergent(g);
    REQUIRE(masks.size() == 1);
    const auto comps = subgraph_components(g, masks.front());
    REQUIRE(comps.size() == 1);
    CHECK(comps.front().edge_count == 2);
    CHECK(comps.front().internal_min == 3);
    CHECK(extract_subgraph(g, masks.front()) == fixtures::bubble(3, 3, 3, false));
}

TEST_CASE("high enumeration: two disjoint high bubbles give three entries") {
    // Host: a path of three doubled pairs a=b=c=d with outer pair low and the
    // two end pairs high... use a 4-vertex chain with high end pairs.
    FeynmanGraph g(4);
    const int a = g.add_vertex(), b = g.add_vertex(), c = g.add_vertex(), d = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(c, d);
    g.add_leg(a);
    g.add_leg(a);
    g.add_leg(d);
    g.add_leg(d);
    g.set_labeled_legs(false);
    AssignedGraph host(g, ScaleAssignment{{3, 3, 0, 0, 2, 2}, 3});
    const auto masks = enumerate_high_divergent(host);
    // Each high bubble alone plus their disjoint union.
    CHECK(masks.size() == 3);
    std::set<int> sizes;
    for (auto m : masks) sizes.insert(std::popcount(m));
    CHECK(sizes == std::set<int>({2, 4}));
}

TEST_CASE("enumeration output is closed under disjoint unions of members") {
    const AssignedGraph samples[] = {
        fixtures::chain3(1, 2, 3, 3, 3, false),
        fixtures::sunset(0, 1, 2, 2, false),
        fixtures::melon(0, 1, 2, 2, 2),
        fixtures::theta3(3, 3, 0, 1, 3, false),
    };
    for (const auto& g : samples) {
        const auto masks = enumerate_high_divergent(g);
        std::set<uint32_t> set(masks.begin(), masks.end());
        std::vector<uint32_t> connected;
        for (auto m : masks)
            if (subgraph_components(g, m).size() == 1) connected.push_back(m);
        // Every union of vertex-disjoint connected members is present.
        for (std::size_t i = 0; i < connected.size(); ++i) {
            for (std::size_t j = i + 1; j < connected.size(); ++j) {
                const auto ci = subgraph_components(g, connected[i]).front().vertices;
                const auto cj = subgraph_components(g, connected[j]).front().vertices;
                bool disjoint = true;
                for (int v : ci)
                    if (std::binary_search(cj.begin(), cj.end(), v)) disjoint = false;
                if (disjoint) CHECK(set.count(connected[i] | connected[j]) == 1);
            }
        }
        // Every member decomposes into connected members.
        for (auto m : masks)
            for (const auto& comp : subgraph_components(g, m))
                CHECK(set.count(comp.edges) == 1);
    }
}

TEST_CASE("check_forest holds on assigned graphs") {
    CHECK(check_forest(fixtures::chain3(1, 2, 3, 3, 3)));
    CHECK(check_forest(fixtures::sunset(0, 1, 2, 2)));
    CHECK(check_forest(fixtures::melon(3, 1, 0, 2, 3)));
    CHECK(check_forest(fixtures::bare_vertex()));
}

TEST_CASE("gn_tree of the bubble with scales (1,2)") {
    const auto b = fixtures::bubble(1, 2, 2, false);
    const auto t = gn_tree(b);
    REQUIRE(t.nodes().size() == 3);
    CHECK(t.nodes()[0].depth == 0);
    CHECK(t.nodes()[0].decoration == b);
    CHECK(t.nodes()[1].depth == 1);
    CHECK(t.nodes()[1].decoration == b); // both edges have scale >= 1
    CHECK(t.nodes()[2].depth == 2);
    CHECK(t.nodes()[2].decoration.edge_count() == 1); // the single scale-2 edge
    CHECK(t.nodes()[2].decoration.leg_count() == 6);
}

TEST_CASE("gn_tree with one common scale is a non-branching path") {
    const int k = 3;
    const auto g = fixtures::sunset(k, k, k, 3, false);
    const auto t = gn_tree(g);
    REQUIRE(t.nodes().size() == static_cast<std::size_t>(k + 1));
    for (const auto& n : t.nodes()) {
        CHECK(n.decoration == g.unlabeled());
        CHECK(n.children.size() <= 1);
    }
}

TEST_CASE("gn_tree branches at disjoint high components") {
    FeynmanGraph g(4);
    const int a = g.add_vertex(), b = g.add_vertex(), c = g.add_vertex(), d = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(c, d);
    g.add_leg(a);
    g.add_leg(a);
    g.add_leg(d);
    g.add_leg(d);
    g.set_labeled_legs(false);
    AssignedGraph host(g, ScaleAssignment{{3, 3, 0, 0, 3, 3}, 3});
    const auto t = gn_tree(host);
    int at3 = 0;
    for (const auto& n : t.nodes())
        if (n.depth == 3) ++at3;
    CHECK(at3 == 2);
}

TEST_CASE("gn_tree node decorations are high at their depth") {
    const AssignedGraph samples[] = {
        fixtures::chain3(1, 2, 3, 3, 3, false),
        fixtures::theta3(2, 3, 0, 1, 3, false),
        fixtures::melon(0, 1, 2, 3, 3),
    };
    for (const auto& g : samples) {
        const auto t = gn_tree(g);
        for (const auto& n : t.nodes()) {
            if (n.depth == 0) continue;
            const auto idx = indices(g, n.mask);
            CHECK(idx.internal_index >= n.depth);
            CHECK(is_high(g, n.mask));
        }
    }
}

TEST_CASE("gn_tree padding puts every leaf at depth rho") {
    const auto b = fixtures::bubble(1, 2, 3, false);
    const auto t = gn_tree(b, /*pad=*/true);
    for (const auto& n : t.nodes())
        if (n.children.empty()) CHECK(n.depth == 3);
    // Unpadded depth is the maximal scale present.
    CHECK(gn_tree(b).depth() == 2);
}

TEST_CASE("gn_tree is injective on the small generator set") {
    const auto gens = generator_set(/*v_max=*/3, /*rho=*/2, /*max_loops=*/2);
    std::set<std::vector<int32_t>> keys;
    for (const auto& g : gens) keys.insert(gn_tree(g).key());
    CHECK(keys.size() == gens.size());
}

TEST_CASE("gn_tree DOT export mentions every node") {
    const auto t = gn_tree(fixtures::chain3(1, 2, 3, 3, 3, false));
    const auto dot = gn_tree_to_dot(t);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("forest lemma over the generated set") {
    for (const auto& g : generator_set(3, 2, 2)) CHECK(check_forest(g));
}

TEST_CASE("indices of a single edge whose neighbors share its scale") {
    // Sunset with scales (5,5,2): the subgraph holding one scale-5 edge sees
    // the other parallel edges as externals, so internal = external = 5 and
    // the high condition fails.
    const auto g = fixtures::sunset(5, 5, 2, 5, false);
    int edge5 = -1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.scale(e) == 5) edge5 = e;
    const auto idx = indices(g, 1u << edge5);
    CHECK(idx.internal_index == 5);
    CHECK(idx.external_index == 5);
    CHECK_FALSE(is_high(g, 1u << edge5));
}

TEST_CASE("a disconnected pair of high bubbles is not high, its components are") {
    FeynmanGraph g(4);
    const int a = g.add_vertex(), b = g.add_vertex(), c = g.add_vertex(), d = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(c, d);
    g.add_leg(a);
    g.add_leg(a);
    g.add_leg(d);
    g.add_leg(d);
    g.set_labeled_legs(false);
    AssignedGraph host(g, ScaleAssignment{{3, 3, 0, 0, 2, 2}, 3});
    uint32_t both = 0;
    for (int e = 0; e < host.edge_count(); ++e)
        if (host.scale(e) >= 2) both |= 1u << e;
    CHECK_FALSE(is_high(host, both));
    const auto comps = subgraph_components(host, both);
    REQUIRE(comps.size() == 2);
    for (const auto& comp : comps) CHECK(comp.high());
}
