#pragma once

#include "mshopf/graph.hpp"

// Small named graphs used across the test suites. All are phi^4 (valence 4).
namespace fixtures {

using mshopf::AssignedGraph;
using mshopf::FeynmanGraph;
using mshopf::ScaleAssignment;

// One vertex, no internal edges, four legs.
inline AssignedGraph bare_vertex(bool labeled = true) {
    FeynmanGraph g(4);
    g.set_labeled_legs(labeled);
    const int v = g.add_vertex();
    for (int k = 0; k < 4; ++k) g.add_leg(v);
    return AssignedGraph(g, ScaleAssignment{{}, 0});
}

// Two vertices, two parallel edges, two legs on each vertex (quadruped).
inline AssignedGraph bubble(int s1, int s2, int rho, bool labeled = true) {
    FeynmanGraph g(4);
    g.set_labeled_legs(labeled);
    const int a = g.add_vertex();
    const int b = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_leg(a);
    g.add_leg(a);
    g.add_leg(b);
    g.add_leg(b);
    return AssignedGraph(g, ScaleAssignment{{s1, s2}, rho});
}

// Two vertices, three parallel edges, one leg on each vertex (biped).
inline AssignedGraph sunset(int s1, int s2, int s3, int rho, bool labeled = true) {
    FeynmanGraph g(4);
    g.set_labeled_legs(labeled);
    const int a = g.add_vertex();
    const int b = g.add_vertex();
    for (int i = 0; i < 3; ++i) g.add_edge(a, b);
    g.add_leg(a);
    g.add_leg(b);
    return AssignedGraph(g, ScaleAssignment{{s1, s2, s3}, rho});
}

// Three vertices in a path with doubled edges; legs 2+0+2 (the order-3
// "chain" quadruped: sigma = 4, N = 3).
inline AssignedGraph chain3(int sa1, int sa2, int sb1, int sb2, int rho, bool labeled = true) {
    FeynmanGraph g(4);
    g.set_labeled_legs(labeled);
    const int a = g.add_vertex();
    const int b = g.add_vertex();
    const int c = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(b, c);
    g.add_leg(a);
    g.add_leg(a);
    g.add_leg(c);
    g.add_leg(c);
    return AssignedGraph(g, ScaleAssignment{{sa1, sa2, sb1, sb2}, rho});
}

// The other order-3 biped-free quadruped: doubled edge a-b, single edges a-c
// and b-c; legs on a, b and two on c (sigma = 2, N = 6).
inline AssignedGraph theta3(int sab1, int sab2, int sac, int sbc, int rho, bool labeled = true) {
    FeynmanGraph g(4);
    g.set_labeled_legs(labeled);
    const int a = g.add_vertex();
    const int b = g.add_vertex();
    const int c = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(b, c);
    g.add_leg(a);
    g.add_leg(b);
    g.add_leg(c);
    g.add_leg(c);
    return AssignedGraph(g, ScaleAssignment{{sab1, sab2, sac, sbc}, rho});
}

// Two vertices joined by four parallel edges (vacuum graph, three loops).
inline AssignedGraph melon(int s1, int s2, int s3, int s4, int rho) {
    FeynmanGraph g(4);
    const int a = g.add_vertex();
    const int b = g.add_vertex();
    for (int i = 0; i < 4; ++i) g.add_edge(a, b);
    return AssignedGraph(g, ScaleAssignment{{s1, s2, s3, s4}, rho});
}

// Two doubled pairs joined by a bridge: connected but not 1PI (6 legs).
inline AssignedGraph bridged(int rho = 0) {
    FeynmanGraph g(4);
    const int a = g.add_vertex();
    const int b = g.add_vertex();
    const int c = g.add_vertex();
    const int d = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, d);
    g.add_edge(c, d);
    g.add_leg(a);
    g.add_leg(a);
    g.add_leg(b);
    g.add_leg(c);
    g.add_leg(d);
    g.add_leg(d);
    return AssignedGraph(g, ScaleAssignment{{0, 0, 0, 0, 0}, rho});
}

// Nested quadruped: chain3 with inner scales high (the inner doubled pair at
// scales (hi, hi), outer at (lo1, lo2)).
inline AssignedGraph nested_chain(int hi, int lo1, int lo2, int rho, bool labeled = true) {
    return chain3(lo1, lo2, hi, hi, rho, labeled);
}

} // namespace fixtures
