#ifndef SFTHOM_TEST_FIXTURES_HPP
#define SFTHOM_TEST_FIXTURES_HPP

#include <random>

#include "sfthom/graph.hpp"

// The two-loop graph H on one vertex: loops a and b.
inline sfthom::Graph graph_H() {
    return sfthom::Graph({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
}

// The graph G with vertices v1, v2, loops a1, a2 and the 2-cycle b1, b2.
inline sfthom::Graph graph_G() {
    return sfthom::Graph({"v1", "v2"}, {{"a1", "v1", "v1"},
                                        {"a2", "v2", "v2"},
                                        {"b1", "v1", "v2"},
                                        {"b2", "v2", "v1"}});
}

// The 2-to-1 covering homomorphism G -> H.
inline sfthom::GraphHom hom_pi() {
    sfthom::Graph g = graph_G(), h = graph_H();
    return sfthom::GraphHom(g, h, {0, 0}, {0, 0, 1, 1});
}

inline std::mt19937& test_rng() {
    static std::mt19937 rng(20240811u);
    return rng;
}

#endif
