#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pow2lab/graph.hpp"
#include "pow2lab/graph6.hpp"

using namespace pow2lab;

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    Graph g(4, {{2, 3}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(g.has_edge(3, 2));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 1);
}

TEST_CASE("connectivity and bipartition") {
    CHECK(is_connected(Graph::cycle(4)));
    CHECK(is_bipartite(Graph::cycle(4)));
    CHECK(is_connected(Graph::complete(3)));
    CHECK(!is_bipartite(Graph::complete(3)));
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK(!is_connected(two_edges));
    CHECK(component_count(two_edges) == 2);
    auto coloring = bipartition(Graph::path(4));
    REQUIRE(coloring.has_value());
    for (const auto& [u, v] : Graph::path(4).edges()) CHECK((*coloring)[u] != (*coloring)[v]);
    CHECK(is_connected(Graph::empty(1)));
}

TEST_CASE("c4-free predicate") {
    CHECK(!is_c4_free(Graph::cycle(4)));
    CHECK(is_c4_free(Graph::complete(3)));
    CHECK(!is_c4_free(Graph::complete(4)));
    // Petersen graph: outer 5-cycle, inner pentagram, spokes
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    Graph petersen(10, edges);
    CHECK(is_c4_free(petersen));

    // agrees with a brute-force 4-cycle scan on random graphs
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) e.emplace_back(u, v);
        Graph g(n, e);
        bool brute = false;
        for (int a = 0; a < n && !brute; ++a)
            for (int b = 0; b < n && !brute; ++b)
                for (int c = 0; c < n && !brute; ++c)
                    for (int d = 0; d < n && !brute; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
                            g.has_edge(d, a))
                            brute = true;
                    }
        CHECK(is_c4_free(g) == !brute);
    }
}

TEST_CASE("graph6 frozen strings") {
    CHECK(write_graph6(Graph::complete(4)) == "C~");
    CHECK(parse_graph6("C~") == Graph::complete(4));
    CHECK(write_graph6(Graph(2, {{0, 1}})) == "A_");
    CHECK(write_graph6(Graph::empty(2)) == "A?");
    CHECK(parse_graph6("@") == Graph::empty(1));
    CHECK(write_graph6(Graph::path(3)) == "Bg");
    CHECK(parse_graph6("Bg") == Graph::path(3));
}

TEST_CASE("graph6 error paths") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);      // truncated body
    CHECK_THROWS_AS(parse_graph6("C~~~~"), Graph6Error);  // oversized body
    CHECK_THROWS_AS(parse_graph6("A@"), Graph6Error);     // nonzero padding (bit 1)
    std::string bad = "B";
    bad.push_back(static_cast<char>(20));  // out of 63..126
    CHECK_THROWS_AS(parse_graph6(bad), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);  // malformed long prefix
    CHECK_THROWS_AS(write_graph6(Graph::empty(63)), Graph6Error);
}

TEST_CASE("graph6 long form read") {
    // order 63 long form: '~' + 3 chars of 18-bit order, then the body
    long n = 63;
    std::string prefix = "~";
    prefix.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    prefix.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    prefix.push_back(static_cast<char>(63 + (n & 63)));
    long body = (n * (n - 1) / 2 + 5) / 6;
    std::string empty63 = prefix + std::string(body, '?');
    Graph g = parse_graph6(empty63);
    CHECK(g.order() == 63);
    CHECK(g.size() == 0);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) e.emplace_back(u, v);
        Graph g(n, e);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 stream with header and bad line") {
    std::istringstream ok(">>graph6<<\nC~\n\nBg\n");
    auto graphs = read_graph6_stream(ok);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == Graph::complete(4));

    std::istringstream bad("C~\nC\n");
    CHECK_THROWS_WITH_AS(read_graph6_stream(bad), doctest::Contains("line 2"), Graph6Error);
}
