#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pow2lab/canon.hpp"
#include "pow2lab/generate.hpp"
#include "pow2lab/graph.hpp"

using namespace pow2lab;

namespace {

Graph random_graph(std::mt19937& rng, int n, int denom = 3) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % denom == 0) e.emplace_back(u, v);
    return Graph(n, e);
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("canonical code partitions graphs like the permutation oracle") {
    // all graphs on up to 5 vertices: identical codes <=> identical brute
    // canonical forms
    for (int n = 1; n <= 5; ++n) {
        long pairs = n * (n - 1) / 2;
        std::map<std::uint64_t, std::set<std::vector<std::uint64_t>>> brute_to_fast;
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << pairs); ++bits) {
            Graph g = oracle::graph_from_triangle_bits(n, bits);
            brute_to_fast[oracle::brute_canonical_bits(g)].insert(canonical_form(g).code);
        }
        std::set<std::vector<std::uint64_t>> all_codes;
        for (const auto& [brute, codes] : brute_to_fast) {
            CHECK(codes.size() == 1);  // brute-equal implies code-equal
            all_codes.insert(*codes.begin());
        }
        CHECK(all_codes.size() == brute_to_fast.size());  // and conversely
    }
}

TEST_CASE("canonical code is relabeling-invariant") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n);
        Graph permuted = g.relabeled(random_perm(rng, n));
        CHECK(canonical_form(g).code == canonical_form(permuted).code);
        CHECK(isomorphic(g, permuted));
    }
}

TEST_CASE("reported automorphisms preserve adjacency") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n);
        auto res = canonical_form(g);
        for (const auto& tau : res.automorphisms) {
            for (const auto& [u, v] : g.edges()) CHECK(g.has_edge(tau[u], tau[v]));
        }
    }
}

TEST_CASE("canonical graph and code round trip") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n);
        auto res = canonical_form(g);
        Graph canon = canonical_graph(g);
        CHECK(canonical_form(canon).code == res.code);
        CHECK(graph_from_code(n, res.code) == canon);
    }
}

TEST_CASE("symmetric graphs canonicalize quickly") {
    // fully symmetric inputs exercise the orbit pruning
    CHECK(canonical_form(Graph::empty(12)).code.size() == 12);
    CHECK(canonical_form(Graph::complete(12)).code.size() == 12);
    auto cyc = canonical_form(Graph::cycle(12));
    CHECK(graph_from_code(12, cyc.code).size() == 12);
}
