#pragma once

// Brute-force reference implementations used as independent oracles. These
// deliberately avoid the library's refinement/backtracking machinery: the
// canonical form here is a minimum over all permutations, containment is a
// full injection scan, and the power-of-2 systems are solved by exhaustive
// exponent enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "pow2lab/graph.hpp"
#include "pow2lab/linpoly.hpp"

namespace oracle {

using pow2lab::Graph;

// adjacency of a labeled graph as one upper-triangle bitstring
inline std::uint64_t triangle_bits(const Graph& g) {
    std::uint64_t bits = 0;
    int k = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v, ++k)
            if (g.has_edge(u, v)) bits |= std::uint64_t(1) << k;
    return bits;
}

inline Graph graph_from_triangle_bits(int n, std::uint64_t bits) {
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if ((bits >> k) & 1) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// minimum triangle bitstring over all n! relabelings (n <= ~8)
inline std::uint64_t brute_canonical_bits(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t bits = 0;
        int k = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v, ++k) {
                // edge between preimages of u and v
                int a = perm[u], b = perm[v];
                if (g.has_edge(a, b)) bits |= std::uint64_t(1) << k;
            }
        }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline long brute_automorphism_count(const Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (!g.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// all labeled graphs on n vertices satisfying pred, reduced by brute-force
// canonical form
template <typename Pred>
long brute_class_count(int n, Pred pred) {
    long pairs = static_cast<long>(n) * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << pairs); ++bits) {
        Graph g = graph_from_triangle_bits(n, bits);
        if (!pred(g)) continue;
        classes.insert(brute_canonical_bits(g));
    }
    return static_cast<long>(classes.size());
}

template <typename Pred>
long brute_labeled_count(int n, Pred pred) {
    long pairs = static_cast<long>(n) * (n - 1) / 2;
    long count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << pairs); ++bits)
        if (pred(graph_from_triangle_bits(n, bits))) ++count;
    return count;
}

// containment by full injection scan
inline bool brute_contains(const Graph& g, const Graph& h) {
    int gn = g.order(), hn = h.order();
    if (hn == 0) return true;
    if (hn > gn) return false;
    std::vector<int> map(hn, -1);
    std::vector<bool> used(gn, false);
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == hn) {
            for (const auto& [u, v] : h.edges())
                if (!g.has_edge(map[u], map[v])) return false;
            return true;
        }
        for (int cand = 0; cand < gn; ++cand) {
            if (used[cand]) continue;
            used[cand] = true;
            map[depth] = cand;
            if (rec(depth + 1)) {
                used[cand] = false;
                return true;
            }
            used[cand] = false;
        }
        return false;
    };
    return rec(0);
}

// all exponent tuples in [0,bound]^m solving (equations = 0, inequations != 0)
// at x_i = 2^{y_i}
inline std::vector<std::vector<long>> brute_power_solutions(
    const std::vector<pow2lab::LinPoly>& equations, const std::vector<pow2lab::LinPoly>& inequations,
    int m, long bound) {
    std::vector<std::vector<long>> solutions;
    std::vector<long> y(m, 0);
    while (true) {
        std::vector<mpz_class> x(m);
        for (int i = 0; i < m; ++i) mpz_ui_pow_ui(x[i].get_mpz_t(), 2, y[i]);
        bool ok = true;
        for (const auto& e : equations)
            if (e.evaluate(x) != 0) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& q : inequations)
                if (q.evaluate(x) == 0) {
                    ok = false;
                    break;
                }
        if (ok) solutions.push_back(y);
        int i = 0;
        while (i < m && y[i] == bound) y[i++] = 0;
        if (i == m) break;
        ++y[i];
    }
    return solutions;
}

// maximum number of pairs summing to a power of 2 over all size-n subsets of
// [window_lo, window_hi], by pruned subset search
inline long brute_max_f(int n, long window_lo, long window_hi) {
    std::vector<long> values;
    for (long v = window_lo; v <= window_hi; ++v) values.push_back(v);
    auto power_pair = [](long a, long b) {
        long s = a + b;
        return s > 0 && (s & (s - 1)) == 0;
    };
    long best = 0;
    std::vector<long> chosen;
    std::function<void(size_t, long)> rec = [&](size_t start, long f) {
        long k = static_cast<long>(chosen.size());
        long r = n - k;
        if (r == 0) {
            best = std::max(best, f);
            return;
        }
        // every further element can pair with all chosen and all later picks
        if (f + r * k + r * (r - 1) / 2 <= best) return;
        if (start + r > values.size()) return;
        for (size_t i = start; i + r <= values.size(); ++i) {
            long gain = 0;
            for (long c : chosen)
                if (power_pair(c, values[i])) ++gain;
            chosen.push_back(values[i]);
            rec(i + 1, f + gain);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace oracle
