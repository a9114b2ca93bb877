#include "pow2lab/canon.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pow2lab/graph6.hpp"

namespace pow2lab {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: repeatedly split every cell by the multiset of
// neighbor counts against all current cells, ordering sub-cells by count
// signature descending. Cell order depends only on invariants, so it is
// stable under isomorphism.
void refine(int n, const std::vector<std::uint64_t>& adj, Cells& cells) {
    bool changed = true;
    std::vector<std::uint64_t> cell_mask;
    while (changed) {
        changed = false;
        cell_mask.assign(cells.size(), 0);
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_mask[c] |= std::uint64_t(1) << v;
        Cells next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature: counts of neighbors in each cell
            std::map<std::vector<int>, std::vector<int>, std::greater<>> split;
            for (int v : cell) {
                std::vector<int> sig(cells.size());
                for (size_t c = 0; c < cells.size(); ++c)
                    sig[c] = std::popcount(adj[v] & cell_mask[c]);
                split[sig].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, members] : split) next.push_back(std::move(members));
        }
        cells = std::move(next);
    }
}

struct Searcher {
    int n;
    const std::vector<std::uint64_t>& adj;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_perm;  // old -> new
    bool have_best = false;
    std::vector<std::vector<int>> auts;      // old -> old
    std::vector<std::vector<int>> aut_invs;  // matching inverses
    std::vector<int> prefix;                 // individualized vertices, root first

    explicit Searcher(int n_, const std::vector<std::uint64_t>& adj_) : n(n_), adj(adj_) {}

    std::vector<std::uint64_t> code_of(const std::vector<int>& perm) const {
        std::vector<std::uint64_t> code(n, 0);
        for (int a = 0; a < n; ++a) {
            std::uint64_t row = 0;
            std::uint64_t nb = adj[a];
            while (nb) {
                int b = std::countr_zero(nb);
                nb &= nb - 1;
                row |= std::uint64_t(1) << (63 - perm[b]);
            }
            code[perm[a]] = row;
        }
        return code;
    }

    void record_leaf(const Cells& cells) {
        std::vector<int> perm(n);
        int pos = 0;
        for (const auto& cell : cells) perm[cell[0]] = pos++;
        auto code = code_of(perm);
        if (!have_best || code > best_code) {
            best_code = std::move(code);
            best_perm = std::move(perm);
            have_best = true;
            return;
        }
        if (code == best_code) {
            // Two labelings with equal codes compose to an automorphism.
            std::vector<int> inv_best(n);
            for (int v = 0; v < n; ++v) inv_best[best_perm[v]] = v;
            std::vector<int> tau(n), tau_inv(n);
            bool identity = true;
            for (int v = 0; v < n; ++v) {
                tau[v] = inv_best[perm[v]];
                if (tau[v] != v) identity = false;
            }
            if (identity) return;
            for (int v = 0; v < n; ++v) tau_inv[tau[v]] = v;
            auts.push_back(std::move(tau));
            aut_invs.push_back(std::move(tau_inv));
        }
    }

    bool fixes_prefix(const std::vector<int>& perm) const {
        for (int u : prefix)
            if (perm[u] != u) return false;
        return true;
    }

    void search(Cells cells) {
        refine(n, adj, cells);
        size_t target = 0;
        while (target < cells.size() && cells[target].size() == 1) ++target;
        if (target == cells.size()) {
            record_leaf(cells);
            return;
        }
        std::vector<int> candidates = cells[target];
        std::uint64_t done_mask = 0;
        for (int v : candidates) {
            bool skip = false;
            for (size_t a = 0; a < auts.size() && !skip; ++a) {
                if (!fixes_prefix(auts[a])) continue;
                if ((done_mask >> auts[a][v]) & 1) skip = true;
                if ((done_mask >> aut_invs[a][v]) & 1) skip = true;
            }
            done_mask |= std::uint64_t(1) << v;
            if (skip) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            search(std::move(child));
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonResult canonical_form(int n, const std::vector<std::uint64_t>& adj) {
    if (n > 64) throw std::invalid_argument("canonical_form: order exceeds 64");
    CanonResult res;
    if (n == 0) return res;
    Searcher s(n, adj);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    s.search({all});
    res.relabel = std::move(s.best_perm);
    res.code = std::move(s.best_code);
    res.automorphisms = std::move(s.auts);
    return res;
}

CanonResult canonical_form(const Graph& g) {
    return canonical_form(g.order(), g.adjacency_masks());
}

Graph graph_from_code(int n, const std::vector<std::uint64_t>& code) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code[i] >> (63 - j)) & 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph canonical_graph(const Graph& g) {
    auto res = canonical_form(g);
    return g.order() == 0 ? g : g.relabeled(res.relabel);
}

std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).code == canonical_form(b).code;
}

std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& perms) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : perms)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(p[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> orbit(n);
    for (int v = 0; v < n; ++v) orbit[v] = find(v);
    return orbit;
}

std::vector<int> pair_orbit_reps(int n, const std::vector<std::vector<int>>& perms,
                                 const std::vector<std::pair<int, int>>& pairs) {
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u > v) std::swap(u, v);
        index[{u, v}] = static_cast<int>(i);
    }
    std::vector<int> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : perms) {
        for (size_t i = 0; i < pairs.size(); ++i) {
            int u = p[pairs[i].first], v = p[pairs[i].second];
            if (u > v) std::swap(u, v);
            auto it = index.find({u, v});
            if (it == index.end()) continue;  // generator maps outside the given set
            int a = find(static_cast<int>(i)), b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> reps;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) reps.push_back(static_cast<int>(i));
    return reps;
}

}  // namespace pow2lab
