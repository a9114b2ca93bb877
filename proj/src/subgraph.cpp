#include "pow2lab/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace pow2lab {

namespace {

struct Matcher {
    int hn, gn;
    std::vector<std::uint64_t> hadj, gadj;
    std::vector<int> hdeg, gdeg;
    std::vector<int> order;    // pattern vertices, connectivity-first
    std::vector<int> mapping;  // pattern -> host, -1 unset
    std::uint64_t used = 0;

    bool backtrack(size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        // candidates must cover already-mapped pattern neighbors
        std::uint64_t cand = ~used;
        if (gn < 64) cand &= (std::uint64_t(1) << gn) - 1;
        std::uint64_t nb = hadj[pv];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (mapping[w] >= 0) cand &= gadj[mapping[w]];
        }
        while (cand) {
            int gv = std::countr_zero(cand);
            cand &= cand - 1;
            if (gdeg[gv] < hdeg[pv]) continue;
            mapping[pv] = gv;
            used |= std::uint64_t(1) << gv;
            if (backtrack(depth + 1)) return true;
            used &= ~(std::uint64_t(1) << gv);
            mapping[pv] = -1;
        }
        return false;
    }
};

}  // namespace

namespace {

// fallback without bitmask packing, for hosts above 64 vertices
struct WideMatcher {
    std::vector<std::vector<int>> hadj, gadj;
    std::vector<std::vector<char>> gmat;
    std::vector<int> hdeg, gdeg, order, mapping;
    std::vector<char> used;

    bool backtrack(size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        for (int gv = 0; gv < static_cast<int>(used.size()); ++gv) {
            if (used[gv] || gdeg[gv] < hdeg[pv]) continue;
            bool ok = true;
            for (int w : hadj[pv])
                if (mapping[w] >= 0 && !gmat[mapping[w]][gv]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            mapping[pv] = gv;
            used[gv] = 1;
            if (backtrack(depth + 1)) return true;
            used[gv] = 0;
            mapping[pv] = -1;
        }
        return false;
    }
};

bool contains_subgraph_wide(const Graph& g, const Graph& h) {
    WideMatcher m;
    m.hadj = h.adjacency_lists();
    m.gadj = g.adjacency_lists();
    m.hdeg = h.degrees();
    m.gdeg = g.degrees();
    m.gmat.assign(g.order(), std::vector<char>(g.order(), 0));
    for (const auto& [u, v] : g.edges()) m.gmat[u][v] = m.gmat[v][u] = 1;
    m.order.resize(h.order());
    std::iota(m.order.begin(), m.order.end(), 0);
    std::sort(m.order.begin(), m.order.end(), [&](int a, int b) { return m.hdeg[a] > m.hdeg[b]; });
    m.mapping.assign(h.order(), -1);
    m.used.assign(g.order(), 0);
    return m.backtrack(0);
}

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
    if (h.order() == 0) return true;
    if (h.order() > g.order() || h.size() > g.size()) return false;
    if (g.order() > 64) return contains_subgraph_wide(g, h);

    Matcher m;
    m.hn = h.order();
    m.gn = g.order();
    m.hadj = h.adjacency_masks();
    m.gadj = g.adjacency_masks();
    m.hdeg = h.degrees();
    m.gdeg = g.degrees();

    // degree prefilter: sorted pattern degrees must be dominated
    auto hs = m.hdeg, gs = m.gdeg;
    std::sort(hs.rbegin(), hs.rend());
    std::sort(gs.rbegin(), gs.rend());
    for (size_t i = 0; i < hs.size(); ++i)
        if (hs[i] > gs[i]) return false;

    // order: highest degree first, then prefer vertices adjacent to the
    // already-ordered set so the candidate mask stays tight
    std::vector<int> order;
    std::vector<bool> placed(m.hn, false);
    for (int step = 0; step < m.hn; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < m.hn; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int w : order)
                if ((m.hadj[v] >> w) & 1) ++links;
            if (links > best_links || (links == best_links && m.hdeg[v] > best_deg)) {
                best = v;
                best_links = links;
                best_deg = m.hdeg[v];
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    m.order = std::move(order);
    m.mapping.assign(m.hn, -1);
    return m.backtrack(0);
}

}  // namespace pow2lab
