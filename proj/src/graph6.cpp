#include "pow2lab/graph6.hpp"

#include <istream>
#include <sstream>

namespace pow2lab {

namespace {

constexpr int kBias = 63;

long decode_order(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw Graph6Error("empty graph6 string");
    unsigned char c0 = s[pos];
    if (c0 < 63 || c0 > 126) throw Graph6Error("graph6 character out of range");
    if (c0 != '~') {
        ++pos;
        return c0 - kBias;
    }
    // '~' + 3 chars: 18-bit order; '~~' + 6 chars: 36-bit order.
    int chars = 3;
    size_t start = pos + 1;
    if (start < s.size() && s[start] == '~') {
        chars = 6;
        ++start;
    }
    if (start + chars > s.size()) throw Graph6Error("malformed graph6 length prefix");
    long n = 0;
    for (int i = 0; i < chars; ++i) {
        unsigned char c = s[start + i];
        if (c < 63 || c > 126) throw Graph6Error("graph6 character out of range");
        n = (n << 6) | (c - kBias);
    }
    pos = start + chars;
    if (n < (chars == 3 ? 63 : 258048)) throw Graph6Error("malformed graph6 length prefix");
    return n;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
    size_t pos = 0;
    long n = decode_order(line, pos);
    if (n > 100000) throw Graph6Error("graph6 order too large for this tool");
    long pairs = n * (n - 1) / 2;
    long body = (pairs + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(pos) != body)
        throw Graph6Error("graph6 body length mismatch");
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (long k = 0; k < body; ++k) {
        unsigned char c = line[pos + k];
        if (c < 63 || c > 126) throw Graph6Error("graph6 character out of range");
        int group = c - kBias;
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (group >> b) & 1;
            if (bit >= pairs) {
                if (set) throw Graph6Error("graph6 nonzero padding bits");
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index -> (u, v), v >= 1.
                long remaining = bit;
                int v = 1;
                while (remaining >= v) remaining -= v, ++v;
                edges.emplace_back(static_cast<int>(remaining), v);
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw Graph6Error("write_graph6: long form not supported for writing");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    long pairs = static_cast<long>(n) * (n - 1) / 2;
    int group = 0, filled = 0;
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    (void)pairs;
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line = line.substr(10);
            if (line.empty()) continue;
        }
        try {
            out.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            std::ostringstream msg;
            msg << "line " << lineno << ": " << e.what();
            throw Graph6Error(msg.str());
        }
    }
    return out;
}

}  // namespace pow2lab
