#include "pow2lab/emit.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pow2lab/graph6.hpp"

namespace pow2lab {

using nlohmann::json;

std::string verdict_json(const Graph& g, const Verdict& v, long millis) {
    json rec;
    rec["graph6"] = write_graph6(g);
    rec["admissible"] = v.admissible;
    if (v.witness) {
        json labels = json::array();
        for (const auto& l : *v.witness) labels.push_back(l.get_str());
        rec["labels"] = std::move(labels);
    } else if (v.admissible) {
        rec["witness_constructed"] = false;
    }
    rec["families_count"] = v.families.size();
    rec["branches"] = v.stats.branches;
    rec["millis"] = millis;
    return rec.dump();
}

Labeling labels_from_json(const std::string& line) {
    json rec = json::parse(line);
    Labeling out;
    if (!rec.contains("labels")) return out;
    for (const auto& item : rec.at("labels")) out.emplace_back(item.get<std::string>());
    return out;
}

std::string to_dot(const Graph& g, const Labeling* labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (labels && v < static_cast<int>(labels->size()))
            out << " [label=\"" << (*labels)[v].get_str() << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

void write_mfs_files(const MfsSet& set, const std::string& graph6_path,
                     const std::string& sidecar_path) {
    std::ofstream g6(graph6_path);
    if (!g6) throw std::runtime_error("cannot write " + graph6_path);
    json entries = json::array();
    for (const Graph& g : set.members()) {
        std::string s = write_graph6(g);
        g6 << s << "\n";
        entries.push_back(json{{"graph6", s},
                               {"order", g.order()},
                               {"edges", g.size()},
                               {"stratum", g.size()}});
    }
    json counts;
    for (const auto& [order, count] : set.counts_by_order()) counts[std::to_string(order)] = count;
    std::ofstream side(sidecar_path);
    if (!side) throw std::runtime_error("cannot write " + sidecar_path);
    side << json{{"counts_by_order", counts}, {"entries", entries}}.dump(2) << "\n";
}

MfsSet read_mfs_file(const std::string& graph6_path) {
    std::ifstream in(graph6_path);
    if (!in) throw std::runtime_error("cannot read " + graph6_path);
    MfsSet set;
    for (const Graph& g : read_graph6_stream(in)) set.insert(g);
    return set;
}

std::string gtable_json(const GRecord& rec) {
    json j;
    j["n"] = rec.n;
    j["g"] = rec.g;
    j["status"] = rec.status;
    j["proof_mode"] = rec.proof_mode;
    j["candidates_tested"] = rec.candidates_tested;
    if (rec.witness_graph) {
        j["witness_graph6"] = write_graph6(*rec.witness_graph);
        if (rec.witness_labels) {
            json labels = json::array();
            for (const auto& l : *rec.witness_labels) labels.push_back(l.get_str());
            j["witness_labels"] = std::move(labels);
        }
    }
    return j.dump();
}

}  // namespace pow2lab
