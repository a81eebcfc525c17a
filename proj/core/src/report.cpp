#include "tracking/report.hpp"

#include <sstream>

#include <json.hpp>

namespace tracking {

namespace {

std::string join(const std::vector<Vertex>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ids[i]);
    }
    return out;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "YES";
        case Verdict::no: return "NO";
        case Verdict::undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

std::string to_text(const SolveReport& report) {
    const auto& st = report.stats;
    const auto& red = st.reductions;
    std::ostringstream out;
    out << "result: " << to_string(report.verdict) << '\n';
    if (report.witness) {
        out << "witness: " << (report.witness->empty() ? "-" : join(report.witness->members()))
            << '\n';
        out << "size: " << report.witness->size() << '\n';
    }
    if (!report.reason.empty()) out << "reason: " << report.reason << '\n';
    out << "paths: " << (st.paths ? st.paths->str() : std::string("unknown")) << '\n';
    out << "lower_bound: " << st.lower_bound << '\n';
    if (st.set_size_bound) out << "vertices_per_path: " << *st.set_size_bound << '\n';
    out << "reductions: " << red.total() << " (rule1 edges " << red.rule1_edges_removed
        << ", rule1 vertices " << red.rule1_vertices_removed << ", rule2 arcs "
        << red.rule2_arcs_removed << ", rule2 vertices " << red.rule2_vertices_removed
        << ", rule3 moves " << red.rule3_endpoint_moves << ", rule4 contractions "
        << red.rule4_contractions << ", kernel elements " << red.kernel_elements_removed
        << ")\n";
    out << "reduced_vertices: " << st.reduced_vertices << '\n';
    out << "subsets_tried: " << st.subsets_tried << '\n';
    if (st.branch_nodes) out << "branch_nodes: " << st.branch_nodes << '\n';
    if (st.no_path) out << "note: no s-t path exists; the empty set tracks vacuously\n";
    if (st.singleton) out << "note: instance reduced to a single vertex\n";
    out << "verified: " << (st.witness_verified ? "yes" : "no") << '\n';
    return out.str();
}

std::string to_json(const SolveReport& report) {
    using nlohmann::ordered_json;
    const auto& st = report.stats;
    ordered_json doc;
    doc["result"] = to_string(report.verdict);
    if (report.witness) {
        doc["witness"] = report.witness->members();
        doc["size"] = report.witness->size();
    } else {
        doc["witness"] = nullptr;
        doc["size"] = nullptr;
    }
    if (!st.paths) {
        doc["paths"] = nullptr;
    } else if (*st.paths <= std::numeric_limits<std::uint64_t>::max()) {
        doc["paths"] = st.paths->convert_to<std::uint64_t>();
    } else {
        doc["paths"] = st.paths->str();
    }
    doc["reductions"] = st.reductions.total();
    doc["reason"] = report.reason;
    doc["lower_bound"] = st.lower_bound;
    doc["subsets_tried"] = st.subsets_tried;
    doc["verified"] = st.witness_verified;
    return doc.dump() + "\n";
}

}  // namespace tracking
