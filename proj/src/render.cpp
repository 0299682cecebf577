#include "fintop/render.hpp"

#include <algorithm>
#include <sstream>

namespace fintop {

using nlohmann::json;

json topology_json(const Topology& t) {
    std::vector<std::vector<int>> sets;
    for (VertexSet s : t.opens()) sets.push_back(members(s));
    std::sort(sets.begin(), sets.end());
    return sets;
}

json arcs_json(const Digraph& d) {
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
    return arcs;
}

json formula_json(const FormulaResult& f) {
    json out;
    out["theorem"] = f.theorem;
    out["tau"] = f.tau ? json(*f.tau) : json("not-applicable");
    out["h"] = f.h ? json(*f.h) : json("not-applicable");
    return out;
}

json count_report_json(const CountReport& r, bool with_timing) {
    json out;
    out["graph"] = r.graph.to_hex();
    out["n"] = r.graph.n;
    out["tau"] = r.tau;
    out["h"] = r.h;
    out["method"] = method_name(r.method);
    if (with_timing) out["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    return out;
}

std::string digraph_dot(const Digraph& d, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string aggregate_csv(const AggregateResult& r) {
    std::ostringstream out;
    out << "class_index,edge_count,aut_order,tau,h,labeled_copies\n";
    int n = r.table.n;
    for (std::size_t i = 0; i < r.table.entries.size(); ++i) {
        const auto& e = r.table.entries[i];
        out << i << ',' << e.representative.edge_count() << ',' << e.aut_order << ',' << e.tau << ',' << e.h << ','
            << e.labeled_copies(n) << '\n';
    }
    return out.str();
}

json aggregate_summary_json(const AggregateResult& r) {
    return {{"n", r.table.n}, {"tau_n", r.tau_n}, {"h_n", r.h_n}};
}

}  // namespace fintop
