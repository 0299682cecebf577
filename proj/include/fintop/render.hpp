#pragma once

#include <json.hpp>
#include <string>

#include "fintop/aggregate.hpp"
#include "fintop/digraph.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/formulas.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Sorted list of sorted vertex lists.
nlohmann::json topology_json(const Topology& t);

/// Sorted [u, v] arc pairs.
nlohmann::json arcs_json(const Digraph& d);

nlohmann::json formula_json(const FormulaResult& f);

nlohmann::json count_report_json(const CountReport& r, bool with_timing);

/// Bidirected pairs are drawn as two arcs.
std::string digraph_dot(const Digraph& d, const std::string& name);

/// Header plus one row per class: class_index,edge_count,aut_order,tau,h,labeled_copies.
std::string aggregate_csv(const AggregateResult& r);
nlohmann::json aggregate_summary_json(const AggregateResult& r);

}  // namespace fintop
