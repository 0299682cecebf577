#include "fintop/error.hpp"

namespace fintop {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_family_size: return "invalid-family-size";
        case Errc::vertex_out_of_range: return "vertex-out-of-range";
        case Errc::size_bound_exceeded: return "size-bound-exceeded";
        case Errc::not_bipartite: return "not-bipartite";
        case Errc::not_connected: return "not-connected";
        case Errc::invalid_graph: return "invalid-graph";
        case Errc::relation_not_preorder: return "relation-not-preorder";
        case Errc::family_not_topology: return "family-not-topology";
        case Errc::digraph_not_transitive: return "digraph-not-transitive";
        case Errc::ground_set_mismatch: return "ground-set-mismatch";
        case Errc::missing_empty: return "missing-empty";
        case Errc::missing_full: return "missing-full";
        case Errc::not_closed_under_union: return "not-closed-under-union";
        case Errc::not_closed_under_intersection: return "not-closed-under-intersection";
        case Errc::budget_exceeded: return "budget-exceeded";
        case Errc::not_an_automorphism: return "not-an-automorphism";
        case Errc::range: return "range";
        case Errc::overflow: return "overflow";
        case Errc::parts_not_distinct: return "parts-not-distinct";
        case Errc::part_not_connected: return "part-not-connected";
        case Errc::trivial_factor: return "trivial-factor";
        case Errc::not_a_cut_vertex: return "not-a-cut-vertex";
        case Errc::syntax_error: return "syntax-error";
        case Errc::io_error: return "io-error";
        case Errc::internal_error: return "internal-error";
    }
    return "unknown";
}

}  // namespace fintop
