#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fintop {

enum class Errc {
    invalid_family_size,
    vertex_out_of_range,
    size_bound_exceeded,
    not_bipartite,
    not_connected,
    invalid_graph,
    relation_not_preorder,
    family_not_topology,
    digraph_not_transitive,
    ground_set_mismatch,
    missing_empty,
    missing_full,
    not_closed_under_union,
    not_closed_under_intersection,
    budget_exceeded,
    not_an_automorphism,
    range,
    overflow,
    parts_not_distinct,
    part_not_connected,
    trivial_factor,
    not_a_cut_vertex,
    syntax_error,
    io_error,
    internal_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace fintop
