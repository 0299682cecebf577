#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/error.hpp"
#include "fintop/formulas.hpp"
#include "fintop/graph.hpp"

namespace fintop {

/// Graph expression grammar (whitespace-insensitive):
///
///   expr := NAME INT | "union(" expr "," expr ")" | "box(" expr "," expr ")"
///         | "amalgam(" expr "@" INT "," expr "@" INT ")" | "file(" QUOTED ")"
///   NAME := K | C | W | P | N
struct GraphExpr {
    enum class Kind { named, file, union_of, box, amalgam };

    Kind kind = Kind::named;
    Family family = Family::complete;
    int size = 0;
    std::string path;
    std::vector<GraphExpr> operands;
    /// Amalgamation anchors, one per operand.
    int left_anchor = 0;
    int right_anchor = 0;

    friend bool operator==(const GraphExpr&, const GraphExpr&) = default;
};

class ParseError : public Error {
public:
    ParseError(Errc code, std::size_t offset, const std::string& message)
        : Error(code, message + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses and checks family sizes and (for file-free operands) anchor ranges.
GraphExpr parse_graph_expr(std::string_view text);

std::string to_string(const GraphExpr& expr);

/// Vertex count, when it does not depend on a file.
std::optional<int> vertex_count(const GraphExpr& expr);

Graph evaluate(const GraphExpr& expr);

/// Closed form matching the expression's structure (or the evaluated graph's
/// shape when the structure has none); empty when no theorem covers it.
std::optional<FormulaResult> formula_for(const GraphExpr& expr, const EnumerationOptions& options, CountCache& cache);
std::optional<FormulaResult> formula_for(const Graph& g, const EnumerationOptions& options, CountCache& cache);

}  // namespace fintop
