#include "fintop/expr.hpp"

#include <cctype>
#include <map>

#include "fintop/symmetry.hpp"

namespace fintop {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why, std::size_t at) const {
        throw ParseError(Errc::syntax_error, at, why);
    }
    [[noreturn]] void fail(const std::string& why) const { fail(why, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool keyword(std::string_view word) {
        skip();
        if (text_.substr(pos_, word.size()) != word) return false;
        std::size_t after = pos_ + word.size();
        std::size_t probe = after;
        while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe]))) ++probe;
        if (probe >= text_.size() || text_[probe] != '(') return false;
        pos_ = probe + 1;
        return true;
    }

    int integer() {
        skip();
        std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return static_cast<int>(value);
    }

    GraphExpr expr() {
        skip();
        std::size_t start = pos_;
        GraphExpr e;
        if (keyword("union")) {
            e.kind = GraphExpr::Kind::union_of;
            binary(e);
        } else if (keyword("box")) {
            e.kind = GraphExpr::Kind::box;
            binary(e);
        } else if (keyword("amalgam")) {
            e.kind = GraphExpr::Kind::amalgam;
            e.operands.push_back(expr());
            expect('@');
            std::size_t left_at = (skip(), pos_);
            e.left_anchor = integer();
            expect(',');
            e.operands.push_back(expr());
            expect('@');
            std::size_t right_at = (skip(), pos_);
            e.right_anchor = integer();
            expect(')');
            check_anchor(e.operands[0], e.left_anchor, left_at);
            check_anchor(e.operands[1], e.right_anchor, right_at);
        } else if (keyword("file")) {
            e.kind = GraphExpr::Kind::file;
            skip();
            if (!accept('"')) fail("expected a quoted path");
            std::size_t close = text_.find('"', pos_);
            if (close == std::string_view::npos) fail("unterminated path");
            e.path = std::string(text_.substr(pos_, close - pos_));
            pos_ = close + 1;
            expect(')');
        } else if (pos_ < text_.size() && family_from_letter(text_[pos_])) {
            e.kind = GraphExpr::Kind::named;
            e.family = *family_from_letter(text_[pos_]);
            ++pos_;
            e.size = integer();
            int minimum = e.family == Family::cycle ? 3 : e.family == Family::wheel ? 4 : 1;
            if (e.size < minimum) {
                throw ParseError(Errc::invalid_family_size, start,
                                 std::string(1, family_letter(e.family)) + std::to_string(e.size) +
                                     " needs size >= " + std::to_string(minimum));
            }
            int vertices = e.family == Family::path ? e.size + 1 : e.size;
            if (vertices > kMaxVertices) {
                throw ParseError(Errc::size_bound_exceeded, start, "graph larger than " + std::to_string(kMaxVertices));
            }
        } else {
            fail("expected K, C, W, P, N, union(, box(, amalgam( or file(");
        }
        return e;
    }

    void binary(GraphExpr& e) {
        e.operands.push_back(expr());
        expect(',');
        e.operands.push_back(expr());
        expect(')');
    }

    static void check_anchor(const GraphExpr& operand, int anchor, std::size_t at) {
        auto count = vertex_count(operand);
        if (count && anchor >= *count) {
            throw ParseError(Errc::vertex_out_of_range, at,
                             "anchor " + std::to_string(anchor) + " outside " + std::to_string(*count) + " vertices");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GraphExpr parse_graph_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::named: return std::string(1, family_letter(e.family)) + std::to_string(e.size);
        case GraphExpr::Kind::file: return "file(\"" + e.path + "\")";
        case GraphExpr::Kind::union_of:
            return "union(" + to_string(e.operands[0]) + "," + to_string(e.operands[1]) + ")";
        case GraphExpr::Kind::box: return "box(" + to_string(e.operands[0]) + "," + to_string(e.operands[1]) + ")";
        case GraphExpr::Kind::amalgam:
            return "amalgam(" + to_string(e.operands[0]) + "@" + std::to_string(e.left_anchor) + "," +
                   to_string(e.operands[1]) + "@" + std::to_string(e.right_anchor) + ")";
    }
    return {};
}

std::optional<int> vertex_count(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::named: return e.family == Family::path ? e.size + 1 : e.size;
        case GraphExpr::Kind::file: return std::nullopt;
        default: break;
    }
    auto a = vertex_count(e.operands[0]);
    auto b = vertex_count(e.operands[1]);
    if (!a || !b) return std::nullopt;
    switch (e.kind) {
        case GraphExpr::Kind::union_of: return *a + *b;
        case GraphExpr::Kind::box: return *a * *b;
        default: return *a + *b - 1;
    }
}

Graph evaluate(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::named: return build_named(e.family, e.size);
        case GraphExpr::Kind::file: return read_edge_list_file(e.path);
        case GraphExpr::Kind::union_of: return disjoint_union(evaluate(e.operands[0]), evaluate(e.operands[1]));
        case GraphExpr::Kind::box: return cartesian_product(evaluate(e.operands[0]), evaluate(e.operands[1]));
        case GraphExpr::Kind::amalgam:
            return amalgamate(evaluate(e.operands[0]), e.left_anchor, evaluate(e.operands[1]), e.right_anchor);
    }
    throw Error(Errc::internal_error, "unknown expression kind");
}

std::optional<FormulaResult> formula_for(const Graph& g, const EnumerationOptions& options, CountCache& cache) {
    int n = g.order();
    if (n == 0) return std::nullopt;
    // fubini(19) no longer fits in 64 bits
    if (g.edge_count() == n * (n - 1) / 2 && n <= 18) return complete_counts(n);
    auto comps = components(g);
    if (comps.size() > 1) {
        std::map<CanonicalCode, UnionPart> grouped;
        for (VertexSet c : comps) {
            Graph part = induced_subgraph(g, c);
            auto [it, fresh] = grouped.try_emplace(canonical_code(part), UnionPart{part, 0});
            ++it->second.multiplicity;
        }
        std::vector<UnionPart> parts;
        for (auto& [code, part] : grouped) parts.push_back(std::move(part));
        return union_counts(parts, options, cache);
    }
    if (n >= 2) {
        FormulaResult r = bipartite_counts(g);
        if (r.applicable()) return r;
    }
    return std::nullopt;
}

std::optional<FormulaResult> formula_for(const GraphExpr& e, const EnumerationOptions& options, CountCache& cache) {
    switch (e.kind) {
        case GraphExpr::Kind::named:
            if (e.family == Family::cycle) return cycle_counts(e.size);
            if (e.family == Family::wheel) return wheel_counts(e.size);
            break;
        case GraphExpr::Kind::box: {
            Graph a = evaluate(e.operands[0]);
            Graph b = evaluate(e.operands[1]);
            if (a.order() >= 2 && b.order() >= 2 && is_connected(a) && is_connected(b)) return product_counts(a, b);
            break;
        }
        case GraphExpr::Kind::amalgam: {
            Graph a = evaluate(e.operands[0]);
            Graph b = evaluate(e.operands[1]);
            if (a.order() >= 2 && b.order() >= 2 && is_connected(a) && is_connected(b)) {
                FormulaResult r = amalgam_counts(a, e.left_anchor, b, e.right_anchor, options);
                if (r.h) return r;
            }
            break;
        }
        default: break;
    }
    return formula_for(evaluate(e), options, cache);
}

}  // namespace fintop
