#ifndef MNESOR_QUERY_HPP
#define MNESOR_QUERY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mnesor/granular_expr.hpp"
#include "mnesor/relalg.hpp"

namespace mnesor {

/// Query syntax tree over named tables. `[granular]` (selection) binds
/// tightest, then `&` (intersection), then `+` (union); the postfix
/// selection mirrors the juxtaposition x lambda.
struct QueryExpr {
    enum class Kind { TableRef, Union, Intersection, Selection };

    Kind kind = Kind::TableRef;
    std::string name;                // TableRef
    std::vector<QueryExpr> children; // Union/Intersection: 2, Selection: 1
    GranularExpr granular;           // Selection

    static QueryExpr ref(std::string n) { return {Kind::TableRef, std::move(n), {}, {}}; }
    static QueryExpr make_union(QueryExpr a, QueryExpr b) {
        return {Kind::Union, "", {std::move(a), std::move(b)}, {}};
    }
    static QueryExpr make_intersection(QueryExpr a, QueryExpr b) {
        return {Kind::Intersection, "", {std::move(a), std::move(b)}, {}};
    }
    static QueryExpr selection(QueryExpr a, GranularExpr g) {
        return {Kind::Selection, "", {std::move(a)}, std::move(g)};
    }
};

namespace detail {

struct QueryParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
        throw ParseError("query error at position " + std::to_string(pos) + ": " + what,
                         pos, std::move(expected));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                    text[pos] == '_'))
                ++pos;
            return std::string(text.substr(start, pos - start));
        }
        return {};
    }

    QueryExpr parse_atom() {
        if (eat('(')) {
            auto e = parse_union();
            if (!eat(')')) fail("expected ')'", {"')'"});
            return e;
        }
        auto id = ident();
        if (id.empty()) fail("expected table name or '('", {"table name", "'('"});
        return QueryExpr::ref(std::move(id));
    }

    QueryExpr parse_postfix() {
        auto e = parse_atom();
        while (eat('[')) {
            std::size_t open = pos;
            auto close = text.find(']', pos);
            if (close == std::string_view::npos) {
                pos = text.size();
                fail("expected ']'", {"']'"});
            }
            auto inner = text.substr(open, close - open);
            GranularExpr g;
            try {
                g = parse_granular(inner);
            } catch (const ParseError& pe) {
                throw ParseError(pe.what(), open + pe.pos, pe.expected);
            }
            pos = close + 1;
            e = QueryExpr::selection(std::move(e), std::move(g));
        }
        return e;
    }

    QueryExpr parse_intersection() {
        auto e = parse_postfix();
        while (eat('&')) e = QueryExpr::make_intersection(std::move(e), parse_postfix());
        return e;
    }

    QueryExpr parse_union() {
        auto e = parse_intersection();
        while (eat('+')) e = QueryExpr::make_union(std::move(e), parse_intersection());
        return e;
    }

    QueryExpr parse() {
        auto e = parse_union();
        if (!at_end()) fail("unexpected trailing input", {"'+'", "'&'", "'['", "end of input"});
        return e;
    }
};

} // namespace detail

inline QueryExpr parse_query(std::string_view text) {
    detail::QueryParser p{text};
    return p.parse();
}

/// Evaluates a query against named tables. Unknown table names raise
/// ResolutionError listing the bound names.
inline Table eval_query(const QueryExpr& q, const Relalg& ra,
                        const std::map<std::string, Table>& tables) {
    switch (q.kind) {
        case QueryExpr::Kind::TableRef: {
            auto it = tables.find(q.name);
            if (it == tables.end()) {
                std::vector<std::string> known;
                std::string list;
                for (const auto& [name, t] : tables) {
                    known.push_back(name);
                    if (!list.empty()) list += ", ";
                    list += name;
                }
                throw ResolutionError("unknown table: " + q.name + " (bound: " +
                                          (list.empty() ? "<none>" : list) + ")",
                                      known);
            }
            return it->second;
        }
        case QueryExpr::Kind::Union:
            return ra.table_union(eval_query(q.children[0], ra, tables),
                                  eval_query(q.children[1], ra, tables));
        case QueryExpr::Kind::Intersection:
            return ra.table_intersection(eval_query(q.children[0], ra, tables),
                                         eval_query(q.children[1], ra, tables));
        case QueryExpr::Kind::Selection:
            return ra.select(eval_query(q.children[0], ra, tables), q.granular);
    }
    throw Error("unreachable query expression kind");
}

} // namespace mnesor

#endif
