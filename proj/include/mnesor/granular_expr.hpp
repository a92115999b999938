#ifndef MNESOR_GRANULAR_EXPR_HPP
#define MNESOR_GRANULAR_EXPR_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "mnesor/errors.hpp"

namespace mnesor {

/// Syntax tree over named granulars. Precedence: ! binds tightest, then
/// &, then |. TOP and BOT are reserved names for tau and the empty
/// granular.
struct GranularExpr {
    enum class Kind { Name, Top, Bottom, Join, Meet, Complement };

    Kind kind = Kind::Top;
    std::string name;                   // Kind::Name only
    std::vector<GranularExpr> children; // Join/Meet: 2, Complement: 1

    static GranularExpr make_name(std::string n) {
        return {Kind::Name, std::move(n), {}};
    }
    static GranularExpr top() { return {Kind::Top, "", {}}; }
    static GranularExpr bottom() { return {Kind::Bottom, "", {}}; }
    static GranularExpr join(GranularExpr a, GranularExpr b) {
        return {Kind::Join, "", {std::move(a), std::move(b)}};
    }
    static GranularExpr meet(GranularExpr a, GranularExpr b) {
        return {Kind::Meet, "", {std::move(a), std::move(b)}};
    }
    static GranularExpr complement(GranularExpr a) {
        return {Kind::Complement, "", {std::move(a)}};
    }

    bool operator==(const GranularExpr&) const = default;

    /// Names referenced anywhere in the tree, in first-occurrence order.
    void collect_names(std::vector<std::string>& out) const {
        if (kind == Kind::Name) {
            for (const auto& n : out)
                if (n == name) return;
            out.push_back(name);
            return;
        }
        for (const auto& c : children) c.collect_names(out);
    }
};

namespace detail {

struct GranularParser {
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
        throw ParseError("granular expression error at position " + std::to_string(pos) +
                             ": " + what,
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

    GranularExpr parse_atom() {
        if (eat('(')) {
            auto e = parse_join();
            if (!eat(')')) fail("expected ')'", {"')'"});
            return e;
        }
        auto id = ident();
        if (id.empty())
            fail("expected identifier, '!', or '('",
                 {"identifier", "'!'", "'('", "TOP", "BOT"});
        if (id == "TOP") return GranularExpr::top();
        if (id == "BOT") return GranularExpr::bottom();
        return GranularExpr::make_name(std::move(id));
    }

    GranularExpr parse_factor() {
        if (eat('!')) return GranularExpr::complement(parse_factor());
        return parse_atom();
    }

    GranularExpr parse_meet() {
        auto e = parse_factor();
        while (eat('&')) e = GranularExpr::meet(std::move(e), parse_factor());
        return e;
    }

    GranularExpr parse_join() {
        auto e = parse_meet();
        while (eat('|')) e = GranularExpr::join(std::move(e), parse_meet());
        return e;
    }

    GranularExpr parse() {
        auto e = parse_join();
        if (!at_end()) fail("unexpected trailing input", {"'&'", "'|'", "end of input"});
        return e;
    }
};

} // namespace detail

/// Parses a granular expression; throws ParseError with the offending
/// position and the expected-token set.
inline GranularExpr parse_granular(std::string_view text) {
    detail::GranularParser p{text};
    return p.parse();
}

} // namespace mnesor

#endif
