/**
 * The space-expression DSL used by the CLI:
 *
 *   expr  := point | discrete INT | circle INT | sphere INT
 *          | join(expr, expr) | disjoint(expr, expr)
 *          | lens INT [INT, ...] | milnor GROUP INT | rp INT
 *          | mapping-torus(circle INT, rot INT) | load PATH
 *   GROUP := (Z|D):INT ( x (Z|D):INT )*
 *
 * Compositional constructions (joins of joins) are first-class, which is
 * why this is an expression language rather than subcommand flags.
 */

#ifndef TOPO_EXPRESSION_HPP
#define TOPO_EXPRESSION_HPP

#include <cctype>
#include <string>
#include <vector>

#include "topo/delta_set.hpp"
#include "topo/finite_group.hpp"
#include "topo/group_action.hpp"
#include "topo/json_io.hpp"
#include "topo/spaces.hpp"

namespace topo {

struct SpaceExpression {
    enum class Kind {
        Point,
        Discrete,
        Circle,
        Sphere,
        Join,
        Disjoint,
        Lens,
        Milnor,
        RP,
        MappingTorus,
        Load
    };

    Kind kind = Kind::Point;
    long long a = 0;                 // first numeric argument
    long long b = 0;                 // rotation step of a mapping torus
    std::vector<long long> params;   // lens rotation parameters
    std::string group_spec;          // milnor group, canonical form
    std::string path;                // load target
    std::vector<SpaceExpression> children;

    std::string to_string() const {
        switch (kind) {
            case Kind::Point: return "point";
            case Kind::Discrete: return "discrete " + std::to_string(a);
            case Kind::Circle: return "circle " + std::to_string(a);
            case Kind::Sphere: return "sphere " + std::to_string(a);
            case Kind::Join:
                return "join(" + children[0].to_string() + ", " + children[1].to_string() + ")";
            case Kind::Disjoint:
                return "disjoint(" + children[0].to_string() + ", " +
                       children[1].to_string() + ")";
            case Kind::Lens: {
                std::string s = "lens " + std::to_string(a) + " [";
                for (std::size_t i = 0; i < params.size(); ++i)
                    s += (i ? "," : "") + std::to_string(params[i]);
                return s + "]";
            }
            case Kind::Milnor: return "milnor " + group_spec + " " + std::to_string(a);
            case Kind::RP: return "rp " + std::to_string(a);
            case Kind::MappingTorus:
                return "mapping-torus(circle " + std::to_string(a) + ", rot " +
                       std::to_string(b) + ")";
            case Kind::Load: return "load " + path;
        }
        return {};
    }
};

namespace detail {

struct Token {
    enum class Kind { Int, Ident, Punct, String, End } kind = Kind::End;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw topo::SyntaxError(current_.line, current_.col, expected,
                                "syntax error at line " + std::to_string(current_.line) +
                                    ", column " + std::to_string(current_.col) +
                                    ": expected " + expected + ", got " + describe(current_));
    }

private:
    static std::string describe(const Token& t) {
        switch (t.kind) {
            case Token::Kind::End: return "end of input";
            case Token::Kind::Int: return "number " + std::to_string(t.value);
            case Token::Kind::String: return "string \"" + t.text + "\"";
            default: return "'" + t.text + "'";
        }
    }

    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
               c == '.' || c == '/';
    }

    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_ = {};
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == ':') {
            current_.kind = Token::Kind::Punct;
            current_.text = std::string(1, c);
            consume(1);
            return;
        }
        if (c == '"') {
            std::size_t end = text_.find('"', pos_ + 1);
            if (end == std::string::npos)
                throw topo::SyntaxError(line_, col_, "closing quote",
                                        "unterminated string literal");
            current_.kind = Token::Kind::String;
            current_.text = text_.substr(pos_ + 1, end - pos_ - 1);
            consume(end + 1 - pos_);
            return;
        }
        bool negative = c == '-' && pos_ + 1 < text_.size() &&
                        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || negative) {
            std::size_t end = pos_ + (negative ? 1 : 0);
            while (end < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            current_.kind = Token::Kind::Int;
            current_.text = text_.substr(pos_, end - pos_);
            current_.value = std::stoll(current_.text);
            consume(end - pos_);
            return;
        }
        if (ident_char(c)) {
            std::size_t end = pos_;
            while (end < text_.size() && ident_char(text_[end])) ++end;
            current_.kind = Token::Kind::Ident;
            current_.text = text_.substr(pos_, end - pos_);
            consume(end - pos_);
            return;
        }
        throw topo::SyntaxError(line_, col_, "a token",
                                "unexpected character '" + std::string(1, c) + "'");
    }

    void consume(std::size_t n) {
        pos_ += n;
        col_ += static_cast<int>(n);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    SpaceExpression parse_toplevel() {
        SpaceExpression e = parse_expr();
        if (lex_.peek().kind != Token::Kind::End) lex_.fail("end of input");
        return e;
    }

private:
    long long expect_int(const std::string& what) {
        if (lex_.peek().kind != Token::Kind::Int) lex_.fail(what);
        return lex_.take().value;
    }

    void expect_punct(const std::string& p) {
        if (lex_.peek().kind != Token::Kind::Punct || lex_.peek().text != p)
            lex_.fail("'" + p + "'");
        lex_.take();
    }

    void expect_keyword(const std::string& kw) {
        if (lex_.peek().kind != Token::Kind::Ident || lex_.peek().text != kw)
            lex_.fail("'" + kw + "'");
        lex_.take();
    }

    std::string parse_group_spec() {
        std::string spec;
        for (;;) {
            if (lex_.peek().kind != Token::Kind::Ident ||
                (lex_.peek().text != "Z" && lex_.peek().text != "D"))
                lex_.fail("group atom 'Z' or 'D'");
            std::string atom = lex_.take().text;
            expect_punct(":");
            long long m = expect_int("group order parameter");
            if (m < 1) lex_.fail("a positive group parameter");
            spec += atom + ":" + std::to_string(m);
            if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "x") {
                lex_.take();
                spec += " x ";
                continue;
            }
            return spec;
        }
    }

    SpaceExpression parse_expr() {
        if (lex_.peek().kind != Token::Kind::Ident) lex_.fail("a construction name");
        Token head = lex_.take();
        SpaceExpression e;
        using Kind = SpaceExpression::Kind;
        if (head.text == "point") {
            e.kind = Kind::Point;
        } else if (head.text == "discrete") {
            e.kind = Kind::Discrete;
            e.a = expect_int("a vertex count");
        } else if (head.text == "circle") {
            e.kind = Kind::Circle;
            e.a = expect_int("a polygon size");
        } else if (head.text == "sphere") {
            e.kind = Kind::Sphere;
            e.a = expect_int("a dimension (>= -1)");
        } else if (head.text == "join" || head.text == "disjoint") {
            e.kind = head.text == "join" ? Kind::Join : Kind::Disjoint;
            expect_punct("(");
            e.children.push_back(parse_expr());
            expect_punct(",");
            e.children.push_back(parse_expr());
            expect_punct(")");
        } else if (head.text == "lens") {
            e.kind = Kind::Lens;
            e.a = expect_int("a modulus");
            expect_punct("[");
            e.params.push_back(expect_int("a rotation parameter"));
            while (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == ",") {
                lex_.take();
                e.params.push_back(expect_int("a rotation parameter"));
            }
            expect_punct("]");
        } else if (head.text == "milnor") {
            e.kind = Kind::Milnor;
            e.group_spec = parse_group_spec();
            e.a = expect_int("an approximation level");
        } else if (head.text == "rp") {
            e.kind = Kind::RP;
            e.a = expect_int("a dimension");
        } else if (head.text == "mapping-torus") {
            e.kind = Kind::MappingTorus;
            expect_punct("(");
            expect_keyword("circle");
            e.a = expect_int("a polygon size");
            expect_punct(",");
            expect_keyword("rot");
            e.b = expect_int("a rotation step");
            expect_punct(")");
        } else if (head.text == "load") {
            e.kind = Kind::Load;
            if (lex_.peek().kind == Token::Kind::String ||
                lex_.peek().kind == Token::Kind::Ident)
                e.path = lex_.take().text;
            else
                lex_.fail("a file path");
        } else {
            throw topo::SyntaxError(head.line, head.col, "a construction name",
                                    "unknown construction '" + head.text + "'");
        }
        return e;
    }

    Lexer lex_;
};

} // namespace detail

/// Parse an expression; throws SyntaxError with position on failure.
inline SpaceExpression parse(const std::string& text) {
    return detail::Parser(text).parse_toplevel();
}

/// Group from a builtin name: "Z:m", "D:m", or products like "Z:2 x Z:2".
inline FiniteGroup parse_group(const std::string& spec) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos])))
            ++pos;
    };
    auto parse_atom = [&]() -> FiniteGroup {
        skip_space();
        if (pos >= spec.size() || (spec[pos] != 'Z' && spec[pos] != 'D'))
            throw SyntaxError(1, static_cast<int>(pos + 1), "group atom 'Z' or 'D'",
                              "bad group name '" + spec + "'");
        char family = spec[pos++];
        if (pos >= spec.size() || spec[pos] != ':')
            throw SyntaxError(1, static_cast<int>(pos + 1), "':'",
                              "bad group name '" + spec + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos])))
            ++pos;
        if (start == pos)
            throw SyntaxError(1, static_cast<int>(pos + 1), "a group parameter",
                              "bad group name '" + spec + "'");
        std::size_t m = std::stoull(spec.substr(start, pos - start));
        return family == 'Z' ? cyclic(m) : dihedral(m);
    };
    FiniteGroup g = parse_atom();
    for (;;) {
        skip_space();
        if (pos >= spec.size()) return g;
        if (spec[pos] != 'x')
            throw SyntaxError(1, static_cast<int>(pos + 1), "'x' or end",
                              "bad group name '" + spec + "'");
        ++pos;
        g = direct_product(g, parse_atom());
    }
}

/// Build the Delta-set an expression denotes.
inline DeltaSet evaluate(const SpaceExpression& e) {
    using Kind = SpaceExpression::Kind;
    switch (e.kind) {
        case Kind::Point: return point();
        case Kind::Discrete:
            if (e.a < 1) throw InvalidArgumentError("discrete needs a positive count");
            return discrete(static_cast<std::size_t>(e.a));
        case Kind::Circle:
            if (e.a < 1) throw InvalidArgumentError("circle needs a positive size");
            return polygon_circle(static_cast<std::size_t>(e.a));
        case Kind::Sphere:
            if (e.a < -1) throw InvalidArgumentError("sphere needs dimension >= -1");
            return sphere(static_cast<int>(e.a));
        case Kind::Join: return join(evaluate(e.children[0]), evaluate(e.children[1]));
        case Kind::Disjoint:
            return disjoint_union(evaluate(e.children[0]), evaluate(e.children[1]));
        case Kind::Lens: {
            if (e.a < 2) throw InvalidArgumentError("lens modulus must be >= 2");
            return lens_space(LensParams(static_cast<std::size_t>(e.a), e.params)).first;
        }
        case Kind::Milnor: {
            if (e.a < 0) throw InvalidArgumentError("milnor level must be >= 0");
            return milnor_base(parse_group(e.group_spec), static_cast<std::size_t>(e.a))
                .first;
        }
        case Kind::RP:
            if (e.a < 0) throw InvalidArgumentError("rp needs dimension >= 0");
            return real_projective(static_cast<std::size_t>(e.a)).first;
        case Kind::MappingTorus: {
            if (e.a < 1) throw InvalidArgumentError("mapping-torus needs a positive size");
            auto m = static_cast<std::size_t>(e.a);
            long long l = e.b % static_cast<long long>(m);
            if (l < 0) l += static_cast<long long>(m);
            GroupAction rot = rotation_action(m, static_cast<std::size_t>(l));
            return mapping_torus(polygon_circle(m), rot.as_map(1 % m));
        }
        case Kind::Load: return load_delta_set(e.path);
    }
    throw InvalidArgumentError("unhandled expression");
}

} // namespace topo

#endif // TOPO_EXPRESSION_HPP
