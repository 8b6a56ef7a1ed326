#include "qtype/parse.hpp"

#include "qtype/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qtype {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, colon, end_stmt, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    int depth = 0;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string text, int c) { out.push_back({k, std::move(text), line, c}); };
    while (i < src.size()) {
        const char ch = src[i];
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n')
                ++i, ++col;
            continue;
        }
        if (ch == '\n') {
            if (depth == 0)
                push(Tok::end_stmt, "\\n", col);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i, ++col;
            continue;
        }
        const int start = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                digits += src[i++], ++col;
            if (i < src.size() && src[i] == '.')
                throw ParseError(line, col, "non-polynomial construct: decimal literal (use p/q)");
            push(Tok::number, digits, start);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string id;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                id += src[i++], ++col;
            push(Tok::ident, id, start);
            continue;
        }
        Tok k;
        switch (ch) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; ++depth; break;
        case ')': k = Tok::rparen; depth = std::max(0, depth - 1); break;
        case ',': k = Tok::comma; break;
        case ':': k = Tok::colon; break;
        case ';': k = Tok::end_stmt; break;
        default:
            throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
        }
        push(k, std::string(1, ch), start);
        ++i, ++col;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, std::size_t pos, const std::vector<std::string>& vars)
        : toks_(toks), pos_(pos), vars_(vars)
    {
    }

    std::size_t position() const { return pos_; }
    const Token& peek() const { return toks_[pos_]; }

    PolyC expression()
    {
        PolyC acc = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool minus = toks_[pos_++].kind == Tok::minus;
            PolyC rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

private:
    int n() const { return static_cast<int>(vars_.size()); }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }

    PolyC term()
    {
        PolyC acc = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = toks_[pos_++];
            const Token& at = peek();
            PolyC rhs = unary();
            if (op.kind == Tok::star) {
                acc *= rhs;
                continue;
            }
            if (rhs.degree() > 0)
                fail(at, "non-polynomial construct: division by a non-constant");
            if (rhs.is_zero())
                fail(at, "division by zero");
            acc *= rhs.constant_term().inverse();
        }
        return acc;
    }

    PolyC unary()
    {
        if (peek().kind == Tok::minus) {
            ++pos_;
            return -unary();
        }
        if (peek().kind == Tok::plus) {
            ++pos_;
            return unary();
        }
        return power();
    }

    PolyC power()
    {
        PolyC base = atom();
        if (peek().kind != Tok::caret)
            return base;
        ++pos_;
        const Token& at = peek();
        PolyC e = unary();
        if (peek().kind == Tok::caret)
            fail(peek(), "ambiguous repeated exponent; add parentheses");
        if (e.degree() > 0)
            fail(at, "non-polynomial construct: variable exponent");
        const GaussianRational c = e.constant_term();
        if (!c.is_real() || c.re().get_den() != 1 || sgn(c.re()) < 0)
            fail(at, "non-polynomial construct: exponent must be a nonnegative integer");
        if (c.re() > 10000)
            fail(at, "exponent too large");
        return base.pow(static_cast<unsigned>(c.re().get_num().get_ui()));
    }

    PolyC atom()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::number: {
            ++pos_;
            return PolyC::constant(n(), GaussianRational(Rational(Integer(t.text))));
        }
        case Tok::ident: {
            ++pos_;
            if (t.text == "i")
                return PolyC::constant(n(), GaussianRational::i());
            auto it = std::find(vars_.begin(), vars_.end(), t.text);
            if (it != vars_.end())
                return PolyC::variable(n(), static_cast<int>(it - vars_.begin()));
            if (peek().kind == Tok::lparen)
                fail(t, "non-polynomial construct: function application " + t.text + "(...)");
            fail(t, "undeclared identifier " + t.text);
        }
        case Tok::lparen: {
            ++pos_;
            PolyC inner = expression();
            if (peek().kind != Tok::rparen)
                fail(peek(), "expected ')'");
            ++pos_;
            return inner;
        }
        case Tok::end:
        case Tok::end_stmt:
            fail(t, "unexpected end of expression");
        default:
            fail(t, "unexpected '" + t.text + "'");
        }
    }

    const std::vector<Token>& toks_;
    std::size_t pos_;
    const std::vector<std::string>& vars_;
};

bool ends_statement(Tok k) { return k == Tok::end_stmt || k == Tok::end; }

// Comma-separated expressions up to the end of the statement.
std::vector<PolyC> expression_list(const std::vector<Token>& toks, std::size_t& pos,
                                   const std::vector<std::string>& vars)
{
    std::vector<PolyC> out;
    if (ends_statement(toks[pos].kind))
        return out;
    while (true) {
        ExprParser p(toks, pos, vars);
        out.push_back(p.expression());
        pos = p.position();
        if (toks[pos].kind == Tok::comma) {
            ++pos;
            continue;
        }
        if (!ends_statement(toks[pos].kind))
            throw ParseError(toks[pos].line, toks[pos].column, "unexpected '" + toks[pos].text + "'");
        return out;
    }
}

}  // namespace

std::string_view kind_name(SourceDocument::Kind kind)
{
    switch (kind) {
    case SourceDocument::Kind::ideal: return "ideal";
    case SourceDocument::Kind::curve: return "curve";
    case SourceDocument::Kind::hypersurface: return "hypersurface";
    }
    return "ideal";
}

SourceDocument parse_document(std::string_view text)
{
    const auto toks = tokenize(text);
    SourceDocument doc;
    std::size_t pos = 0;
    bool have_vars = false;
    bool have_labels = false;
    // Base-point coordinates are constants: no identifier matches "".
    const std::vector<std::string> no_vars{""};

    auto skip_empty = [&] {
        while (toks[pos].kind == Tok::end_stmt)
            ++pos;
    };
    auto finish_statement = [&] {
        if (!ends_statement(toks[pos].kind))
            throw ParseError(toks[pos].line, toks[pos].column, "unexpected '" + toks[pos].text + "'");
        if (toks[pos].kind == Tok::end_stmt)
            ++pos;
    };

    while (true) {
        skip_empty();
        const Token& t = toks[pos];
        if (t.kind == Tok::end)
            break;
        if (t.kind == Tok::ident && t.text == "vars" && toks[pos + 1].kind == Tok::ident) {
            if (have_vars)
                throw ParseError(t.line, t.column, "variables declared twice");
            ++pos;
            while (toks[pos].kind == Tok::ident) {
                const Token& v = toks[pos++];
                if (v.text == "i")
                    throw ParseError(v.line, v.column, "'i' is the imaginary unit and cannot be a variable");
                if (std::find(doc.variables.begin(), doc.variables.end(), v.text) != doc.variables.end())
                    throw ParseError(v.line, v.column, "variable " + v.text + " declared twice");
                doc.variables.push_back(v.text);
                if (toks[pos].kind == Tok::comma)
                    ++pos;
            }
            have_vars = true;
            finish_statement();
            continue;
        }
        if (!have_vars)
            throw ParseError(t.line, t.column, "document must start with a 'vars' declaration");
        if (t.kind == Tok::ident && t.text == "param" && toks[pos + 1].kind == Tok::ident) {
            const Token& p = toks[pos + 1];
            if (std::find(doc.variables.begin(), doc.variables.end(), p.text) != doc.variables.end() ||
                p.text == "i")
                throw ParseError(p.line, p.column, "parameter " + p.text + " clashes with a variable");
            doc.kind = SourceDocument::Kind::curve;
            doc.parameter = p.text;
            pos += 2;
            finish_statement();
            continue;
        }
        if (t.kind == Tok::ident && t.text == "at" && !ends_statement(toks[pos + 1].kind) &&
            toks[pos + 1].kind != Tok::colon) {
            ++pos;
            for (const auto& c : expression_list(toks, pos, no_vars))
                doc.base_point.push_back(c.constant_term());
            if (doc.base_point.size() != doc.variables.size())
                throw ParseError(t.line, t.column, "base point needs one coordinate per variable");
            finish_statement();
            continue;
        }
        if (t.kind == Tok::ident && (t.text == "h" || t.text == "f" || t.text == "g") &&
            toks[pos + 1].kind == Tok::colon) {
            if (doc.kind == SourceDocument::Kind::curve)
                throw ParseError(t.line, t.column, "hypersurface section in a curve document");
            have_labels = true;
            doc.kind = SourceDocument::Kind::hypersurface;
            pos += 2;
            auto list = expression_list(toks, pos, doc.variables);
            if (t.text == "h") {
                if (doc.h || list.size() > 1)
                    throw ParseError(t.line, t.column, "a hypersurface has exactly one h");
                doc.h = list.empty() ? PolyC(doc.nvars()) : list.front();
            } else {
                auto& dst = t.text == "f" ? doc.f : doc.g;
                dst.insert(dst.end(), list.begin(), list.end());
            }
            finish_statement();
            continue;
        }
        if (have_labels)
            throw ParseError(t.line, t.column, "expressions in a hypersurface document need an h:, f: or g: label");
        if (doc.kind == SourceDocument::Kind::curve) {
            const std::vector<std::string> param{doc.parameter};
            auto list = expression_list(toks, pos, param);
            doc.expressions.insert(doc.expressions.end(), list.begin(), list.end());
        } else {
            auto list = expression_list(toks, pos, doc.variables);
            doc.expressions.insert(doc.expressions.end(), list.begin(), list.end());
        }
        finish_statement();
    }
    if (!have_vars)
        throw ParseError(toks[pos].line, toks[pos].column, "document must start with a 'vars' declaration");
    if (doc.variables.empty())
        throw ParseError(1, 1, "no variables declared");
    if (doc.kind == SourceDocument::Kind::curve && doc.expressions.size() != doc.variables.size())
        throw ParseError(toks[pos].line, toks[pos].column,
                         "a curve needs one component per variable (" + std::to_string(doc.variables.size()) +
                             "), got " + std::to_string(doc.expressions.size()));
    if (doc.kind == SourceDocument::Kind::ideal && doc.expressions.empty())
        throw ParseError(toks[pos].line, toks[pos].column, "an ideal needs at least one generator");
    return doc;
}

PolyC parse_polynomial(std::string_view text, const std::vector<std::string>& variables)
{
    const auto toks = tokenize(text);
    std::size_t pos = 0;
    while (toks[pos].kind == Tok::end_stmt)
        ++pos;
    ExprParser p(toks, pos, variables);
    PolyC out = p.expression();
    pos = p.position();
    while (toks[pos].kind == Tok::end_stmt)
        ++pos;
    if (toks[pos].kind != Tok::end)
        throw ParseError(toks[pos].line, toks[pos].column, "unexpected '" + toks[pos].text + "'");
    return out;
}

IdealPresentation SourceDocument::ideal() const
{
    if (kind != Kind::ideal)
        throw Error(ErrorCode::invalid_argument, "document is a " + std::string(kind_name(kind)) + ", not an ideal");
    return IdealPresentation(nvars(), expressions, base_point);
}

CurveGerm SourceDocument::curve(int truncation) const
{
    if (kind != Kind::curve)
        throw Error(ErrorCode::invalid_argument, "document is a " + std::string(kind_name(kind)) + ", not a curve");
    std::vector<GaussianRational> base;
    for (const auto& c : expressions)
        base.push_back(c.constant_term());
    return CurveGerm::from_polynomials(expressions, truncation, base);
}

HypersurfaceGerm SourceDocument::hypersurface() const
{
    if (kind != Kind::hypersurface)
        throw Error(ErrorCode::invalid_argument,
                    "document is a " + std::string(kind_name(kind)) + ", not a hypersurface");
    return HypersurfaceGerm(h.value_or(PolyC(nvars())), f, g, base_point);
}

}  // namespace qtype
