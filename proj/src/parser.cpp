#include "ncgb/parser.hpp"

#include <cctype>
#include <optional>

namespace ncgb {

namespace {

std::string describe_expected(const std::set<std::string>& expected)
{
    if (expected.empty())
        return "";
    std::string out = " (expected ";
    bool first = true;
    for (const auto& e : expected) {
        if (!first)
            out += ", ";
        out += e;
        first = false;
    }
    return out + ")";
}

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::set<std::string> expected)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message +
            describe_expected(expected)),
      line_(line), column_(column), expected_(std::move(expected))
{
}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance();
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance();
            continue;
        }
        Token t{Tok::Punct, "", line, col};
        if (std::isalpha(c) || c == '_') {
            t.kind = Tok::Ident;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                t.text += src[i];
                advance();
            }
        } else if (std::isdigit(c)) {
            t.kind = Tok::Number;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                advance();
            }
        } else if (std::string_view(";,:*^+-/>()").find(static_cast<char>(c)) != std::string_view::npos) {
            t.text = std::string(1, static_cast<char>(c));
            advance();
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    ProblemFile problem();
    Poly expression_only(const RingPtr& ring);

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg, std::set<std::string> expected = {}) const
    {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, msg + ", found " + found, std::move(expected));
    }
    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const
    {
        throw ParseError(t.line, t.column, msg);
    }

    bool at_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
    bool at_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }
    void expect_punct(const char* p)
    {
        if (!at_punct(p))
            fail("syntax error", {std::string("'") + p + "'"});
        next();
    }
    std::string expect_ident()
    {
        if (peek().kind != Tok::Ident)
            fail("syntax error", {"identifier"});
        return next().text;
    }
    mpz_class expect_number()
    {
        if (peek().kind != Tok::Number)
            fail("syntax error", {"integer"});
        return mpz_class(next().text);
    }

    void field_stmt();
    void vars_stmt();
    void order_stmt();
    void gens_stmt();
    void ensure_ring();

    Poly expr();
    std::vector<Term> term(bool negate);

    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    std::optional<FieldSpec> field_;
    std::optional<Signature> sig_;
    std::optional<OrderSpec> order_;
    RingPtr ring_;
    std::vector<Poly> gens_;
    bool seen_gens_ = false;
};

void Parser::field_stmt()
{
    const Token& kw = peek();
    if (field_)
        fail_at(kw, "duplicate 'field' statement");
    if (seen_gens_)
        fail_at(kw, "'field' must precede 'gens'");
    next();
    if (at_word("Q")) {
        next();
        field_ = FieldSpec::rationals();
    } else if (at_word("GF")) {
        next();
        bool paren = at_punct("(");
        if (paren)
            next();
        const Token& num = peek();
        mpz_class p = expect_number();
        if (paren)
            expect_punct(")");
        if (!p.fits_ulong_p() || p > 0xffffffffUL)
            fail_at(num, "modulus " + p.get_str() + " does not fit in 32 bits");
        try {
            field_ = FieldSpec::prime(p.get_ui());
        } catch (const Error& e) {
            fail_at(num, e.what());
        }
    } else {
        fail("unknown field", {"'Q'", "'GF'"});
    }
    expect_punct(";");
}

void Parser::vars_stmt()
{
    const Token& kw = peek();
    if (sig_)
        fail_at(kw, "duplicate 'vars' statement");
    next();
    std::vector<std::string> names;
    std::vector<int> weights;
    for (;;) {
        const Token& name_tok = peek();
        std::string name = expect_ident();
        for (const auto& n : names)
            if (n == name)
                fail_at(name_tok, "duplicate variable name '" + name + "'");
        int w = 1;
        if (at_punct(":")) {
            next();
            bool negative = at_punct("-");
            if (negative)
                next();
            const Token& wt = peek();
            mpz_class v = expect_number();
            if (negative || v == 0)
                fail_at(wt, "weight must be positive");
            if (!v.fits_sint_p())
                fail_at(wt, "weight too large");
            w = static_cast<int>(v.get_si());
        }
        names.push_back(std::move(name));
        weights.push_back(w);
        if (at_punct(",")) {
            next();
            continue;
        }
        break;
    }
    expect_punct(";");
    sig_ = Signature(std::move(names), std::move(weights));
}

void Parser::order_stmt()
{
    const Token& kw = peek();
    if (order_)
        fail_at(kw, "duplicate 'order' statement");
    if (!sig_)
        fail_at(kw, "'order' must follow 'vars'");
    if (seen_gens_)
        fail_at(kw, "'order' must precede 'gens'");
    next();
    if (!at_word("deglex"))
        fail("unknown ordering", {"'deglex'"});
    next();
    std::vector<Letter> prec;
    for (;;) {
        const Token& t = peek();
        std::string name = expect_ident();
        auto x = sig_->find(name);
        if (!x)
            fail_at(t, "unknown identifier '" + name + "'");
        for (auto y : prec)
            if (y == *x)
                fail_at(t, "variable '" + name + "' listed twice in the ordering");
        prec.push_back(*x);
        if (at_punct(">")) {
            next();
            continue;
        }
        break;
    }
    if (prec.size() != sig_->nvars())
        fail("ordering must list every variable", {"'>'"});
    expect_punct(";");
    order_ = OrderSpec::deglex(std::move(prec));
}

void Parser::ensure_ring()
{
    if (ring_)
        return;
    if (!field_)
        field_ = FieldSpec::rationals();
    if (!order_)
        order_ = OrderSpec::deglex(sig_->nvars());
    ring_ = make_ring(*field_, *sig_, *order_);
}

void Parser::gens_stmt()
{
    const Token& kw = peek();
    if (seen_gens_)
        fail_at(kw, "duplicate 'gens' statement");
    if (!sig_)
        fail_at(kw, "'gens' must follow 'vars'");
    next();
    seen_gens_ = true;
    ensure_ring();
    expect_punct(":");
    if (at_punct(";")) {
        next();
        return;
    }
    for (;;) {
        const Token& start = peek();
        Poly f = expr();
        if (f.is_zero())
            fail_at(start, "generator " + std::to_string(gens_.size()) + " is the zero polynomial");
        gens_.push_back(std::move(f));
        if (at_punct(",")) {
            next();
            continue;
        }
        break;
    }
    expect_punct(";");
}

ProblemFile Parser::problem()
{
    while (peek().kind != Tok::End) {
        if (at_word("field"))
            field_stmt();
        else if (at_word("vars"))
            vars_stmt();
        else if (at_word("order"))
            order_stmt();
        else if (at_word("gens"))
            gens_stmt();
        else
            fail("unknown statement", {"'field'", "'vars'", "'order'", "'gens'"});
    }
    if (!sig_)
        fail("missing 'vars' statement", {"'vars'"});
    ensure_ring();
    return {ring_, std::move(gens_)};
}

Poly Parser::expr()
{
    std::vector<Term> raw;
    bool negate = false;
    if (at_punct("+") || at_punct("-"))
        negate = next().text == "-";
    for (;;) {
        auto t = term(negate);
        raw.insert(raw.end(), t.begin(), t.end());
        if (at_punct("+") || at_punct("-")) {
            negate = next().text == "-";
            continue;
        }
        break;
    }
    return Poly::normalize(ring_, std::move(raw));
}

std::vector<Term> Parser::term(bool negate)
{
    const FieldSpec& field = ring_->field;
    Scalar coeff = Scalar::one(field);
    std::vector<Letter> letters;
    for (;;) {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            mpz_class num = expect_number();
            mpz_class den = 1;
            if (at_punct("/")) {
                next();
                const Token& dt = peek();
                den = expect_number();
                if (den == 0)
                    fail_at(dt, "zero denominator");
            }
            try {
                coeff *= Scalar::rational(field, num, den);
            } catch (const Error& e) {
                fail_at(t, e.what());
            }
        } else if (t.kind == Tok::Ident) {
            std::string name = next().text;
            auto x = ring_->sig.find(name);
            if (!x)
                fail_at(t, "unknown identifier '" + name + "'");
            std::size_t reps = 1;
            if (at_punct("^")) {
                next();
                const Token& et = peek();
                mpz_class e = expect_number();
                if (e == 0)
                    fail_at(et, "exponent must be positive");
                if (!e.fits_uint_p() || e > 4096)
                    fail_at(et, "exponent too large");
                reps = e.get_ui();
            }
            letters.insert(letters.end(), reps, *x);
        } else {
            fail("syntax error", {"identifier", "integer"});
        }
        if (at_punct("*")) {
            next();
            continue;
        }
        break;
    }
    if (negate)
        coeff = -coeff;
    return {Term{coeff, Word(std::move(letters))}};
}

Poly Parser::expression_only(const RingPtr& ring)
{
    ring_ = ring;
    Poly f = expr();
    if (peek().kind != Tok::End)
        fail("trailing input", {"'+'", "'-'", "end of input"});
    return f;
}

} // namespace

ProblemFile parse_problem(std::string_view text)
{
    return Parser(text).problem();
}

Poly parse_poly(const RingPtr& ring, std::string_view text)
{
    return Parser(text).expression_only(ring);
}

std::string print_canonical(const Poly& f)
{
    return f.to_string();
}

} // namespace ncgb
