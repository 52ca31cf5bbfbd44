#include "cvf/expr.hpp"

#include <cctype>
#include <optional>

namespace cvf {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind = Kind::End;
    std::string text;
    long value = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.pos = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::Number;
            tok_.text = text_.substr(start, pos_ - start);
            try {
                tok_.value = std::stol(tok_.text);
            } catch (const std::exception&) {
                throw ParseError(start, "integer literal out of range");
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::Ident;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        switch (c) {
        case '+': tok_.kind = Token::Kind::Plus; break;
        case '-': tok_.kind = Token::Kind::Minus; break;
        case '*': tok_.kind = Token::Kind::Star; break;
        case '^': tok_.kind = Token::Kind::Caret; break;
        case '/': tok_.kind = Token::Kind::Slash; break;
        case '(': tok_.kind = Token::Kind::LParen; break;
        case ')': tok_.kind = Token::Kind::RParen; break;
        default:
            throw ParseError(pos_, std::string("unexpected character '") + c + "'");
        }
        tok_.text = c;
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token tok_;
};

// Value flowing through the parser: either a plain function (with weight and
// degree bookkeeping) or an operator.
struct Value {
    bool is_op = false;
    // function payload
    RegularFunction fn = RegularFunction::constant(Rational(0));
    int weight = 0;
    int degree = 0;
    // operator payload
    std::optional<InvariantOperator> op;
    int raise = 0;
};

Value make_fn(RegularFunction f, int weight, int degree) {
    Value v;
    v.fn = std::move(f);
    v.weight = weight;
    v.degree = degree;
    return v;
}

Value make_op(InvariantOperator op, int raise) {
    Value v;
    v.is_op = true;
    v.op = std::move(op);
    v.raise = raise;
    return v;
}

InvariantOperator as_operator(const Value& v) {
    if (v.is_op) return *v.op;
    return InvariantOperator::mul(v.fn);
}

int as_raise(const Value& v) { return v.is_op ? v.raise : v.degree; }

class Parser {
public:
    Parser(const std::string& text, bool allow_operators)
        : lex_(text), allow_operators_(allow_operators) {}

    Value parse() {
        Value v = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError(t.pos, "expected operator or end of expression, got '" +
                                        t.text + "'");
        return v;
    }

private:
    Value expr() {
        Value acc = term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Kind::Plus && t.kind != Token::Kind::Minus) return acc;
            Token op = lex_.take();
            Value rhs = term();
            bool minus = op.kind == Token::Kind::Minus;
            if (!acc.is_op && !rhs.is_op) {
                if (acc.weight != rhs.weight)
                    throw ParseError(op.pos, "cannot add terms of beta-weight " +
                                                 std::to_string(acc.weight) + " and " +
                                                 std::to_string(rhs.weight));
                acc = make_fn(minus ? acc.fn - rhs.fn : acc.fn + rhs.fn, acc.weight,
                              std::max(acc.degree, rhs.degree));
            } else {
                auto right = as_operator(rhs);
                if (minus) right = right.scaled(Rational(-1));
                acc = make_op(as_operator(acc) + right, std::max(as_raise(acc), as_raise(rhs)));
            }
        }
    }

    Value term() {
        Value acc = factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            Value rhs = factor();
            if (!acc.is_op && !rhs.is_op) {
                acc = make_fn(acc.fn * rhs.fn, acc.weight + rhs.weight,
                              acc.degree + rhs.degree);
            } else {
                // operator product is composition, left acting after right
                acc = make_op(InvariantOperator::compose(as_operator(acc), as_operator(rhs)),
                              as_raise(acc) + as_raise(rhs));
            }
        }
        return acc;
    }

    Value factor() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            Token t = lex_.take();
            Value v = factor();
            if (v.is_op) return make_op(v.op->scaled(Rational(-1)), v.raise);
            return make_fn(Rational(-1) * v.fn, v.weight, v.degree);
        }
        Value v = atom();
        while (lex_.peek().kind == Token::Kind::Caret) {
            Token caret = lex_.take();
            long e = expect_integer("exponent");
            if (v.is_op) {
                if (e < 1)
                    throw ParseError(caret.pos, "operator exponent must be >= 1");
                v = make_op(v.op->power(static_cast<int>(e)),
                            v.raise * static_cast<int>(e));
            } else {
                if (e < 0) throw ParseError(caret.pos, "negative exponent on a function");
                v = make_fn(RegularFunction::pow(v.fn, static_cast<int>(e)),
                            v.weight * static_cast<int>(e), v.degree * static_cast<int>(e));
            }
        }
        return v;
    }

    Value atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Kind::Number: {
            Rational q(t.value);
            if (lex_.peek().kind == Token::Kind::Slash) {
                lex_.take();
                long den = expect_integer("denominator");
                if (den == 0) throw ParseError(t.pos, "zero denominator");
                q = Rational(t.value, den);
            }
            return make_fn(RegularFunction::constant(q), 0, 0);
        }
        case Token::Kind::LParen: {
            Value v = expr();
            expect(Token::Kind::RParen, ")");
            return v;
        }
        case Token::Kind::Ident:
            return ident_atom(t);
        default:
            throw ParseError(t.pos, "expected a number, name or '(', got '" + t.text + "'");
        }
    }

    Value ident_atom(const Token& t) {
        const std::string& name = t.text;
        if (name == "beta") return make_fn(RegularFunction::beta(), 1, 0);
        if (name == "I" || name == "J" || name == "chi") {
            long m = paren_integer(name);
            if (name == "I")
                return make_fn(RegularFunction::trace_power(static_cast<int>(m)), 0,
                               static_cast<int>(m < 0 ? -m : m));
            if (m < 0) throw ParseError(t.pos, name + " expects a nonnegative index");
            if (name == "J")
                return make_fn(RegularFunction::trace_pow(static_cast<int>(m)), 0,
                               static_cast<int>(m));
            return make_fn(RegularFunction::chi(static_cast<int>(m)), 0,
                           static_cast<int>(m));
        }
        if (!allow_operators_)
            throw ParseError(t.pos, "'" + name + "' is not a function atom");
        if (name == "Psi") {
            long k = paren_integer(name);
            return make_op(InvariantOperator::field(FieldMapSpec::psi_signed(static_cast<int>(k))),
                           static_cast<int>(k < 0 ? -k : k));
        }
        if (name == "Phi") {
            long k = paren_integer(name);
            return make_op(InvariantOperator::field(FieldMapSpec::phi(2, static_cast<int>(k))),
                           static_cast<int>(k < 0 ? -k : k));
        }
        if (name == "Delta") return make_op(casimir(), 2);
        if (name == "D") return make_op(separation_operator(), 3);
        throw ParseError(t.pos, "unknown name '" + name + "'");
    }

    long paren_integer(const std::string& name) {
        expect(Token::Kind::LParen, "( after " + name);
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        long v = expect_integer("index");
        expect(Token::Kind::RParen, ")");
        return neg ? -v : v;
    }

    long expect_integer(const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Number)
            throw ParseError(t.pos, "expected " + what + ", got '" + t.text + "'");
        return lex_.take().value;
    }

    void expect(Token::Kind kind, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != kind)
            throw ParseError(t.pos, "expected " + what + ", got '" +
                                        (t.kind == Token::Kind::End ? "end" : t.text) + "'");
        lex_.take();
    }

    Lexer lex_;
    bool allow_operators_;
};

} // namespace

ParsedFunction parse_function(const std::string& text) {
    Parser parser(text, /*allow_operators=*/false);
    Value v = parser.parse();
    return ParsedFunction{v.fn, v.weight, v.degree};
}

ParsedOperator parse_operator(const std::string& text) {
    Parser parser(text, /*allow_operators=*/true);
    Value v = parser.parse();
    return ParsedOperator{as_operator(v), as_raise(v)};
}

} // namespace cvf
