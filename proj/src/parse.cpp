#include "orush/parse.hpp"

#include <cctype>

namespace orush {

namespace {

struct Token {
    enum class T { Integer, Symbol, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    T t;
    Int value;
    char sym = 0;
    size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::T::Integer, Int(src.substr(i, j - i)), 0, i});
            i = j;
            continue;
        }
        if (c == 'w' || c == 'x' || c == 'y') {
            out.push_back({Token::T::Symbol, 0, c, i});
            ++i;
            continue;
        }
        Token::T t;
        switch (c) {
            case '+': t = Token::T::Plus; break;
            case '-': t = Token::T::Minus; break;
            case '*': t = Token::T::Star; break;
            case '/': t = Token::T::Slash; break;
            case '^': t = Token::T::Caret; break;
            case '(': t = Token::T::LParen; break;
            case ')': t = Token::T::RParen; break;
            default:
                throw UsageError("unexpected character '" + std::string(1, c) +
                                 "' at position " + std::to_string(i));
        }
        out.push_back({t, 0, 0, i});
        ++i;
    }
    out.push_back({Token::T::End, 0, 0, src.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprNode run() {
        ExprNode e = expr();
        if (peek().t != Token::T::End)
            throw UsageError("trailing input at position " + std::to_string(peek().pos));
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }

    ExprNode expr() {
        ExprNode lhs = term();
        while (peek().t == Token::T::Plus || peek().t == Token::T::Minus) {
            bool plus = take().t == Token::T::Plus;
            ExprNode rhs = term();
            ExprNode n;
            n.kind = plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
            n.kids = {std::move(lhs), std::move(rhs)};
            lhs = std::move(n);
        }
        return lhs;
    }

    bool starts_factor() const {
        auto t = peek().t;
        return t == Token::T::Integer || t == Token::T::Symbol || t == Token::T::LParen;
    }

    ExprNode term() {
        ExprNode lhs = unary();
        while (true) {
            if (peek().t == Token::T::Star || peek().t == Token::T::Slash) {
                bool mul = take().t == Token::T::Star;
                ExprNode rhs = unary();
                ExprNode n;
                n.kind = mul ? ExprNode::Kind::Mul : ExprNode::Kind::Div;
                n.kids = {std::move(lhs), std::move(rhs)};
                lhs = std::move(n);
            } else if (starts_factor()) {
                // juxtaposition: "2x", "2(1+w)", "x y"
                ExprNode rhs = postfix();
                ExprNode n;
                n.kind = ExprNode::Kind::Mul;
                n.kids = {std::move(lhs), std::move(rhs)};
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    ExprNode unary() {
        if (peek().t == Token::T::Minus) {
            take();
            ExprNode n;
            n.kind = ExprNode::Kind::Neg;
            n.kids = {unary()};
            return n;
        }
        return postfix();
    }

    ExprNode postfix() {
        ExprNode base = primary();
        while (peek().t == Token::T::Caret) {
            take();
            if (peek().t != Token::T::Integer)
                throw UsageError("exponent must be a plain nonnegative integer (position " +
                                 std::to_string(peek().pos) + ")");
            Token e = take();
            if (e.value > 1024) throw UsageError("exponent " + e.value.get_str() + " is too large");
            ExprNode n;
            n.kind = ExprNode::Kind::Pow;
            n.exponent = e.value.get_si();
            n.kids = {std::move(base)};
            base = std::move(n);
        }
        return base;
    }

    ExprNode primary() {
        const Token& t = peek();
        if (t.t == Token::T::Integer) {
            ExprNode n;
            n.kind = ExprNode::Kind::Number;
            n.number = take().value;
            return n;
        }
        if (t.t == Token::T::Symbol) {
            ExprNode n;
            n.kind = ExprNode::Kind::Symbol;
            n.symbol = take().sym;
            return n;
        }
        if (t.t == Token::T::LParen) {
            take();
            ExprNode e = expr();
            if (peek().t != Token::T::RParen)
                throw UsageError("missing ')' at position " + std::to_string(peek().pos));
            take();
            return e;
        }
        throw UsageError("expected a number, symbol or '(' at position " + std::to_string(t.pos));
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

}  // namespace

ExprNode parse_expression(const std::string& src) {
    if (src.empty()) throw UsageError("empty expression");
    return Parser(tokenize(src)).run();
}

Poly<Int> eval_int_poly(const std::string& src) {
    return eval_poly(parse_expression(src), coeff_ops(ZRing{}));
}

Poly<Rat> eval_rat_poly(const std::string& src) {
    return eval_poly(parse_expression(src), rat_coeff_ops());
}

std::vector<std::string> split_list(const std::string& src) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= src.size()) {
        size_t comma = src.find(',', start);
        if (comma == std::string::npos) comma = src.size();
        std::string piece = src.substr(start, comma - start);
        size_t a = piece.find_first_not_of(" \t");
        size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) throw UsageError("empty entry in list '" + src + "'");
        out.push_back(piece.substr(a, b - a + 1));
        start = comma + 1;
        if (comma == src.size()) break;
    }
    return out;
}

std::vector<Exp> parse_monomial_list(const std::string& src) {
    std::vector<Exp> out;
    if (src.empty()) return out;
    for (const std::string& piece : split_list(src)) {
        Poly<Int> p = eval_int_poly(piece);
        if (p.term_count() != 1 || p.terms().begin()->second != 1)
            throw UsageError("'" + piece + "' is not a plain monomial");
        out.push_back(p.terms().begin()->first);
    }
    return out;
}

}  // namespace orush
