#include "qdress/expr.hpp"

#include <cctype>

namespace qdress {

namespace {

struct Token {
    enum class Kind { Number, Ident, Op, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if ((c == 'w' || c == 's') && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            out.push_back({Token::Kind::Ident, std::string(s.substr(i, 2)), i});
            i += 2;
            continue;
        }
        if (c == 'q') {
            out.push_back({Token::Kind::Ident, "q", i});
            ++i;
            continue;
        }
        if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::Op, std::string(1, c), i});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::End) fail("unexpected token '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    bool is_op(char c) const { return peek().kind == Token::Kind::Op && peek().text[0] == c; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
    void expect(char c) {
        if (!is_op(c)) {
            if (c == ')') fail("unbalanced parentheses: expected ')'");
            fail(std::string("expected '") + c + "'");
        }
        ++i_;
    }

    static ExprPtr make(ExprNode::Binary b, std::size_t pos) {
        auto n = std::make_unique<ExprNode>();
        n->node = std::move(b);
        n->pos = pos;
        return n;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (is_op('+') || is_op('-')) {
            const Token& op = next();
            ExprPtr rhs = term();
            lhs = make({op.text[0], std::move(lhs), std::move(rhs)}, op.pos);
        }
        return lhs;
    }

    bool starts_atom() const {
        return peek().kind == Token::Kind::Number || peek().kind == Token::Kind::Ident || is_op('(');
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (true) {
            if (is_op('*') || is_op('/')) {
                const Token& op = next();
                ExprPtr rhs = unary();
                lhs = make({op.text[0], std::move(lhs), std::move(rhs)}, op.pos);
            } else if (starts_atom()) {
                std::size_t pos = peek().pos;
                ExprPtr rhs = unary();
                lhs = make({'*', std::move(lhs), std::move(rhs)}, pos);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary() {
        if (is_op('-')) {
            std::size_t pos = next().pos;
            auto n = std::make_unique<ExprNode>();
            n->node = ExprNode::Unary{unary()};
            n->pos = pos;
            return n;
        }
        return power();
    }

    int small_int(bool allow_negative) {
        bool neg = false;
        if (is_op('-')) {
            if (!allow_negative) fail("negative power of a non-scalar");
            neg = true;
            ++i_;
        }
        if (peek().kind != Token::Kind::Number) fail("expected an integer exponent");
        const Token& t = next();
        if (t.text.size() > 6) throw ParseError("exponent too large", t.pos);
        int v = std::stoi(t.text);
        return neg ? -v : v;
    }

    ExprPtr power() {
        std::size_t pos = peek().pos;
        if (peek().kind == Token::Kind::Ident && peek().text == "q") {
            ++i_;
            QExponent e{1};
            if (is_op('^')) {
                ++i_;
                std::size_t epos = peek().pos;
                if (is_op('(')) {
                    ++i_;
                    e = affine();
                    expect(')');
                } else {
                    e = QExponent{small_int(true)};
                }
                check_lattice(e, epos);
            }
            auto n = std::make_unique<ExprNode>();
            n->node = ExprNode::QPower{e};
            n->pos = pos;
            return n;
        }
        ExprPtr base = atom();
        if (is_op('^')) {
            ++i_;
            int k;
            if (is_op('(')) {
                ++i_;
                k = small_int(false);
                expect(')');
            } else {
                k = small_int(false);
            }
            auto n = std::make_unique<ExprNode>();
            n->node = ExprNode::Power{std::move(base), k};
            n->pos = pos;
            return n;
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        auto n = std::make_unique<ExprNode>();
        n->pos = t.pos;
        if (t.kind == Token::Kind::Number) {
            ++i_;
            n->node = ExprNode::Number{mpq_class(mpz_class(t.text))};
            return n;
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text[0] == 'w') {
                int j = t.text[1] - '0';
                if (j < 1 || j > 4) fail("unknown generator '" + t.text + "'");
                ++i_;
                n->node = ExprNode::Generator{j};
                return n;
            }
            fail("'" + t.text + "' may only appear inside an exponent of q");
        }
        if (is_op('(')) {
            ++i_;
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        if (t.kind == Token::Kind::End) fail("unexpected end of input");
        fail("unexpected token '" + t.text + "'");
    }

    // Affine forms c0 + c1 s1 + c2 s2 inside q^( ... ).
    QExponent affine() {
        QExponent acc = affine_term();
        while (is_op('+') || is_op('-')) {
            bool minus = next().text[0] == '-';
            QExponent rhs = affine_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    static bool is_const(const QExponent& e) { return e.s1 == 0 && e.s2 == 0; }

    QExponent affine_term() {
        QExponent acc = affine_unary();
        while (true) {
            if (is_op('*')) {
                ++i_;
                acc = affine_mul(acc, affine_unary());
            } else if (is_op('/')) {
                ++i_;
                std::size_t pos = peek().pos;
                QExponent d = affine_unary();
                if (!is_const(d)) throw ParseError("division by s1 or s2 in exponent", pos);
                if (d.c0 == 0) throw ParseError("division by zero in exponent", pos);
                acc = acc * mpq_class(1 / d.c0);
            } else if (peek().kind == Token::Kind::Number || peek().kind == Token::Kind::Ident || is_op('(')) {
                acc = affine_mul(acc, affine_unary());
            } else {
                return acc;
            }
        }
    }

    QExponent affine_mul(const QExponent& a, const QExponent& b) {
        if (is_const(a)) return b * a.c0;
        if (is_const(b)) return a * b.c0;
        fail("exponent must be affine in s1, s2");
    }

    QExponent affine_unary() {
        if (is_op('-')) {
            ++i_;
            return -affine_unary();
        }
        const Token& t = peek();
        if (t.kind == Token::Kind::Number) {
            ++i_;
            return QExponent{mpq_class(mpz_class(t.text))};
        }
        if (t.kind == Token::Kind::Ident && (t.text == "s1" || t.text == "s2")) {
            ++i_;
            return t.text == "s1" ? QExponent{0, 1, 0} : QExponent{0, 0, 1};
        }
        if (is_op('(')) {
            ++i_;
            QExponent e = affine();
            expect(')');
            return e;
        }
        fail("unexpected token in exponent");
    }

    static void check_lattice(const QExponent& e, std::size_t pos) {
        if (mpq_class(e.c0 * 4).get_den() != 1) throw ParseError("exponent not on quarter-integer lattice", pos);
        if (mpq_class(e.s1 * 4).get_den() != 1) throw ParseError("s1 exponent finer than s1/4", pos);
        if (mpq_class(e.s2 * 2).get_den() != 1) throw ParseError("s2 exponent finer than s2/2", pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

bool is_scalar(const CElement& e) {
    return e.is_zero() || (e.size() == 1 && e.terms().begin()->first == Monomial::unit());
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

CElement evaluate(const ExprNode& e) {
    return std::visit(
        [&](const auto& n) -> CElement {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ExprNode::Number>) {
                return CElement(Scalar(n.value));
            } else if constexpr (std::is_same_v<T, ExprNode::QPower>) {
                return CElement(q_power(n.exponent));
            } else if constexpr (std::is_same_v<T, ExprNode::Generator>) {
                return w(n.index);
            } else if constexpr (std::is_same_v<T, ExprNode::Unary>) {
                return -evaluate(*n.operand);
            } else if constexpr (std::is_same_v<T, ExprNode::Power>) {
                return pow(evaluate(*n.base), n.exponent);
            } else {
                CElement a = evaluate(*n.lhs);
                CElement b = evaluate(*n.rhs);
                switch (n.op) {
                    case '+': return a + b;
                    case '-': return a - b;
                    case '*': return a * b;
                    default: break;
                }
                if (!is_scalar(b)) throw ParseError("division by a non-scalar", e.pos);
                Scalar d = b.coeff(Monomial::unit());
                if (d.is_zero()) throw ParseError("division by zero", e.pos);
                if (!d.is_invertible())
                    throw ParseError("divisor is not a unit times powers of (1+q) and (q-1)", e.pos);
                return a.scaled(d.inverse());
            }
        },
        e.node);
}

Word parse_word(std::string_view s) {
    Word out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_index = [&](std::size_t at) {
        if (i >= s.size() || (s[i] != '1' && s[i] != '2')) throw ParseError("expected generator index 1 or 2", at);
        return s[i++] - '0';
    };
    auto read_power = [&]() {
        skip_ws();
        if (i >= s.size() || s[i] != '^') return 1;
        ++i;
        skip_ws();
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        bool neg = i < s.size() && s[i] == '-';
        if (neg) ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw ParseError("expected integer power", start);
        int v = std::stoi(std::string(s.substr(start, i - start)));
        if (paren) {
            if (i >= s.size() || s[i] != ')') throw ParseError("unbalanced parentheses: expected ')'", i);
            ++i;
        }
        return neg ? -v : v;
    };

    skip_ws();
    if (s.substr(i) == "1") return out;
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        std::size_t at = i;
        if (s.substr(i, 2) == "qH") {
            i += 2;
            int idx = read_index(at);
            out.push_back(Gen::cartan(idx, 2 * read_power()));
        } else if (s[i] == 'K') {
            ++i;
            int idx = read_index(at);
            out.push_back(Gen::cartan(idx, read_power()));
        } else if (s[i] == 'E' || s[i] == 'F') {
            bool raise = s[i] == 'E';
            ++i;
            int idx = read_index(at);
            out.push_back(raise ? Gen::raise(idx) : Gen::lower(idx));
        } else {
            throw ParseError(std::string("unknown letter '") + s[i] + "' in word", at);
        }
    }
    return out;
}

}  // namespace qdress
