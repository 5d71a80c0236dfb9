#include "zscheme/parser.hpp"

#include <cctype>

namespace zscheme {

namespace {

class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

    PolyQ run() {
        PolyQ p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    PolyQ expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        PolyQ p = term();
        if (negate) p = -p;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') return p;
            take();
            PolyQ t = term();
            if (c == '+')
                p += t;
            else
                p -= t;
        }
    }

    PolyQ term() {
        PolyQ p = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') return p;
            take();
            p *= factor();
        }
    }

    PolyQ factor() {
        PolyQ b = base();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            const std::size_t at = pos_;
            if (!std::isdigit(peek())) fail("expected a non-negative integer exponent", at);
            unsigned long e = 0;
            while (std::isdigit(peek())) {
                e = e * 10 + static_cast<unsigned long>(take() - '0');
                if (e > 100000) fail("exponent too large", at);
            }
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    PolyQ base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            take();
            PolyQ p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return p;
        }
        if (std::isdigit(c)) return rational();
        if (std::isalpha(c) || c == '_') return identifier();
        fail(pos_ < s_.size() ? std::string("unexpected character '") + c + "'"
                              : "unexpected end of input");
        return PolyQ(); // unreachable
    }

    PolyQ rational() {
        std::string num;
        while (std::isdigit(peek())) num += take();
        if (peek() == '/') {
            take();
            const std::size_t at = pos_;
            std::string den;
            while (std::isdigit(peek())) den += take();
            if (den.empty()) fail("expected a denominator", at);
            return PolyQ::constant(ring_, Rational::parse(num + "/" + den));
        }
        return PolyQ::constant(ring_, Rational::parse(num));
    }

    PolyQ identifier() {
        const std::size_t at = pos_;
        std::string name;
        while (std::isalnum(peek()) || peek() == '_') name += take();
        const int i = ring_->var_index(name);
        if (i < 0)
            throw Error(Errc::UnknownVariable,
                        "'" + name + "' is not a variable of " + ring_->describe(),
                        static_cast<long>(at));
        return PolyQ::variable(ring_, i);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char take() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw Error(Errc::SyntaxError, msg + " at offset " + std::to_string(at),
                    static_cast<long>(at));
    }

    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

PolyQ parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace zscheme
