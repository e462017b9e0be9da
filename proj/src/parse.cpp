#include "wildram/parse.hpp"

#include <cctype>

namespace wildram {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    const RingPtr& ring;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what)
    {
        throw parse_error("parse error at position " + std::to_string(pos) + ": " + what +
                          " in \"" + text + "\"");
    }

    std::uint64_t natural()
    {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (1ull << 40))
                fail("number too large");
            ++pos;
        }
        return v;
    }

    Poly atom()
    {
        skip_ws();
        if (eat('(')) {
            Poly e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (peek() == '-') {
            eat('-');
            return -factor();
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring, static_cast<std::int64_t>(natural() % ring->p));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                    text[pos] == '\''))
                ++pos;
            std::string name = text.substr(start, pos - start);
            for (std::size_t i = 0; i < ring->vars.size(); ++i)
                if (ring->vars[i] == name)
                    return Poly::variable(ring, i);
            fail("unknown variable '" + name + "'");
        }
        fail("expected a number, variable or '('");
    }

    Poly factor()
    {
        Poly base = atom();
        if (eat('^')) {
            std::uint64_t e = natural();
            return base.pow(e);
        }
        return base;
    }

    Poly term()
    {
        Poly r = factor();
        while (eat('*'))
            r = r * factor();
        return r;
    }

    Poly expr()
    {
        bool neg = false;
        if (peek() == '-') {
            eat('-');
            neg = true;
        } else if (peek() == '+') {
            eat('+');
        }
        Poly r = term();
        if (neg)
            r = -r;
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                r = r + term();
            } else if (c == '-') {
                eat('-');
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring)
{
    Parser p{text, 0, ring};
    Poly r = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return r;
}

}  // namespace wildram
