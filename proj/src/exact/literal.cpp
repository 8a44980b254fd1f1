#include "cutseq/literal.hpp"

#include "cutseq/errors.hpp"

#include <cctype>

namespace cutseq {

namespace {

class Reader {
public:
    explicit Reader(std::string_view s) : s_(s) {}

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }
    bool done()
    {
        skip();
        return i_ == s_.size();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

    Integer integer()
    {
        skip();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+'))
            ++i_;
        std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (i_ == digits) {
            i_ = start;
            fail("expected an integer");
        }
        std::string tok(s_.substr(start, i_ - start));
        if (tok[0] == '+')
            tok.erase(0, 1);
        return Integer(tok);
    }

    QuadraticSurd expr()
    {
        QuadraticSurd v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

private:
    QuadraticSurd term()
    {
        QuadraticSurd v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                std::size_t at = i_;
                QuadraticSurd d = unary();
                if (d.sign() == 0)
                    throw ParseError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    QuadraticSurd unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return primary();
    }

    QuadraticSurd primary()
    {
        skip();
        if (eat('(')) {
            QuadraticSurd v = expr();
            expect(')');
            return v;
        }
        if (s_.substr(i_, 4) == "sqrt") {
            i_ += 4;
            expect('(');
            std::size_t at = i_;
            QuadraticSurd arg = expr();
            expect(')');
            if (!arg.is_rational() || arg.sign() < 0)
                throw ParseError("sqrt needs a non-negative rational", at);
            Rational q = arg.to_rational();
            // sqrt(n/d) = sqrt(n d) / d
            return QuadraticSurd::make(0, 1, q.get_num() * q.get_den(), q.get_den());
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            return QuadraticSurd(integer());
        fail("expected a number, sqrt(...) or '('");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

QuadraticSurd parse_surd(std::string_view text)
{
    Reader r(text);
    if (r.done())
        throw ParseError("empty surd literal", 0);
    QuadraticSurd v = r.expr();
    if (!r.done())
        r.fail("unexpected trailing input");
    return v;
}

Matrix2 parse_matrix2(std::string_view text)
{
    Reader r(text);
    Integer e[4];
    r.expect('[');
    for (int row = 0; row < 2; ++row) {
        if (row)
            r.expect(',');
        r.expect('[');
        e[2 * row] = r.integer();
        r.expect(',');
        e[2 * row + 1] = r.integer();
        r.expect(']');
    }
    r.expect(']');
    if (!r.done())
        r.fail("unexpected trailing input");
    return {e[0], e[1], e[2], e[3]};
}

UnimodularMatrix parse_matrix(std::string_view text) { return UnimodularMatrix(parse_matrix2(text)); }

} // namespace cutseq
