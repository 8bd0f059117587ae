#include "morin/parse.hpp"

#include <cctype>

#include "morin/errors.hpp"

namespace morin {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end()
    {
        ws();
        return pos_ >= text_.size();
    }

    char peek()
    {
        ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // Character right at the cursor, without skipping whitespace.
    char raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what)
    {
        if (!accept(c))
            fail(what);
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        throw ParseError(pos_, expected, std::string(text_));
    }

    bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool lower_next() { return std::islower(static_cast<unsigned char>(peek())) != 0; }

    Integer integer()
    {
        if (!digit_next())
            fail("integer");
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(raw())))
            ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    long small_integer()
    {
        const std::size_t at = (ws(), pos_);
        Integer v = integer();
        if (!v.fits_slong_p())
            throw ParseError(at, "integer of machine size", std::string(text_));
        return v.get_si();
    }

    // [a-z][0-9]*
    std::string identifier()
    {
        if (!lower_next())
            fail("variable");
        std::size_t start = pos_++;
        while (std::isdigit(static_cast<unsigned char>(raw())))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // Unsigned integer or fraction "a/b".
    Rational number()
    {
        Integer num = integer();
        if (peek() == '/') {
            ++pos_;
            const std::size_t at = (ws(), pos_);
            Integer den = integer();
            if (den == 0)
                throw ParseError(at, "nonzero denominator", std::string(text_));
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    void advance() { ++pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// --- alphabets ---------------------------------------------------------------

Letter parse_form(Cursor& c)
{
    Letter total;
    bool first = true;
    for (;;) {
        long sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (!first && !c.accept('+'))
            break;
        if (!c.digit_next() && !c.lower_next())
            c.fail("letter term");
        long coeff = 1;
        bool has_number = false;
        if (c.digit_next()) {
            coeff = c.small_integer();
            has_number = true;
            c.accept('*');
        }
        if (c.lower_next())
            total = total + Letter(VarId(c.identifier()), sign * coeff);
        else if (has_number)
            total = total + Letter(sign * coeff);
        else
            c.fail("variable");
        first = false;
        if (c.peek() != '+' && c.peek() != '-')
            break;
    }
    return total;
}

Alphabet parse_item(Cursor& c)
{
    const char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        const long n = c.small_integer();
        if (n > 1000)
            c.fail("letter count <= 1000");
        return from_integer(static_cast<int>(n));
    }
    if (ch == '[') {
        c.accept('[');
        Letter l = parse_form(c);
        c.expect(']', "']'");
        return boxed(l);
    }
    if (std::islower(static_cast<unsigned char>(ch)))
        return Alphabet{Letter(VarId(c.identifier()))};
    if (ch == 'B' || ch == 'X' || ch == 'Y') {
        c.accept(ch);
        if (c.raw() != '_')
            c.fail("'_' after alphabet name");
        c.accept('_');
        long n = 0;
        if (c.accept('{')) {
            n = c.small_integer();
            c.expect('}', "'}'");
        } else {
            n = c.small_integer();
        }
        const std::string stem(1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        return generic(stem, static_cast<int>(n));
    }
    if (ch == 'D') {
        c.accept('D');
        const VarId x1("x1"), x2("x2");
        return Alphabet{Letter(x1, 2), Letter(x2, 2), Letter(0, {{x1, 1}, {x2, 1}})};
    }
    c.fail("letter, integer, '[', or alphabet name");
}

// --- polynomials ---------------------------------------------------------------

Poly parse_sum(Cursor& c);

Poly parse_primary(Cursor& c)
{
    if (c.digit_next())
        return Poly(c.number());
    if (c.lower_next())
        return Poly::var(c.identifier());
    if (c.accept('(')) {
        Poly p = parse_sum(c);
        c.expect(')', "')'");
        return p;
    }
    c.fail("number, variable, or '('");
}

Poly parse_factor(Cursor& c)
{
    Poly base = parse_primary(c);
    if (c.accept('^')) {
        const long e = c.small_integer();
        if (e > 1000)
            c.fail("exponent <= 1000");
        return pow(base, static_cast<unsigned>(e));
    }
    return base;
}

Poly parse_product(Cursor& c)
{
    Poly p = parse_factor(c);
    for (;;) {
        if (c.accept('*')) {
            p *= parse_factor(c);
            continue;
        }
        const char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch)) || std::islower(static_cast<unsigned char>(ch)) || ch == '(') {
            p *= parse_factor(c);
            continue;
        }
        return p;
    }
}

Poly parse_sum(Cursor& c)
{
    Poly total;
    bool first = true;
    for (;;) {
        int sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (!c.accept('+') && !first)
            return total;
        Poly t = parse_product(c);
        if (sign < 0)
            total -= t;
        else
            total += t;
        first = false;
    }
}

// --- expansions ----------------------------------------------------------------

Partition parse_partition_body(Cursor& c)
{
    std::string body;
    if (c.accept('{')) {
        while (c.raw() != '}' && c.raw() != '\0') {
            body += c.raw();
            c.advance();
        }
        c.expect('}', "'}'");
    } else {
        if (!c.digit_next())
            c.fail("partition digits");
        while (std::isdigit(static_cast<unsigned char>(c.raw()))) {
            body += c.raw();
            c.advance();
        }
    }
    std::erase_if(body, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; });
    try {
        return Partition::parse(body);
    } catch (const ParseError&) {
        c.fail("weakly increasing partition digits");
    }
}

} // namespace

DiffArg parse_diffarg(std::string_view text)
{
    Cursor c(text);
    if (c.at_end())
        c.fail("alphabet expression");
    DiffArg out;
    if (c.peek() != '-') {
        out.plus += parse_item(c);
        while (c.accept('+'))
            out.plus += parse_item(c);
    }
    while (c.accept('-'))
        out.minus += parse_item(c);
    if (!c.at_end())
        c.fail(out.minus.empty() && c.peek() != '+' ? "'+', '-', or end of input" : "'-' or end of input");
    return out;
}

Letter parse_letter(std::string_view text)
{
    Cursor c(text);
    Letter l = parse_form(c);
    if (!c.at_end())
        c.fail("end of letter");
    return l;
}

Poly parse_poly(std::string_view text)
{
    Cursor c(text);
    if (c.at_end())
        c.fail("polynomial");
    Poly p = parse_sum(c);
    if (!c.at_end())
        c.fail("operator or end of input");
    return p;
}

SchurExpansion parse_expansion(std::string_view text)
{
    Cursor c(text);
    if (c.at_end())
        c.fail("Schur expansion");
    SchurExpansion out;
    if (c.peek() == '0') {
        Cursor probe(text);
        probe.accept('0');
        if (probe.at_end())
            return out;
    }
    bool first = true;
    while (!c.at_end()) {
        int sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (!c.accept('+') && !first)
            c.fail("'+' or '-'");
        Rational coeff = 1;
        bool has_number = false;
        if (c.digit_next()) {
            coeff = c.number();
            has_number = true;
            c.accept('*');
        }
        Partition p;
        if (c.accept('S')) {
            if (c.raw() != '_')
                c.fail("'_' after S");
            c.accept('_');
            p = parse_partition_body(c);
        } else if (!has_number) {
            c.fail("Schur term");
        }
        out.add(p, sign * coeff);
        first = false;
    }
    return out;
}

} // namespace morin
