// Recursive-descent parser for the operator / scalar grammar.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ['^' integer]
//   primary := integer | symbol | variable | 'd/d'variable | '(' expr ')'

#include <cctype>

#include "cgk/diffop.hpp"
#include "cgk/errors.hpp"

namespace cgk {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarLayout& layout, bool allow_vars)
        : text_(text), layout_(layout), allow_vars_(allow_vars) {}

    DiffOp parse() {
        DiffOp out = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char ch) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    DiffOp expr() {
        DiffOp out(layout_);
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        out = term();
        if (negate) out = -out;
        while (true) {
            if (eat('+')) out += term();
            else if (eat('-')) out -= term();
            else return out;
        }
    }

    DiffOp term() {
        DiffOp out = unary();
        while (true) {
            if (eat('*')) {
                out = out * unary();
            } else if (peek_division()) {
                ++pos_;
                DiffOp divisor = unary();
                out = out * (Scalar(1) / scalar_of(divisor, "divisor"));
            } else {
                return out;
            }
        }
    }

    // '/' as division, not the slash inside "d/dt".
    bool peek_division() {
        skip();
        return pos_ < text_.size() && text_[pos_] == '/';
    }

    Scalar scalar_of(const DiffOp& op, const char* role) {
        if (op.order() > 0) fail(std::string(role) + " must not contain derivatives");
        CoefPoly c = op.coefficient(MultiIndex(static_cast<std::size_t>(layout_.size()), 0));
        if (!c.is_scalar()) fail(std::string(role) + " must not contain variables");
        Scalar s = c.scalar_part();
        if (s.is_zero()) fail("division by zero");
        return s;
    }

    DiffOp unary() {
        if (eat('-')) return -unary();
        return power();
    }

    DiffOp power() {
        DiffOp base = primary();
        if (!eat('^')) return base;
        skip();
        bool negative = eat('-');
        int exponent = integer_literal();
        if (!negative) return cgk::power(base, exponent);
        Scalar s = scalar_of(base, "base of a negative power");
        return DiffOp(layout_, cgk::pow(s, -exponent));
    }

    int integer_literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int variable_index(const std::string& name) {
        if (!allow_vars_) fail("variable '" + name + "' not allowed in a scalar");
        auto idx = layout_.index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        return *idx;
    }

    DiffOp primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            DiffOp inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Rational value(std::string(text_.substr(start, pos_ - start)));
            return DiffOp(layout_, Scalar(value));
        }
        if (text_.substr(pos_).starts_with("d/d")) {
            pos_ += 3;
            std::string name = identifier();
            return DiffOp::partial(layout_, variable_index(name));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name = identifier();
            if (auto sym = symbol_from_name(name)) return DiffOp(layout_, Scalar::symbol(*sym));
            return DiffOp(CoefPoly::variable(layout_, variable_index(name)));
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    VarLayout layout_;
    bool allow_vars_;
    std::size_t pos_ = 0;
};

}  // namespace

DiffOp parse_diffop(std::string_view text, const VarLayout& layout) { return Parser(text, layout, true).parse(); }

CoefPoly parse_coefpoly(std::string_view text, const VarLayout& layout) {
    DiffOp op = parse_diffop(text, layout);
    if (op.order() > 0) throw ParseError("expected a polynomial without derivatives: \"" + std::string(text) + "\"");
    return op.coefficient(MultiIndex(static_cast<std::size_t>(layout.size()), 0));
}

Scalar parse_scalar(std::string_view text) {
    VarLayout none;
    DiffOp op = Parser(text, none, false).parse();
    return op.coefficient(MultiIndex(1, 0)).scalar_part();
}

}  // namespace cgk
