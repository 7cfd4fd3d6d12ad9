#include "cluskein/parse.hpp"

#include <cctype>

namespace cluskein {

namespace {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' ['-'] INT)?
// base   := INT | IDENT | '(' expr ')'
class Parser {
  public:
    Parser(std::string_view text, VarTablePtr table)
        : text_(text), table_(std::move(table)) {}

    LaurentPoly run() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(uc(text_[pos_]))) ++pos_;
    }

    static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    LaurentPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly p = term();
        if (neg) p = -p;
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    LaurentPoly term() {
        LaurentPoly p = factor();
        while (eat('*')) p *= factor();
        return p;
    }

    LaurentPoly factor() {
        LaurentPoly b = base();
        if (eat('^')) {
            long e = integer_exponent();
            b = pow(b, e);
        }
        return b;
    }

    long integer_exponent() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(uc(text_[pos_])))
            throw ParseError("expected integer exponent", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    LaurentPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(uc(c))) {
            Int v = 0;
            while (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return LaurentPoly::constant(table_, v);
        }
        if (std::isalpha(uc(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(uc(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = table_->find(name);
            if (!idx)
                throw UnknownVariable("unknown variable '" + name + "'");
            return LaurentPoly::variable(table_, *idx);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    VarTablePtr table_;
    size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const VarTablePtr& table) {
    return Parser(text, table).run();
}

}  // namespace cluskein
