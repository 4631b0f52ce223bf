#include "groebner/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace groebner {

namespace {

struct Token {
    enum Kind { Plus, Minus, Star, Caret, Slash, Number, Var, End } kind;
    std::string digits; // Number
    VarIndex var = 0;   // Var
    std::size_t line = 1, column = 1;
};

class Lexer {
public:
    Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, tok_.line, tok_.column);
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        tok_ = Token{Token::End, "", 0, line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        switch (c) {
        case '+': tok_.kind = Token::Plus; bump(); return;
        case '-': tok_.kind = Token::Minus; bump(); return;
        case '*': tok_.kind = Token::Star; bump(); return;
        case '^': tok_.kind = Token::Caret; bump(); return;
        case '/': tok_.kind = Token::Slash; bump(); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Number;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok_.digits += text_[pos_];
                bump();
            }
            return;
        }
        if (c == 'x') {
            bump();
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                bump();
            }
            if (digits.empty())
                throw ParseError("expected variable index after 'x'", tok_.line, tok_.column);
            VarIndex v = 0;
            auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
            if (ec != std::errc())
                throw ParseError("variable index out of range", tok_.line, tok_.column);
            tok_.kind = Token::Var;
            tok_.var = v;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token tok_;
};

std::uint64_t parse_u64(const Token& t, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.digits.data(), t.digits.data() + t.digits.size(), v);
    if (ec != std::errc())
        throw ParseError(std::string(what) + " out of 64-bit range", t.line, t.column);
    return v;
}

struct TermParts {
    Rational coeff;
    std::vector<ExponentVector::Entry> exps;
};

void parse_factor(Lexer& lx, TermParts& term, const std::vector<VarIndex>* allowed) {
    Token t = lx.peek();
    if (t.kind == Token::Number) {
        lx.take();
        std::string lit = t.digits;
        if (lx.peek().kind == Token::Slash) {
            lx.take();
            Token den = lx.peek();
            if (den.kind != Token::Number) lx.fail("expected denominator after '/'");
            lx.take();
            bool zero = den.digits.find_first_not_of('0') == std::string::npos;
            if (zero) throw ParseError("zero denominator", den.line, den.column);
            lit += "/" + den.digits;
        }
        term.coeff *= Rational::from_string(lit);
        return;
    }
    if (t.kind == Token::Var) {
        lx.take();
        if (allowed && std::find(allowed->begin(), allowed->end(), t.var) == allowed->end())
            throw ParseError("undeclared variable x" + std::to_string(t.var), t.line, t.column);
        std::uint64_t exp = 1;
        if (lx.peek().kind == Token::Caret) {
            lx.take();
            Token e = lx.peek();
            if (e.kind != Token::Number) lx.fail("expected exponent after '^'");
            lx.take();
            exp = parse_u64(e, "exponent");
        }
        term.exps.emplace_back(t.var, exp);
        return;
    }
    lx.fail("expected coefficient or variable");
}

MvPoly parse_term(Lexer& lx, bool negative, const std::vector<VarIndex>* allowed) {
    Token start = lx.peek();
    TermParts term{Rational(negative ? -1 : 1), {}};
    parse_factor(lx, term, allowed);
    while (lx.peek().kind == Token::Star) {
        lx.take();
        parse_factor(lx, term, allowed);
    }
    try {
        return MvPoly::monomial(ExponentVector(std::move(term.exps)), term.coeff);
    } catch (const OverflowError& e) {
        throw ParseError(e.what(), start.line, start.column);
    }
}

} // namespace

MvPoly parse_poly(const std::string& text, const std::vector<VarIndex>* allowed) {
    Lexer lx(text);
    MvPoly result;
    bool negative = false;
    if (lx.peek().kind == Token::Plus || lx.peek().kind == Token::Minus)
        negative = lx.take().kind == Token::Minus;
    result += parse_term(lx, negative, allowed);
    while (lx.peek().kind != Token::End) {
        Token sign = lx.peek();
        if (sign.kind != Token::Plus && sign.kind != Token::Minus)
            lx.fail("expected '+' or '-' between terms");
        lx.take();
        result += parse_term(lx, sign.kind == Token::Minus, allowed);
    }
    return result;
}

std::string print_poly(const MonomialOrderSpec& order, const MvPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const ExponentVector& e : support_descending(order, p)) {
        Rational c = p.coeff(e);
        bool neg = c.is_negative();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        Rational a = neg ? -c : c;
        if (e.is_zero()) {
            os << a.to_string();
        } else {
            bool printed = false;
            if (!a.is_one()) {
                os << a.to_string();
                printed = true;
            }
            std::vector<ExponentVector::Entry> entries = e.entries();
            std::sort(entries.begin(), entries.end(),
                      [&](const ExponentVector::Entry& x, const ExponentVector::Entry& y) {
                          return order.precedes(x.first, y.first);
                      });
            for (const auto& [var, exp] : entries) {
                if (printed) os << "*";
                os << "x" << var;
                if (exp != 1) os << "^" << exp;
                printed = true;
            }
        }
    }
    return os.str();
}

const MvPoly* ProblemFile::find(const std::string& name) const {
    for (const auto& [n, p] : decls)
        if (n == name) return &p;
    return nullptr;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

VarIndex parse_var_name(const std::string& token) {
    if (token.size() < 2 || token[0] != 'x')
        throw ParseError("expected variable of the form x<id>, got \"" + token + "\"", 0, 0);
    VarIndex v = 0;
    auto [p, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), v);
    if (ec != std::errc() || p != token.data() + token.size())
        throw ParseError("expected variable of the form x<id>, got \"" + token + "\"", 0, 0);
    return v;
}

ProblemFile parse_problem_file(const std::string& text) {
    ProblemFile pf;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool decls_started = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line.rfind("poly ", 0) == 0 || line == "poly") {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("poly declaration without '='", lineno, 1);
            std::string name = trim(line.substr(4, eq - 4));
            if (!valid_name(name))
                throw ParseError("invalid polynomial name \"" + name + "\"", lineno, 1);
            if (pf.find(name))
                throw ParseError("duplicate polynomial \"" + name + "\"", lineno, 1);
            std::string expr = line.substr(eq + 1);
            std::size_t expr_col = raw.find('=') + 2;
            try {
                const std::vector<VarIndex>* allowed =
                    pf.vars.empty() ? nullptr : &pf.vars;
                pf.decls.emplace_back(name, parse_poly(expr, allowed));
            } catch (const ParseError& e) {
                throw ParseError(e.message(), lineno, expr_col + e.column() - 1);
            }
            decls_started = true;
            continue;
        }

        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("unrecognized line \"" + line + "\"", lineno, 1);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (!valid_name(key))
            throw ParseError("invalid field name \"" + key + "\"", lineno, 1);

        if (key == "order") {
            if (decls_started)
                throw ParseError("order must precede declarations", lineno, 1);
            if (pf.order)
                throw ParseError("duplicate order line", lineno, 1);
            auto kind = order_kind_from_string(value);
            if (!kind)
                throw ParseError("unknown order \"" + value + "\"", lineno, 1);
            pf.order = *kind;
        } else if (key == "vars") {
            if (decls_started)
                throw ParseError("vars must precede declarations", lineno, 1);
            if (!pf.vars.empty())
                throw ParseError("duplicate vars line", lineno, 1);
            for (const std::string& tok : split_tokens(value)) {
                VarIndex v;
                try {
                    v = parse_var_name(tok);
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), lineno, 1);
                }
                if (std::find(pf.vars.begin(), pf.vars.end(), v) != pf.vars.end())
                    throw ParseError("duplicate variable x" + std::to_string(v), lineno, 1);
                pf.vars.push_back(v);
            }
            if (pf.vars.empty())
                throw ParseError("empty vars line", lineno, 1);
        } else {
            if (pf.fields.count(key))
                throw ParseError("duplicate field \"" + key + "\"", lineno, 1);
            pf.fields.emplace(key, value);
        }
    }
    return pf;
}

} // namespace groebner
