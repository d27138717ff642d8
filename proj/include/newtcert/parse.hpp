#pragma once

#include <cctype>
#include <string>
#include <variant>

#include "newtcert/polynomial.hpp"

namespace newtcert {

// Result of parsing: rational scalars when t does not occur, otherwise
// coefficients polynomial in t (the grammar cannot produce denominators).
using ParsedPoly = std::variant<Polynomial<Rat>, Polynomial<RatFunc>>;

namespace detail {

// Recursive-descent parser for
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | var | var '^' uint | '(' expr ')'
//   var      := 'z' uint | 't'
//   rational := int | int '/' uint
// Whitespace is ignored; there is no implicit multiplication.
class PolyParser {
public:
    PolyParser(const std::string& text, int n) : s_(text), n_(n) {
        if (n < 1 || n > kMaxVariables)
            throw error("ambient variable count out of range");
    }

    Polynomial<RatFunc> run() {
        Polynomial<RatFunc> p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " at offset " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    std::uint64_t read_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an unsigned integer");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1ull << 62)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    Polynomial<RatFunc> expr() {
        Polynomial<RatFunc> acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Polynomial<RatFunc> term() {
        Polynomial<RatFunc> acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial<RatFunc> factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a factor");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial<RatFunc> p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'z' || c == 't') return variable_factor();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return rational_factor();
        fail("expected a rational, a variable, or '('");
    }

    Polynomial<RatFunc> variable_factor() {
        const char c = s_[pos_++];
        Polynomial<RatFunc> base(n_);
        if (c == 't') {
            base = Polynomial<RatFunc>::constant(n_, RatFunc::t());
        } else {
            const std::size_t at = pos_ - 1;
            std::uint64_t idx = read_uint();
            if (idx < 1 || idx > static_cast<std::uint64_t>(n_)) {
                pos_ = at;
                fail("variable index out of range");
            }
            base = Polynomial<RatFunc>::variable(n_, static_cast<int>(idx));
        }
        if (eat('^')) {
            std::uint64_t k = read_uint();
            if (k > kMaxExponent) fail("exponent cap exceeded");
            Polynomial<RatFunc> p = Polynomial<RatFunc>::constant(n_, RatFunc(1));
            for (std::uint64_t i = 0; i < k; ++i) p = p * base;
            return p;
        }
        return base;
    }

    Polynomial<RatFunc> rational_factor() {
        bool neg = eat('-');
        std::uint64_t num = read_uint();
        std::uint64_t den = 1;
        if (eat('/')) {
            den = read_uint();
            if (den == 0) fail("zero denominator");
        }
        Rat q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
        q.canonicalize();
        if (neg) q = -q;
        return Polynomial<RatFunc>::constant(n_, RatFunc(q));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int n_;
};

} // namespace detail

inline bool has_parameter(const Polynomial<RatFunc>& p) {
    for (const auto& [e, c] : p.terms())
        if (c.num().degree() > 0 || c.den().degree() > 0) return true;
    return false;
}

inline Polynomial<Rat> demote(const Polynomial<RatFunc>& p) {
    Polynomial<Rat> r(p.ambient_n());
    for (const auto& [e, c] : p.terms()) {
        if (c.num().degree() > 0 || c.den().degree() > 0)
            throw error("polynomial has parametric coefficients");
        r.add_term(e, Rat(c.num().coeff(0)) / Rat(c.den().coeff(0)));
    }
    return r;
}

// Parse per the grammar; the scalar domain is parametric iff t occurs.
inline ParsedPoly parse_polynomial(const std::string& text, int n) {
    Polynomial<RatFunc> p = detail::PolyParser(text, n).run();
    if (has_parameter(p)) return p;
    return demote(p);
}

inline Polynomial<Rat> parse_rational_polynomial(const std::string& text, int n) {
    ParsedPoly p = parse_polynomial(text, n);
    if (std::holds_alternative<Polynomial<RatFunc>>(p))
        throw error("unexpected parameter t in polynomial: " + text);
    return std::get<Polynomial<Rat>>(p);
}

inline Polynomial<RatFunc> parse_parametric_polynomial(const std::string& text,
                                                       int n) {
    return detail::PolyParser(text, n).run();
}

// ---- canonical printing -------------------------------------------------

namespace detail {

inline std::string monomial_text(const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "z" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

// Scalar rendering: sign split off so the printer can emit binary +/-.
inline std::pair<bool, std::string> scalar_body(const Rat& c) {
    bool neg = sgn(c) < 0;
    Rat a = neg ? Rat(-c) : c;
    return {neg, rat_text(a)};
}

inline bool is_plain_one(const std::string& body) { return body == "1"; }

// For Q(t) scalars the body may need parentheses; single t-monomials and
// plain integers stay bare.  Denominators of positive t-degree never occur
// in externally printed polynomials; the fallback keeps debug output
// readable.
inline std::pair<bool, std::string> scalar_body(const RatFunc& c) {
    if (c.den().degree() > 0) {
        return {false, "(" + zpoly_text(c.num()) + ")/(" + zpoly_text(c.den()) + ")"};
    }
    const mpz_class d = c.den().coeff(0);
    const ZPoly& p = c.num();
    int nonzero = 0;
    for (const auto& z : p.coeffs())
        if (z != 0) ++nonzero;
    if (nonzero == 1) {
        const std::size_t k = static_cast<std::size_t>(p.degree());
        mpz_class a = p.leading();
        bool neg = a < 0;
        if (neg) a = -a;
        std::string body = a.get_str();
        if (d != 1) body += "/" + d.get_str();
        if (k > 0) {
            body = (body == "1") ? "" : body + "*";
            body += "t";
            if (k > 1) body += "^" + std::to_string(k);
        }
        return {neg, body};
    }
    if (d != 1)
        return {false, "1/" + d.get_str() + "*(" + zpoly_text(p) + ")"};
    return {false, "(" + zpoly_text(p) + ")"};
}

} // namespace detail

// Deterministic canonical text in the input grammar, terms in the fixed
// graded-lex iteration order.
template <class K>
std::string polynomial_text(const Polynomial<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        auto [neg, body] = detail::scalar_body(c);
        std::string mono = detail::monomial_text(e);
        std::string piece;
        if (mono.empty())
            piece = body;
        else if (detail::is_plain_one(body))
            piece = mono;
        else
            piece = body + "*" + mono;
        if (first) {
            if (neg) {
                // A leading minus is grammatical only on an integer literal.
                if (!piece.empty() &&
                    std::isdigit(static_cast<unsigned char>(piece.front())))
                    piece = "-" + piece;
                else
                    piece = "-1*" + piece;
            }
            out = piece;
            first = false;
        } else {
            out += (neg ? "-" : "+") + piece;
        }
    }
    return out;
}

} // namespace newtcert
