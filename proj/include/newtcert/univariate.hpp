#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "newtcert/error.hpp"
#include "newtcert/rational.hpp"

namespace newtcert {

// Dense univariate polynomial over the integers, used as numerator and
// denominator of the rational-function scalar.  Invariant: no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const mpz_class& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit ZPoly(long c) : ZPoly(mpz_class(c)) {}

    static ZPoly monomial(const mpz_class& c, std::size_t degree) {
        ZPoly p;
        if (c != 0) {
            p.c_.assign(degree + 1, mpz_class(0));
            p.c_[degree] = c;
        }
        return p;
    }

    static ZPoly from_coeffs(std::vector<mpz_class> cs) {
        ZPoly p;
        p.c_ = std::move(cs);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const mpz_class& leading() const {
        if (c_.empty()) throw error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) {
        return a.c_ == b.c_;
    }

    // gcd of the coefficients; 0 for the zero polynomial.
    mpz_class content() const {
        mpz_class g(0);
        for (const auto& c : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    ZPoly divexact_scalar(const mpz_class& d) const {
        if (d == 0) throw error("division by zero scalar");
        ZPoly r = *this;
        for (auto& c : r.c_) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
            c = q;
        }
        return r;
    }

    ZPoly primitive_part() const {
        if (is_zero()) return {};
        return divexact_scalar(content());
    }

    Rat eval(const Rat& t0) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t0 + Rat(c_[i]);
        return acc;
    }

    const std::vector<mpz_class>& coeffs() const { return c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b assumed by caller).
inline ZPoly zpoly_prem(ZPoly a, const ZPoly& b) {
    const long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        // a := lc(b)*a - lc(a)*t^(da-db)*b  strips the leading term of a.
        ZPoly shift = ZPoly::monomial(a.leading(), a.degree() - db);
        a = ZPoly(b.leading()) * a - shift * b;
    }
    return a;
}

// gcd in Z[t]: primitive pseudo-remainder sequence, result primitive with
// positive leading coefficient (gcd of contents handled by the caller when
// joint normalisation is wanted).
inline ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = zpoly_prem(a, b).primitive_part();
        a = b;
        b = r;
    }
    if (a.leading() < 0) a = -a;
    return a;
}

// Exact division: caller guarantees b | a.
inline ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    if (a.is_zero()) return {};
    std::vector<mpz_class> q(a.degree() - b.degree() + 1, mpz_class(0));
    ZPoly r = a;
    while (!r.is_zero()) {
        const long k = r.degree() - b.degree();
        if (k < 0) throw error("inexact univariate division");
        mpz_class c;
        if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t()))
            throw error("inexact univariate division");
        mpz_divexact(c.get_mpz_t(), r.leading().get_mpz_t(),
                     b.leading().get_mpz_t());
        q[k] = c;
        r = r - ZPoly::monomial(c, k) * b;
    }
    return ZPoly::from_coeffs(std::move(q));
}

// Canonical text, ascending powers of t, e.g. "1-t" or "-2+t^3".  Matches
// the polynomial grammar when multiplied into a term (possibly in parens).
inline std::string zpoly_text(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const mpz_class& c = p.coeffs()[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        std::string piece;
        if (i == 0) {
            piece = a.get_str();
        } else {
            if (a != 1) piece = a.get_str() + "*";
            piece += "t";
            if (i > 1) piece += "^" + std::to_string(i);
        }
        if (first) {
            if (c < 0) {
                // A leading minus is only grammatical on an integer literal.
                if (i == 0 || a != 1)
                    piece = "-" + piece;
                else
                    piece = "-1*" + piece.substr(piece.find('t'));
            }
            out = piece;
            first = false;
        } else {
            out += (c < 0 ? "-" : "+") + piece;
        }
    }
    return out;
}

} // namespace newtcert
