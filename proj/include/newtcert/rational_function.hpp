#pragma once

#include <string>
#include <utility>

#include "newtcert/error.hpp"
#include "newtcert/rational.hpp"
#include "newtcert/univariate.hpp"

namespace newtcert {

// Scalar from the field Q(t), kept as num/den in Z[t].  Canonical form:
// gcd(num, den) = 1 in Z[t] (polynomial part and shared integer content both
// removed) and den has positive leading coefficient.  Zero is 0/1.  The
// canonical form is unique per value, which gives an exact zero test.
class RatFunc {
public:
    RatFunc() : num_(), den_(ZPoly(1)) {}
    RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw error("rational function with zero denominator");
        reduce();
    }
    explicit RatFunc(const Rat& q)
        : num_(ZPoly(q.get_num())), den_(ZPoly(q.get_den())) {}
    explicit RatFunc(long c) : num_(ZPoly(c)), den_(ZPoly(1)) {}

    static RatFunc t() { return RatFunc(ZPoly::monomial(1, 1), ZPoly(1)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw error("division by zero in Q(t)");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Evaluation at t = t0; throws on a pole.
    Rat eval(const Rat& t0) const {
        Rat d = den_.eval(t0);
        if (newtcert::is_zero(d)) throw error("pole at t = " + rat_text(t0));
        return num_.eval(t0) / d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = ZPoly(1);
            return;
        }
        ZPoly g = zpoly_gcd(num_, den_);
        if (g.degree() > 0 || g.leading() != 1) {
            num_ = zpoly_divexact(num_, g);
            den_ = zpoly_divexact(den_, g);
        }
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(),
                den_.content().get_mpz_t());
        if (c > 1) {
            num_ = num_.divexact_scalar(c);
            den_ = den_.divexact_scalar(c);
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    ZPoly num_;
    ZPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

} // namespace newtcert
