#pragma once

#include <complex>
#include <map>
#include <set>
#include <vector>

#include "newtcert/error.hpp"
#include "newtcert/exponent.hpp"
#include "newtcert/rational.hpp"
#include "newtcert/rational_function.hpp"

namespace newtcert {

// Sparse multivariate polynomial over an exact scalar field K (Rat or
// RatFunc).  Terms are stored in the fixed graded-lex iteration order, no
// zero coefficients are kept, and all exponents have the ambient length.
template <class K>
class Polynomial {
public:
    using term_map = std::map<Exponent, K, GrlexLess>;

    explicit Polynomial(int ambient_n = 1) : n_(ambient_n) {
        if (ambient_n < 1 || ambient_n > kMaxVariables)
            throw error("ambient variable count out of range");
    }

    int ambient_n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    const K& coeff(const Exponent& a) const {
        static const K zero{};
        auto it = terms_.find(a);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const Exponent& a, const K& c) {
        if (static_cast<int>(a.size()) != n_)
            throw error("exponent length does not match ambient dimension");
        if (newtcert::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(a, c);
        if (!fresh) {
            it->second = it->second + c;
            if (newtcert::is_zero(it->second)) terms_.erase(it);
        }
    }

    static Polynomial monomial(int n, const Exponent& a, const K& c) {
        Polynomial p(n);
        p.add_term(a, c);
        return p;
    }
    static Polynomial constant(int n, const K& c) {
        return monomial(n, Exponent(static_cast<std::size_t>(n)), c);
    }
    static Polynomial variable(int n, int i /* 1-based */) {
        if (i < 1 || i > n) throw error("variable index out of range");
        Exponent a(static_cast<std::size_t>(n));
        a[i - 1] = 1;
        return monomial(n, a, K(1));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_ambient(a, b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_ambient(a, b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_ambient(a, b);
        Polynomial r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend Polynomial operator*(const K& c, const Polynomial& p) {
        Polynomial r(p.n_);
        if (newtcert::is_zero(c)) return r;
        for (const auto& [e, pc] : p.terms_) r.add_term(e, c * pc);
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    bool vanishes_at_origin() const {
        return newtcert::is_zero(coeff(Exponent(static_cast<std::size_t>(n_))));
    }

private:
    static void check_ambient(const Polynomial& a, const Polynomial& b) {
        if (a.n_ != b.n_) throw error("ambient dimension mismatch");
    }

    int n_;
    term_map terms_;
};

template <class K>
bool is_zero(const Polynomial<K>& p) {
    return p.is_zero();
}

template <class K>
Polynomial<K> multiply(const Polynomial<K>& a, const Polynomial<K>& b) {
    return a * b;
}

// Formal partial derivative with respect to z_i (1-based index).
template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& f, int i) {
    if (i < 1 || i > f.ambient_n()) throw error("derivative index out of range");
    Polynomial<K> r(f.ambient_n());
    for (const auto& [e, c] : f.terms()) {
        if (e[i - 1] == 0) continue;
        Exponent d = e;
        d[i - 1] -= 1;
        r.add_term(d, c * K(static_cast<long>(e[i - 1])));
    }
    return r;
}

// f^I: drop every term with a positive exponent outside I.
template <class K>
Polynomial<K> restrict_to_subspace(const Polynomial<K>& f, Subset I) {
    Polynomial<K> r(f.ambient_n());
    for (const auto& [e, c] : f.terms()) {
        bool keep = true;
        for (std::size_t i = 1; i <= e.size(); ++i)
            if (e[i - 1] > 0 && !I.contains(i)) {
                keep = false;
                break;
            }
        if (keep) r.add_term(e, c);
    }
    return r;
}

template <class K>
std::set<Exponent, GrlexLess> support(const Polynomial<K>& f) {
    std::set<Exponent, GrlexLess> s;
    for (const auto& [e, c] : f.terms()) s.insert(e);
    return s;
}

// d(w;f): minimum of <w,.> over the support (equals the minimum over the
// Newton polyhedron for nonnegative w).
template <class K>
std::int64_t d_of_w(const Polynomial<K>& f, const WeightVector& w) {
    if (f.is_zero()) throw error("d(w;f) of the zero polynomial");
    if (w.size() != static_cast<std::size_t>(f.ambient_n()))
        throw error("weight length does not match ambient dimension");
    bool first = true;
    std::int64_t best = 0;
    for (const auto& [e, c] : f.terms()) {
        std::int64_t v = dot(w, e);
        if (first || v < best) best = v, first = false;
    }
    return best;
}

// Face function f_w: the terms realising d(w;f).
template <class K>
Polynomial<K> face_function(const Polynomial<K>& f, const WeightVector& w) {
    const std::int64_t d = d_of_w(f, w);
    Polynomial<K> r(f.ambient_n());
    for (const auto& [e, c] : f.terms())
        if (dot(w, e) == d) r.add_term(e, c);
    return r;
}

// True iff the support contains a positive power of every coordinate axis.
template <class K>
bool is_convenient(const Polynomial<K>& f) {
    if (f.is_zero()) throw error("is_convenient of the zero polynomial");
    const int n = f.ambient_n();
    for (int i = 1; i <= n; ++i) {
        bool axis = false;
        for (const auto& [e, c] : f.terms()) {
            if (e[i - 1] == 0) continue;
            bool pure = true;
            for (int j = 0; j < n; ++j)
                if (j != i - 1 && e[j] > 0) {
                    pure = false;
                    break;
                }
            if (pure) {
                axis = true;
                break;
            }
        }
        if (!axis) return false;
    }
    return true;
}

inline Polynomial<RatFunc> promote(const Polynomial<Rat>& f) {
    Polynomial<RatFunc> r(f.ambient_n());
    for (const auto& [e, c] : f.terms()) r.add_term(e, RatFunc(c));
    return r;
}

// Coefficient-wise evaluation at t = t0; throws on a pole.
inline Polynomial<Rat> specialize_parameter(const Polynomial<RatFunc>& f,
                                            const Rat& t0) {
    Polynomial<Rat> r(f.ambient_n());
    for (const auto& [e, c] : f.terms()) r.add_term(e, c.eval(t0));
    return r;
}

// Floating evaluation: direct sum of monomial values, documented as
// approximate; serves the numeric module only.
inline std::complex<double> evaluate_complex(
    const Polynomial<Rat>& f, const std::vector<std::complex<double>>& z) {
    if (z.size() != static_cast<std::size_t>(f.ambient_n()))
        throw error("point length does not match ambient dimension");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : f.terms()) {
        std::complex<double> m = rat_complex(c);
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) m *= z[i];
        acc += m;
    }
    return acc;
}

// Exact evaluation at a rational point.
inline Rat evaluate_rational(const Polynomial<Rat>& f,
                             const std::vector<Rat>& z) {
    if (z.size() != static_cast<std::size_t>(f.ambient_n()))
        throw error("point length does not match ambient dimension");
    Rat acc(0);
    for (const auto& [e, c] : f.terms()) {
        Rat m = c;
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) m *= z[i];
        acc += m;
    }
    return acc;
}

// f(s^{w_1} z_1, ..., s^{w_n} z_n) as a polynomial in n+1 variables with the
// scaling variable s appended last; used by the homogeneity identity checks.
template <class K>
Polynomial<K> scale_substitution(const Polynomial<K>& f, const WeightVector& w) {
    const int n = f.ambient_n();
    Polynomial<K> r(n + 1);
    for (const auto& [e, c] : f.terms()) {
        Exponent x(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) x[i] = e[i];
        const std::int64_t s = dot(w, e);
        if (s > std::int64_t(kMaxExponent)) throw error("exponent cap exceeded");
        x[n] = static_cast<std::uint32_t>(s);
        r.add_term(x, c);
    }
    return r;
}

// Append the extra variable used for torus saturation (exponent 0 everywhere).
template <class K>
Polynomial<K> append_variable(const Polynomial<K>& f) {
    const int n = f.ambient_n();
    Polynomial<K> r(n + 1);
    for (const auto& [e, c] : f.terms()) {
        Exponent x(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) x[i] = e[i];
        r.add_term(x, c);
    }
    return r;
}

} // namespace newtcert
