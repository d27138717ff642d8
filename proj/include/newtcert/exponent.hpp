#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "newtcert/error.hpp"

namespace newtcert {

inline constexpr int kMaxVariables = 16;
inline constexpr std::uint32_t kMaxExponent = 1u << 16;

// Exponent vector of a monomial; length equals the ambient variable count.
struct Exponent {
    std::vector<std::uint32_t> e;

    Exponent() = default;
    explicit Exponent(std::size_t n) : e(n, 0) {}
    explicit Exponent(std::vector<std::uint32_t> v) : e(std::move(v)) {}

    std::size_t size() const { return e.size(); }
    std::uint32_t operator[](std::size_t i) const { return e[i]; }
    std::uint32_t& operator[](std::size_t i) { return e[i]; }

    std::uint64_t degree() const {
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    }

    bool is_origin() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.e == b.e;
    }

    // Plain container ordering; term iteration uses GrlexLess instead.
    friend bool operator<(const Exponent& a, const Exponent& b) {
        return a.e < b.e;
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        if (a.size() != b.size()) throw error("exponent length mismatch");
        Exponent r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            r.e[i] = a.e[i] + b.e[i];
            if (r.e[i] > kMaxExponent) throw error("exponent cap exceeded");
        }
        return r;
    }

    // Coordinatewise <=.
    friend bool dominates(const Exponent& lo, const Exponent& hi) {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo.e[i] > hi.e[i]) return false;
        return true;
    }
};

// Iteration / printing order for polynomial terms: ascending total degree,
// ties broken by descending lexicographic order with z1 most significant.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e > b.e; // vector lex; larger first coordinate prints first
    }
};

struct WeightVector {
    std::vector<std::uint32_t> w;

    WeightVector() = default;
    explicit WeightVector(std::size_t n) : w(n, 0) {}
    explicit WeightVector(std::vector<std::uint32_t> v) : w(std::move(v)) {}

    std::size_t size() const { return w.size(); }
    std::uint32_t operator[](std::size_t i) const { return w[i]; }
    std::uint32_t& operator[](std::size_t i) { return w[i]; }

    bool positive() const {
        for (auto x : w)
            if (x == 0) return false;
        return !w.empty();
    }

    // I(w) = set of indices with w_i = 0, as a bit mask (bit i <-> z_{i+1}).
    std::uint32_t zero_set() const {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == 0) m |= (1u << i);
        return m;
    }

    friend WeightVector operator+(const WeightVector& a, const WeightVector& b) {
        if (a.size() != b.size()) throw error("weight length mismatch");
        WeightVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.w[i] = a.w[i] + b.w[i];
        return r;
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.w == b.w;
    }

    // Divide all entries by their gcd (witness normalisation).
    void reduce() {
        std::uint32_t g = 0;
        for (auto x : w) g = std::gcd(g, x);
        if (g > 1)
            for (auto& x : w) x /= g;
    }
};

inline std::int64_t dot(const WeightVector& w, const Exponent& a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += std::int64_t(w[i]) * std::int64_t(a[i]);
    return s;
}

// Subset of {1,...,n} as a bit mask: bit i-1 set <=> i is a member.
struct Subset {
    std::uint32_t bits = 0;
    explicit Subset(std::uint32_t b = 0) : bits(b) {}

    static Subset full(std::size_t n) { return Subset((1u << n) - 1); }
    bool contains(std::size_t i /* 1-based */) const {
        return bits & (1u << (i - 1));
    }
    std::size_t count() const { return static_cast<std::size_t>(__builtin_popcount(bits)); }

    friend bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
};

inline std::string exponent_text(const Exponent& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

} // namespace newtcert
