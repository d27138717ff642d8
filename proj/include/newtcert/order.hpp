#pragma once

#include <numeric>
#include <vector>

#include "newtcert/exponent.hpp"

namespace newtcert {

// Total multiplicative well-ordering on exponents.  The permutation lists
// variable positions from most to least significant; identity by default.
struct MonomialOrder {
    enum class Kind { grevlex, lex };

    Kind kind = Kind::grevlex;
    std::vector<int> perm; // 0-based positions

    static MonomialOrder grevlex(int n) { return {Kind::grevlex, identity(n)}; }
    static MonomialOrder lex(int n) { return {Kind::lex, identity(n)}; }

    static std::vector<int> identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    // True iff a < b.
    bool less(const Exponent& a, const Exponent& b) const {
        if (kind == Kind::grevlex) {
            const auto da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            // Reverse-lex tiebreak: scanning from the least significant
            // position, the first difference decides, larger entry loses.
            for (std::size_t r = perm.size(); r-- > 0;) {
                const int i = perm[r];
                if (a[i] != b[i]) return a[i] > b[i];
            }
            return false;
        }
        for (int i : perm)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Comparator placing the leading exponent first in an ordered map.
struct OrderGreater {
    const MonomialOrder* order = nullptr;
    bool operator()(const Exponent& a, const Exponent& b) const {
        return order->less(b, a);
    }
};

inline bool divides(const Exponent& a, const Exponent& b) {
    return dominates(a, b);
}

inline Exponent exp_sub(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

} // namespace newtcert
