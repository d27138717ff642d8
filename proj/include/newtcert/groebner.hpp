#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "newtcert/order.hpp"
#include "newtcert/polynomial.hpp"

namespace newtcert {

// Reduction-step budget shared by one ideal computation.  Groebner worst
// cases are doubly exponential; exceeding the budget raises
// resource_exhausted, which is a distinct outcome and never a verdict.
struct StepBudget {
    std::uint64_t remaining = 1'000'000;

    void charge() {
        if (remaining == 0)
            throw resource_exhausted("reduction step budget exhausted");
        --remaining;
    }
};

template <class K>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial<K>> generators; // monic, inter-reduced
};

namespace gb {

// Internal representation: terms keyed descending, leading term first.
template <class K>
using OrdPoly = std::map<Exponent, K, OrderGreater>;

template <class K>
OrdPoly<K> to_ordered(const Polynomial<K>& p, const MonomialOrder& order) {
    OrdPoly<K> m(OrderGreater{&order});
    for (const auto& [e, c] : p.terms()) m.emplace(e, c);
    return m;
}

template <class K>
Polynomial<K> to_polynomial(const OrdPoly<K>& m, int n) {
    Polynomial<K> p(n);
    for (const auto& [e, c] : m) p.add_term(e, c);
    return p;
}

template <class K>
void add_scaled(OrdPoly<K>& p, const OrdPoly<K>& q, const Exponent& shift,
                const K& scale) {
    for (const auto& [e, c] : q) {
        Exponent x = e + shift;
        K v = c * scale;
        auto [it, fresh] = p.emplace(std::move(x), v);
        if (!fresh) {
            it->second = it->second + v;
            if (newtcert::is_zero(it->second)) p.erase(it);
        }
    }
}

// Divide by the joint content: over Q make the polynomial monic, over Q(t)
// clear denominators and strip the Z[t] gcd; this keeps coefficient growth
// under control during long reductions.
template <class K>
void normalize_content(OrdPoly<K>& p) {
    if (p.empty()) return;
    if constexpr (std::is_same_v<K, RatFunc>) {
        ZPoly den_lcm(1);
        for (const auto& [e, c] : p) {
            ZPoly g = zpoly_gcd(den_lcm, c.den());
            den_lcm = zpoly_divexact(den_lcm * c.den(), g);
        }
        std::vector<ZPoly> nums; // in term order, leading first
        ZPoly num_gcd;
        mpz_class content(0);
        for (const auto& [e, c] : p) {
            ZPoly num = c.num() * zpoly_divexact(den_lcm, c.den());
            num_gcd = nums.empty() ? num.primitive_part()
                                   : zpoly_gcd(num_gcd, num);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                    num.content().get_mpz_t());
            nums.push_back(std::move(num));
        }
        // Orient the divisor so the leading coefficient keeps a positive
        // leading integer.
        ZPoly divisor = num_gcd * ZPoly(content);
        if (nums.front().leading() * divisor.leading() < 0) divisor = -divisor;
        std::size_t i = 0;
        for (auto& [e, c] : p)
            c = RatFunc(zpoly_divexact(nums[i++], divisor), ZPoly(1));
    } else {
        const K lead = p.begin()->second;
        for (auto& [e, c] : p) c = c / lead;
    }
}

template <class K>
void make_monic(OrdPoly<K>& p) {
    if (p.empty()) return;
    const K lead = p.begin()->second;
    for (auto& [e, c] : p) c = c / lead;
}

// Full normal form: no term of the result is divisible by any basis leading
// term.  Deterministic for a fixed basis order.
template <class K>
OrdPoly<K> reduce_full(OrdPoly<K> work, const std::vector<OrdPoly<K>>& basis,
                       const MonomialOrder& order, StepBudget& budget) {
    OrdPoly<K> rem(OrderGreater{&order});
    while (!work.empty()) {
        const Exponent lt = work.begin()->first;
        const K lc = work.begin()->second;
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            const Exponent& glt = g.begin()->first;
            if (!divides(glt, lt)) continue;
            budget.charge();
            K scale = K(0) - lc / g.begin()->second;
            add_scaled(work, g, exp_sub(lt, glt), scale);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.emplace(lt, lc);
            work.erase(work.begin());
        }
    }
    return rem;
}

} // namespace gb

// Remainder of multivariate division of p by the (not necessarily Groebner)
// list `basis`.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p,
                          const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& order, StepBudget& budget) {
    for (const auto& g : basis)
        if (g.ambient_n() != p.ambient_n())
            throw error("ambient dimension mismatch");
    std::vector<gb::OrdPoly<K>> b;
    for (const auto& g : basis)
        if (!g.is_zero()) b.push_back(gb::to_ordered(g, order));
    auto r = gb::reduce_full(gb::to_ordered(p, order), b, order, budget);
    return gb::to_polynomial(r, p.ambient_n());
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p,
                          const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& order) {
    StepBudget budget;
    return normal_form(p, basis, order, budget);
}

// Buchberger's algorithm with the normal selection strategy and the coprime
// and chain criteria; returns the reduced Groebner basis, deterministic for
// a fixed input order.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& order, StepBudget& budget) {
    if (gens.empty()) throw error("empty generator list");
    const int n = gens[0].ambient_n();
    for (const auto& g : gens)
        if (g.ambient_n() != n) throw error("ambient dimension mismatch");

    std::vector<gb::OrdPoly<K>> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto og = gb::to_ordered(g, order);
        gb::normalize_content(og);
        basis.push_back(std::move(og));
    }

    struct PairKey {
        Exponent lcm;
        int i, j;
    };
    auto pair_less = [&order](const PairKey& a, const PairKey& b) {
        if (!(a.lcm == b.lcm)) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> pairs(pair_less);
    std::set<std::pair<int, int>> processed;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i)
            pairs.insert(PairKey{
                exp_lcm(basis[i].begin()->first, basis[j].begin()->first), i, j});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!pairs.empty()) {
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        processed.insert({pk.i, pk.j});
        const Exponent &lti = basis[pk.i].begin()->first,
                       &ltj = basis[pk.j].begin()->first;
        // Coprime leading terms: the S-polynomial reduces to zero.
        if (pk.lcm == lti + ltj) continue;
        // Chain criterion.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!divides(basis[k].begin()->first, pk.lcm)) continue;
            auto done = [&](int a, int b) {
                if (a > b) std::swap(a, b);
                return processed.count({a, b}) > 0;
            };
            if (done(pk.i, k) && done(pk.j, k)) skip = true;
        }
        if (skip) continue;

        // S-polynomial.
        gb::OrdPoly<K> s(OrderGreater{&order});
        K ci = K(1) / basis[pk.i].begin()->second;
        K cj = K(0) - K(1) / basis[pk.j].begin()->second;
        gb::add_scaled(s, basis[pk.i], exp_sub(pk.lcm, lti), ci);
        gb::add_scaled(s, basis[pk.j], exp_sub(pk.lcm, ltj), cj);
        auto r = gb::reduce_full(std::move(s), basis, order, budget);
        if (r.empty()) continue;
        gb::normalize_content(r);
        basis.push_back(std::move(r));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // Minimalise: drop generators whose leading term another one divides.
    std::vector<bool> drop(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || drop[i] || drop[j]) continue;
            const Exponent &a = basis[i].begin()->first,
                           &b = basis[j].begin()->first;
            if (divides(a, b) && (!(a == b) || i < j)) drop[j] = true;
        }
    std::vector<gb::OrdPoly<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!drop[i]) minimal.push_back(std::move(basis[i]));

    // Inter-reduce and make monic.
    std::vector<gb::OrdPoly<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<gb::OrdPoly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto r = gb::reduce_full(minimal[i], others, order, budget);
        if (r.empty()) continue;
        gb::make_monic(r);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&order](const gb::OrdPoly<K>& a, const gb::OrdPoly<K>& b) {
                  return order.less(b.begin()->first, a.begin()->first);
              });

    GroebnerBasis<K> out;
    out.order = order;
    for (const auto& g : reduced) out.generators.push_back(gb::to_polynomial(g, n));
    return out;
}

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& order) {
    StepBudget budget;
    return buchberger(gens, order, budget);
}

template <class K>
bool is_unit_ideal(const GroebnerBasis<K>& basis) {
    return basis.generators.size() == 1 &&
           basis.generators[0].term_count() == 1 &&
           basis.generators[0]
               .terms()
               .begin()
               ->first.is_origin();
}

// Is the common zero set of `polys` inside the torus (C \ {0})^n empty?
// Decided over the algebraic closure by the Rabinowitsch trick: adjoin u,
// add 1 - u*z1*...*zn, and test for the unit ideal.  Over Q(t) a true answer
// means empty for all but finitely many t.
template <class K>
bool torus_emptiness(const std::vector<Polynomial<K>>& polys,
                     StepBudget& budget) {
    if (polys.empty()) throw error("empty polynomial list");
    const int n = polys[0].ambient_n();
    std::vector<Polynomial<K>> gens;
    for (const auto& p : polys) {
        if (p.ambient_n() != n) throw error("ambient dimension mismatch");
        if (!p.is_zero()) gens.push_back(append_variable(p));
    }
    if (gens.empty()) return false; // the zero ideal vanishes on the torus
    Exponent all_ones(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) all_ones[i] = 1;
    Polynomial<K> sat = Polynomial<K>::constant(n + 1, K(1));
    sat.add_term(all_ones, -K(1));
    gens.push_back(std::move(sat));
    // grevlex with the auxiliary u in the least significant position.
    auto basis = buchberger(gens, MonomialOrder::grevlex(n + 1), budget);
    return is_unit_ideal(basis);
}

template <class K>
bool torus_emptiness(const std::vector<Polynomial<K>>& polys) {
    StepBudget budget;
    return torus_emptiness(polys, budget);
}

namespace gb {

template <class K>
OrdPoly<K> mul(const OrdPoly<K>& a, const OrdPoly<K>& b,
               const MonomialOrder& order) {
    OrdPoly<K> r(OrderGreater{&order});
    for (const auto& [ea, ca] : a) add_scaled(r, b, ea, ca);
    return r;
}

// Exact quotient a / b when b divides a; leading-term cancellation loop.
template <class K>
OrdPoly<K> divide_exact(const OrdPoly<K>& a, const OrdPoly<K>& b,
                        const MonomialOrder& order) {
    if (b.empty()) throw error("polynomial division by zero");
    OrdPoly<K> q(OrderGreater{&order});
    OrdPoly<K> r = a;
    const Exponent& blt = b.begin()->first;
    const K& blc = b.begin()->second;
    while (!r.empty()) {
        const Exponent& rlt = r.begin()->first;
        if (!divides(blt, rlt)) throw error("inexact polynomial division");
        Exponent shift = exp_sub(rlt, blt);
        K c = r.begin()->second / blc;
        q.emplace(shift, c);
        K neg = K(0) - c;
        add_scaled(r, b, shift, neg);
    }
    return q;
}

} // namespace gb

// All maximal minors of the m x n Jacobian matrix of `polys`, computed by
// fraction-free Bareiss elimination over the polynomial ring.  For m = 1 the
// minors are the n partial derivatives.
template <class K>
std::vector<Polynomial<K>> jacobian_minors(const std::vector<Polynomial<K>>& polys) {
    if (polys.empty()) throw error("empty polynomial list");
    const int m = static_cast<int>(polys.size());
    const int n = polys[0].ambient_n();
    if (m > n) throw error("more polynomials than variables");
    const MonomialOrder order = MonomialOrder::grevlex(n);

    std::vector<std::vector<gb::OrdPoly<K>>> jac;
    for (const auto& f : polys) {
        if (f.ambient_n() != n) throw error("ambient dimension mismatch");
        std::vector<gb::OrdPoly<K>> row;
        for (int i = 1; i <= n; ++i)
            row.push_back(gb::to_ordered(partial_derivative(f, i), order));
        jac.push_back(std::move(row));
    }

    // Column subsets in lexicographic order.
    std::vector<int> cols(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cols[i] = i;
    std::vector<Polynomial<K>> minors;
    for (;;) {
        // Bareiss determinant of the m x m submatrix jac[.][cols].
        std::vector<std::vector<gb::OrdPoly<K>>> a;
        for (int r = 0; r < m; ++r) {
            std::vector<gb::OrdPoly<K>> row;
            for (int c = 0; c < m; ++c) row.push_back(jac[r][cols[c]]);
            a.push_back(std::move(row));
        }
        gb::OrdPoly<K> prev(OrderGreater{&order});
        const Exponent unit_exp(static_cast<std::size_t>(n));
        prev.emplace(unit_exp, K(1));
        bool zero = false;
        int sign = 1;
        for (int k = 0; k < m && !zero; ++k) {
            if (a[k][k].empty()) {
                int swap_row = -1;
                for (int r = k + 1; r < m; ++r)
                    if (!a[r][k].empty()) {
                        swap_row = r;
                        break;
                    }
                if (swap_row < 0) {
                    zero = true;
                    break;
                }
                std::swap(a[k], a[swap_row]);
                sign = -sign;
            }
            for (int i = k + 1; i < m; ++i) {
                for (int j = k + 1; j < m; ++j) {
                    gb::OrdPoly<K> num(OrderGreater{&order});
                    const K one(1);
                    const K minus_one = K(0) - one;
                    gb::add_scaled(num, gb::mul(a[k][k], a[i][j], order),
                                   unit_exp, one);
                    gb::add_scaled(num, gb::mul(a[i][k], a[k][j], order),
                                   unit_exp, minus_one);
                    a[i][j] = gb::divide_exact(num, prev, order);
                }
                a[i][k].clear();
            }
            prev = a[k][k];
        }
        Polynomial<K> det(n);
        if (!zero) {
            det = gb::to_polynomial(a[m - 1][m - 1], n);
            if (sign < 0) det = -det;
        }
        minors.push_back(std::move(det));

        // Next combination.
        int t = m - 1;
        while (t >= 0 && cols[t] == n - m + t) --t;
        if (t < 0) break;
        ++cols[t];
        for (int s = t + 1; s < m; ++s) cols[s] = cols[s - 1] + 1;
    }
    return minors;
}

} // namespace newtcert
