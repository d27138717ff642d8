#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "newtcert/error.hpp"
#include "newtcert/rational.hpp"

namespace newtcert {

// Exact rational linear programming, feasibility and small maximisation
// problems only.  All decision variables are constrained to be >= 0; callers
// shift or split variables as needed.  Pivoting follows Bland's rule, so the
// solver terminates and is fully deterministic.

enum class Rel { le, ge, eq };

struct LinRow {
    std::vector<Rat> a;
    Rel rel;
    Rat b;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(int nvars, const std::vector<LinRow>& rows) : nvars_(nvars) {
        const std::size_t m = rows.size();
        std::size_t extra = 0;
        for (const auto& r : rows) {
            if (static_cast<int>(r.a.size()) != nvars)
                throw error("constraint arity mismatch");
            Rat b = r.b;
            Rel rel = r.rel;
            // Normalise to b >= 0.
            bool flip = sgn(b) < 0;
            if (flip && rel == Rel::le) rel = Rel::ge;
            else if (flip && rel == Rel::ge) rel = Rel::le;
            extra += (rel == Rel::le || rel == Rel::ge) ? 1 : 0;
        }
        ncols_ = static_cast<std::size_t>(nvars) + extra + m; // slacks + artificials
        tab_.assign(m, std::vector<Rat>(ncols_, Rat(0)));
        rhs_.assign(m, Rat(0));
        basis_.assign(m, 0);
        art_begin_ = static_cast<std::size_t>(nvars) + extra;

        std::size_t slack = static_cast<std::size_t>(nvars);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rat> a = rows[i].a;
            Rat b = rows[i].b;
            Rel rel = rows[i].rel;
            if (sgn(b) < 0) {
                for (auto& x : a) x = -x;
                b = -b;
                if (rel == Rel::le) rel = Rel::ge;
                else if (rel == Rel::ge) rel = Rel::le;
            }
            for (int j = 0; j < nvars; ++j) tab_[i][j] = a[j];
            rhs_[i] = b;
            if (rel == Rel::le) {
                tab_[i][slack] = Rat(1);
                basis_[i] = slack++;
            } else if (rel == Rel::ge) {
                tab_[i][slack] = Rat(-1);
                ++slack;
                tab_[i][art_begin_ + i] = Rat(1);
                basis_[i] = art_begin_ + i;
            } else {
                tab_[i][art_begin_ + i] = Rat(1);
                basis_[i] = art_begin_ + i;
            }
        }
        // A LE row with negated b would have produced a negative slack basis;
        // the normalisation above prevents that, so every initial basis entry
        // has rhs >= 0 and the artificials cover the rest.
        // Re-patch LE rows whose slack became basic but carry artificials in
        // numbering: handled by construction.
    }

    // Phase 1: drive the artificial variables to zero; returns false when the
    // system is infeasible.
    bool phase1() {
        std::vector<Rat> c(ncols_, Rat(0));
        for (std::size_t j = art_begin_; j < ncols_; ++j) c[j] = Rat(-1);
        run(c);
        Rat v(0);
        for (std::size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] >= art_begin_) v += rhs_[i];
        if (sgn(v) != 0) return false;
        // Pivot remaining zero-valued artificials out where possible.
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (basis_[i] < art_begin_) continue;
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < art_begin_; ++j)
                if (sgn(tab_[i][j]) != 0) {
                    enter = j;
                    break;
                }
            if (enter < ncols_) pivot(i, enter);
            // Otherwise the row is redundant; the artificial stays basic at 0.
        }
        return true;
    }

    // Phase 2 over the original variables (costs zero elsewhere).
    Rat phase2(const std::vector<Rat>& cvars) {
        std::vector<Rat> c(ncols_, Rat(0));
        for (int j = 0; j < nvars_; ++j) c[j] = cvars[j];
        run(c, /*lock_artificials=*/true);
        Rat v(0);
        for (std::size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] < static_cast<std::size_t>(nvars_))
                v += cvars[basis_[i]] * rhs_[i];
        return v;
    }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(static_cast<std::size_t>(nvars_), Rat(0));
        for (std::size_t i = 0; i < tab_.size(); ++i)
            if (basis_[i] < static_cast<std::size_t>(nvars_))
                x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    // Maximise c.x with Bland's rule.
    void run(const std::vector<Rat>& c, bool lock_artificials = false) {
        const std::size_t jmax = lock_artificials ? art_begin_ : ncols_;
        for (;;) {
            // Reduced costs r_j = c_j - c_B . column_j.
            std::size_t enter = jmax;
            for (std::size_t j = 0; j < jmax; ++j) {
                bool basic = false;
                for (std::size_t i = 0; i < tab_.size() && !basic; ++i)
                    basic = (basis_[i] == j);
                if (basic) continue;
                Rat r = c[j];
                for (std::size_t i = 0; i < tab_.size(); ++i)
                    if (sgn(tab_[i][j]) != 0 && sgn(c[basis_[i]]) != 0)
                        r -= c[basis_[i]] * tab_[i][j];
                if (sgn(r) > 0) {
                    enter = j;
                    break; // Bland: first improving column
                }
            }
            if (enter == jmax) return;
            // Ratio test; Bland: smallest basis index among ties.
            std::size_t leave = tab_.size();
            Rat best(0);
            for (std::size_t i = 0; i < tab_.size(); ++i) {
                if (sgn(tab_[i][enter]) <= 0) continue;
                Rat ratio = rhs_[i] / tab_[i][enter];
                if (leave == tab_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tab_.size()) throw error("unbounded linear program");
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rat p = tab_[row][col];
        for (auto& x : tab_[row]) x /= p;
        rhs_[row] /= p;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (i == row || sgn(tab_[i][col]) == 0) continue;
            const Rat f = tab_[i][col];
            for (std::size_t j = 0; j < ncols_; ++j)
                tab_[i][j] -= f * tab_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    int nvars_;
    std::size_t ncols_ = 0;
    std::size_t art_begin_ = 0;
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> rhs_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

// A feasible point with all variables >= 0, or nullopt.
inline std::optional<std::vector<Rat>> lp_feasible(
    int nvars, const std::vector<LinRow>& rows) {
    detail::SimplexTableau t(nvars, rows);
    if (!t.phase1()) return std::nullopt;
    return t.solution();
}

// Maximise c.x subject to rows and x >= 0; the caller guarantees the
// objective is bounded above on the feasible set.
inline std::optional<std::pair<std::vector<Rat>, Rat>> lp_maximize(
    int nvars, const std::vector<LinRow>& rows, const std::vector<Rat>& c) {
    detail::SimplexTableau t(nvars, rows);
    if (!t.phase1()) return std::nullopt;
    Rat v = t.phase2(c);
    return std::make_pair(t.solution(), v);
}

} // namespace newtcert
