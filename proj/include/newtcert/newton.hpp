#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "newtcert/polynomial.hpp"
#include "newtcert/simplex.hpp"

namespace newtcert {

// Vertex presentation of the Newton polyhedron conv(support) + R^n_+.
struct NewtonPolyhedron {
    int ambient_n = 0;
    std::set<Exponent, GrlexLess> vertices;

    friend bool operator==(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
        return a.ambient_n == b.ambient_n && a.vertices == b.vertices;
    }
};

// A compact face of the Newton polyhedron: the support points lying on it, a
// positive integer weight realising it, the common value of <witness,.> on
// the face, and the affine dimension of the point set.
struct CompactFace {
    std::vector<Exponent> points; // sorted in the graded-lex order
    WeightVector witness;
    std::int64_t level = 0;
    int dim = 0;
    bool maximal = false;
};

// A tuple of compact faces, one per polynomial, realised simultaneously by
// one positive weight.
struct JointFaceCone {
    std::vector<CompactFace> faces;
    WeightVector witness;
};

struct BoundaryStabilityReport {
    bool stable = false;
    std::set<Exponent, GrlexLess> generic_vertices;
    std::set<Exponent, GrlexLess> at_zero_vertices;
    std::set<Exponent, GrlexLess> offending;
};

namespace polyhedral {

// Points of S minimal under coordinatewise dominance.  A dominated point is
// never on a compact face for a strictly positive weight, so the polyhedral
// routines work on the antichain.
inline std::vector<Exponent> minimal_points(const std::set<Exponent, GrlexLess>& s) {
    std::vector<Exponent> out;
    for (const auto& a : s) {
        bool dominated = false;
        for (const auto& b : s) {
            if (b == a) continue;
            if (dominates(b, a)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(a);
    }
    return out;
}

// Is alpha in conv(others) + R^n_+?  Decided by exact LP feasibility over
// convex multipliers and a nonnegative shift.
inline bool in_shifted_hull(const Exponent& alpha,
                            const std::vector<Exponent>& others) {
    if (others.empty()) return false;
    const int n = static_cast<int>(alpha.size());
    const int k = static_cast<int>(others.size());
    // Variables: lambda_1..lambda_k >= 0, r_1..r_n >= 0.
    std::vector<LinRow> rows;
    for (int i = 0; i < n; ++i) {
        LinRow row;
        row.a.assign(k + n, Rat(0));
        for (int j = 0; j < k; ++j) row.a[j] = make_rat(others[j][i]);
        row.a[k + i] = Rat(1);
        row.rel = Rel::eq;
        row.b = make_rat(alpha[i]);
        rows.push_back(std::move(row));
    }
    LinRow sum;
    sum.a.assign(k + n, Rat(0));
    for (int j = 0; j < k; ++j) sum.a[j] = Rat(1);
    sum.rel = Rel::eq;
    sum.b = Rat(1);
    rows.push_back(std::move(sum));
    return lp_feasible(k + n, rows).has_value();
}

inline std::set<Exponent, GrlexLess> vertex_set(
    const std::set<Exponent, GrlexLess>& support) {
    std::set<Exponent, GrlexLess> verts;
    const auto mins = minimal_points(support);
    for (const auto& a : mins) {
        std::vector<Exponent> others;
        for (const auto& b : mins)
            if (!(b == a)) others.push_back(b);
        if (!in_shifted_hull(a, others)) verts.insert(a);
    }
    return verts;
}

// Affine dimension of a point set, by exact Gaussian elimination.
inline int affine_dim(const std::vector<Exponent>& pts) {
    if (pts.size() <= 1) return 0;
    const std::size_t n = pts[0].size();
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> r(n);
        for (std::size_t j = 0; j < n; ++j)
            r[j] = make_rat(long(pts[i][j]) - long(pts[0][j]));
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (std::size_t col = 0; col < n && rank < int(rows.size()); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (sgn(rows[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (int(i) == rank || sgn(rows[i][col]) == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < n; ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// The joint enumeration works on index tuples into the reduced supports.
using IndexFace = std::vector<int>;        // sorted indices into one support
using IndexTuple = std::vector<IndexFace>; // one entry per polynomial

class JointEnumerator {
public:
    explicit JointEnumerator(std::vector<std::vector<Exponent>> supports)
        : supports_(std::move(supports)) {
        if (supports_.empty()) throw error("empty polynomial list");
        n_ = static_cast<int>(supports_[0][0].size());
        m_ = static_cast<int>(supports_.size());
    }

    // All realised face tuples, each with a reduced positive integer witness.
    std::vector<std::pair<IndexTuple, WeightVector>> run() {
        enumerate_vertex_tuples();
        close_under_joins();
        std::vector<std::pair<IndexTuple, WeightVector>> out;
        out.reserve(found_.size());
        for (const auto& [key, wit] : found_) out.emplace_back(key, wit);
        return out;
    }

private:
    // Exact argmin tuple of an integer weight.
    IndexTuple evaluate(const WeightVector& w) const {
        IndexTuple t(m_);
        for (int k = 0; k < m_; ++k) {
            std::int64_t best = INT64_MAX;
            for (const auto& a : supports_[k]) best = std::min(best, dot(w, a));
            for (int j = 0; j < int(supports_[k].size()); ++j)
                if (dot(w, supports_[k][j]) == best) t[k].push_back(j);
        }
        return t;
    }

    // Rows of the closed region C(X): w_i >= 1 (via the shift w = 1 + w'),
    // and for each constrained polynomial <w, beta - base_k> >= 0 with
    // equality on the face points.  `strict` lifts the off-face rows to >= 1.
    std::vector<LinRow> region_rows(const IndexTuple& x, bool strict,
                                    int slack_var) const {
        std::vector<LinRow> rows;
        const int nv = n_ + (slack_var ? 1 : 0);
        for (int k = 0; k < m_; ++k) {
            if (x[k].empty()) continue;
            const Exponent& base = supports_[k][x[k][0]];
            for (int j = 0; j < int(supports_[k].size()); ++j) {
                const Exponent& p = supports_[k][j];
                if (p == base) continue;
                const bool on_face =
                    std::binary_search(x[k].begin(), x[k].end(), j);
                LinRow row;
                row.a.assign(nv, Rat(0));
                std::int64_t shift = 0; // <1+w', p - base>
                for (int i = 0; i < n_; ++i) {
                    row.a[i] = make_rat(long(p[i]) - long(base[i]));
                    shift += std::int64_t(p[i]) - std::int64_t(base[i]);
                }
                if (on_face) {
                    row.rel = Rel::eq;
                    row.b = make_rat(-shift);
                } else {
                    if (slack_var) row.a[n_] = Rat(-1);
                    row.rel = Rel::ge;
                    row.b = make_rat(-shift) + (strict ? Rat(1) : Rat(0));
                }
                rows.push_back(std::move(row));
            }
        }
        return rows;
    }

    static WeightVector to_integer_weight(const std::vector<Rat>& x, int n) {
        mpz_class lcm(1);
        for (int i = 0; i < n; ++i) {
            Rat w = x[i] + 1; // undo the shift
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den().get_mpz_t());
        }
        WeightVector w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Rat v = (x[i] + 1) * Rat(lcm);
            mpz_class num = v.get_num();
            if (!num.fits_uint_p()) throw error("witness weight overflow");
            w[i] = static_cast<std::uint32_t>(num.get_ui());
        }
        w.reduce();
        return w;
    }

    void add_tuple(const IndexTuple& t, const WeightVector& w) {
        auto [it, fresh] = found_.emplace(t, w);
        if (fresh) queue_.push_back(t);
    }

    // Full-dimensional cells of the refinement fan carry tuples of polytope
    // vertices; enumerate the simultaneously realisable combinations.
    void enumerate_vertex_tuples() {
        std::vector<std::vector<int>> vert_idx(m_);
        for (int k = 0; k < m_; ++k) {
            std::set<Exponent, GrlexLess> s(supports_[k].begin(),
                                            supports_[k].end());
            auto vs = vertex_set(s);
            for (int j = 0; j < int(supports_[k].size()); ++j)
                if (vs.count(supports_[k][j])) vert_idx[k].push_back(j);
        }
        IndexTuple cand(m_);
        enumerate_rec(vert_idx, 0, cand);
    }

    void enumerate_rec(const std::vector<std::vector<int>>& vert_idx, int k,
                       IndexTuple& cand) {
        if (k == m_) {
            auto sol = lp_feasible(n_, region_rows(cand, /*strict=*/true, 0));
            if (sol) {
                WeightVector w = to_integer_weight(*sol, n_);
                add_tuple(evaluate(w), w);
            }
            return;
        }
        for (int v : vert_idx[k]) {
            cand[k] = {v};
            enumerate_rec(vert_idx, k + 1, cand);
            cand[k].clear();
        }
    }

    static IndexTuple tuple_union(const IndexTuple& a, const IndexTuple& b) {
        IndexTuple u(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            std::set_union(a[k].begin(), a[k].end(), b[k].begin(), b[k].end(),
                           std::back_inserter(u[k]));
        }
        return u;
    }

    static bool tuple_contains(const IndexTuple& big, const IndexTuple& small) {
        for (std::size_t k = 0; k < big.size(); ++k)
            if (!std::includes(big[k].begin(), big[k].end(), small[k].begin(),
                               small[k].end()))
                return false;
        return true;
    }

    // Smallest realised tuple containing X, or nullopt when no positive
    // weight realises all of X simultaneously.
    std::optional<std::pair<IndexTuple, WeightVector>> join(const IndexTuple& x) {
        // Maximise the minimum slack s (capped at 1) over the off-face rows.
        std::vector<LinRow> rows = region_rows(x, /*strict=*/false, /*slack=*/1);
        {
            LinRow cap;
            cap.a.assign(n_ + 1, Rat(0));
            cap.a[n_] = Rat(1);
            cap.rel = Rel::le;
            cap.b = Rat(1);
            rows.push_back(std::move(cap));
        }
        std::vector<Rat> obj(n_ + 1, Rat(0));
        obj[n_] = Rat(1);
        auto opt = lp_maximize(n_ + 1, rows, obj);
        if (!opt) return std::nullopt;
        const auto& [x0, smax] = *opt;
        WeightVector w0 = to_integer_weight(x0, n_);
        if (sgn(smax) > 0) return std::make_pair(evaluate(w0), w0);

        // Some off-face rows are tight throughout the region.  Escape each
        // tight point individually; those with no escape join the face.
        std::vector<Rat> w_opt(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) w_opt[i] = x0[i] + 1;
        std::vector<Rat> acc = w_opt;
        Rat scale(1);
        IndexTuple grown = x;
        for (int k = 0; k < m_; ++k) {
            if (x[k].empty()) continue;
            const Exponent& base = supports_[k][x[k][0]];
            for (int j = 0; j < int(supports_[k].size()); ++j) {
                if (std::binary_search(x[k].begin(), x[k].end(), j)) continue;
                // Tightness at the optimum, in exact arithmetic.
                Rat v(0);
                for (int i = 0; i < n_; ++i)
                    v += w_opt[i] * make_rat(long(supports_[k][j][i]) -
                                             long(base[i]));
                if (sgn(v) != 0) continue;
                // Escape LP: can this point sit strictly above the level?
                std::vector<LinRow> esc = region_rows(x, false, 0);
                LinRow row;
                row.a.assign(n_, Rat(0));
                std::int64_t shift = 0;
                for (int i = 0; i < n_; ++i) {
                    row.a[i] = make_rat(long(supports_[k][j][i]) - long(base[i]));
                    shift += std::int64_t(supports_[k][j][i]) -
                             std::int64_t(base[i]);
                }
                row.rel = Rel::ge;
                row.b = make_rat(-shift) + Rat(1);
                esc.push_back(std::move(row));
                auto e = lp_feasible(n_, esc);
                if (e) {
                    for (int i = 0; i < n_; ++i) acc[i] += (*e)[i] + 1;
                    scale += 1;
                } else {
                    grown[k].push_back(j);
                }
            }
            std::sort(grown[k].begin(), grown[k].end());
        }
        // The accumulated point is interior for every escapable row.
        std::vector<Rat> shifted(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) shifted[i] = acc[i] / scale - 1;
        WeightVector w = to_integer_weight(shifted, n_);
        IndexTuple t = evaluate(w);
        if (t != grown) throw error("internal: join witness mismatch");
        return std::make_pair(t, w);
    }

    void close_under_joins() {
        std::vector<IndexTuple> finalized;
        std::set<IndexTuple> union_seen;
        while (!queue_.empty()) {
            IndexTuple t = queue_.back();
            queue_.pop_back();
            for (const auto& u : finalized) {
                IndexTuple uni = tuple_union(t, u);
                if (found_.count(uni)) continue;
                if (!union_seen.insert(uni).second) continue;
                auto j = join(uni);
                if (j) add_tuple(j->first, j->second);
            }
            finalized.push_back(std::move(t));
        }
    }

    std::vector<std::vector<Exponent>> supports_;
    int n_ = 0;
    int m_ = 0;
    std::map<IndexTuple, WeightVector> found_;
    std::vector<IndexTuple> queue_;
};

} // namespace polyhedral

template <class K>
NewtonPolyhedron newton_vertices(const Polynomial<K>& f) {
    if (f.is_zero()) throw error("Newton polyhedron of the zero polynomial");
    NewtonPolyhedron np;
    np.ambient_n = f.ambient_n();
    np.vertices = polyhedral::vertex_set(support(f));
    return np;
}

namespace polyhedral {

// Reduced supports (dominance antichain) for a list of polynomials.
template <class K>
std::vector<std::vector<Exponent>> reduced_supports(
    const std::vector<Polynomial<K>>& fs) {
    std::vector<std::vector<Exponent>> out;
    for (const auto& f : fs) {
        if (f.is_zero()) throw error("zero polynomial in face enumeration");
        out.push_back(minimal_points(support(f)));
    }
    return out;
}

inline CompactFace make_face(const std::vector<Exponent>& reduced,
                             const IndexFace& idx, const WeightVector& w) {
    CompactFace face;
    face.witness = w;
    face.level = dot(w, reduced[idx[0]]);
    for (int j : idx) face.points.push_back(reduced[j]);
    std::sort(face.points.begin(), face.points.end(), GrlexLess{});
    face.dim = affine_dim(face.points);
    return face;
}

} // namespace polyhedral

// All realised joint face tuples of a list of polynomials, sorted
// canonically.  For every positive integer weight w the tuple
// (Delta(w;f^1),...,Delta(w;f^m)) appears exactly once.
template <class K>
std::vector<JointFaceCone> enumerate_joint_faces(
    const std::vector<Polynomial<K>>& fs) {
    if (fs.empty()) throw error("empty polynomial list");
    const int n = fs[0].ambient_n();
    for (const auto& f : fs)
        if (f.ambient_n() != n) throw error("ambient dimension mismatch");
    auto reduced = polyhedral::reduced_supports(fs);
    polyhedral::JointEnumerator en(reduced);
    auto tuples = en.run();

    std::vector<JointFaceCone> cones;
    for (auto& [tuple, w] : tuples) {
        JointFaceCone cone;
        cone.witness = w;
        for (std::size_t k = 0; k < fs.size(); ++k)
            cone.faces.push_back(polyhedral::make_face(reduced[k], tuple[k], w));
        cones.push_back(std::move(cone));
    }
    auto face_key = [](const CompactFace& f) {
        std::vector<std::vector<std::uint32_t>> k;
        for (const auto& p : f.points) k.push_back(p.e);
        return k;
    };
    std::sort(cones.begin(), cones.end(),
              [&](const JointFaceCone& a, const JointFaceCone& b) {
                  for (std::size_t k = 0; k < a.faces.size(); ++k) {
                      auto ka = face_key(a.faces[k]), kb = face_key(b.faces[k]);
                      if (ka != kb) return ka < kb;
                  }
                  return false;
              });
    return cones;
}

// All compact faces of the Newton polyhedron of f, vertices included, with
// maximal faces flagged.
template <class K>
std::vector<CompactFace> compact_faces(const Polynomial<K>& f) {
    auto cones = enumerate_joint_faces(std::vector<Polynomial<K>>{f});
    std::vector<CompactFace> faces;
    for (auto& c : cones) faces.push_back(std::move(c.faces[0]));
    for (auto& a : faces) {
        a.maximal = true;
        for (const auto& b : faces) {
            if (&a == &b || b.points.size() <= a.points.size()) continue;
            bool contained = true;
            for (const auto& p : a.points)
                if (!std::binary_search(b.points.begin(), b.points.end(), p,
                                        GrlexLess{})) {
                    contained = false;
                    break;
                }
            if (contained) {
                a.maximal = false;
                break;
            }
        }
    }
    return faces;
}

// Vertex-set equality decides Newton-boundary equality: the polyhedron is
// conv(vertices) + R^n_+ and the boundary is determined by the polyhedron.
template <class K1, class K2>
bool newton_boundary_equal(const Polynomial<K1>& f, const Polynomial<K2>& g) {
    if (f.is_zero() || g.is_zero())
        throw error("Newton boundary of the zero polynomial");
    if (f.ambient_n() != g.ambient_n()) throw error("ambient dimension mismatch");
    return polyhedral::vertex_set(support(f)) ==
           polyhedral::vertex_set(support(g));
}

// Does alpha lie on a compact face of the Newton polyhedron of f?  LP: some
// w >= 1 puts alpha at or below the support minimum; for alpha inside the
// polyhedron this is exactly boundary membership.
template <class K>
bool boundary_membership(const Exponent& alpha, const Polynomial<K>& f) {
    if (f.is_zero()) throw error("boundary membership in the zero polynomial");
    const int n = f.ambient_n();
    if (static_cast<int>(alpha.size()) != n)
        throw error("exponent length does not match ambient dimension");
    std::vector<LinRow> rows;
    for (const auto& beta : polyhedral::minimal_points(support(f))) {
        LinRow row;
        row.a.assign(n, Rat(0));
        std::int64_t shift = 0;
        for (int i = 0; i < n; ++i) {
            row.a[i] = make_rat(long(beta[i]) - long(alpha[i]));
            shift += std::int64_t(beta[i]) - std::int64_t(alpha[i]);
        }
        row.rel = Rel::ge;
        row.b = make_rat(-shift);
        rows.push_back(std::move(row));
    }
    return lp_feasible(n, rows).has_value();
}

// Generic vertex set versus t = 0 vertex set.  Equality guarantees some
// tau0 > 0 with a constant Newton boundary on |t| <= tau0: the support can
// only shrink at the finitely many roots of the coefficients, none of which
// is 0 when the vertex sets agree.
inline BoundaryStabilityReport family_boundary_stable(
    const Polynomial<RatFunc>& f) {
    for (const auto& [e, c] : f.terms())
        if (!c.is_polynomial())
            throw error("family coefficients must be polynomial in t");
    if (f.is_zero()) throw error("boundary stability of the zero polynomial");
    BoundaryStabilityReport rep;
    rep.generic_vertices = polyhedral::vertex_set(support(f));
    Polynomial<Rat> f0 = specialize_parameter(f, Rat(0));
    if (!f0.is_zero()) rep.at_zero_vertices = polyhedral::vertex_set(support(f0));
    for (const auto& v : rep.generic_vertices)
        if (!rep.at_zero_vertices.count(v)) rep.offending.insert(v);
    for (const auto& v : rep.at_zero_vertices)
        if (!rep.generic_vertices.count(v)) rep.offending.insert(v);
    rep.stable = rep.offending.empty();
    return rep;
}

} // namespace newtcert
