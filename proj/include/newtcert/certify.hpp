#pragma once

#include <atomic>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "newtcert/groebner.hpp"
#include "newtcert/newton.hpp"
#include "newtcert/parse.hpp"
#include "newtcert/sha256.hpp"

namespace newtcert {

struct CertifierConfig {
    std::uint64_t step_budget = 1'000'000; // per Groebner basis computation
    int jobs = 1;
};

struct Verdict {
    enum class Status { pass, fail, exhausted };

    Status status = Status::pass;
    std::optional<std::vector<int>> failing_subset; // 1-based indices
    std::optional<JointFaceCone> failing_cone;
    std::string detail;

    bool passed() const { return status == Status::pass; }
};

inline std::string status_text(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::pass: return "pass";
        case Verdict::Status::fail: return "fail";
        default: return "resource-exhausted";
    }
}

enum class Conclusion {
    stable_radius_exists,
    family_uniformly_stable,
    fibrations_isomorphic_family,
    fibrations_isomorphic_pair,
    degenerate,
    nondegenerate,
};

inline std::string conclusion_text(Conclusion c) {
    switch (c) {
        case Conclusion::stable_radius_exists: return "stable-radius-exists";
        case Conclusion::family_uniformly_stable:
            return "family-uniformly-stable";
        case Conclusion::fibrations_isomorphic_family:
            return "fibrations-isomorphic-family";
        case Conclusion::fibrations_isomorphic_pair:
            return "fibrations-isomorphic-pair";
        case Conclusion::degenerate: return "degenerate";
        default: return "nondegenerate";
    }
}

// Signed result of a certifier run.  `conclusion` is absent exactly when a
// check ran out of its step budget; a failing hypothesis yields the
// `degenerate` conclusion together with the single failing check.
struct Certificate {
    std::optional<Conclusion> conclusion;
    std::string theorem_anchor;
    std::string inputs_digest;
    std::vector<Verdict> checks;
};

// A 1-parameter family f^1(t,z),...,f^{k0}(t,z) with coefficients polynomial
// in t and f^k(t,0) = 0 for all t.
struct FamilyInput {
    std::vector<Polynomial<RatFunc>> members;
};

inline FamilyInput make_family(std::vector<Polynomial<RatFunc>> members) {
    if (members.empty()) throw error("family needs at least one member");
    for (const auto& f : members) {
        if (f.is_zero()) throw error("zero polynomial in family");
        for (const auto& [e, c] : f.terms())
            if (!c.is_polynomial())
                throw error("family coefficients must be polynomial in t");
        if (!f.vanishes_at_origin())
            throw error("family member does not vanish at the origin");
        if (f.ambient_n() != members[0].ambient_n())
            throw error("ambient dimension mismatch");
    }
    return FamilyInput{std::move(members)};
}

namespace certdetail {

template <class K>
void require_germ(const std::vector<Polynomial<K>>& fs) {
    if (fs.empty()) throw error("empty polynomial list");
    for (const auto& f : fs) {
        if (f.is_zero()) throw error("zero polynomial");
        if (!f.vanishes_at_origin())
            throw error("polynomial does not vanish at the origin");
        if (f.ambient_n() != fs[0].ambient_n())
            throw error("ambient dimension mismatch");
    }
}

inline std::string point_text(const std::vector<Rat>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += rat_text(p[i]);
    }
    return s + ")";
}

// Bounded exact search for a torus zero of the system over a small rational
// grid; a found point is verified exactly and attached as witness data.
inline std::optional<std::vector<Rat>> find_torus_candidate(
    const std::vector<Polynomial<Rat>>& sys, int n) {
    if (n > 4) return std::nullopt;
    static const std::vector<std::pair<long, unsigned long>> raw = {
        {1, 1},  {-1, 1}, {2, 1},  {-2, 1}, {3, 1},  {-3, 1},
        {1, 2},  {-1, 2}, {3, 2},  {-3, 2}, {1, 3},  {-1, 3}};
    std::vector<Rat> values;
    for (auto [a, b] : raw) values.push_back(make_rat(a, b));
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<Rat> point(static_cast<std::size_t>(n));
    for (;;) {
        for (int i = 0; i < n; ++i) point[i] = values[idx[i]];
        bool all_zero = true;
        for (const auto& p : sys)
            if (!p.is_zero() && sgn(evaluate_rational(p, point)) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return point;
        int i = n - 1;
        while (i >= 0 && ++idx[i] == values.size()) idx[i--] = 0;
        if (i < 0) return std::nullopt;
    }
}

template <class K>
std::optional<std::vector<Rat>> candidate_for(
    const std::vector<Polynomial<K>>& sys, int n) {
    if constexpr (std::is_same_v<K, Rat>) {
        return find_torus_candidate(sys, n);
    } else {
        (void)sys;
        (void)n;
        return std::nullopt;
    }
}

inline std::string cone_text(const JointFaceCone& cone) {
    std::string s = "faces ";
    for (std::size_t k = 0; k < cone.faces.size(); ++k) {
        if (k) s += " x ";
        s += "{";
        for (std::size_t i = 0; i < cone.faces[k].points.size(); ++i) {
            if (i) s += ",";
            s += exponent_text(cone.faces[k].points[i]);
        }
        s += "}";
    }
    s += ", witness weight (";
    for (std::size_t i = 0; i < cone.witness.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cone.witness[i]);
    }
    return s + ")";
}

// A single-vertex cone used as witness data for boundary-type failures.
template <class K>
JointFaceCone vertex_cone(const Polynomial<K>& f, const Exponent& v) {
    const int n = f.ambient_n();
    std::vector<LinRow> rows;
    for (const auto& beta : polyhedral::minimal_points(support(f))) {
        if (beta == v) continue;
        LinRow row;
        row.a.assign(n, Rat(0));
        std::int64_t shift = 0;
        for (int i = 0; i < n; ++i) {
            row.a[i] = make_rat(long(beta[i]) - long(v[i]));
            shift += std::int64_t(beta[i]) - std::int64_t(v[i]);
        }
        row.rel = Rel::ge;
        row.b = make_rat(-shift) + Rat(1);
        rows.push_back(std::move(row));
    }
    auto sol = lp_feasible(n, rows);
    WeightVector w(static_cast<std::size_t>(n));
    if (sol) {
        mpz_class lcm(1);
        for (int i = 0; i < n; ++i) {
            Rat wi = (*sol)[i] + 1;
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), wi.get_den().get_mpz_t());
        }
        for (int i = 0; i < n; ++i) {
            Rat wi = ((*sol)[i] + 1) * Rat(lcm);
            w[i] = static_cast<std::uint32_t>(wi.get_num().get_ui());
        }
        w.reduce();
    } else {
        for (int i = 0; i < n; ++i) w[i] = 1;
    }
    CompactFace face;
    face.points = {v};
    face.witness = w;
    face.level = dot(w, v);
    face.dim = 0;
    JointFaceCone cone;
    cone.faces = {face};
    cone.witness = w;
    return cone;
}

// Run independent check tasks, preserving result order; `jobs` > 1 runs them
// concurrently (every task is a pure function).
inline std::vector<Verdict> run_tasks(
    const std::vector<std::function<Verdict()>>& tasks, int jobs) {
    std::vector<Verdict> out(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                out[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int k = std::min<int>(jobs, static_cast<int>(tasks.size()));
    for (int i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    // Rethrow in slot order so parallel runs fail the same way serial ones do.
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// Truncate a check list directly after its first non-passing entry, so a
// certificate carries exactly one failing check.
inline std::vector<Verdict> truncate_at_failure(std::vector<Verdict> checks) {
    for (std::size_t i = 0; i < checks.size(); ++i)
        if (!checks[i].passed()) {
            checks.resize(i + 1);
            break;
        }
    return checks;
}

} // namespace certdetail

// Newton non-degeneracy of the hypersurface V(f) (k0 = 1 case): every
// compact face function must be free of torus critical points on its zero
// set.  Vertex faces are skipped, a monomial never vanishes on the torus.
inline Verdict check_hypersurface_nondegenerate(
    const Polynomial<Rat>& f, const CertifierConfig& cfg = {}) {
    certdetail::require_germ(std::vector<Polynomial<Rat>>{f});
    const int n = f.ambient_n();
    auto faces = compact_faces(f);
    for (const auto& face : faces) {
        if (face.points.size() < 2) continue;
        auto fw = face_function(f, face.witness);
        std::vector<Polynomial<Rat>> sys{fw};
        for (int i = 1; i <= n; ++i) sys.push_back(partial_derivative(fw, i));
        StepBudget budget{cfg.step_budget};
        bool empty;
        try {
            empty = torus_emptiness(sys, budget);
        } catch (const resource_exhausted& ex) {
            Verdict v;
            v.status = Verdict::Status::exhausted;
            v.detail = std::string("hypersurface check: ") + ex.what();
            return v;
        }
        if (!empty) {
            Verdict v;
            v.status = Verdict::Status::fail;
            v.failing_subset = std::vector<int>{1};
            JointFaceCone cone;
            cone.faces = {face};
            cone.witness = face.witness;
            v.failing_cone = cone;
            v.detail = "hypersurface check: face function has a torus critical "
                       "point on its zero set; " +
                       certdetail::cone_text(cone);
            if (auto pt = certdetail::find_torus_candidate(sys, n))
                v.detail += "; torus point candidate " +
                            certdetail::point_text(*pt);
            return v;
        }
    }
    Verdict v;
    v.detail = "hypersurface check: " + std::to_string(faces.size()) +
               " compact faces, no torus critical point";
    return v;
}

// Non-degenerate complete intersection check for a tuple of polynomials: on
// every joint face cone the face functions must cut out a smooth complete
// intersection in the torus.  With more polynomials than variables the wedge
// of differentials vanishes identically, so the face system itself must have
// no torus zero.
template <class K>
Verdict check_ndci(const std::vector<Polynomial<K>>& fs,
                   const CertifierConfig& cfg = {}) {
    certdetail::require_germ(fs);
    const int n = fs[0].ambient_n();
    const int m = static_cast<int>(fs.size());
    auto cones = enumerate_joint_faces(fs);
    for (const auto& cone : cones) {
        bool has_vertex_face = false;
        for (const auto& face : cone.faces)
            if (face.points.size() < 2) has_vertex_face = true;
        if (has_vertex_face) continue; // a monomial equation kills the torus
        std::vector<Polynomial<K>> face_fns;
        for (const auto& f : fs)
            face_fns.push_back(face_function(f, cone.witness));
        std::vector<Polynomial<K>> sys = face_fns;
        if (m <= n)
            for (auto& minor : jacobian_minors(face_fns))
                sys.push_back(std::move(minor));
        StepBudget budget{cfg.step_budget};
        bool empty;
        try {
            empty = torus_emptiness(sys, budget);
        } catch (const resource_exhausted& ex) {
            Verdict v;
            v.status = Verdict::Status::exhausted;
            v.detail = std::string("ndci check: ") + ex.what();
            return v;
        }
        if (!empty) {
            Verdict v;
            v.status = Verdict::Status::fail;
            std::vector<int> all(fs.size());
            for (int i = 0; i < m; ++i) all[i] = i + 1;
            v.failing_subset = all;
            v.failing_cone = cone;
            v.detail =
                (m <= n ? std::string("ndci check: the face functions have a "
                                      "common torus zero where the maximal "
                                      "Jacobian minors vanish; ")
                        : std::string("ndci check: more polynomials than "
                                      "variables, and the face system has a "
                                      "torus zero; ")) +
                certdetail::cone_text(cone);
            if (auto pt = certdetail::candidate_for(sys, n))
                v.detail += "; torus point candidate " +
                            certdetail::point_text(*pt);
            return v;
        }
    }
    Verdict v;
    v.detail = "ndci check: " + std::to_string(cones.size()) +
               " joint face cones pass";
    return v;
}

namespace certdetail {

// Subsets of {1,...,k0} ordered by size, then lexicographically.
inline std::vector<std::vector<int>> canonical_subsets(int k0) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t bits = 1; bits < (1u << k0); ++bits) {
        std::vector<int> s;
        for (int i = 0; i < k0; ++i)
            if (bits & (1u << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline std::string subset_text(const std::vector<int>& s) {
    std::string t = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) t += ",";
        t += std::to_string(s[i]);
    }
    return t + "}";
}

// One NDCI verdict per canonical subset; failing subsets are remapped to the
// global member indices.
template <class K>
std::vector<Verdict> subset_verdicts(const std::vector<Polynomial<K>>& fs,
                                     const CertifierConfig& cfg,
                                     const std::string& label) {
    auto subsets = canonical_subsets(static_cast<int>(fs.size()));
    std::vector<std::function<Verdict()>> tasks;
    for (const auto& s : subsets) {
        tasks.push_back([&fs, s, &cfg, &label]() {
            std::vector<Polynomial<K>> sub;
            for (int i : s) sub.push_back(fs[static_cast<std::size_t>(i - 1)]);
            Verdict v = check_ndci(sub, cfg);
            if (v.failing_subset) {
                std::vector<int> global;
                for (int local : *v.failing_subset)
                    global.push_back(s[static_cast<std::size_t>(local - 1)]);
                v.failing_subset = global;
            }
            v.detail = label + " subset " + subset_text(s) + ": " + v.detail;
            return v;
        });
    }
    return run_tasks(tasks, cfg.jobs);
}

} // namespace certdetail

// The product hypotheses: every nonempty subset of distinct indices must cut
// out a non-degenerate complete intersection.  Coordinate-subspace
// restrictions inherit non-degeneracy and are not re-checked.
inline Verdict check_assumptions_product(const std::vector<Polynomial<Rat>>& fs,
                                         const CertifierConfig& cfg = {}) {
    certdetail::require_germ(fs);
    auto verdicts = certdetail::subset_verdicts(fs, cfg, "ndci");
    for (auto& v : verdicts)
        if (!v.passed()) return v;
    Verdict v;
    v.detail = "all " + std::to_string(verdicts.size()) +
               " subset ndci checks pass";
    return v;
}

namespace certdetail {

template <class Fs>
std::string digest_of_inputs(const std::string& tag, const Fs& fs) {
    std::string text = tag;
    for (const auto& f : fs) {
        text += ";";
        text += polynomial_text(f);
    }
    return sha256_hex(text);
}

inline Certificate seal(std::optional<Conclusion> pass_conclusion,
                        std::string anchor, std::string digest,
                        std::vector<Verdict> checks) {
    Certificate cert;
    cert.theorem_anchor = std::move(anchor);
    cert.inputs_digest = std::move(digest);
    cert.checks = truncate_at_failure(std::move(checks));
    bool all_pass = true;
    bool exhausted = false;
    for (const auto& c : cert.checks) {
        if (c.status == Verdict::Status::exhausted) exhausted = true;
        if (!c.passed()) all_pass = false;
    }
    if (all_pass)
        cert.conclusion = pass_conclusion;
    else if (!exhausted)
        cert.conclusion = Conclusion::degenerate;
    return cert;
}

} // namespace certdetail

// Certificate that the product f^1...f^{k0} admits a stable radius for its
// Milnor fibration.  The radius itself is existential; the certificate
// records the hypothesis checks that license it.
inline Certificate certify_stable_radius(const std::vector<Polynomial<Rat>>& fs,
                                         const CertifierConfig& cfg = {}) {
    certdetail::require_germ(fs);
    auto checks = certdetail::subset_verdicts(fs, cfg, "ndci");
    return certdetail::seal(
        Conclusion::stable_radius_exists,
        "every nonempty subset of the factors cuts out a Newton "
        "non-degenerate complete intersection germ, so a stable radius for "
        "the Milnor fibration of the product exists",
        certdetail::digest_of_inputs("product", fs), std::move(checks));
}

// Paired report for products: the hypotheses may hold while the product
// itself is Newton degenerate; this check makes that situation explicit.
inline Verdict product_degeneracy_report(const std::vector<Polynomial<Rat>>& fs,
                                         const CertifierConfig& cfg = {}) {
    Polynomial<Rat> prod = fs.at(0);
    for (std::size_t i = 1; i < fs.size(); ++i) prod = prod * fs[i];
    Verdict v = check_hypersurface_nondegenerate(prod, cfg);
    v.detail = "product polynomial: " + v.detail;
    return v;
}

// Family certification via the generic-parameter reduction: a pass over Q(t)
// excludes at most finitely many parameter values, and a pass at t = 0 then
// yields some tau0 > 0 such that the hypotheses hold for all |t| <= tau0.
inline Certificate check_family(const FamilyInput& family,
                                const CertifierConfig& cfg = {}) {
    const auto& fs = family.members;
    certdetail::require_germ(fs);
    const int k0 = static_cast<int>(fs.size());
    const std::string anchor =
        "the Newton boundaries are independent of the parameter and every "
        "subset is a non-degenerate complete intersection generically and at "
        "t = 0; a generic pass excludes at most finitely many parameter "
        "values, so some tau0 > 0 makes the family uniformly stable with a "
        "uniform stable radius, and the Milnor fibrations of f_t and f_0 are "
        "isomorphic for all |t| <= tau0";
    const std::string digest = certdetail::digest_of_inputs("family", fs);

    std::vector<Verdict> checks;
    // (a) Newton boundary independent of t, member by member.
    for (int k = 0; k < k0; ++k) {
        auto rep = family_boundary_stable(fs[static_cast<std::size_t>(k)]);
        Verdict v;
        v.detail = "boundary stability member " + std::to_string(k + 1) + ": ";
        if (rep.stable) {
            v.detail += "generic and t=0 vertex sets coincide (" +
                        std::to_string(rep.generic_vertices.size()) +
                        " vertices)";
        } else {
            v.status = Verdict::Status::fail;
            v.failing_subset = std::vector<int>{k + 1};
            const Exponent& off = *rep.offending.begin();
            const bool lost = rep.generic_vertices.count(off) > 0;
            v.failing_cone = certdetail::vertex_cone(
                fs[static_cast<std::size_t>(k)], off);
            v.detail += std::string("vertex ") + exponent_text(off) +
                        (lost ? " is lost at t = 0" : " appears only at t = 0");
        }
        checks.push_back(std::move(v));
        if (!checks.back().passed())
            return certdetail::seal(Conclusion::fibrations_isomorphic_family,
                                    anchor, digest, std::move(checks));
    }
    // (b) Generic-parameter NDCI over Q(t) for every subset.
    auto generic = certdetail::subset_verdicts(fs, cfg, "generic-t ndci");
    for (auto& v : generic) checks.push_back(std::move(v));
    // (c) NDCI at t = 0 for every subset.
    bool generic_ok = true;
    for (const auto& v : checks) generic_ok = generic_ok && v.passed();
    if (generic_ok) {
        std::vector<Polynomial<Rat>> at_zero;
        for (const auto& f : fs)
            at_zero.push_back(specialize_parameter(f, Rat(0)));
        auto zero = certdetail::subset_verdicts(at_zero, cfg, "t=0 ndci");
        for (auto& v : zero) checks.push_back(std::move(v));
    }
    return certdetail::seal(Conclusion::fibrations_isomorphic_family, anchor,
                            digest, std::move(checks));
}

// Truncation of f to the terms on its Newton boundary.
inline Polynomial<Rat> newton_principal_part(const Polynomial<Rat>& f) {
    if (f.is_zero()) throw error("principal part of the zero polynomial");
    Polynomial<Rat> r(f.ambient_n());
    for (const auto& [e, c] : f.terms())
        if (boundary_membership(e, f)) r.add_term(e, c);
    return r;
}

// The linear homotopy (1-t) f^k + t F^k between each factor and its Newton
// principal part, as a family input.
inline FamilyInput build_principal_homotopy(const std::vector<Polynomial<Rat>>& fs) {
    certdetail::require_germ(fs);
    std::vector<Polynomial<RatFunc>> members;
    const RatFunc t = RatFunc::t();
    const RatFunc one_minus_t = RatFunc(1) - t;
    for (const auto& f : fs) {
        auto principal = newton_principal_part(f);
        Polynomial<RatFunc> member =
            one_minus_t * promote(f) + t * promote(principal);
        members.push_back(std::move(member));
    }
    return make_family(std::move(members));
}

// Pair certification: equal factorwise Newton boundaries plus the subset
// hypotheses on both sides give isomorphic Milnor fibrations of the two
// products.  The principal-part homotopies of both sides are re-certified as
// an internal consistency audit.
inline Certificate certify_pair(const std::vector<Polynomial<Rat>>& fs,
                                const std::vector<Polynomial<Rat>>& gs,
                                const CertifierConfig& cfg = {}) {
    certdetail::require_germ(fs);
    certdetail::require_germ(gs);
    if (fs.size() != gs.size()) throw error("factor lists differ in length");
    if (fs[0].ambient_n() != gs[0].ambient_n())
        throw error("ambient dimension mismatch");

    std::string digest = certdetail::digest_of_inputs("pair-f", fs) +
                         certdetail::digest_of_inputs("pair-g", gs);
    digest = sha256_hex(digest);
    const std::string anchor =
        "the factor Newton boundaries agree pairwise and every subset of "
        "either tuple cuts out a non-degenerate complete intersection germ; "
        "the Milnor fibrations of the two products are isomorphic";

    std::vector<Verdict> checks;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        Verdict v;
        v.detail = "boundary equality member " + std::to_string(k + 1) + ": ";
        if (newton_boundary_equal(fs[k], gs[k])) {
            v.detail += "vertex sets coincide";
        } else {
            v.status = Verdict::Status::fail;
            v.failing_subset = std::vector<int>{static_cast<int>(k + 1)};
            auto vf = polyhedral::vertex_set(support(fs[k]));
            auto vg = polyhedral::vertex_set(support(gs[k]));
            Exponent off;
            bool from_f = false;
            for (const auto& x : vf)
                if (!vg.count(x)) {
                    off = x;
                    from_f = true;
                    break;
                }
            if (!from_f)
                for (const auto& x : vg)
                    if (!vf.count(x)) {
                        off = x;
                        break;
                    }
            v.failing_cone = certdetail::vertex_cone(from_f ? fs[k] : gs[k], off);
            v.detail += "vertex " + exponent_text(off) + " belongs to " +
                        (from_f ? std::string("f") : std::string("g")) +
                        "^" + std::to_string(k + 1) + " only";
        }
        checks.push_back(std::move(v));
        if (!checks.back().passed())
            return certdetail::seal(Conclusion::fibrations_isomorphic_pair,
                                    anchor, digest, std::move(checks));
    }

    for (auto& v : certdetail::subset_verdicts(fs, cfg, "f ndci"))
        checks.push_back(std::move(v));
    bool f_ok = true;
    for (const auto& v : checks) f_ok = f_ok && v.passed();
    if (f_ok)
        for (auto& v : certdetail::subset_verdicts(gs, cfg, "g ndci"))
            checks.push_back(std::move(v));

    bool hyp_ok = true;
    for (const auto& v : checks) hyp_ok = hyp_ok && v.passed();
    if (hyp_ok) {
        // Internal audit: both principal-part homotopies must certify.
        for (int side = 0; side < 2; ++side) {
            const auto& hs = side == 0 ? fs : gs;
            Certificate audit = check_family(build_principal_homotopy(hs), cfg);
            Verdict v;
            v.detail = std::string("principal homotopy audit (") +
                       (side == 0 ? "f" : "g") + "): ";
            if (audit.conclusion == Conclusion::fibrations_isomorphic_family) {
                v.detail += "family certificate issued";
            } else {
                const Verdict& bad = audit.checks.back();
                v.status = bad.status;
                v.failing_subset = bad.failing_subset;
                v.failing_cone = bad.failing_cone;
                v.detail += bad.detail;
            }
            checks.push_back(std::move(v));
        }
    }
    return certdetail::seal(Conclusion::fibrations_isomorphic_pair, anchor,
                            digest, std::move(checks));
}

} // namespace newtcert
