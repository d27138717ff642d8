#pragma once

#include <cmath>
#include <limits>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "newtcert/polynomial.hpp"

namespace newtcert {

using Cx = std::complex<double>;

// Parameters for a transversality scan over the annulus of radii
// [eps1, eps2], probing the |f| = eta level set.
struct ScanConfig {
    double eps1 = 0.1;
    double eps2 = 0.5;
    double eta = 1e-4;
    int samples = 500;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;

    void validate() const {
        if (!(eps1 > 0) || !(eps1 <= eps2)) throw error("need 0 < eps1 <= eps2");
        if (!(eta > 0)) throw error("need eta > 0");
        if (samples < 1) throw error("need samples >= 1");
        if (!(tolerance > 0)) throw error("need tolerance > 0");
    }
};

struct ResidualReport {
    double min_residual = 0.0;
    std::vector<Cx> argmin_point;
    int points_tested = 0;
    int survivors = 0;
    int discarded = 0;
    bool below_tolerance = false;
    bool no_survivors = false;
};

// Squared distance from the gradient to the line C.conj(z): zero exactly
// when the Milnor alignment grad f(z) = lambda * conj(z) holds, with the
// optimal multiplier lambda* = (sum_i g_i z_i)/|z|^2 eliminated in closed
// form.
inline double milnor_residual(const Polynomial<Rat>& f, const std::vector<Cx>& z) {
    const int n = f.ambient_n();
    if (static_cast<int>(z.size()) != n)
        throw error("point length does not match ambient dimension");
    double norm2 = 0.0;
    for (const auto& zi : z) norm2 += std::norm(zi);
    if (norm2 == 0.0) throw error("milnor residual at the zero vector");
    double g2 = 0.0;
    Cx pairing(0.0, 0.0);
    for (int i = 1; i <= n; ++i) {
        Cx gi = evaluate_complex(partial_derivative(f, i), z);
        g2 += std::norm(gi);
        pairing += gi * z[static_cast<std::size_t>(i - 1)];
    }
    double r = g2 - std::norm(pairing) / norm2;
    return r < 0.0 ? 0.0 : r;
}

namespace numdetail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Sample index i draws from its own generator, so parallel and serial
// evaluation orders produce identical points.
inline std::vector<Cx> sample_point(const ScanConfig& cfg, int n, int index) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ (0x5851f42d4c957f2dull *
                                               std::uint64_t(index + 1))));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Cx> dir(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& d : dir) {
            d = Cx(gauss(rng), gauss(rng));
            norm2 += std::norm(d);
        }
    } while (norm2 == 0.0);
    const double radius = cfg.eps1 + (cfg.eps2 - cfg.eps1) * unif(rng);
    const double scale = radius / std::sqrt(norm2);
    for (auto& d : dir) d *= scale;
    return dir;
}

// Damped Newton line search along the conjugate gradient toward the level
// set |f| = eta; at most 50 steps, nullopt when the target is not reached
// within 10 percent.
inline std::optional<std::vector<Cx>> project_to_level(
    const Polynomial<Rat>& f, const std::vector<Polynomial<Rat>>& grad,
    std::vector<Cx> z, double eta) {
    const auto value = [&](const std::vector<Cx>& p) {
        return evaluate_complex(f, p);
    };
    Cx fz = value(z);
    for (int step = 0; step < 50; ++step) {
        if (std::abs(std::abs(fz) - eta) <= 0.1 * eta) return z;
        const Cx target =
            std::abs(fz) > 0 ? Cx(eta) * (fz / std::abs(fz)) : Cx(eta);
        std::vector<Cx> g(z.size());
        double den = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            g[i] = evaluate_complex(grad[i], z);
            den += std::norm(g[i]);
        }
        if (den < 1e-300) return std::nullopt; // stuck at a critical point
        Cx delta = (target - fz) / den;
        // Backtracking: halve the step until |f - target| decreases.
        bool moved = false;
        for (int halve = 0; halve < 25; ++halve) {
            std::vector<Cx> trial = z;
            for (std::size_t i = 0; i < z.size(); ++i)
                trial[i] += delta * std::conj(g[i]);
            Cx ft = value(trial);
            if (std::abs(ft - target) < std::abs(fz - target)) {
                z = std::move(trial);
                fz = ft;
                moved = true;
                break;
            }
            delta *= 0.5;
        }
        if (!moved) return std::nullopt;
    }
    return std::abs(std::abs(fz) - eta) <= 0.1 * eta ? std::optional(z)
                                                     : std::nullopt;
}

} // namespace numdetail

// Probe fiber/sphere transversality: push seeded random annulus points onto
// the |f| = eta level set and take the minimum Milnor residual over the
// survivors.  below_tolerance = true is evidence against the scanned radius
// range being stable.  Heuristic only; results never feed certificates.
inline ResidualReport transversality_scan(const Polynomial<Rat>& f,
                                          const ScanConfig& cfg) {
    cfg.validate();
    if (f.is_zero()) throw error("scan of the zero polynomial");
    if (!f.vanishes_at_origin())
        throw error("scan requires a germ vanishing at the origin");
    const int n = f.ambient_n();
    std::vector<Polynomial<Rat>> grad;
    for (int i = 1; i <= n; ++i) grad.push_back(partial_derivative(f, i));

    ResidualReport rep;
    rep.points_tested = cfg.samples;
    bool have_min = false;
    for (int j = 0; j < cfg.samples; ++j) {
        auto z0 = numdetail::sample_point(cfg, n, j);
        auto projected = numdetail::project_to_level(f, grad, z0, cfg.eta);
        if (!projected) {
            ++rep.discarded;
            continue;
        }
        ++rep.survivors;
        const double r = milnor_residual(f, *projected);
        if (!have_min || r < rep.min_residual) {
            rep.min_residual = r;
            rep.argmin_point = *projected;
            have_min = true;
        }
    }
    if (!have_min) {
        rep.no_survivors = true;
        rep.min_residual = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.below_tolerance = rep.min_residual < cfg.tolerance;
    return rep;
}

// Candidate point for the two residual conditions of the key lemma: a point
// a in C^{*I}, a weight w, unit-norm multipliers and a lambda value.
struct LemmaCandidate {
    std::vector<Cx> point;
    WeightVector weight;
    Subset subset;
    std::vector<Cx> multipliers;
    Cx lambda{0.0, 0.0};
};

// Squared defect of the lemma system: |f^{k_j,I}_w(a)|^2 plus the deviation
// of sum_j mu_j grad f^{k_j,I}_w from lambda * conj(a) on I cap I(w) and
// from 0 on I minus I(w).  Zero iff the candidate satisfies both conditions.
inline double lemma_condition_residual(const std::vector<Polynomial<Rat>>& fs,
                                       const LemmaCandidate& cand) {
    if (fs.empty()) throw error("empty polynomial list");
    const int n = fs[0].ambient_n();
    if (static_cast<int>(cand.point.size()) != n)
        throw error("candidate point has wrong length");
    if (cand.multipliers.size() != fs.size())
        throw error("multiplier count does not match polynomial count");
    if (cand.weight.size() != static_cast<std::size_t>(n))
        throw error("weight has wrong length");
    double mu_norm = 0.0;
    for (const auto& mu : cand.multipliers) mu_norm += std::norm(mu);
    if (std::abs(mu_norm - 1.0) > 1e-6)
        throw error("multiplier vector must have unit norm");
    for (int i = 1; i <= n; ++i) {
        const Cx& ai = cand.point[static_cast<std::size_t>(i - 1)];
        if (cand.subset.contains(std::size_t(i))) {
            if (ai == Cx(0.0, 0.0))
                throw error("candidate point vanishes inside I");
        } else if (ai != Cx(0.0, 0.0)) {
            throw error("candidate point must vanish outside I");
        }
    }

    std::vector<Polynomial<Rat>> face_fns;
    for (const auto& f : fs) {
        if (f.is_zero()) throw error("zero polynomial");
        auto restricted = restrict_to_subspace(f, cand.subset);
        if (restricted.is_zero())
            throw error("restriction to I vanishes identically");
        face_fns.push_back(face_function(restricted, cand.weight));
    }

    double residual = 0.0;
    for (const auto& h : face_fns)
        residual += std::norm(evaluate_complex(h, cand.point));
    const std::uint32_t zero_mask = cand.weight.zero_set();
    for (int i = 1; i <= n; ++i) {
        if (!cand.subset.contains(std::size_t(i))) continue;
        Cx s(0.0, 0.0);
        for (std::size_t j = 0; j < face_fns.size(); ++j)
            s += cand.multipliers[j] *
                 evaluate_complex(partial_derivative(face_fns[j], i), cand.point);
        const bool w_zero = (zero_mask >> (i - 1)) & 1u;
        if (w_zero)
            s -= cand.lambda *
                 std::conj(cand.point[static_cast<std::size_t>(i - 1)]);
        residual += std::norm(s);
    }
    return residual;
}

} // namespace newtcert
