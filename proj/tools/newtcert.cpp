// Command-line front end: Newton polyhedra inspection, non-degeneracy
// verdicts, theorem-level certificates, and the numeric transversality scan.
//
// Exit codes: 0 pass / certificate issued, 1 hypotheses fail (witness
// emitted), 2 input error, 3 resource budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "newtcert/report.hpp"

using namespace newtcert;

namespace {

struct Options {
    std::string problem_path;
    std::string out_path;
    int jobs = 1;
    std::uint64_t step_budget = 1'000'000;
    // Scan overrides; negative sentinel means "not given".
    double eps1 = -1, eps2 = -1, eta = -1;
    int samples = -1;
    std::int64_t seed = -1;
    bool scan_flags_given() const {
        return eps1 > 0 || eps2 > 0 || eta > 0 || samples > 0 || seed >= 0;
    }
};

CertifierConfig certifier_config(const Options& opt) {
    CertifierConfig cfg;
    cfg.step_budget = opt.step_budget;
    cfg.jobs = opt.jobs;
    return cfg;
}

ScanConfig effective_scan_config(const ProblemFile& pf, const Options& opt) {
    ScanConfig cfg = pf.has_scan ? pf.scan : ScanConfig{};
    if (opt.eps1 > 0) cfg.eps1 = opt.eps1;
    if (opt.eps2 > 0) cfg.eps2 = opt.eps2;
    if (opt.eta > 0) cfg.eta = opt.eta;
    if (opt.samples > 0) cfg.samples = opt.samples;
    if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
    cfg.validate();
    return cfg;
}

void emit(const std::string& text, const Options& opt) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw error("cannot write output file: " + opt.out_path);
    out << text;
}

int certificate_exit_code(const Certificate& cert) {
    if (!cert.conclusion) return 3;
    return *cert.conclusion == Conclusion::degenerate ? 1 : 0;
}

void summarize(const Certificate& cert) {
    if (!cert.conclusion) {
        std::cerr << "newtcert: resource exhausted: "
                  << cert.checks.back().detail << "\n";
    } else if (*cert.conclusion == Conclusion::degenerate) {
        std::cerr << "newtcert: hypotheses fail: " << cert.checks.back().detail
                  << "\n";
    } else {
        std::cerr << "newtcert: conclusion " << conclusion_text(*cert.conclusion)
                  << " (" << cert.checks.size() << " checks)\n";
    }
}

ProblemFile load(const Options& opt, ProblemFile::Mode wanted,
                 bool allow_single_for_product = false) {
    ProblemFile pf = load_problem_file(opt.problem_path);
    if (pf.mode != wanted &&
        !(allow_single_for_product && wanted == ProblemFile::Mode::product &&
          pf.mode == ProblemFile::Mode::single))
        throw error("this subcommand needs mode = " + mode_text(wanted));
    return pf;
}

int cmd_newton(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::single);
    auto np = newton_vertices(pf.fs[0]);
    std::string text;
    for (const auto& v : np.vertices) text += exponent_text(v) + "\n";
    emit(text, opt);
    std::cerr << "newtcert: " << np.vertices.size() << " vertices\n";
    return 0;
}

int cmd_faces(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::single);
    auto faces = compact_faces(pf.fs[0]);
    std::string text;
    for (const auto& f : faces) {
        text += "points {";
        for (std::size_t i = 0; i < f.points.size(); ++i) {
            if (i) text += ",";
            text += exponent_text(f.points[i]);
        }
        text += "} witness (";
        for (std::size_t i = 0; i < f.witness.size(); ++i) {
            if (i) text += ",";
            text += std::to_string(f.witness[i]);
        }
        text += ") level " + std::to_string(f.level) + " dim " +
                std::to_string(f.dim) + (f.maximal ? " maximal" : "") + "\n";
    }
    emit(text, opt);
    std::cerr << "newtcert: " << faces.size() << " compact faces\n";
    return 0;
}

Certificate wrap_verdict(Verdict v, const std::string& anchor,
                         const std::string& digest) {
    Certificate cert;
    cert.theorem_anchor = anchor;
    cert.inputs_digest = digest;
    if (v.passed()) cert.conclusion = Conclusion::nondegenerate;
    else if (v.status == Verdict::Status::fail)
        cert.conclusion = Conclusion::degenerate;
    cert.checks.push_back(std::move(v));
    return cert;
}

int finish(const Certificate& cert, const ProblemFile& pf, const Options& opt,
           Json annotations = Json()) {
    Json doc = certificate_document(
        cert, sha256_hex(canonical_problem_text(pf)), std::move(annotations));
    emit(dump_deterministic(doc), opt);
    summarize(cert);
    return certificate_exit_code(cert);
}

int cmd_nondeg(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::single);
    auto cfg = certifier_config(opt);
    Verdict v = check_hypersurface_nondegenerate(pf.fs[0], cfg);
    Certificate cert = wrap_verdict(
        std::move(v),
        "every compact-face function of the germ is free of torus critical "
        "points on its zero set",
        certdetail::digest_of_inputs("single", pf.fs));
    Json annotations;
    if (pf.has_scan || opt.scan_flags_given()) {
        ScanConfig sc = effective_scan_config(pf, opt);
        annotations["scan"] = scan_to_json(transversality_scan(pf.fs[0], sc), sc);
    }
    return finish(cert, pf, opt, std::move(annotations));
}

int cmd_ndci(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::product, true);
    auto cfg = certifier_config(opt);
    Verdict v = check_ndci(pf.fs, cfg);
    Certificate cert = wrap_verdict(
        std::move(v),
        "on every joint face cone the face functions cut out a reduced "
        "non-singular complete intersection in the torus",
        certdetail::digest_of_inputs("tuple", pf.fs));
    return finish(cert, pf, opt);
}

int cmd_certify_product(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::product, true);
    auto cfg = certifier_config(opt);
    Certificate cert = certify_stable_radius(pf.fs, cfg);
    Json annotations;
    if (pf.fs.size() >= 2 &&
        cert.conclusion == Conclusion::stable_radius_exists) {
        // The hypotheses can hold while the product itself is Newton
        // degenerate; record the paired observation.
        annotations["product_degeneracy"] =
            verdict_to_json(product_degeneracy_report(pf.fs, cfg));
    }
    if (pf.has_scan || opt.scan_flags_given()) {
        Polynomial<Rat> prod = pf.fs[0];
        for (std::size_t i = 1; i < pf.fs.size(); ++i) prod = prod * pf.fs[i];
        ScanConfig sc = effective_scan_config(pf, opt);
        annotations["scan"] = scan_to_json(transversality_scan(prod, sc), sc);
    }
    return finish(cert, pf, opt, std::move(annotations));
}

int cmd_certify_family(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::family);
    auto cfg = certifier_config(opt);
    Certificate cert = check_family(make_family(pf.fs_param), cfg);
    return finish(cert, pf, opt);
}

int cmd_certify_pair(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::pair);
    auto cfg = certifier_config(opt);
    Certificate cert = certify_pair(pf.fs, pf.gs, cfg);
    return finish(cert, pf, opt);
}

int cmd_scan(const Options& opt) {
    ProblemFile pf = load(opt, ProblemFile::Mode::single);
    ScanConfig sc = effective_scan_config(pf, opt);
    auto rep = transversality_scan(pf.fs[0], sc);
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["inputs_digest"] = sha256_hex(canonical_problem_text(pf));
    doc["scan"] = scan_to_json(rep, sc);
    emit(dump_deterministic(doc), opt);
    std::cerr << "newtcert: scan " << rep.survivors << "/" << rep.points_tested
              << " survivors, min residual "
              << (rep.no_survivors ? std::string("n/a")
                                   : std::to_string(rep.min_residual))
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certifier for Newton-polyhedral non-degeneracy "
                 "hypotheses of polynomial germs, products, families and "
                 "pairs, with Milnor-fibration conclusions"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--out", opt.out_path, "write the report to a file");
    app.add_option("--jobs", opt.jobs, "concurrent check tasks")
        ->check(CLI::Range(1, 64));
    app.add_option("--step-budget", opt.step_budget,
                   "reduction-step budget per Groebner basis");
    app.add_option("--seed", opt.seed, "scan seed override");
    app.add_option("--eps1", opt.eps1, "scan inner radius");
    app.add_option("--eps2", opt.eps2, "scan outer radius");
    app.add_option("--eta", opt.eta, "scan |f| target level");
    app.add_option("--samples", opt.samples, "scan sample count");

    struct Sub {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Sub subs[] = {
        {"newton", "print the Newton polyhedron vertices", cmd_newton},
        {"faces", "print all compact faces with witnesses", cmd_faces},
        {"nondeg", "hypersurface non-degeneracy verdict", cmd_nondeg},
        {"ndci", "non-degenerate complete intersection verdict", cmd_ndci},
        {"certify-product", "stable-radius certificate for a product",
         cmd_certify_product},
        {"certify-family", "uniform family certificate", cmd_certify_family},
        {"certify-pair", "pair fibration-isomorphism certificate",
         cmd_certify_pair},
        {"scan", "numeric transversality scan", cmd_scan},
    };
    int (*selected)(const Options&) = nullptr;
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("problem", opt.problem_path, "problem file")->required();
        sub->callback([&selected, run = s.run] { selected = run; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return selected(opt);
    } catch (const resource_exhausted& ex) {
        std::cerr << "newtcert: resource exhausted: " << ex.what() << "\n";
        return 3;
    } catch (const error& ex) {
        std::cerr << "newtcert: error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "newtcert: error: " << ex.what() << "\n";
        return 2;
    }
}
