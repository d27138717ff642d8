#pragma once

#include <json.hpp>

#include "newtcert/certify.hpp"
#include "newtcert/numeric.hpp"
#include "newtcert/problem_file.hpp"
#include "newtcert/version.hpp"

namespace newtcert {

using Json = nlohmann::json;

inline Json face_to_json(const CompactFace& f) {
    Json j;
    Json pts = Json::array();
    for (const auto& p : f.points) {
        Json row = Json::array();
        for (auto x : p.e) row.push_back(x);
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    Json w = Json::array();
    for (auto x : f.witness.w) w.push_back(x);
    j["witness"] = std::move(w);
    j["level"] = f.level;
    j["dim"] = f.dim;
    return j;
}

inline Json cone_to_json(const JointFaceCone& c) {
    Json j;
    Json faces = Json::array();
    for (const auto& f : c.faces) faces.push_back(face_to_json(f));
    j["faces"] = std::move(faces);
    Json w = Json::array();
    for (auto x : c.witness.w) w.push_back(x);
    j["witness"] = std::move(w);
    return j;
}

inline Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = status_text(v.status);
    j["detail"] = v.detail;
    if (v.failing_subset) j["failing_subset"] = *v.failing_subset;
    if (v.failing_cone) j["failing_cone"] = cone_to_json(*v.failing_cone);
    return j;
}

inline Json certificate_to_json(const Certificate& cert) {
    Json j;
    if (cert.conclusion) j["conclusion"] = conclusion_text(*cert.conclusion);
    j["theorem_anchor"] = cert.theorem_anchor;
    j["inputs_digest"] = cert.inputs_digest;
    Json checks = Json::array();
    for (const auto& c : cert.checks) checks.push_back(verdict_to_json(c));
    j["checks"] = std::move(checks);
    return j;
}

inline Json scan_to_json(const ResidualReport& r, const ScanConfig& cfg) {
    Json j;
    j["points_tested"] = r.points_tested;
    j["survivors"] = r.survivors;
    j["discarded"] = r.discarded;
    j["no_survivors"] = r.no_survivors;
    j["below_tolerance"] = r.below_tolerance;
    if (!r.no_survivors) {
        j["min_residual"] = r.min_residual;
        Json pt = Json::array();
        for (const auto& z : r.argmin_point) {
            Json c = Json::array();
            c.push_back(z.real());
            c.push_back(z.imag());
            pt.push_back(std::move(c));
        }
        j["argmin_point"] = std::move(pt);
    }
    Json cj;
    cj["eps1"] = cfg.eps1;
    cj["eps2"] = cfg.eps2;
    cj["eta"] = cfg.eta;
    cj["samples"] = cfg.samples;
    cj["seed"] = cfg.seed;
    cj["tolerance"] = cfg.tolerance;
    j["config"] = std::move(cj);
    return j;
}

// Top-level document around a certificate; annotations carry numeric reports
// and the product-degeneracy pairing, never verdict-relevant data.
inline Json certificate_document(const Certificate& cert,
                                 const std::string& inputs_digest,
                                 Json annotations = Json()) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["inputs_digest"] = inputs_digest;
    doc["certificate"] = certificate_to_json(cert);
    if (!annotations.is_null()) doc["annotations"] = std::move(annotations);
    return doc;
}

inline std::string dump_deterministic(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace newtcert
