#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "newtcert/certify.hpp"
#include "newtcert/numeric.hpp"
#include "newtcert/parse.hpp"

namespace newtcert {

// Sectioned problem file: top-level `key = value` pairs, polynomial lists in
// brackets (one polynomial per line, or inline separated by ';'), and an
// optional [scan] section.  '#' starts a comment.  See docs/format.md.
struct ProblemFile {
    enum class Mode { single, product, family, pair };

    int n = 0;
    Mode mode = Mode::single;
    std::vector<std::string> f_texts;
    std::vector<std::string> g_texts;
    std::vector<int> f_lines;
    std::vector<int> g_lines;
    bool has_scan = false;
    ScanConfig scan;

    // Parsed polynomials; family members live in fs_param.
    std::vector<Polynomial<Rat>> fs;
    std::vector<Polynomial<Rat>> gs;
    std::vector<Polynomial<RatFunc>> fs_param;
};

inline std::string mode_text(ProblemFile::Mode m) {
    switch (m) {
        case ProblemFile::Mode::single: return "single";
        case ProblemFile::Mode::product: return "product";
        case ProblemFile::Mode::family: return "family";
        default: return "pair";
    }
}

namespace pfdetail {

inline std::string strip(const std::string& line) {
    std::string s = line;
    if (auto pos = s.find('#'); pos != std::string::npos) s.resize(pos);
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw error("bad numeric value for " + key + ": " + v);
    }
}

inline long long parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        long long d = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw error("bad integer value for " + key + ": " + v);
    }
}

} // namespace pfdetail

inline ProblemFile parse_problem_text(const std::string& text,
                                      const std::string& origin = "<input>") {
    ProblemFile pf;
    bool have_n = false, have_mode = false;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw error("problem file line " + std::to_string(lineno) + ": " + msg);
    };

    std::vector<std::string>* open_list = nullptr;
    std::vector<int>* open_lines = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = pfdetail::strip(raw);
        if (line.empty()) continue;
        if (open_list) {
            if (line == "]") {
                open_list = nullptr;
            } else {
                open_list->push_back(line);
                open_lines->push_back(lineno);
            }
            continue;
        }
        if (line.front() == '[' && line.back() == ']' &&
            line.find('=') == std::string::npos) {
            section = line.substr(1, line.size() - 2);
            if (section != "scan") fail("unknown section [" + section + "]");
            pf.has_scan = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        std::string key = pfdetail::strip(line.substr(0, eq));
        std::string value = pfdetail::strip(line.substr(eq + 1));

        if (section == "scan") {
            if (key == "eps1") pf.scan.eps1 = pfdetail::parse_double(value, key);
            else if (key == "eps2") pf.scan.eps2 = pfdetail::parse_double(value, key);
            else if (key == "eta") pf.scan.eta = pfdetail::parse_double(value, key);
            else if (key == "tolerance")
                pf.scan.tolerance = pfdetail::parse_double(value, key);
            else if (key == "samples")
                pf.scan.samples = static_cast<int>(pfdetail::parse_int(value, key));
            else if (key == "seed")
                pf.scan.seed =
                    static_cast<std::uint64_t>(pfdetail::parse_int(value, key));
            else fail("unknown scan key " + key);
            continue;
        }

        if (key == "n") {
            pf.n = static_cast<int>(pfdetail::parse_int(value, key));
            if (pf.n < 1 || pf.n > kMaxVariables)
                fail("n out of range 1.." + std::to_string(kMaxVariables));
            have_n = true;
        } else if (key == "mode") {
            have_mode = true;
            if (value == "single") pf.mode = ProblemFile::Mode::single;
            else if (value == "product") pf.mode = ProblemFile::Mode::product;
            else if (value == "family") pf.mode = ProblemFile::Mode::family;
            else if (value == "pair") pf.mode = ProblemFile::Mode::pair;
            else fail("unknown mode " + value);
        } else if (key == "f" || key == "g") {
            auto& list = (key == "f") ? pf.f_texts : pf.g_texts;
            auto& lines = (key == "f") ? pf.f_lines : pf.g_lines;
            if (value == "[") {
                open_list = &list;
                open_lines = &lines;
            } else if (value.size() >= 2 && value.front() == '[' &&
                       value.back() == ']') {
                std::string inner = value.substr(1, value.size() - 2);
                std::istringstream items(inner);
                std::string item;
                while (std::getline(items, item, ';')) {
                    item = pfdetail::strip(item);
                    if (!item.empty()) {
                        list.push_back(item);
                        lines.push_back(lineno);
                    }
                }
            } else {
                fail("polynomial lists use brackets");
            }
        } else {
            fail("unknown key " + key);
        }
    }
    if (open_list) throw error("problem file: unterminated polynomial list");
    if (!have_n) throw error("problem file: missing n");
    if (!have_mode) throw error("problem file: missing mode");
    if (pf.f_texts.empty()) throw error("problem file: missing f list");
    if (pf.mode == ProblemFile::Mode::single && pf.f_texts.size() != 1)
        throw error("single mode takes exactly one polynomial");
    if (pf.mode == ProblemFile::Mode::pair) {
        if (pf.g_texts.empty()) throw error("pair mode needs a g list");
        if (pf.g_texts.size() != pf.f_texts.size())
            throw error("pair mode needs equal-length lists");
    } else if (!pf.g_texts.empty()) {
        throw error("g list is only valid in pair mode");
    }

    // Parse the polynomials.  The parameter t is accepted in family mode
    // only; family members are promoted to Q(t) even when t-free.
    auto located = [&](const std::string& text, int line, auto&& parse) {
        try {
            return parse(text);
        } catch (const parse_error& ex) {
            throw error(origin + ":" + std::to_string(line) + ":" +
                        std::to_string(ex.pos() + 1) + ": " + ex.what());
        } catch (const error& ex) {
            throw error(origin + ":" + std::to_string(line) + ": " + ex.what());
        }
    };
    if (pf.mode == ProblemFile::Mode::family) {
        for (std::size_t i = 0; i < pf.f_texts.size(); ++i)
            pf.fs_param.push_back(located(pf.f_texts[i], pf.f_lines[i],
                                          [&](const std::string& s2) {
                                              return parse_parametric_polynomial(
                                                  s2, pf.n);
                                          }));
    } else {
        for (std::size_t i = 0; i < pf.f_texts.size(); ++i)
            pf.fs.push_back(located(pf.f_texts[i], pf.f_lines[i],
                                    [&](const std::string& s2) {
                                        return parse_rational_polynomial(s2, pf.n);
                                    }));
        for (std::size_t i = 0; i < pf.g_texts.size(); ++i)
            pf.gs.push_back(located(pf.g_texts[i], pf.g_lines[i],
                                    [&](const std::string& s2) {
                                        return parse_rational_polynomial(s2, pf.n);
                                    }));
    }
    if (pf.has_scan) pf.scan.validate();
    return pf;
}

inline ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str(), path);
}

// Canonical reprint used for content digests: mode, dimension, and the
// canonicalised polynomial texts.
inline std::string canonical_problem_text(const ProblemFile& pf) {
    std::string s = "mode=" + mode_text(pf.mode) + ";n=" + std::to_string(pf.n);
    s += ";f=[";
    if (pf.mode == ProblemFile::Mode::family) {
        for (std::size_t i = 0; i < pf.fs_param.size(); ++i) {
            if (i) s += ";";
            s += polynomial_text(pf.fs_param[i]);
        }
    } else {
        for (std::size_t i = 0; i < pf.fs.size(); ++i) {
            if (i) s += ";";
            s += polynomial_text(pf.fs[i]);
        }
    }
    s += "]";
    if (!pf.gs.empty()) {
        s += ";g=[";
        for (std::size_t i = 0; i < pf.gs.size(); ++i) {
            if (i) s += ";";
            s += polynomial_text(pf.gs[i]);
        }
        s += "]";
    }
    return s;
}

} // namespace newtcert
