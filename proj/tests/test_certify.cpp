#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "newtcert/certify.hpp"

using namespace newtcert;

namespace {

Polynomial<Rat> P(const std::string& text, int n) {
    return parse_rational_polynomial(text, n);
}

std::vector<Polynomial<Rat>> PS(std::initializer_list<const char*> texts, int n) {
    std::vector<Polynomial<Rat>> out;
    for (const char* t : texts) out.push_back(P(t, n));
    return out;
}

FamilyInput family(std::initializer_list<const char*> texts, int n) {
    std::vector<Polynomial<RatFunc>> members;
    for (const char* t : texts)
        members.push_back(parse_parametric_polynomial(t, n));
    return make_family(std::move(members));
}

// Random polynomial vanishing at the origin.
Polynomial<Rat> random_germ(std::mt19937_64& rng, int n, int max_terms,
                            std::uint32_t max_exp) {
    Polynomial<Rat> p(n);
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> xe(0, max_exp);
    std::uniform_int_distribution<long> co(-3, 3);
    const int terms = nt(rng);
    for (int k = 0; k < terms; ++k) {
        Exponent e(static_cast<std::size_t>(n));
        std::uint64_t deg = 0;
        for (int i = 0; i < n; ++i) deg += (e[i] = xe(rng));
        if (deg == 0) continue;
        long c = co(rng);
        p.add_term(e, make_rat(c == 0 ? 1 : c));
    }
    return p;
}

} // namespace

TEST_CASE("check_hypersurface_nondegenerate fixtures") {
    SECTION("Brieskorn-type sum of powers passes") {
        auto v = check_hypersurface_nondegenerate(P("z1^2+z2^3+z3^5", 3));
        CHECK(v.passed());
    }
    SECTION("squared linear form fails with witness (1, -1)") {
        auto v = check_hypersurface_nondegenerate(P("(z1+z2)*(z1+z2)", 2));
        REQUIRE(v.status == Verdict::Status::fail);
        REQUIRE(v.failing_subset.has_value());
        CHECK(*v.failing_subset == std::vector<int>{1});
        REQUIRE(v.failing_cone.has_value());
        CHECK(v.failing_cone->faces[0].points.size() == 3);
        CHECK(v.detail.find("torus point candidate (1, -1)") != std::string::npos);
    }
    SECTION("product of generic linear forms fails with witness (1, -2, 1)") {
        auto v = check_hypersurface_nondegenerate(
            P("(z1+z2+z3)*(z1+2*z2+3*z3)", 3));
        REQUIRE(v.status == Verdict::Status::fail);
        CHECK(v.detail.find("torus point candidate (1, -2, 1)") !=
              std::string::npos);
    }
    SECTION("precondition violations") {
        CHECK_THROWS_AS(check_hypersurface_nondegenerate(P("z1+1", 1)), error);
        CHECK_THROWS_AS(
            check_hypersurface_nondegenerate(Polynomial<Rat>(2)), error);
    }
}

TEST_CASE("check_ndci fixtures") {
    SECTION("full-rank linear pair passes") {
        CHECK(check_ndci(PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3)).passed());
    }
    SECTION("repeated polynomial fails on the top cone") {
        auto v = check_ndci(PS({"z1+z2", "z1+z2"}, 2));
        REQUIRE(v.status == Verdict::Status::fail);
        REQUIRE(v.failing_cone.has_value());
        CHECK(v.failing_cone->faces[0].points.size() == 2);
        CHECK(v.detail.find("(1, -1)") != std::string::npos);
    }
    SECTION("Hesse pencil over Q(t) passes generically") {
        std::vector<Polynomial<RatFunc>> fs{
            parse_parametric_polynomial("z1^3+z2^3+z3^3+t*z1*z2*z3", 3)};
        CHECK(check_ndci(fs).passed());
    }
    SECTION("more polynomials than variables branches to emptiness") {
        // Three plane germs in C^2 sharing the torus zero (1,-1): with
        // m > n the check demands an empty torus zero set and must fail.
        auto v = check_ndci(PS({"z1+z2", "2*z1+2*z2", "z1^2-z2^2"}, 2));
        REQUIRE(v.status == Verdict::Status::fail);
        CHECK(v.detail.find("more polynomials than variables") !=
              std::string::npos);
        CHECK(v.detail.find("(1, -1)") != std::string::npos);
    }
}

TEST_CASE("m > n emptiness branch passes for transverse lines") {
    // Three lines through 0 in C^2 have no common torus zero; every joint
    // cone either contains a vertex face or the face system is empty on the
    // torus.
    auto v = check_ndci(PS({"z1+z2", "z1-z2", "z1+2*z2"}, 2));
    CHECK(v.passed());
}

TEST_CASE("check_assumptions_product fixtures") {
    SECTION("pair of generic linear forms passes all three subsets") {
        CHECK(check_assumptions_product(PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3))
                  .passed());
    }
    SECTION("single Brieskorn factor reduces to the hypersurface case") {
        CHECK(check_assumptions_product(PS({"z1^2+z2^3+z3^5"}, 3)).passed());
    }
    SECTION("degenerate first factor is reported") {
        auto v = check_assumptions_product(PS({"(z1+z2)*(z1+z2)", "z3"}, 3));
        REQUIRE(v.status == Verdict::Status::fail);
        REQUIRE(v.failing_subset.has_value());
        CHECK(*v.failing_subset == std::vector<int>{1});
    }
}

TEST_CASE("certify_stable_radius") {
    SECTION("linear pair gets a certificate with three passing checks") {
        auto cert = certify_stable_radius(PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::stable_radius_exists);
        CHECK(cert.checks.size() == 3);
        for (const auto& c : cert.checks) CHECK(c.passed());
        CHECK_FALSE(cert.inputs_digest.empty());
    }
    SECTION("k0 = 1 recovers the non-degenerate case") {
        auto cert = certify_stable_radius(PS({"z1^2+z2^3+z3^5"}, 3));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::stable_radius_exists);
    }
    SECTION("degenerate factor yields a degenerate conclusion with witness") {
        auto cert = certify_stable_radius(PS({"(z1+z2)*(z1+z2)"}, 2));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::degenerate);
        int failing = 0;
        for (const auto& c : cert.checks)
            if (!c.passed()) ++failing;
        CHECK(failing == 1);
        CHECK(cert.checks.back().failing_cone.has_value());
    }
}

TEST_CASE("the product of admissible factors is itself Newton degenerate") {
    auto fs = PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3);
    REQUIRE(check_assumptions_product(fs).passed());
    auto rep = product_degeneracy_report(fs);
    REQUIRE(rep.status == Verdict::Status::fail);
    CHECK(rep.detail.find("torus point candidate (1, -2, 1)") !=
          std::string::npos);

    // A second tuple with the same shape.
    auto gs = PS({"z1+z2+z3", "3*z1+5*z2+7*z3"}, 3);
    REQUIRE(check_assumptions_product(gs).passed());
    CHECK(product_degeneracy_report(gs).status == Verdict::Status::fail);
}

TEST_CASE("check_family fixtures") {
    SECTION("Hesse pencil family certifies") {
        auto cert = check_family(family({"z1^3+z2^3+z3^3+t*z1*z2*z3"}, 3));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::fibrations_isomorphic_family);
        // boundary stability + generic ndci + t=0 ndci
        CHECK(cert.checks.size() == 3);
    }
    SECTION("vertex lost at t = 0 fails boundary stability") {
        auto cert = check_family(family({"t*z1+z2^2"}, 2));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::degenerate);
        REQUIRE(cert.checks.size() == 1);
        CHECK(cert.checks[0].status == Verdict::Status::fail);
        CHECK(cert.checks[0].detail.find("lost at t = 0") != std::string::npos);
    }
    SECTION("coefficients that collapse to constants certify") {
        auto cert = check_family(
            family({"(1-t)*(z1+z2+z3)+t*(z1+z2+z3)", "z1+2*z2+3*z3"}, 3));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::fibrations_isomorphic_family);
    }
    SECTION("family input validation") {
        CHECK_THROWS_AS(family({"t*z1+1"}, 1), error);
        CHECK_THROWS_AS(family({"0"}, 1), error);
    }
}

TEST_CASE("two-member family with a genuine parameter certifies") {
    // The generic line z1+2 z2+3 z3 shares no multi-point joint face with
    // the pencil member except ones whose systems carry constant minors, so
    // every subset check passes generically and at t = 0.
    auto cert = check_family(
        family({"z1^3+z2^3+z3^3+t*z1*z2*z3", "z1+2*z2+3*z3"}, 3));
    REQUIRE(cert.conclusion.has_value());
    CHECK(*cert.conclusion == Conclusion::fibrations_isomorphic_family);
    // 2 boundary checks + 3 generic subsets + 3 subsets at t = 0.
    CHECK(cert.checks.size() == 8);
}

TEST_CASE("a two-member family with a coinciding sub-face fails") {
    // At weight (1,1,2) both members expose the face z1+z2 up to scale: the
    // wedge vanishes along the common torus zero set, and the pair subset
    // check must reject the family.
    auto cert = check_family(
        family({"z1^3+z2^3+z3^3+t*z1*z2*z3", "z1+z2+z3"}, 3));
    REQUIRE(cert.conclusion.has_value());
    CHECK(*cert.conclusion == Conclusion::degenerate);
    const Verdict& bad = cert.checks.back();
    REQUIRE(bad.failing_subset.has_value());
    CHECK(*bad.failing_subset == std::vector<int>{1, 2});
}

TEST_CASE("newton_principal_part") {
    CHECK(newton_principal_part(P("z1^2+z2^3+z3^5+z1*z2*z3", 3)) ==
          P("z1^2+z2^3+z3^5", 3));
    auto wh = P("z1^3+z2^3+z1*z2^2", 2); // weighted homogeneous, one face
    CHECK(newton_principal_part(wh) == wh);
    auto hes = P("z1^3+z2^3+z3^3+z1*z2*z3", 3);
    CHECK(newton_principal_part(hes) == hes);
    CHECK(newton_principal_part(P("z1+z2^2+z1*z2^2", 2)) == P("z1+z2^2", 2));
}

TEST_CASE("build_principal_homotopy") {
    SECTION("interior terms pick up the coefficient 1-t") {
        auto fam = build_principal_homotopy(PS({"z1^2+z2^3+z3^5+z1*z2*z3"}, 3));
        REQUIRE(fam.members.size() == 1);
        auto expected = parse_parametric_polynomial(
            "z1^2+z2^3+z3^5+(1-t)*z1*z2*z3", 3);
        CHECK(fam.members[0] == expected);
    }
    SECTION("boundary-supported input gives a constant family") {
        auto fam = build_principal_homotopy(PS({"z1^3+z2^3+z3^3+z1*z2*z3"}, 3));
        CHECK_FALSE(has_parameter(fam.members[0]));
    }
    SECTION("two-variable example") {
        auto fam = build_principal_homotopy(PS({"z1+z2^2+z1*z2^2"}, 2));
        CHECK(fam.members[0] ==
              parse_parametric_polynomial("z1+z2^2+(1-t)*z1*z2^2", 2));
    }
}

TEST_CASE("homotopy face identity") {
    // Every face function of the principal homotopy, t viewed as a
    // coefficient, equals the original face function exactly.
    std::mt19937_64 rng(0xF00Du);
    int done = 0;
    for (int it = 0; done < 12; ++it) {
        REQUIRE(it < 400);
        int n = 2 + int(rng() % 2);
        auto f = random_germ(rng, n, 5, 4);
        if (f.is_zero() || !f.vanishes_at_origin()) continue;
        if (!check_hypersurface_nondegenerate(f).passed()) continue;
        ++done;
        auto fam = build_principal_homotopy({f});
        const auto& h = fam.members[0];
        for (const auto& cone : enumerate_joint_faces(
                 std::vector<Polynomial<RatFunc>>{h})) {
            auto left = face_function(h, cone.witness);
            auto right = promote(face_function(f, cone.witness));
            CHECK(left == right);
        }
    }
}

TEST_CASE("certify_pair") {
    SECTION("Brieskorn pair end to end") {
        auto cert = certify_pair(PS({"z1^2+z2^3+z3^5+z1*z2*z3"}, 3),
                                 PS({"2*z1^2+3*z2^3+5*z3^5"}, 3));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::fibrations_isomorphic_pair);
        // boundary equality, f ndci, g ndci, two audits
        CHECK(cert.checks.size() == 5);
        CHECK(cert.checks[3].detail.find("audit (f)") != std::string::npos);
        CHECK(cert.checks[4].detail.find("audit (g)") != std::string::npos);
    }
    SECTION("boundary mismatch fails") {
        auto cert = certify_pair(PS({"z1^2"}, 1), PS({"z1^3"}, 1));
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::degenerate);
        CHECK(cert.checks.size() == 1);
        CHECK(cert.checks[0].status == Verdict::Status::fail);
    }
    SECTION("reflexivity") {
        auto fs = PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3);
        auto cert = certify_pair(fs, fs);
        REQUIRE(cert.conclusion.has_value());
        CHECK(*cert.conclusion == Conclusion::fibrations_isomorphic_pair);
    }
    CHECK_THROWS_AS(certify_pair(PS({"z1"}, 1), PS({"z1", "z1"}, 1)), error);
}

TEST_CASE("k0 = 1 reduction: product certificate agrees with hypersurface check") {
    std::mt19937_64 rng(0x1234u);
    int done = 0;
    for (int it = 0; done < 10; ++it) {
        REQUIRE(it < 400);
        int n = 2 + int(rng() % 2);
        auto f = random_germ(rng, n, 4, 4);
        if (f.is_zero() || !f.vanishes_at_origin()) continue;
        ++done;
        auto hyp = check_hypersurface_nondegenerate(f);
        auto cert = certify_stable_radius({f});
        if (hyp.passed()) {
            CHECK(cert.conclusion == Conclusion::stable_radius_exists);
        } else {
            CHECK(cert.conclusion == Conclusion::degenerate);
        }
    }
}

TEST_CASE("three factors exercise all seven subsets") {
    auto cert = certify_stable_radius(
        PS({"z1+2*z2+3*z3", "z1+5*z2+7*z3", "z1+11*z2+13*z3"}, 3));
    REQUIRE(cert.conclusion == Conclusion::stable_radius_exists);
    CHECK(cert.checks.size() == 7);
    // Subsets come in canonical order: singletons, then pairs, then the
    // triple whose Jacobian determinant is the constant -6.
    CHECK(cert.checks[0].detail.find("{1}") != std::string::npos);
    CHECK(cert.checks[6].detail.find("{1,2,3}") != std::string::npos);
}

TEST_CASE("four-variable germ with an interior monomial") {
    auto f = P("z1^2+z2^3+z3^4+z4^5+z1*z2*z3*z4", 4);
    CHECK(check_hypersurface_nondegenerate(f).passed());
    CHECK(newton_principal_part(f) == P("z1^2+z2^3+z3^4+z4^5", 4));
    CHECK(compact_faces(f).size() == 15); // full face lattice of a 3-simplex
}

TEST_CASE("subset monotonicity audit") {
    auto fs = PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3);
    REQUIRE(check_assumptions_product(fs).passed());
    // Re-running each subset individually passes as well.
    CHECK(check_ndci(PS({"z1+z2+z3"}, 3)).passed());
    CHECK(check_ndci(PS({"z1+2*z2+3*z3"}, 3)).passed());
    CHECK(check_ndci(fs).passed());
}

TEST_CASE("pair audit implication") {
    // Wherever boundary equality and both product assumptions pass, both
    // internal homotopy audits pass as well.
    auto cert = certify_pair(PS({"z1^2+z2^3+z3^5+z1*z2*z3"}, 3),
                             PS({"2*z1^2+3*z2^3+5*z3^5"}, 3));
    REQUIRE(cert.conclusion == Conclusion::fibrations_isomorphic_pair);
    for (const auto& c : cert.checks)
        if (c.detail.find("audit") != std::string::npos) CHECK(c.passed());
}

TEST_CASE("determinism: repeated certification is identical") {
    auto run = [] {
        auto cert = certify_pair(PS({"z1^2+z2^3+z3^5+z1*z2*z3"}, 3),
                                 PS({"2*z1^2+3*z2^3+5*z3^5"}, 3));
        std::string s = cert.inputs_digest + "|" + cert.theorem_anchor;
        for (const auto& c : cert.checks) s += "|" + c.detail;
        return s;
    };
    CHECK(run() == run());

    CertifierConfig par;
    par.jobs = 4;
    auto cert1 = certify_stable_radius(
        PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3), par);
    auto cert2 = certify_stable_radius(PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3));
    REQUIRE(cert1.checks.size() == cert2.checks.size());
    for (std::size_t i = 0; i < cert1.checks.size(); ++i)
        CHECK(cert1.checks[i].detail == cert2.checks[i].detail);
}

TEST_CASE("Hesse family: certificate plus singular specialisation") {
    auto fam = family({"z1^3+z2^3+z3^3+t*z1*z2*z3"}, 3);
    auto cert = check_family(fam);
    REQUIRE(cert.conclusion == Conclusion::fibrations_isomorphic_family);

    auto at_minus3 = specialize_parameter(fam.members[0], make_rat(-3));
    auto v = check_hypersurface_nondegenerate(at_minus3);
    REQUIRE(v.status == Verdict::Status::fail);
    CHECK(v.detail.find("torus point candidate (1, 1, 1)") != std::string::npos);
}
