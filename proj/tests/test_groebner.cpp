#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "newtcert/groebner.hpp"
#include "newtcert/parse.hpp"

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

Polynomial<Rat> random_poly(std::mt19937_64& rng, int n, int max_terms,
                            std::uint32_t max_exp) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> xe(0, max_exp);
    std::uniform_int_distribution<long> co(-4, 4);
    Polynomial<Rat> p(n);
    const int terms = nt(rng);
    for (int k = 0; k < terms; ++k) {
        Exponent e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) e[i] = xe(rng);
        long c = co(rng);
        p.add_term(e, make_rat(c == 0 ? 1 : c));
    }
    return p;
}

// S-polynomial built independently of the kernel internals.
Polynomial<Rat> s_poly(const Polynomial<Rat>& f, const Polynomial<Rat>& g,
                       const MonomialOrder& order) {
    auto lt = [&](const Polynomial<Rat>& p) {
        auto it = p.terms().begin();
        Exponent best = it->first;
        Rat c = it->second;
        for (const auto& [e, v] : p.terms())
            if (order.less(best, e)) best = e, c = v;
        return std::make_pair(best, c);
    };
    auto [ef, cf] = lt(f);
    auto [eg, cg] = lt(g);
    Exponent l = exp_lcm(ef, eg);
    auto mono = [&](const Exponent& e, const Rat& c) {
        return Polynomial<Rat>::monomial(f.ambient_n(), e, c);
    };
    return mono(exp_sub(l, ef), Rat(1) / cf) * f -
           mono(exp_sub(l, eg), Rat(1) / cg) * g;
}

} // namespace

TEST_CASE("normal_form fixtures") {
    auto g = MonomialOrder::grevlex(2);
    CHECK(normal_form(P("z1^2", 2), PS({"z1"}, 2), g).is_zero());

    auto lex = MonomialOrder::lex(2);
    CHECK(normal_form(P("z1+z2", 2), PS({"z1-z2"}, 2), lex) == P("2*z2", 2));

    auto p = P("z1^3+z2-1", 2);
    CHECK(normal_form(p, {}, g) == p);
}

TEST_CASE("buchberger fixtures") {
    auto g2 = MonomialOrder::grevlex(2);
    SECTION("already a basis") {
        auto b = buchberger(PS({"z1", "z2"}, 2), g2);
        REQUIRE(b.generators.size() == 2);
        CHECK(b.generators[0] == P("z1", 2));
        CHECK(b.generators[1] == P("z2", 2));
    }
    SECTION("linear algebra in characteristic zero") {
        auto b = buchberger(PS({"z1-z2", "z1+z2"}, 2), g2);
        REQUIRE(b.generators.size() == 2);
        CHECK(b.generators[0] == P("z1", 2));
        CHECK(b.generators[1] == P("z2", 2));
    }
    SECTION("unit ideal: invertible and nilpotent") {
        // Hand S-polynomial oracle: S(z1 z2 - 1, z1^2) = z1 - 0 reductions
        // lead to 1 in the ideal; the reduced basis must be {1}.
        auto b = buchberger(PS({"z1*z2-1", "z1^2"}, 2), g2);
        REQUIRE(b.generators.size() == 1);
        CHECK(b.generators[0] == P("1", 2));
        CHECK(is_unit_ideal(b));
    }
}

TEST_CASE("is_unit_ideal") {
    auto g1 = MonomialOrder::grevlex(1);
    CHECK(is_unit_ideal(buchberger(PS({"1"}, 1), g1)));
    CHECK_FALSE(is_unit_ideal(buchberger(PS({"z1"}, 1), g1)));
}

TEST_CASE("buchberger correctness spot suite") {
    std::mt19937_64 rng(0x6B0Bu);
    int done = 0;
    for (int it = 0; done < 50; ++it) {
        REQUIRE(it < 500);
        int n = 1 + int(rng() % 3);
        int k = 1 + int(rng() % 3);
        std::vector<Polynomial<Rat>> gens;
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, n, 3, 3));
        auto order = MonomialOrder::grevlex(n);
        StepBudget budget{200000};
        GroebnerBasis<Rat> b;
        try {
            b = buchberger(gens, order, budget);
        } catch (const resource_exhausted&) {
            continue;
        }
        ++done;
        // Every generator reduces to zero against the basis.
        for (const auto& g : gens)
            CHECK(normal_form(g, b.generators, order).is_zero());
        // Every S-polynomial of basis pairs reduces to zero.
        for (std::size_t i = 0; i < b.generators.size(); ++i)
            for (std::size_t j = i + 1; j < b.generators.size(); ++j)
                CHECK(normal_form(s_poly(b.generators[i], b.generators[j], order),
                                  b.generators, order)
                          .is_zero());
        // Leading coefficients are 1 and the basis is inter-reduced.
        for (const auto& g : b.generators) {
            auto lt = [&](const Polynomial<Rat>& p) {
                auto best = p.terms().begin()->first;
                for (const auto& [e, v] : p.terms())
                    if (order.less(best, e)) best = e;
                return best;
            };
            CHECK(g.coeff(lt(g)) == make_rat(1));
        }
        // Ideal membership: p*q reduces to zero for p in the ideal.
        auto q = random_poly(rng, n, 3, 2);
        CHECK(normal_form(gens[0] * q, b.generators, order).is_zero());
        // Determinism: a repeated run gives the identical basis.
        auto b2 = buchberger(gens, order);
        REQUIRE(b2.generators.size() == b.generators.size());
        for (std::size_t i = 0; i < b.generators.size(); ++i)
            CHECK(b2.generators[i] == b.generators[i]);
    }
}

TEST_CASE("torus_emptiness fixtures") {
    CHECK(torus_emptiness(PS({"z1*z2"}, 2)));
    CHECK_FALSE(torus_emptiness(PS({"z1-z2"}, 2)));
    CHECK(torus_emptiness(PS({"z1+z2+z3", "z1+2*z2+3*z3", "1", "2", "1"}, 3)));
}

TEST_CASE("torus_emptiness holds for random monomials") {
    std::mt19937_64 rng(0x33CCu);
    for (int it = 0; it < 25; ++it) {
        int n = 1 + int(rng() % 3);
        Exponent e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) e[i] = std::uint32_t(rng() % 5);
        auto m = Polynomial<Rat>::monomial(n, e, make_rat(1 + long(rng() % 9)));
        CHECK(torus_emptiness(std::vector<Polynomial<Rat>>{m}));
    }
}

TEST_CASE("parametric torus verdicts specialise consistently") {
    // Hesse pencil gradient system: generically empty on the torus.
    int n = 3;
    auto f = parse_parametric_polynomial("z1^3+z2^3+z3^3+t*z1*z2*z3", n);
    std::vector<Polynomial<RatFunc>> sys{f};
    for (int i = 1; i <= n; ++i) sys.push_back(partial_derivative(f, i));
    REQUIRE(torus_emptiness(sys));
    // Specialisation at rational parameters away from the singular values
    // t^3 = -27 agrees with the generic verdict.
    for (long t0 : {0L, 1L, 2L, -1L, 5L}) {
        std::vector<Polynomial<Rat>> specialized;
        for (const auto& p : sys)
            specialized.push_back(specialize_parameter(p, make_rat(t0)));
        CHECK(torus_emptiness(specialized));
    }
    // At the classical singular value t = -3 the system has a torus zero.
    std::vector<Polynomial<Rat>> bad;
    for (const auto& p : sys) bad.push_back(specialize_parameter(p, make_rat(-3)));
    CHECK_FALSE(torus_emptiness(bad));
}

TEST_CASE("step budget exhaustion is a distinct outcome") {
    StepBudget tiny{3};
    CHECK_THROWS_AS(
        buchberger(PS({"z1^4+z2^3-1", "z1*z2^2-z1", "z2^5-z1^2"}, 2),
                   MonomialOrder::grevlex(2), tiny),
        resource_exhausted);
}

TEST_CASE("jacobian_minors") {
    SECTION("single polynomial gives the gradient") {
        auto f = P("z1+z2", 2) * P("z1+z2", 2);
        auto minors = jacobian_minors(std::vector<Polynomial<Rat>>{f});
        REQUIRE(minors.size() == 2);
        CHECK(minors[0] == P("2*z1+2*z2", 2));
        CHECK(minors[1] == P("2*z1+2*z2", 2));
    }
    SECTION("identity rows") {
        auto minors = jacobian_minors(PS({"z1", "z2"}, 2));
        REQUIRE(minors.size() == 1);
        CHECK(minors[0] == P("1", 2));
    }
    SECTION("constant matrix minors") {
        auto minors = jacobian_minors(PS({"z1+z2+z3", "z1+2*z2+3*z3"}, 3));
        REQUIRE(minors.size() == 3);
        CHECK(minors[0] == P("1", 3)); // columns {1,2}
        CHECK(minors[1] == P("2", 3)); // columns {1,3}
        CHECK(minors[2] == P("1", 3)); // columns {2,3}
    }
    SECTION("degenerate repeated rows") {
        auto minors = jacobian_minors(PS({"z1+z2", "z1+z2"}, 2));
        REQUIRE(minors.size() == 1);
        CHECK(minors[0].is_zero());
    }
    SECTION("nonlinear 2x3") {
        // d(z1 z2)/d = (z2, z1, 0); d(z3^2)/d = (0, 0, 2 z3)
        auto minors = jacobian_minors(PS({"z1*z2", "z3^2"}, 3));
        REQUIRE(minors.size() == 3);
        CHECK(minors[0].is_zero());
        CHECK(minors[1] == P("2*z2*z3", 3));
        CHECK(minors[2] == P("2*z1*z3", 3));
    }
    CHECK_THROWS_AS(jacobian_minors(PS({"z1", "z2", "z1+z2"}, 2)), error);
}

TEST_CASE("groebner over Q(t) keeps exact coefficients") {
    auto f = parse_parametric_polynomial("t*z1+z2", 2);
    auto g = parse_parametric_polynomial("z1+t*z2", 2);
    auto b = buchberger(std::vector<Polynomial<RatFunc>>{f, g},
                        MonomialOrder::grevlex(2));
    // Generically (t^2 != 1) the ideal is (z1, z2).
    REQUIRE(b.generators.size() == 2);
    CHECK(b.generators[0] == parse_parametric_polynomial("z1", 2));
    CHECK(b.generators[1] == parse_parametric_polynomial("z2", 2));
}

TEST_CASE("cyclic-3 has torus zeros and a deterministic basis") {
    auto gens = PS({"z1+z2+z3", "z1*z2+z2*z3+z3*z1", "z1*z2*z3-1"}, 3);
    auto order = MonomialOrder::grevlex(3);
    auto b1 = buchberger(gens, order);
    auto b2 = buchberger(gens, order);
    REQUIRE(b1.generators.size() == b2.generators.size());
    for (std::size_t i = 0; i < b1.generators.size(); ++i)
        CHECK(b1.generators[i] == b2.generators[i]);
    CHECK_FALSE(is_unit_ideal(b1));
    for (const auto& g : gens)
        CHECK(normal_form(g, b1.generators, order).is_zero());
    // The solutions are permutations of the cube roots of unity, all torus
    // points, so saturation by z1 z2 z3 must not reach the unit ideal.
    CHECK_FALSE(torus_emptiness(gens));
}
