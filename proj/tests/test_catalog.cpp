#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "clausen/catalog.hpp"

using namespace clausen;

namespace {

Binding bind_mk(long long m, long long k) {
    Binding b;
    b.m = m;
    b.k = k;
    return b;
}

Binding bind(std::optional<long long> m, std::optional<long long> k,
             std::optional<Rational> alpha = {}, std::optional<Rational> beta = {},
             std::optional<Rational> gamma = {}, std::optional<Rational> delta = {}) {
    Binding b;
    b.m = m;
    b.k = k;
    b.alpha = std::move(alpha);
    b.beta = std::move(beta);
    b.gamma = std::move(gamma);
    b.delta = std::move(delta);
    return b;
}

/// Random non-integer rational p/q, |p/q| <= ~8.
Rational draw_nonint(std::mt19937_64& rng) {
    static const long long qs[] = {2, 3, 5, 7};
    for (;;) {
        const long long q = qs[rng() % 4];
        const long long p = static_cast<long long>(rng() % (16 * q + 1)) - 8 * q;
        if (p % q != 0) return Rational(p, q);
    }
}

} // namespace

TEST_CASE("catalog shape") {
    const auto& cat = theorem_catalog();
    CHECK(cat.size() == 34);

    std::set<std::string> ids, tags;
    std::size_t exact = 0, zero = 0;
    std::map<std::string, int> families;
    for (const auto& e : cat) {
        ids.insert(e.id());
        tags.insert(e.tag);
        families[e.family]++;
        if (e.mode == TheoremMode::Exact) ++exact;
        if (e.rhs_is_zero) ++zero;
    }
    CHECK(ids.size() == 34);
    CHECK(tags.size() == 34);
    CHECK(exact == 28);
    CHECK(zero == 5);
    CHECK(families["watson"] == 6);
    CHECK(families["saalschutz"] == 5);
    CHECK(families["whipple"] == 9);
    CHECK(families["dixon"] == 14);

    // every zero theorem is exact and truncation/termination is well defined
    for (const auto& e : cat)
        if (e.rhs_is_zero) CHECK(e.mode == TheoremMode::Exact);
}

TEST_CASE("frozen closed-form values") {
    struct Pin {
        std::string id;
        Binding b;
        Rational expect;
    };
    const Pin pins[] = {
        {"watson.trunc-m", bind(1, {}, Rational(1), Rational(1)), Rational(4, 3)},
        {"watson.term-even", bind(1, {}, {}, Rational(1, 3), Rational(1, 5)), Rational(8, 7)},
        {"watson.trunc-2m", bind(1, 1, {}, Rational(1, 3)), Rational(13, 8)},
        {"saalschutz.trunc", bind(1, 1, Rational(1), Rational(1)), Rational(9, 8)},
        {"whipple.trunc-m", bind(1, 1, Rational(1, 2)), Rational(25, 24)},
        {"whipple.trunc-2m-a", bind(1, 1, {}, Rational(1, 2)), Rational(8, 7)},
        {"whipple.trunc-2m-b", bind(1, 1, {}, Rational(1, 2)), Rational(35, 32)},
        {"whipple.trunc-2m1-a", bind(1, 1, {}, Rational(1, 2)), Rational(128, 105)},
        {"whipple.trunc-2m1-b", bind(1, 1, {}, Rational(1, 2)), Rational(147, 128)},
        {"dixon.trunc-b", bind_mk(1, 1), Rational(10, 9)},
        {"dixon.term-even", bind(1, {}, {}, Rational(1, 3), Rational(1, 5)), Rational(23, 12)},
        {"dixon.term-m", bind(1, {}, Rational(1, 3), {}, Rational(1, 5)), Rational(116, 119)},
    };
    for (const auto& pin : pins) {
        INFO(pin.id);
        const auto inst = instantiate(pin.id, pin.b);
        const auto rep = verify(inst);
        CHECK(rep.verdict == "equal");
        REQUIRE(rep.lhs_exact.has_value());
        CHECK(*rep.lhs_exact == pin.expect);
        CHECK(*rep.rhs_exact == pin.expect);
    }
}

TEST_CASE("zero theorems sum to exactly zero") {
    const std::pair<std::string, Binding> cases[] = {
        {"watson.term-odd", bind(1, {}, {}, Rational(1, 3), Rational(1, 5))},
        {"watson.term-odd", bind(3, {}, {}, Rational(-7, 2), Rational(9, 4))},
        {"watson.trunc-2m1", bind(1, 1, {}, Rational(1, 3))},
        {"watson.trunc-2m1", bind(2, 3, {}, Rational(-5, 3))},
        {"dixon.term-odd", bind(1, {}, {}, Rational(1, 3), Rational(1, 5))},
        {"dixon.term-odd", bind(2, {}, {}, Rational(7, 3), Rational(-1, 5))},
        {"dixon.trunc-c", bind(1, 1, {}, {}, Rational(1, 5))},
        {"dixon.trunc-c", bind(2, 2, {}, {}, Rational(13, 7))},
        {"dixon.trunc-d", bind_mk(1, 1)},
        {"dixon.trunc-d", bind_mk(3, 2)},
    };
    for (const auto& [id, b] : cases) {
        INFO(id);
        const auto rep = verify(instantiate(id, b));
        CHECK(rep.verdict == "equal");
        REQUIRE(rep.lhs_exact.has_value());
        CHECK(*rep.lhs_exact == 0);
    }
}

TEST_CASE("instantiate builds the documented series") {
    const auto inst = instantiate("watson.trunc-2m", bind(1, 1, {}, Rational(1, 3)));
    const auto spec = inst.entry->lhs(inst);
    REQUIRE(spec.num.size() == 3);
    CHECK(spec.num[0] == Rational(-2));
    CHECK(spec.num[1] == Rational(1, 3));
    CHECK(spec.num[2] == Rational(-5, 2));
    REQUIRE(spec.den.size() == 2);
    CHECK(spec.den[0] == Rational(-5));
    CHECK(spec.den[1] == Rational(-1, 3));
    CHECK(spec.z == 1);
    REQUIRE(spec.truncation.has_value());
    CHECK(*spec.truncation == 2);

    const auto rep = verify(inst);
    CHECK(rep.terms == 3); // truncated at 2m sums 2m+1 terms
    const auto odd = verify(instantiate("whipple.trunc-2m1-a", bind(1, 1, {}, Rational(1, 2))));
    CHECK(odd.terms == 4); // truncated at 2m+1 sums 2m+2 terms
}

TEST_CASE("instantiate validates bindings") {
    CHECK_THROWS_AS(instantiate("nosuch.theorem", {}), invalid_instance);
    // missing / surplus parameters
    CHECK_THROWS_AS(instantiate("watson.trunc-m", bind({}, {}, Rational(1), Rational(1))),
                    invalid_instance);
    CHECK_THROWS_AS(instantiate("watson.trunc-m", bind(1, 1, Rational(1), Rational(1))),
                    invalid_instance);
    CHECK_THROWS_AS(
        instantiate("watson.trunc-m", bind(1, {}, Rational(1), Rational(1), {}, Rational(1))),
        invalid_instance);

    // m, k must be positive unless permissive
    CHECK_THROWS_AS(instantiate("watson.trunc-m", bind(0, {}, Rational(1), Rational(1))),
                    invalid_instance);
    CHECK_THROWS_AS(instantiate("saalschutz.trunc", bind(1, 0, Rational(1), Rational(1))),
                    invalid_instance);
    const auto degenerate = instantiate("watson.trunc-m", bind(0, {}, Rational(1), Rational(1)), true);
    const auto rep = verify(degenerate);
    CHECK(rep.verdict == "equal");
    CHECK(*rep.lhs_exact == 1);

    // named side conditions
    CHECK_THROWS_MATCHES(instantiate("saalschutz.term", bind(1, {}, Rational(-2), Rational(1), Rational(3))),
                         side_condition_violated,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("alpha not a nonpositive integer")));
    CHECK_THROWS_AS(instantiate("dixon.term-even", bind(1, {}, {}, Rational(2), Rational(1, 5))),
                    side_condition_violated);
    CHECK_THROWS_AS(instantiate("watson.nt",
                                bind({}, {}, Rational(1, 2), Rational(1, 2), Rational(-1, 4))),
                    side_condition_violated); // convergence margin fails at gamma = -1/4
}

TEST_CASE("float entries match their series") {
    // Watson at the symmetric half-point: value pi / Gamma(3/4)^4.
    {
        const auto inst = instantiate(
            "watson.nt", bind({}, {}, Rational(1, 2), Rational(1, 2), Rational(1, 2)));
        const auto rep = verify(inst);
        CHECK(rep.verdict == "equal");
        CHECK(rep.rel_error <= 1e-10L);
        const RealHP g34 = gamma_real(0.75L);
        CHECK(std::abs(rep.lhs_float - detail::pi_hp / (g34 * g34 * g34 * g34)) < 1e-12L);
        CHECK(std::abs(rep.lhs_float - 1.3932L) < 1e-4L);
    }
    const std::pair<std::string, Binding> cases[] = {
        {"saalschutz.nt",
         bind({}, {}, Rational(1, 3), Rational(1, 4), Rational(3, 2), Rational(2))},
        {"whipple.nt", bind({}, {}, Rational(1, 3), Rational(3, 4), Rational(5, 4))},
        {"dixon.nt", bind({}, {}, Rational(1, 2), Rational(1, 5), Rational(1, 4))},
        {"dixon.nt-reflect", bind({}, {}, Rational(1, 2), Rational(1, 5), Rational(1, 4))},
        {"dixon.term-gamma", bind(2, {}, Rational(1, 3), Rational(1, 5))},
    };
    for (const auto& [id, b] : cases) {
        INFO(id);
        const auto rep = verify(instantiate(id, b));
        CHECK(rep.verdict == "equal");
        CHECK(rep.rel_error <= 1e-10L);
    }

    // the plain and reflected Dixon quotients agree wherever both apply
    const auto plain = instantiate("dixon.nt", bind({}, {}, Rational(1, 2), Rational(1, 5), Rational(1, 4)));
    const auto refl =
        instantiate("dixon.nt-reflect", bind({}, {}, Rational(1, 2), Rational(1, 5), Rational(1, 4)));
    const RealHP a = plain.entry->rhs_float(plain), b = refl.entry->rhs_float(refl);
    CHECK(std::abs(a - b) <= 1e-12L * std::abs(a));
}

TEST_CASE("derivation edges hold on pinned bindings") {
    CHECK(derivation_edges().size() == 21);

    EdgeBinding eb;
    eb.m = 1, eb.k = 1;
    eb.beta = Rational(1, 3);
    CHECK(derivation_check("watson.trunc-2m", "watson.term-even", eb));
    CHECK(derivation_check("watson.trunc-2m1", "watson.term-odd", eb));

    eb.beta = Rational(1, 2);
    CHECK(derivation_check("whipple.trunc-2m-a", "whipple.term-even", eb));
    CHECK(derivation_check("whipple.trunc-2m-b", "whipple.term-even", eb));
    CHECK(derivation_check("whipple.trunc-2m1-a", "whipple.term-odd", eb));
    CHECK(derivation_check("whipple.trunc-2m1-b", "whipple.term-odd", eb));

    eb.alpha = Rational(1, 2);
    CHECK(derivation_check("whipple.trunc-m", "whipple.term-b", eb));

    eb.alpha = Rational(1, 2);
    eb.beta = Rational(2, 3);
    CHECK(derivation_check("saalschutz.trunc", "saalschutz.term", eb));
    // integer strata are excluded, not silently compared
    eb.beta = Rational(1);
    CHECK_THROWS_AS(derivation_check("saalschutz.trunc", "saalschutz.term", eb),
                    side_condition_violated);
    eb.beta = Rational(1, 3);
    eb.gamma = Rational(1, 5);
    CHECK(derivation_check("saalschutz.trunc-b", "saalschutz.term-b", eb));

    CHECK(derivation_check("dixon.trunc-a", "dixon.term-even", eb));
    CHECK(derivation_check("dixon.trunc-b", "dixon.trunc-a", eb));
    CHECK(derivation_check("dixon.trunc-c", "dixon.term-odd", eb));
    CHECK(derivation_check("dixon.trunc-d", "dixon.trunc-c", eb));
    eb.alpha = Rational(1, 3);
    CHECK(derivation_check("dixon.trunc-e", "dixon.term-alpha-even", eb));
    CHECK(derivation_check("dixon.trunc-f", "dixon.term-alpha-odd", eb));

    eb.beta = Rational(1, 3);
    eb.gamma = Rational(1, 5);
    CHECK(derivation_check("dixon.term-even", "dixon.nt", eb));
    CHECK(derivation_check("dixon.term-odd", "dixon.nt", eb));
    eb.alpha = Rational(1, 3);
    CHECK(derivation_check("dixon.term-alpha-even", "dixon.nt", eb));
    CHECK(derivation_check("dixon.term-alpha-odd", "dixon.nt", eb));
    eb.m = 2;
    CHECK(derivation_check("dixon.term-m", "dixon.nt", eb));
    eb.beta = Rational(1, 5);
    CHECK(derivation_check("dixon.term-gamma", "dixon.nt", eb));

    CHECK_THROWS_AS(derivation_check("watson.nt", "dixon.nt", eb), invalid_instance);
}

TEST_CASE("derivation edges hold on random draws") {
    std::mt19937_64 rng(20240817);
    for (const auto& edge : derivation_edges()) {
        for (int trial = 0; trial < 5; ++trial) {
            bool ok = false;
            for (int attempt = 0; attempt < 100; ++attempt) {
                EdgeBinding eb;
                eb.m = 1 + static_cast<long long>(rng() % 4);
                eb.k = 1 + static_cast<long long>(rng() % 4);
                eb.alpha = draw_nonint(rng);
                eb.beta = draw_nonint(rng);
                eb.gamma = draw_nonint(rng);
                try {
                    ok = edge.holds(eb);
                    break;
                } catch (const evaluation_error&) {
                    // draw left the identity's domain (pole); try another
                }
            }
            INFO(edge.parent << " -> " << edge.child);
            CHECK(ok);
        }
    }
}

TEST_CASE("catalog listing") {
    const auto rows = list_theorems();
    REQUIRE(rows.size() == 34);
    CHECK(rows[0].id == "watson.nt");
    CHECK(rows[0].tag == "2.1");
    CHECK(rows[0].mode == "float");
    CHECK(rows[0].params == "alpha, beta, gamma");
    CHECK(rows[0].rhs == "gamma");

    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [](const TheoremRow& r) { return r.id == "watson.trunc-2m"; });
    REQUIRE(it != rows.end());
    CHECK(it->tag == "2.5");
    CHECK(it->mode == "exact");
    CHECK(it->params == "m, k, beta");
    CHECK(it->rhs == "rational");
}
