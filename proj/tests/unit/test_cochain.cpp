#include "cforge/errors.hpp"
#include "cforge/instances.hpp"

#include <doctest.h>

using namespace cforge;

TEST_CASE("trivial cochains are cocycles")
{
    for (const auto& sg : {example_semigroup(), chain_semigroup(), path_semigroup()})
        for (const auto& d : {ScalarDomain::rationals(), ScalarDomain::quaternions(), ScalarDomain::finite_field(3, 2)}) {
            const TwoCochain c(sg, d);
            CHECK(is_cocycle(c).ok);
            CHECK(is_normal(c));
        }
}

TEST_CASE("example cocycle")
{
    const auto inst = example_instance();
    CHECK(is_cocycle(inst.cocycle).ok);
    CHECK(is_normal(inst.cocycle));
    CHECK(is_cocycle(example_instance(ScalarDomain::finite_field(3, 2)).cocycle).ok);
}

TEST_CASE("xi(e1,e1) = g breaks twisted associativity at (e1,e1,s12)")
{
    const auto d = ScalarDomain::finite_field(2, 2);
    const auto sg = example_semigroup();
    TwoCochain c(sg, d);
    const int e1 = sg->find("e1"), s12 = sg->find("s12");
    c.set_xi(e1, e1, Scalar::from_coefficients(d, {0, 1}));
    const auto v = is_cocycle(c);
    CHECK(!v.ok);
    CHECK(!is_normal(c));
    bool found = false;
    for (const auto& x : v.violations)
        if (x.identity == CocycleViolation::Identity::twisted_associativity && x.tuple == std::vector<int>{e1, e1, s12})
            found = true;
    CHECK(found);
    CHECK_THROWS_AS(require_cocycle(c), Error);
    CHECK_THROWS_AS(normalize(c), Error);
}

TEST_CASE("alpha on an idempotent makes a cochain non-normal")
{
    const auto d = ScalarDomain::finite_field(2, 2);
    const auto sg = example_semigroup();
    TwoCochain c(sg, d);
    c.set_alpha(sg->find("e1"), RingAuto::frobenius(d, 1));
    CHECK(!is_normal(c));
}

TEST_CASE("normalization")
{
    const auto d = ScalarDomain::finite_field(2, 2);
    const auto sg = example_semigroup();
    const Scalar g = Scalar::from_coefficients(d, {0, 1});

    // A genuine cocycle with xi(e1,e1) = g: move the trivial one by eta(e1) = g.
    Gauge h = Gauge::identity(sg, d);
    h.set_eta(sg->find("e1"), g);
    const TwoCochain c = act_gauge(h, TwoCochain(sg, d));
    const int e1 = sg->find("e1");
    REQUIRE(c.xi(e1, e1) == g);
    REQUIRE(is_cocycle(c).ok);

    const auto n = normalize(c);
    CHECK(n.gauge.eta(e1) == g.inverse());
    CHECK(n.gauge.eta(e1) == Scalar::from_coefficients(d, {1, 1}));
    CHECK(is_normal(n.normalized));
    CHECK(act_gauge(n.gauge, c) == n.normalized);

    const auto again = normalize(n.normalized);
    CHECK(again.gauge.is_identity());
    CHECK(again.normalized == n.normalized);
}

TEST_CASE("normal cocycles have xi(e,s) = xi(s,f) = 1 and alpha_e o alpha_e = rho o alpha_e")
{
    Rng rng(11);
    for (const auto& inst : {example_instance(), example_instance(ScalarDomain::finite_field(3, 2)),
                             trivial_instance(chain_semigroup(), ScalarDomain::finite_field(5, 2))}) {
        for (int n = 0; n < 20; ++n) {
            const TwoCochain twisted = random_twist(inst.cocycle, rng);
            REQUIRE(is_cocycle(twisted).ok);
            const auto& sg = twisted.sg();
            for (std::size_t e = 0; e < sg.idempotent_count(); ++e) {
                const int i = static_cast<int>(e);
                CHECK(compose(twisted.alpha(i), twisted.alpha(i)) ==
                      compose(RingAuto::rho(twisted.xi(i, i)), twisted.alpha(i)));
            }
            const TwoCochain c = normalize(twisted).normalized;
            for (std::size_t s = 0; s < sg.size(); ++s) {
                const int x = static_cast<int>(s);
                CHECK(c.xi(sg.src(x), x).is_one());
                CHECK(c.xi(x, sg.tgt(x)).is_one());
            }
        }
    }
}
