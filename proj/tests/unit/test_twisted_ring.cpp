#include "../oracles.hpp"
#include "cforge/errors.hpp"

#include <doctest.h>

using namespace cforge;

namespace {

const DomainPtr gf4 = ScalarDomain::finite_field(2, 2);

RingElement random_element(const RingPtr& ring, Rng& rng)
{
    RingElement::Coefficients c;
    for (std::size_t s = 0; s < ring->sg().size(); ++s)
        c.emplace(static_cast<int>(s), sample_scalar(ring->domain(), rng));
    return RingElement(ring, std::move(c));
}

}  // namespace

TEST_CASE("example ring products")
{
    const auto inst = example_instance();
    const auto ring = TwistedRing::create(inst.cocycle);
    const auto& sg = *inst.semigroup;
    const Scalar g = Scalar::from_coefficients(gf4, {0, 1});
    const Scalar g1 = Scalar::from_coefficients(gf4, {1, 1});
    const int s34 = sg.find("s34"), e4 = sg.find("e4"), s12 = sg.find("s12"), e1 = sg.find("e1"),
              e2 = sg.find("e2"), s24 = sg.find("s24");

    CHECK(ring->basis(s34) * ring->monomial(g, e4) == ring->monomial(g1, s34));
    CHECK(ring->basis(s12) * ring->monomial(g, e2) == ring->monomial(g, s12));
    CHECK(ring->basis(e1) * ring->basis(s12) == ring->basis(s12));
    CHECK(ring->basis(s12) * ring->basis(e2) == ring->basis(s12));
    CHECK((ring->basis(s12) * ring->basis(s24)).is_zero());
    CHECK(ring->one() * ring->basis(s34) == ring->basis(s34));
    CHECK(ring->basis(s34) * ring->one() == ring->basis(s34));

    const auto other = TwistedRing::create(inst.cocycle);
    CHECK_THROWS_AS(ring->basis(e1) * other->basis(e1), Error);
    CHECK_THROWS_AS(TwistedRing::create([&] {
                        TwoCochain bad(inst.semigroup, gf4);
                        bad.set_xi(e1, e1, g);
                        return bad;
                    }()),
                    Error);
}

TEST_CASE("basis associativity is exhaustive over GF(4) and GF(9)")
{
    for (const auto& inst : {example_instance(), example_instance(ScalarDomain::finite_field(3, 2))}) {
        const auto ring = TwistedRing::create(inst.cocycle);
        const auto ds = generator_scalars(inst.domain);
        const int n = static_cast<int>(inst.semigroup->size());
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int u = 0; u < n; ++u)
                    for (const auto& d : ds) {
                        const RingElement x = ring->basis(s), y = ring->monomial(d, t), z = ring->monomial(d * d, u);
                        CHECK((x * y) * z == x * (y * z));
                    }
    }
}

TEST_CASE("dense associativity over the quaternions")
{
    const TwoCochain c = quaternion_cocycle(7);
    const auto ring = TwistedRing::create(c);
    bool some_inner = false;
    for (std::size_t s = 0; s < c.sg().size(); ++s)
        some_inner = some_inner || c.alpha(static_cast<int>(s)).form() == RingAuto::Form::inner;
    CHECK(some_inner);
    Rng rng(99);
    for (int n = 0; n < 40; ++n) {
        const auto x = random_element(ring, rng), y = random_element(ring, rng), z = random_element(ring, rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("dimension of e R f")
{
    for (const auto& sg : {example_semigroup(), chain_semigroup()}) {
        const auto ring = TwistedRing::create(TwoCochain(sg, gf4));
        for (std::size_t e = 0; e < sg->idempotent_count(); ++e)
            for (std::size_t f = 0; f < sg->idempotent_count(); ++f) {
                std::size_t dim = 0;
                for (std::size_t s = 0; s < sg->size(); ++s) {
                    const auto x = ring->basis(static_cast<int>(e)) * ring->basis(static_cast<int>(s)) *
                                   ring->basis(static_cast<int>(f));
                    dim += !x.is_zero();
                }
                CHECK(dim == (sg->at_slot(static_cast<int>(e), static_cast<int>(f)) ? 1u : 0u));
            }
    }
}

TEST_CASE("units and inverses")
{
    const auto inst = example_instance();
    const auto ring = TwistedRing::create(inst.cocycle);
    const auto& sg = *inst.semigroup;
    const int s12 = sg.find("s12");

    const RingElement r = ring->one() + ring->basis(s12);
    CHECK(r.is_unit());
    CHECK(r.inverse() == r);
    CHECK(!ring->basis(s12).is_unit());
    CHECK_THROWS_AS(ring->basis(s12).inverse(), Error);

    const Scalar g = Scalar::from_coefficients(gf4, {0, 1});
    RingElement diag = ring->zero(), diag_inv = ring->zero();
    for (int e = 0; e < 4; ++e) {
        diag = diag + ring->monomial(g, e);
        diag_inv = diag_inv + ring->monomial(g.inverse(), e);
    }
    CHECK(diag.inverse() == diag_inv);

    Rng rng(6);
    for (const auto& c : {inst.cocycle, quaternion_cocycle(3), random_twist(inst.cocycle, rng)}) {
        const auto rr = TwistedRing::create(c);
        for (int n = 0; n < 20; ++n) {
            RingElement x = random_element(rr, rng);
            if (!x.is_unit())
                continue;
            const RingElement y = x.inverse();
            CHECK(x * y == rr->one());
            CHECK(y * x == rr->one());
        }
    }
}

TEST_CASE("inner automorphisms")
{
    const auto inst = example_instance();
    const auto ring = TwistedRing::create(inst.cocycle);
    const auto& sg = *inst.semigroup;
    Rng rng(15);

    const auto rho1 = inner_auto(ring->one());
    for (int n = 0; n < 10; ++n) {
        const auto x = random_element(ring, rng);
        CHECK(rho1(x) == x);
    }

    // rho of a diagonal unit is the monomial map of the coboundary of eps.
    std::vector<Scalar> eps;
    RingElement r = ring->zero();
    for (int e = 0; e < 4; ++e) {
        eps.push_back(sample_unit(gf4, rng));
        r = r + ring->monomial(eps.back(), e);
    }
    const auto rho = inner_auto(r);
    for (std::size_t s = 0; s < sg.size(); ++s)
        for (const auto& d : enumerate_units(gf4)) {
            const int x = static_cast<int>(s);
            const Scalar expected = eps[sg.src(x)] * d * inst.cocycle.alpha(x)(eps[sg.tgt(x)].inverse());
            CHECK(rho(ring->monomial(d, x)) == ring->monomial(expected, x));
        }

    const RingElement u = ring->one() + ring->basis(sg.find("s12"));
    const auto rho_u = inner_auto(u);
    const auto image = rho_u(ring->basis(0));
    CHECK(image == ring->basis(0) + ring->basis(sg.find("s12")));
    CHECK(image * image == image);
    CHECK_THROWS_AS(inner_auto(ring->basis(sg.find("s12"))), Error);

    for (const auto& c : {inst.cocycle, quaternion_cocycle(12)}) {
        const auto rr = TwistedRing::create(c);
        for (int n = 0; n < 10; ++n) {
            const auto v = random_element(rr, rng);
            if (!v.is_unit())
                continue;
            const auto a = inner_auto(v), b = inner_auto(v.inverse());
            const auto x = random_element(rr, rng), y = random_element(rr, rng);
            CHECK(a(b(x)) == x);
            CHECK(a(x * y) == a(x) * a(y));
        }
    }
}

TEST_CASE("build_iso and verify_ring_hom")
{
    const auto inst = example_instance();
    const auto ring = TwistedRing::create(inst.cocycle);
    const auto& sg = *inst.semigroup;

    const RingIso identity = build_iso(ring, ring, {Gauge::identity(inst.semigroup, gf4), std::nullopt});
    CHECK(identity.map() == MonomialMap::identity(sg, gf4));
    CHECK(verify_ring_hom(identity).ok);

    // R realizing the swap: witness for [c] = [c^phi].
    const auto swap = enumerate_autos(sg).back();
    const auto g = cohomologous(act_phi(swap, inst.cocycle), inst.cocycle);
    REQUIRE(g);
    const RingIso self = build_iso(ring, ring, {*g, swap});
    CHECK(verify_ring_hom(self).ok);
    CHECK(self(ring->basis(sg.find("s12"))).coeffs().begin()->first == sg.find("s13"));

    // Normalization: D^alpha_xi S is isomorphic to its normal form.
    Rng rng(31);
    const TwoCochain c = random_twist(inst.cocycle, rng);
    const auto n = normalize(c);
    const RingIso to_c = build_iso(TwistedRing::create(n.normalized), TwistedRing::create(c), {n.gauge, std::nullopt});
    CHECK(verify_ring_hom(to_c).ok);

    // A wrong witness is rejected.
    Gauge bad = *g;
    bad.set_eta(sg.find("e1"), bad.eta(0) * Scalar::from_coefficients(gf4, {0, 1}));
    CHECK_THROWS_AS(build_iso(ring, ring, {bad, swap}), Error);

    // Rescaling arrows alone is harmless here; twisting d by mu on e1 only is not.
    MonomialMap rescaled = MonomialMap::identity(sg, gf4);
    rescaled.eta[sg.find("s12")] = Scalar::from_coefficients(gf4, {0, 1});
    CHECK(verify_ring_hom(RingIso(ring, ring, rescaled)).ok);
    MonomialMap corrupted = MonomialMap::identity(sg, gf4);
    corrupted.mu[0] = RingAuto::frobenius(gf4, 1);
    const HomVerdict v = verify_ring_hom(RingIso(ring, ring, corrupted));
    CHECK(!v.ok);
    REQUIRE(!v.failures.empty());
}

TEST_CASE("monomial maps compose like functions")
{
    const auto inst = example_instance();
    const auto ring = TwistedRing::create(inst.cocycle);
    const auto& sg = *inst.semigroup;
    Rng rng(41);
    const auto autos = enumerate_autos(sg);
    for (int n = 0; n < 30; ++n) {
        MonomialMap a = MonomialMap::from_gauge(random_gauge(inst.semigroup, gf4, rng), autos[rng() % 2]);
        MonomialMap b = MonomialMap::from_gauge(random_gauge(inst.semigroup, gf4, rng), autos[rng() % 2]);
        const RingIso fa(ring, ring, a), fb(ring, ring, b), fab(ring, ring, compose(sg, a, b)),
            finv(ring, ring, inverse(sg, a));
        const auto x = random_element(ring, rng);
        CHECK(fab(x) == fa(fb(x)));
        CHECK(finv(fa(x)) == x);
    }
}

TEST_CASE("alpha_s alpha_t = rho_xi(s,t) alpha_st on composable pairs")
{
    Rng rng(3);
    for (const auto& c : {example_instance().cocycle, quaternion_cocycle(5),
                          random_twist(example_instance(ScalarDomain::finite_field(3, 2)).cocycle, rng)}) {
        for (const auto& pair : c.sg().tuples(2)) {
            const int s = pair[0], t = pair[1];
            CHECK(compose(c.alpha(s), c.alpha(t)) == compose(RingAuto::rho(c.xi(s, t)), c.alpha(c.sg().compose(s, t))));
        }
    }
}
