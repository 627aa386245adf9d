#include "../oracles.hpp"
#include "cforge/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace cforge;

namespace {

std::vector<Issue> issues_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const IssueListError& e) {
        return e.issues();
    }
    return {};
}

Json example_json()
{
    return read_json_file(std::filesystem::path(CFORGE_DATA_DIR) / "example.json");
}

}  // namespace

TEST_CASE("scalar and auto round trips")
{
    Rng rng(10);
    for (const auto& d : {ScalarDomain::rationals(), ScalarDomain::quaternions(), ScalarDomain::finite_field(2, 2),
                          ScalarDomain::finite_field(3, 2), ScalarDomain::finite_field(5, 1)}) {
        CHECK(domain_from_json(domain_to_json(*d))->same_as(*d));
        for (int n = 0; n < 20; ++n) {
            const Scalar x = sample_scalar(d, rng);
            CHECK(scalar_from_json(scalar_to_json(x), d) == x);
        }
    }
    const auto q = ScalarDomain::rationals();
    CHECK(scalar_to_json(Scalar(q, Rational(-6, 5))) == "-6/5");
    CHECK(scalar_to_json(Scalar::integer(q, 3)) == "3");
    CHECK(scalar_from_json(Json(7), q) == Scalar::integer(q, 7));
    CHECK(scalar_from_json("4/6", q) == Scalar(q, Rational(2, 3)));

    const auto h = ScalarDomain::quaternions();
    const auto inner = RingAuto::rho(Scalar::quaternion(h, 1, 2, 0, 0));
    CHECK(auto_from_json(auto_to_json(inner), h) == inner);
    const auto gf9 = ScalarDomain::finite_field(3, 2);
    CHECK(auto_from_json(auto_to_json(RingAuto::frobenius(gf9, 1)), gf9) == RingAuto::frobenius(gf9, 1));
    CHECK(auto_from_json("identity", gf9).is_identity());

    CHECK(domain_from_json("GF(9)")->same_as(*gf9));
    CHECK(domain_from_json("GF(3^2)")->same_as(*gf9));
    CHECK(domain_from_json("Q")->kind() == DomainKind::rational);
    CHECK(domain_from_json("H(Q)")->kind() == DomainKind::rational_quaternion);
}

TEST_CASE("structured round trips")
{
    const auto inst = example_instance();
    Rng rng(3);
    for (const auto& sg : {example_semigroup(), path_semigroup(), chain_semigroup()})
        CHECK(*semigroup_from_json(semigroup_to_json(*sg)) == *sg);

    const TwoCochain moved = random_twist(inst.cocycle, rng);
    CHECK(cochain_from_json(cochain_to_json(moved), inst.semigroup, inst.domain) == moved);

    const Gauge g = random_gauge(inst.semigroup, inst.domain, rng);
    CHECK(gauge_from_json(gauge_to_json(g), inst.semigroup, inst.domain) == g);

    const auto swap = enumerate_autos(*inst.semigroup).back();
    CHECK(semigroup_auto_from_json(semigroup_auto_to_json(*inst.semigroup, swap), *inst.semigroup) == swap);

    const ClassWitness w{g, swap};
    const auto back = witness_from_json(witness_to_json(w), inst.semigroup, inst.domain);
    CHECK(back.gauge == g);
    CHECK(back.phi == swap);

    const auto ring = TwistedRing::create(inst.cocycle);
    const RingElement x = ring->monomial(sample_unit(inst.domain, rng), 2) + ring->basis(5);
    CHECK(element_from_json(element_to_json(x), ring) == x);

    const Instance parsed = instance_from_json(instance_to_json(inst));
    CHECK(parsed.domain->same_as(*inst.domain));
    CHECK(*parsed.semigroup == *inst.semigroup);
    CHECK(parsed.cocycle == inst.cocycle);

    const auto q = quaternion_cocycle(4);
    const Instance qi{q.domain(), q.semigroup(), q};
    CHECK(instance_from_json(instance_to_json(qi)).cocycle == q);
}

TEST_CASE("data files")
{
    const std::filesystem::path dir(CFORGE_DATA_DIR);
    const Instance example = load_instance(dir / "example.json");
    CHECK(example.cocycle == example_instance().cocycle);
    CHECK(load_instance(dir / "trivial.json").cocycle == trivial_instance(example_semigroup(), example.domain).cocycle);
    for (const char* name : {"example_twisted.json", "example_gf9.json", "gf2_path.json", "rational_path.json"})
        CHECK(is_cocycle(load_instance(dir / name).cocycle).ok);
}

TEST_CASE("parse errors carry locations")
{
    Json j = example_json();
    j["cocycle"]["alpha"][0]["on"] = "s99";
    auto issues = issues_of([&] { instance_from_json(j); });
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].location == "/cocycle/alpha/0/on");

    j = example_json();
    j["cocycle"]["xi"] = Json::array({{{"left", "s12"}, {"right", "e2"}, {"value", {0, 0}}}});
    issues = issues_of([&] { instance_from_json(j); });
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].location == "/cocycle/xi/0/value");

    j = example_json();
    j["cocycle"]["xi"] = Json::array({{{"left", "s12"}, {"right", "s24"}, {"value", {1, 0}}}});
    issues = issues_of([&] { instance_from_json(j); });
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].location.starts_with("/cocycle/xi/0"));

    j = example_json();
    j["division_ring"]["modulus"] = {1, 0, 1};  // x^2 + 1 is reducible over GF(2)
    issues = issues_of([&] { instance_from_json(j); });
    REQUIRE(!issues.empty());
    CHECK(issues[0].location.starts_with("/division_ring"));

    j = example_json();
    j["semigroup"]["elements"][0]["tgt"] = "e1";
    issues = issues_of([&] { instance_from_json(j); });
    REQUIRE(!issues.empty());
    CHECK(issues[0].location.starts_with("/semigroup"));

    j = example_json();
    j.erase("semigroup");
    issues = issues_of([&] { instance_from_json(j); });
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].message.find("semigroup") != std::string::npos);

    CHECK(issues_of([] { scalar_from_json("1/0", ScalarDomain::rationals()); }).size() == 1);
    CHECK(issues_of([] { scalar_from_json({1, 2, 3}, ScalarDomain::finite_field(2, 2)); }).size() == 1);
    CHECK(issues_of([] { auto_from_json(Json{{"frobenius", 1}}, ScalarDomain::rationals()); }).size() == 1);
}

TEST_CASE("malformed files")
{
    const auto path = std::filesystem::temp_directory_path() / "cforge_malformed.json";
    {
        std::ofstream out(path);
        out << "{\"division_ring\": \"Q\",";
    }
    const auto issues = issues_of([&] { read_json_file(path); });
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].location.find("byte") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(issues_of([] { read_json_file("/nonexistent/cforge.json"); }).size() == 1);
}
