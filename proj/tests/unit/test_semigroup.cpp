#include "../oracles.hpp"
#include "cforge/errors.hpp"

#include <doctest.h>

using namespace cforge;

namespace {

std::vector<std::string> issue_codes(const SemigroupDescription& d)
{
    try {
        SquareFreeSemigroup::validate(d);
    } catch (const IssueListError& e) {
        std::vector<std::string> codes;
        for (const auto& i : e.issues())
            codes.push_back(i.code);
        return codes;
    }
    return {};
}

bool has(const std::vector<std::string>& v, const std::string& code)
{
    return std::find(v.begin(), v.end(), code) != v.end();
}

}  // namespace

TEST_CASE("example semigroup")
{
    const auto sg = example_semigroup();
    CHECK(sg->size() == 8);
    CHECK(sg->idempotent_count() == 4);
    CHECK(sg->tuples(2).size() == 12);
    CHECK(sg->tuples(0).size() == 4);
    CHECK(sg->tuples(0)[2] == std::vector<int>{2});
    const int s12 = sg->find("s12"), s24 = sg->find("s24"), e1 = sg->find("e1"), e2 = sg->find("e2");
    CHECK(sg->compose(s12, s24) == SquareFreeSemigroup::theta);
    CHECK(sg->compose(e1, s12) == s12);
    CHECK(sg->compose(s12, e2) == s12);
    CHECK(sg->compose(e2, s12) == SquareFreeSemigroup::theta);
    CHECK(sg->radical_length() == 1);
    CHECK_THROWS_AS(sg->find("s99"), Error);
}

TEST_CASE("validation reports each kind of violation")
{
    SemigroupDescription d;
    d.idempotents = {"e1", "e2"};
    d.elements = {{"a", "e1", "e2"}, {"b", "e1", "e2"}};
    CHECK(has(issue_codes(d), "SquareFreeViolation"));

    d.elements = {{"a", "e1", "e2"}, {"b", "e2", "e1"}};
    d.products = {{"a", "b", "e1"}};  // a.b lands on an idempotent: not nilpotent
    CHECK(!issue_codes(d).empty());

    d.products = {{"a", "a", "a"}};  // tgt(a) != src(a)
    CHECK(has(issue_codes(d), "BadTyping"));

    d.products = {{"a", "zz", "a"}};
    CHECK(has(issue_codes(d), "UnknownElement"));

    // (s12.s23).s34 = s14 but s12.(s23.s34) = s12.theta.
    SemigroupDescription chain;
    chain.idempotents = {"e1", "e2", "e3", "e4"};
    chain.elements = {{"s12", "e1", "e2"}, {"s23", "e2", "e3"}, {"s34", "e3", "e4"}, {"s13", "e1", "e3"},
                      {"s14", "e1", "e4"}};
    chain.products = {{"s12", "s23", "s13"}, {"s13", "s34", "s14"}};
    CHECK(has(issue_codes(chain), "NotAssociative"));
    chain.elements.push_back({"s24", "e2", "e4"});
    chain.products.push_back({"s23", "s34", "s24"});
    chain.products.push_back({"s12", "s24", "s14"});
    CHECK(issue_codes(chain).empty());

    SemigroupDescription single;
    single.idempotents = {"e"};
    CHECK(issue_codes(single).empty());

    SemigroupDescription many;
    for (int i = 0; i < 9; ++i)
        many.idempotents.push_back("e" + std::to_string(i));
    CHECK(has(issue_codes(many), "TooManyIdempotents"));
    CHECK_NOTHROW(SquareFreeSemigroup::validate(many, {9}));
}

TEST_CASE("automorphism groups")
{
    const auto sg = example_semigroup();
    const auto autos = enumerate_autos(*sg);
    REQUIRE(autos.size() == 2);
    CHECK(autos.front().is_identity());
    const auto& swap = autos.back();
    CHECK(swap(sg->find("e2")) == sg->find("e3"));
    CHECK(swap(sg->find("s12")) == sg->find("s13"));
    CHECK(swap(sg->find("s24")) == sg->find("s34"));
    CHECK(autos == oracle::brute_autos(*sg));

    CHECK(enumerate_autos(*path_semigroup()).size() == 1);
    CHECK(oracle::brute_autos(*path_semigroup()).size() == 1);
    CHECK(enumerate_autos(*chain_semigroup()).size() == 1);

    SemigroupDescription two;
    two.idempotents = {"e1", "e2"};
    CHECK(enumerate_autos(SquareFreeSemigroup::validate(two)).size() == 2);
    SemigroupDescription one;
    one.idempotents = {"e"};
    CHECK(enumerate_autos(SquareFreeSemigroup::validate(one)).size() == 1);
}

TEST_CASE("Aut(S) is a group")
{
    for (const auto& sg : {example_semigroup(), chain_semigroup(), path_semigroup()}) {
        const auto autos = enumerate_autos(*sg);
        for (const auto& a : autos) {
            CHECK(std::binary_search(autos.begin(), autos.end(), a.inverse()));
            CHECK((a * a.inverse()).is_identity());
            for (const auto& b : autos)
                CHECK(std::binary_search(autos.begin(), autos.end(), a * b));
        }
    }
}

TEST_CASE("associativity and tuple projections")
{
    for (const auto& sg : {example_semigroup(), chain_semigroup(), path_semigroup()}) {
        const int n = static_cast<int>(sg->size());
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int u = 0; u < n; ++u)
                    CHECK(sg->compose(sg->compose(s, t), u) == sg->compose(s, sg->compose(t, u)));
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto longer = sg->tuples(k + 1);
            const auto shorter = sg->tuples(k);
            for (auto tuple : longer) {
                tuple.pop_back();
                CHECK(std::binary_search(shorter.begin(), shorter.end(), tuple));
            }
        }
    }
    CHECK(chain_semigroup()->radical_length() == 3);
}
