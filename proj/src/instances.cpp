#include "cforge/instances.hpp"

namespace cforge {

namespace {

SemigroupPtr build(SemigroupDescription d)
{
    return std::make_shared<const SquareFreeSemigroup>(SquareFreeSemigroup::validate(d));
}

}  // namespace

SemigroupPtr example_semigroup()
{
    SemigroupDescription d;
    d.idempotents = {"e1", "e2", "e3", "e4"};
    d.elements = {{"s12", "e1", "e2"}, {"s13", "e1", "e3"}, {"s24", "e2", "e4"}, {"s34", "e3", "e4"}};
    return build(std::move(d));
}

SemigroupPtr path_semigroup()
{
    SemigroupDescription d;
    d.idempotents = {"e1", "e2", "e3"};
    d.elements = {{"s12", "e1", "e2"}, {"s23", "e2", "e3"}, {"s13", "e1", "e3"}};
    d.products = {{"s12", "s23", "s13"}};
    return build(std::move(d));
}

SemigroupPtr chain_semigroup()
{
    SemigroupDescription d;
    for (int i = 1; i <= 4; ++i)
        d.idempotents.push_back("e" + std::to_string(i));
    auto arrow = [](int i, int j) { return "s" + std::to_string(i) + std::to_string(j); };
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            d.elements.push_back({arrow(i, j), "e" + std::to_string(i), "e" + std::to_string(j)});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = j + 1; k <= 4; ++k)
                d.products.push_back({arrow(i, j), arrow(j, k), arrow(i, k)});
    return build(std::move(d));
}

Instance example_instance(DomainPtr domain)
{
    auto sg = example_semigroup();
    TwoCochain c(sg, domain);
    c.set_alpha(sg->find("s34"), RingAuto::frobenius(domain, 1));
    return {domain, sg, std::move(c)};
}

Instance trivial_instance(SemigroupPtr sg, DomainPtr domain)
{
    TwoCochain c(sg, domain);
    return {std::move(domain), std::move(sg), std::move(c)};
}

Gauge random_gauge(const SemigroupPtr& sg, const DomainPtr& domain, Rng& rng)
{
    Gauge g = Gauge::identity(sg, domain);
    for (std::size_t e = 0; e < sg->idempotent_count(); ++e) {
        if (domain->kind() == DomainKind::finite_field) {
            const auto autos = enumerate_autos(domain);
            g.set_mu(static_cast<int>(e), autos[rng() % autos.size()]);
        } else if (domain->kind() == DomainKind::rational_quaternion) {
            g.set_mu(static_cast<int>(e), RingAuto::rho(sample_unit(domain, rng)));
        }
    }
    for (std::size_t s = 0; s < sg->size(); ++s)
        g.set_eta(static_cast<int>(s), sample_unit(domain, rng));
    return g;
}

TwoCochain random_twist(const TwoCochain& c, Rng& rng)
{
    return act_gauge(random_gauge(c.semigroup(), c.domain(), rng), c);
}

TwoCochain quaternion_cocycle(std::uint64_t seed)
{
    Rng rng(seed);
    const auto domain = ScalarDomain::quaternions();
    const auto sg = chain_semigroup();
    return act_gauge(random_gauge(sg, domain, rng), TwoCochain(sg, domain));
}

}  // namespace cforge
