#include "cforge/cohomology.hpp"

#include "cforge/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cforge {

namespace {

void require_setting(const TwoCochain& c)
{
    require_cocycle(c);
    if (!c.domain()->is_finite())
        throw Error(ErrorKind::not_enumerable, "cannot enumerate over " + c.domain()->describe());
    if (!is_normal(c))
        throw Error(ErrorKind::not_normal, "cocycle must be normal; run normalize first");
}

// Calls f on every eps in units^E (mixed radix, first idempotent fastest).
template <class F>
void for_each_eps(const TwoCochain& c, F&& f)
{
    const auto units = enumerate_units(c.domain());
    const std::size_t m = c.sg().idempotent_count();
    std::vector<std::size_t> digits(m, 0);
    std::vector<Scalar> eps(m, units.front());
    while (true) {
        for (std::size_t e = 0; e < m; ++e)
            eps[e] = units[digits[e]];
        f(eps);
        std::size_t pos = 0;
        while (pos < m && ++digits[pos] == units.size())
            digits[pos++] = 0;
        if (pos == m)
            break;
    }
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string count_detail(const std::string& what, std::size_t got, std::size_t want)
{
    return what + " " + std::to_string(got) + (got == want ? " == " : " != ") + std::to_string(want);
}

}  // namespace

bool in_z1(const Gauge& g, const TwoCochain& c)
{
    return act_gauge(g, c) == c;
}

std::vector<OneCocycle> z1_enumerate(const TwoCochain& c, const SearchOptions& options)
{
    require_setting(c);
    std::vector<OneCocycle> out;
    for (auto& g : transporters(c, c, options))
        out.push_back({std::move(g)});
    return out;
}

OneCocycle star_act(const std::vector<Scalar>& eps, const OneCocycle& oc, const TwoCochain& c)
{
    require_same_setting(oc.gauge, c);
    const auto& sg = c.sg();
    if (eps.size() != sg.idempotent_count())
        throw Error(ErrorKind::invalid_argument, "eps must be given on every idempotent");
    std::vector<RingAuto> mu;
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e) {
        require_same_domain(*c.domain(), *eps[e].domain());
        mu.push_back(compose(RingAuto::rho(eps[e]), oc.gauge.mu(static_cast<int>(e))));
    }
    std::vector<Scalar> eta;
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const int s = static_cast<int>(i);
        eta.push_back(eps[sg.src(s)] * oc.gauge.eta(s) * c.alpha(s)(eps[sg.tgt(s)].inverse()));
    }
    return {Gauge(c.semigroup(), c.domain(), std::move(mu), std::move(eta))};
}

std::vector<OneCocycle> b1_enumerate(const TwoCochain& c, const SearchOptions&)
{
    require_setting(c);
    const OneCocycle identity{Gauge::identity(c.semigroup(), c.domain())};
    std::vector<OneCocycle> out;
    for_each_eps(c, [&](const std::vector<Scalar>& eps) { out.push_back(star_act(eps, identity, c)); });
    return sorted_unique(std::move(out));
}

CohomologyGroupReport h1(const TwoCochain& c, const SearchOptions& options)
{
    CohomologyGroupReport report;
    report.z1 = z1_enumerate(c, options);
    report.b1 = b1_enumerate(c, options);

    std::map<Gauge, std::size_t> index;
    for (std::size_t i = 0; i < report.z1.size(); ++i)
        index.emplace(report.z1[i].gauge, i);
    std::set<Gauge> b1_set;
    for (const auto& b : report.b1)
        b1_set.insert(b.gauge);

    report.b1_subset = std::all_of(report.b1.begin(), report.b1.end(),
                                   [&](const OneCocycle& b) { return index.count(b.gauge) > 0; });
    if (!report.b1_subset)
        return report;

    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    report.coset_of.assign(report.z1.size(), unassigned);
    for (std::size_t i = 0; i < report.z1.size(); ++i) {
        if (report.coset_of[i] != unassigned)
            continue;
        const std::size_t k = report.h1_cosets.size();
        report.h1_cosets.push_back(report.z1[i]);
        for (const auto& b : report.b1) {
            auto it = index.find(gauge_compose(report.z1[i].gauge, b.gauge));
            if (it != index.end())
                report.coset_of[it->second] = k;
        }
    }
    report.h1_order = report.h1_cosets.size();

    report.b1_normal = true;
    for (const auto& z : report.z1) {
        const Gauge z_inv = gauge_inverse(z.gauge);
        for (const auto& b : report.b1)
            if (!b1_set.count(gauge_compose(gauge_compose(z_inv, b.gauge), z.gauge))) {
                report.b1_normal = false;
                break;
            }
        if (!report.b1_normal)
            break;
    }

    report.table.assign(report.h1_order, std::vector<std::size_t>(report.h1_order, unassigned));
    for (std::size_t i = 0; i < report.h1_order; ++i)
        for (std::size_t j = 0; j < report.h1_order; ++j) {
            auto it = index.find(gauge_compose(report.h1_cosets[i].gauge, report.h1_cosets[j].gauge));
            if (it != index.end())
                report.table[i][j] = report.coset_of[it->second];
        }
    return report;
}

NormalRingAutoTriple lambda_map(const OneCocycle& oc, const TwoCochain& c)
{
    if (!in_z1(oc.gauge, c))
        throw Error(ErrorKind::invalid_argument, "gauge is not a 1-cocycle for this cocycle");
    return MonomialMap::from_gauge(oc.gauge);
}

std::vector<NormalRingAutoTriple> aut0_enumerate(const TwoCochain& c, const SearchOptions& options)
{
    require_setting(c);
    std::vector<NormalRingAutoTriple> out;
    for (const auto& phi : enumerate_autos(c.sg()))
        for (auto& g : transporters(act_phi(phi, c), c, options))
            out.push_back(MonomialMap::from_gauge(g, phi));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormalRingAutoTriple> inn0_enumerate(const TwoCochain& c, const SearchOptions&)
{
    require_setting(c);
    const auto ring = TwistedRing::create(c);
    const auto& sg = c.sg();
    const auto samples = generator_scalars(c.domain());
    std::vector<NormalRingAutoTriple> out;
    for_each_eps(c, [&](const std::vector<Scalar>& eps) {
        RingElement::Coefficients coeffs;
        for (std::size_t e = 0; e < eps.size(); ++e)
            coeffs.emplace(static_cast<int>(e), eps[e]);
        const InnerAutomorphism rho(RingElement(ring, std::move(coeffs)));

        MonomialMap triple = MonomialMap::identity(sg, c.domain());
        for (std::size_t e = 0; e < eps.size(); ++e)
            triple.mu[e] = RingAuto::rho(eps[e]);
        for (std::size_t i = 0; i < sg.size(); ++i)
            triple.eta[i] = rho(ring->basis(static_cast<int>(i))).coefficient(static_cast<int>(i));

        const RingIso sigma(ring, ring, triple);
        for (std::size_t i = 0; i < sg.size(); ++i)
            for (const auto& d : samples) {
                const RingElement x = ring->monomial(d, static_cast<int>(i));
                if (!(rho(x) == sigma(x)))
                    throw std::logic_error("inner automorphism is not monomial on " + x.to_string());
            }
        out.push_back(std::move(triple));
    });
    return sorted_unique(std::move(out));
}

OutRReport out_r(const TwoCochain& c, const SearchOptions& options)
{
    OutRReport report;
    report.aut0 = aut0_enumerate(c, options);
    report.inn0 = inn0_enumerate(c, options);
    report.inn0_order = report.inn0.size();
    report.inn0_in_aut0 = std::all_of(report.inn0.begin(), report.inn0.end(), [&](const auto& t) {
        return std::binary_search(report.aut0.begin(), report.aut0.end(), t);
    });
    report.out_order = report.inn0_order ? report.aut0.size() / report.inn0_order : 0;
    std::vector<SemigroupAuto> phis;
    for (const auto& t : report.aut0)
        phis.push_back(t.phi);
    report.phi_image = sorted_unique(std::move(phis));
    return report;
}

SesVerdict verify_ses(const TwoCochain& c, const SearchOptions& options)
{
    require_setting(c);
    const auto& sg = c.sg();
    const CohomologyGroupReport h = h1(c, options);
    const OutRReport out = out_r(c, options);
    const auto stab = stabilizer_of_class(c, options);
    const auto aut_s = enumerate_autos(sg);

    SesVerdict verdict;
    verdict.h1_order = h.h1_order;
    verdict.out_order = out.out_order;
    verdict.stab_order = stab.size();
    verdict.aut_s_order = aut_s.size();

    const std::set<MonomialMap> inn0(out.inn0.begin(), out.inn0.end());
    auto inner_equivalent = [&](const MonomialMap& a, const MonomialMap& b) {
        return inn0.count(compose(sg, a, inverse(sg, b))) > 0;
    };

    {
        SesClause clause{"injective", true, true, ""};
        if (!h.b1_subset || !h.b1_normal || h.z1.size() != h.b1.size() * h.h1_order) {
            clause.ok = false;
            clause.detail = "B1 is not a normal subgroup of Z1 with |Z1| = |B1| |H1|";
        }
        for (std::size_t i = 0; clause.ok && i < h.z1.size(); ++i)
            if (!inner_equivalent(lambda_map(h.z1[i], c), lambda_map(h.h1_cosets[h.coset_of[i]], c))) {
                clause.ok = false;
                clause.detail = "Lambda not constant on the coset of " + describe(h.z1[i].gauge);
            }
        for (std::size_t i = 0; clause.ok && i < h.h1_order; ++i)
            for (std::size_t j = i + 1; clause.ok && j < h.h1_order; ++j)
                if (inner_equivalent(lambda_map(h.h1_cosets[i], c), lambda_map(h.h1_cosets[j], c))) {
                    clause.ok = false;
                    clause.detail = "cosets " + std::to_string(i) + " and " + std::to_string(j) + " collapse";
                }
        if (clause.ok)
            clause.detail = std::to_string(h.h1_order) + " cosets map to distinct outer classes";
        verdict.clauses.push_back(std::move(clause));
    }

    {
        SesClause clause{"image_kernel", true, true, ""};
        std::vector<MonomialMap> kernel;
        for (const auto& t : out.aut0)
            if (t.phi.is_identity())
                kernel.push_back(t);
        std::vector<MonomialMap> image;
        for (const auto& z : h.z1)
            image.push_back(lambda_map(z, c));
        image = sorted_unique(std::move(image));
        if (image != kernel) {
            clause.ok = false;
            clause.detail = "Lambda(Z1) has " + std::to_string(image.size()) + " triples, ker Phi has " +
                            std::to_string(kernel.size());
        } else if (!out.inn0_order || kernel.size() != out.inn0_order * h.h1_order) {
            clause.ok = false;
            clause.detail = count_detail("|ker Phi / Inn0|", out.inn0_order ? kernel.size() / out.inn0_order : 0,
                                         h.h1_order);
        } else {
            clause.detail = "ker Phi = Lambda(Z1), " + std::to_string(kernel.size()) + " triples";
        }
        verdict.clauses.push_back(std::move(clause));
    }

    {
        SesClause clause{"image_stab", out.phi_image == stab, true, ""};
        clause.detail = "|Im Phi| = " + std::to_string(out.phi_image.size()) + ", |Stab| = " +
                        std::to_string(stab.size());
        verdict.clauses.push_back(std::move(clause));
    }

    {
        const bool ok = out.inn0_in_aut0 && out.inn0_order && out.aut0.size() == out.inn0_order * out.out_order &&
                        out.out_order == h.h1_order * stab.size();
        SesClause clause{"orders", ok, true, ""};
        std::ostringstream os;
        os << "|Aut0| = " << out.aut0.size() << ", |Inn0| = " << out.inn0_order << ", |Out R| = " << out.out_order
           << ", |H1| |Stab| = " << h.h1_order * stab.size();
        clause.detail = os.str();
        verdict.clauses.push_back(std::move(clause));
    }

    {
        SesClause clause{"split", true, false, "class is not trivial"};
        const TwoCochain trivial(c.semigroup(), c.domain());
        if (auto g = cohomologous(c, trivial, options)) {
            verdict.trivial_class = true;
            clause.applicable = true;
            // gamma_g: R_trivial -> R_c; transport the section through it.
            const auto ring = TwistedRing::create(c);
            const MonomialMap m = MonomialMap::from_gauge(*g);
            const MonomialMap m_inv = inverse(sg, m);
            auto psi = [&](const SemigroupAuto& phi) {
                MonomialMap plain = MonomialMap::identity(sg, c.domain());
                plain.phi = phi;
                return compose(sg, m, compose(sg, plain, m_inv));
            };
            std::size_t checked = 0;
            for (const auto& phi : aut_s) {
                const MonomialMap t = psi(phi);
                if (!(t.phi == phi)) {
                    clause.ok = false;
                    clause.detail = "Phi(Psi(" + describe(sg, phi) + ")) differs";
                    break;
                }
                if (!std::binary_search(out.aut0.begin(), out.aut0.end(), t) ||
                    !verify_ring_hom(RingIso(ring, ring, t)).ok) {
                    clause.ok = false;
                    clause.detail = "Psi(" + describe(sg, phi) + ") is not an automorphism";
                    break;
                }
                for (const auto& chi : aut_s)
                    if (!(psi(phi * chi) == compose(sg, t, psi(chi)))) {
                        clause.ok = false;
                        clause.detail = "Psi is not a homomorphism";
                    }
                if (!clause.ok)
                    break;
                ++checked;
            }
            if (clause.ok) {
                clause.ok = out.out_order == h.h1_order * aut_s.size();
                clause.detail = "Phi Psi = 1 on " + std::to_string(checked) + " automorphisms; " +
                                count_detail("|Out R|", out.out_order, h.h1_order * aut_s.size());
            }
        }
        verdict.clauses.push_back(std::move(clause));
    }

    verdict.ok = std::all_of(verdict.clauses.begin(), verdict.clauses.end(), [](const SesClause& k) { return k.ok; });
    return verdict;
}

}  // namespace cforge
