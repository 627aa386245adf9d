// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "cforge/commands.hpp"
#include "cforge/instances.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cforge;

namespace {

struct Outcome
{
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok)
            detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

RingElement random_element(const RingPtr& ring, Rng& rng)
{
    RingElement::Coefficients c;
    for (std::size_t s = 0; s < ring->sg().size(); ++s)
        c.emplace(static_cast<int>(s), sample_scalar(ring->domain(), rng));
    return RingElement(ring, std::move(c));
}

void example_counts(Outcome& out)
{
    const auto start = std::chrono::steady_clock::now();
    const auto inst = example_instance();
    const auto& c = inst.cocycle;
    const std::size_t aut_s = enumerate_autos(*inst.semigroup).size();
    const std::size_t stab = stabilizer_of_class(c).size();
    const auto report = h1(c);
    const auto out_report = out_r(c);
    const auto ses = verify_ses(c);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.expect(aut_s == 2, "|Aut S| = " + std::to_string(aut_s));
    out.expect(stab == 2, "|Stab| = " + std::to_string(stab));
    out.expect(report.h1_order == 2, "|H1| = " + std::to_string(report.h1_order));
    out.expect(report.h1_order == enumerate_autos(inst.domain).size(), "|H1| != |Aut D|");
    out.expect(report.z1.size() == 162, "|Z1| = " + std::to_string(report.z1.size()));
    out.expect(report.b1.size() == 81, "|B1| = " + std::to_string(report.b1.size()));
    out.expect(out_report.out_order == 4, "|Out R| = " + std::to_string(out_report.out_order));
    out.expect(ses.ok, "sequence not exact");
    out.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
    out.detail << "AutS=" << aut_s << " Stab=" << stab << " H1=" << report.h1_order << " Z1=" << report.z1.size()
               << " B1=" << report.b1.size() << " OutR=" << out_report.out_order << " exact=" << ses.ok
               << " time=" << secs << "s";
}

void cocycle_closure(Outcome& out)
{
    const auto inst = example_instance();
    const auto autos = enumerate_autos(*inst.semigroup);
    Rng rng(2024);
    std::size_t checked = 0;
    for (int n = 0; n < 500; ++n) {
        const Gauge g = random_gauge(inst.semigroup, inst.domain, rng);
        const TwoCochain moved = act_gauge(g, inst.cocycle);
        out.expect(is_cocycle(moved).violations.empty(), "act_gauge sample " + std::to_string(n));
        ++checked;
        for (const auto& phi : autos) {
            out.expect(is_cocycle(act_phi(phi, moved)).violations.empty(), "act_phi sample " + std::to_string(n));
            ++checked;
        }
    }
    out.detail << checked << " cochains checked";
}

void action_axioms(Outcome& out)
{
    const auto inst = example_instance();
    const auto autos = enumerate_autos(*inst.semigroup);
    Rng rng(77);
    const int samples = 200;
    for (int n = 0; n < samples; ++n) {
        const Gauge g1 = random_gauge(inst.semigroup, inst.domain, rng);
        const Gauge g2 = random_gauge(inst.semigroup, inst.domain, rng);
        const TwoCochain c = random_twist(inst.cocycle, rng);
        out.expect(act_gauge(gauge_compose(g1, g2), c) == act_gauge(g1, act_gauge(g2, c)), "gauge law");
        out.expect(act_gauge(Gauge::identity(inst.semigroup, inst.domain), c) == c, "gauge identity");

        const auto& phi = autos[rng() % autos.size()];
        const auto& psi = autos[rng() % autos.size()];
        out.expect(act_phi(psi, act_phi(phi, c)) == act_phi(phi * psi, c), "Aut(S) law");
        out.expect(act_gauge(twist_gauge(g1, phi), act_phi(phi, c)) == act_phi(phi, act_gauge(g1, c)),
                   "compatibility");
    }
    out.detail << samples << " samples per law";
}

void iso_round_trip(Outcome& out)
{
    const auto inst = example_instance();
    const auto autos = enumerate_autos(*inst.semigroup);
    const RunConfig config;
    Rng rng(4242);
    int verified = 0;
    const int samples = 100;
    for (int n = 0; n < samples; ++n) {
        const Gauge g = random_gauge(inst.semigroup, inst.domain, rng);
        const auto& phi = autos[n % autos.size()];
        const Instance twisted{inst.domain, inst.semigroup, act_gauge(g, act_phi(phi, inst.cocycle))};
        const CommandResult r = cmd_iso_check(inst, twisted, config);
        if (r.json.value("status", "") != "isomorphic") {
            out.expect(false, "no witness for sample " + std::to_string(n));
            continue;
        }
        const auto w = witness_from_json(r.json["witness"], inst.semigroup, inst.domain);
        const RingIso iso = build_iso(TwistedRing::create(twisted.cocycle), TwistedRing::create(inst.cocycle), w);
        const bool ok = verify_ring_hom(iso, static_cast<std::uint64_t>(n)).ok;
        out.expect(ok, "ring map fails for sample " + std::to_string(n));
        verified += ok;
    }
    const auto trivial = trivial_instance(inst.semigroup, inst.domain);
    const std::string none = cmd_iso_check(trivial, inst, config).json.value("status", "");
    out.expect(none == "none", "trivial vs example returned " + none);
    out.detail << verified << "/" << samples << " verified, trivial vs example: " << none;
}

void associativity(Outcome& out)
{
    std::size_t triples = 0;
    for (const auto& inst : {example_instance(), example_instance(ScalarDomain::finite_field(3, 2))}) {
        const auto ring = TwistedRing::create(inst.cocycle);
        const int n = static_cast<int>(inst.semigroup->size());
        for (const auto& d : generator_scalars(inst.domain))
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    for (int u = 0; u < n; ++u) {
                        const auto x = ring->monomial(d, s), y = ring->monomial(d, t), z = ring->monomial(d, u);
                        out.expect((x * y) * z == x * (y * z), "basis triple over " + inst.domain->describe());
                        ++triples;
                    }
    }

    const TwoCochain q = quaternion_cocycle(11);
    bool inner = false;
    for (std::size_t s = 0; s < q.sg().size(); ++s)
        inner = inner || q.alpha(static_cast<int>(s)).form() == RingAuto::Form::inner;
    out.expect(inner, "quaternion cocycle has no inner alpha");
    const auto ring = TwistedRing::create(q);
    Rng rng(5);
    for (int n = 0; n < 500; ++n) {
        const auto x = random_element(ring, rng), y = random_element(ring, rng), z = random_element(ring, rng);
        out.expect((x * y) * z == x * (y * z), "dense quaternion triple " + std::to_string(n));
    }

    std::size_t pairs = 0;
    for (const auto& c : {example_instance().cocycle, example_instance(ScalarDomain::finite_field(3, 2)).cocycle, q}) {
        for (const auto& pair : c.sg().tuples(2)) {
            const int s = pair[0], t = pair[1];
            out.expect(compose(c.alpha(s), c.alpha(t)) ==
                           compose(RingAuto::rho(c.xi(s, t)), c.alpha(c.sg().compose(s, t))),
                       "alpha_s alpha_t identity");
            ++pairs;
        }
    }
    out.detail << triples << " basis triples, 500 quaternion triples, " << pairs << " composable pairs";
}

void normalization(Outcome& out)
{
    Rng rng(99);
    int done = 0, attempts = 0;
    for (const auto& inst : {example_instance(), example_instance(ScalarDomain::finite_field(3, 2))}) {
        const auto& sg = *inst.semigroup;
        for (int n = 0; n < 60; ++attempts) {
            const TwoCochain c = random_twist(inst.cocycle, rng);
            if (is_normal(c))
                continue;
            ++n;
            ++done;
            const auto result = normalize(c);
            out.expect(is_normal(result.normalized), "not normal");
            out.expect(act_gauge(result.gauge, c) == result.normalized, "gauge does not reproduce output");
            for (const auto& pair : sg.tuples(2)) {
                const int s = pair[0], t = pair[1];
                if (sg.is_idempotent(s) || sg.is_idempotent(t))
                    out.expect(result.normalized.xi(s, t).is_one(), "xi(e,s) or xi(s,f) != 1");
            }
        }
    }
    out.detail << done << " non-normal cocycles normalized";
}

void split_case(Outcome& out)
{
    const auto inst = trivial_instance(example_semigroup(), ScalarDomain::finite_field(2, 2));
    const auto& sg = *inst.semigroup;
    const auto autos = enumerate_autos(sg);
    const auto ring = TwistedRing::create(inst.cocycle);
    const auto aut0 = out_r(inst.cocycle);
    // Psi(phi) is d.s -> d.phi(s); Phi reads off the permutation of E.
    for (const auto& phi : autos) {
        MonomialMap psi = MonomialMap::identity(sg, inst.domain);
        psi.phi = phi;
        out.expect(verify_ring_hom(RingIso(ring, ring, psi)).ok, "Psi(phi) is not a ring automorphism");
        out.expect(std::binary_search(aut0.aut0.begin(), aut0.aut0.end(), psi), "Psi(phi) not in Aut0");
        out.expect(psi.phi == phi, "Phi(Psi(phi)) != phi");
    }
    const auto ses = verify_ses(inst.cocycle);
    out.expect(ses.ok, "sequence not exact");
    out.expect(ses.clauses.size() == 5 && ses.clauses[4].applicable && ses.clauses[4].ok, "split clause");
    out.expect(ses.out_order == ses.h1_order * autos.size(), "|Out R| != |H1| |Aut S|");
    out.detail << "H1=" << ses.h1_order << " AutS=" << autos.size() << " OutR=" << ses.out_order;
}

void gf2_path_out_r(Outcome& out)
{
    const auto inst = trivial_instance(path_semigroup(), ScalarDomain::finite_field(2, 1));
    const auto autos = enumerate_autos(*inst.semigroup);
    const auto report = out_r(inst.cocycle);
    const auto ses = verify_ses(inst.cocycle);
    out.expect(autos.size() == 1, "Aut S not trivial");
    out.expect(report.out_order == 1, "Out R = " + std::to_string(report.out_order));
    out.expect(report.aut0.size() == report.inn0.size(), "Aut0 != Inn0");
    out.expect(ses.ok, "sequence not exact");
    out.detail << "AutS=" << autos.size() << " Aut0=" << report.aut0.size() << " Inn0=" << report.inn0.size()
               << " OutR=" << report.out_order;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"1 example counts and exactness", example_counts},
        {"2 cocycle closure under gauges and Aut(S)", cocycle_closure},
        {"3 action axioms", action_axioms},
        {"4 isomorphism round trip", iso_round_trip},
        {"5 ring associativity", associativity},
        {"6 normalization", normalization},
        {"7 split case", split_case},
        {"8 GF(2) path has trivial Out R", gf2_path_out_r},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        Outcome out;
        try {
            run(out);
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail << "exception: " << e.what();
        }
        all = all && out.ok;
        std::cout << (out.ok ? "PASS" : "FAIL") << "  " << name << "  (" << out.detail.str() << ")" << std::endl;
    }
    return all ? 0 : 1;
}
