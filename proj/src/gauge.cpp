#include "cforge/gauge.hpp"

#include "cforge/errors.hpp"

#include <sstream>

namespace cforge {

Gauge::Gauge(SemigroupPtr semigroup, DomainPtr domain, std::vector<RingAuto> mu, std::vector<Scalar> eta)
    : semigroup_(std::move(semigroup)), domain_(std::move(domain)), mu_(std::move(mu)), eta_(std::move(eta))
{
    if (mu_.size() != semigroup_->idempotent_count() || eta_.size() != semigroup_->size())
        throw Error(ErrorKind::invalid_argument, "gauge must be total on E and S*");
    for (const auto& a : mu_)
        require_same_domain(*domain_, *a.domain());
    for (const auto& v : eta_) {
        require_same_domain(*domain_, *v.domain());
        if (v.is_zero())
            throw Error(ErrorKind::division_by_zero, "gauge eta values must be units");
    }
}

Gauge Gauge::identity(const SemigroupPtr& semigroup, const DomainPtr& domain)
{
    return Gauge(semigroup, domain, std::vector<RingAuto>(semigroup->idempotent_count(), RingAuto::identity(domain)),
                 std::vector<Scalar>(semigroup->size(), Scalar::one(domain)));
}

void Gauge::set_mu(Element e, RingAuto a)
{
    require_same_domain(*domain_, *a.domain());
    mu_.at(e) = std::move(a);
}

void Gauge::set_eta(Element s, Scalar value)
{
    require_same_domain(*domain_, *value.domain());
    if (value.is_zero())
        throw Error(ErrorKind::division_by_zero, "gauge eta values must be units");
    eta_.at(s) = std::move(value);
}

bool Gauge::is_identity() const
{
    for (const auto& a : mu_)
        if (!a.is_identity())
            return false;
    for (const auto& v : eta_)
        if (!v.is_one())
            return false;
    return true;
}

std::strong_ordering operator<=>(const Gauge& a, const Gauge& b)
{
    for (std::size_t i = 0; i < a.mu_.size() && i < b.mu_.size(); ++i)
        if (auto c = a.mu_[i] <=> b.mu_[i]; c != 0)
            return c;
    for (std::size_t i = 0; i < a.eta_.size() && i < b.eta_.size(); ++i)
        if (auto c = a.eta_[i] <=> b.eta_[i]; c != 0)
            return c;
    return a.eta_.size() <=> b.eta_.size();
}

void require_same_setting(const TwoCochain& a, const TwoCochain& b)
{
    require_same_domain(*a.domain(), *b.domain());
    if (!(a.sg() == b.sg()))
        throw Error(ErrorKind::setting_mismatch, "cochains live over different semigroups");
}

void require_same_setting(const Gauge& g, const TwoCochain& c)
{
    require_same_domain(*g.domain(), *c.domain());
    if (!(g.sg() == c.sg()))
        throw Error(ErrorKind::setting_mismatch, "gauge and cochain live over different semigroups");
}

TwoCochain act_gauge(const Gauge& g, const TwoCochain& c)
{
    require_same_setting(g, c);
    const auto& sg = c.sg();
    TwoCochain out(c.semigroup(), c.domain());
    std::vector<RingAuto> mu_inv;
    for (const auto& a : g.mu())
        mu_inv.push_back(a.inverse());
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const int s = static_cast<int>(i);
        out.set_alpha(s, compose(mu_inv[sg.src(s)],
                                 compose(RingAuto::rho(g.eta(s)), compose(c.alpha(s), g.mu(sg.tgt(s))))));
    }
    for (const auto& pair : sg.tuples(2)) {
        const int s = pair[0], t = pair[1];
        const Scalar inner = g.eta(s) * c.alpha(s)(g.eta(t)) * c.xi(s, t) * g.eta(sg.compose(s, t)).inverse();
        out.set_xi(s, t, mu_inv[sg.src(s)](inner));
    }
    return out;
}

Gauge gauge_compose(const Gauge& g1, const Gauge& g2)
{
    require_same_domain(*g1.domain(), *g2.domain());
    if (!(g1.sg() == g2.sg()))
        throw Error(ErrorKind::setting_mismatch, "gauges live over different semigroups");
    const auto& sg = g1.sg();
    std::vector<RingAuto> mu;
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e)
        mu.push_back(compose(g2.mu(static_cast<int>(e)), g1.mu(static_cast<int>(e))));
    std::vector<Scalar> eta;
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const int s = static_cast<int>(i);
        eta.push_back(g2.mu_src(s)(g1.eta(s)) * g2.eta(s));
    }
    return Gauge(g1.semigroup(), g1.domain(), std::move(mu), std::move(eta));
}

Gauge gauge_inverse(const Gauge& g)
{
    const auto& sg = g.sg();
    std::vector<RingAuto> mu;
    for (const auto& a : g.mu())
        mu.push_back(a.inverse());
    std::vector<Scalar> eta;
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const int s = static_cast<int>(i);
        eta.push_back(mu[sg.src(s)](g.eta(s).inverse()));
    }
    return Gauge(g.semigroup(), g.domain(), std::move(mu), std::move(eta));
}

TwoCochain act_phi(const SemigroupAuto& phi, const TwoCochain& c)
{
    const auto& sg = c.sg();
    if (phi.perm().size() != sg.size())
        throw Error(ErrorKind::invalid_argument, "automorphism does not match the semigroup");
    TwoCochain out(c.semigroup(), c.domain());
    for (std::size_t i = 0; i < sg.size(); ++i)
        out.set_alpha(static_cast<int>(i), c.alpha(phi(static_cast<int>(i))));
    for (const auto& pair : sg.tuples(2))
        out.set_xi(pair[0], pair[1], c.xi(phi(pair[0]), phi(pair[1])));
    return out;
}

Gauge twist_gauge(const Gauge& g, const SemigroupAuto& phi)
{
    const auto& sg = g.sg();
    std::vector<RingAuto> mu;
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e)
        mu.push_back(g.mu(phi(static_cast<int>(e))));
    std::vector<Scalar> eta;
    for (std::size_t s = 0; s < sg.size(); ++s)
        eta.push_back(g.eta(phi(static_cast<int>(s))));
    return Gauge(g.semigroup(), g.domain(), std::move(mu), std::move(eta));
}

Normalization normalize(const TwoCochain& c)
{
    require_cocycle(c);
    Gauge g = Gauge::identity(c.semigroup(), c.domain());
    for (std::size_t e = 0; e < c.sg().idempotent_count(); ++e) {
        const int i = static_cast<int>(e);
        g.set_eta(i, c.xi(i, i).inverse());
    }
    TwoCochain normalized = act_gauge(g, c);
    return {std::move(normalized), std::move(g)};
}

std::vector<SemigroupAuto> stabilizer_of_class(const TwoCochain& c, const SearchOptions& options)
{
    std::vector<SemigroupAuto> out;
    for (auto& phi : enumerate_autos(c.sg()))
        if (cohomologous(c, act_phi(phi, c), options))
            out.push_back(std::move(phi));
    return out;
}

std::string describe(const Gauge& g)
{
    std::ostringstream os;
    const auto& sg = g.sg();
    os << "mu[";
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e)
        os << (e ? ", " : "") << sg.name(static_cast<int>(e)) << ":" << g.mu(static_cast<int>(e)).to_string();
    os << "] eta[";
    for (std::size_t s = 0; s < sg.size(); ++s)
        os << (s ? ", " : "") << sg.name(static_cast<int>(s)) << ":" << g.eta(static_cast<int>(s)).to_string();
    os << "]";
    return os.str();
}

}  // namespace cforge
