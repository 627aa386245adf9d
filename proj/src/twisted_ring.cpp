#include "cforge/twisted_ring.hpp"

#include "cforge/errors.hpp"

#include <sstream>

namespace cforge {

// ---------------------------------------------------------------------------
// TwistedRing

RingPtr TwistedRing::create(TwoCochain cocycle)
{
    require_cocycle(cocycle);
    return RingPtr(new TwistedRing(std::move(cocycle)));
}

RingElement TwistedRing::zero() const
{
    return RingElement(shared_from_this(), {});
}

RingElement TwistedRing::one() const
{
    RingElement::Coefficients c;
    for (std::size_t e = 0; e < sg().idempotent_count(); ++e) {
        const int i = static_cast<int>(e);
        c.emplace(i, cocycle_.xi(i, i).inverse());
    }
    return RingElement(shared_from_this(), std::move(c));
}

RingElement TwistedRing::basis(Element s) const
{
    return monomial(Scalar::one(domain()), s);
}

RingElement TwistedRing::monomial(const Scalar& d, Element s) const
{
    return RingElement(shared_from_this(), {{s, d}});
}

std::optional<std::pair<Scalar, TwistedRing::Element>> TwistedRing::basis_product(Element s, Element t) const
{
    const Element u = sg().compose(s, t);
    if (u == SquareFreeSemigroup::theta)
        return std::nullopt;
    return std::pair{cocycle_.xi(s, t), u};
}

// ---------------------------------------------------------------------------
// RingElement

namespace {
void require_same_ring(const RingElement& a, const RingElement& b)
{
    if (a.ring() != b.ring())
        throw Error(ErrorKind::ring_mismatch, "elements belong to different rings");
}
}  // namespace

RingElement::RingElement(RingPtr ring, Coefficients coeffs) : ring_(std::move(ring))
{
    for (auto& [s, d] : coeffs) {
        if (s < 0 || static_cast<std::size_t>(s) >= ring_->sg().size())
            throw Error(ErrorKind::unknown_element, "coefficient on element index " + std::to_string(s));
        require_same_domain(*ring_->domain(), *d.domain());
        if (!d.is_zero())
            coeffs_.emplace(s, std::move(d));
    }
}

Scalar RingElement::coefficient(Element s) const
{
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Scalar::zero(ring_->domain()) : it->second;
}

RingElement operator+(const RingElement& a, const RingElement& b)
{
    require_same_ring(a, b);
    RingElement::Coefficients out = a.coeffs_;
    for (const auto& [s, d] : b.coeffs_) {
        auto [it, inserted] = out.emplace(s, d);
        if (!inserted)
            it->second = it->second + d;
    }
    return RingElement(a.ring_, std::move(out));
}

RingElement operator-(const RingElement& a)
{
    RingElement::Coefficients out;
    for (const auto& [s, d] : a.coeffs_)
        out.emplace(s, -d);
    return RingElement(a.ring_, std::move(out));
}

RingElement operator-(const RingElement& a, const RingElement& b)
{
    return a + (-b);
}

RingElement operator*(const RingElement& a, const RingElement& b)
{
    require_same_ring(a, b);
    const auto& c = a.ring_->cocycle();
    const auto& sg = c.sg();
    RingElement::Coefficients out;
    for (const auto& [s, d1] : a.coeffs_) {
        for (const auto& [t, d2] : b.coeffs_) {
            const int u = sg.compose(s, t);
            if (u == SquareFreeSemigroup::theta)
                continue;
            Scalar term = d1 * c.alpha(s)(d2) * c.xi(s, t);
            auto [it, inserted] = out.emplace(u, term);
            if (!inserted)
                it->second = it->second + term;
        }
    }
    return RingElement(a.ring_, std::move(out));
}

RingElement operator*(const Scalar& d, const RingElement& a)
{
    RingElement::Coefficients out;
    for (const auto& [s, v] : a.coeffs_)
        out.emplace(s, d * v);
    return RingElement(a.ring_, std::move(out));
}

bool operator==(const RingElement& a, const RingElement& b)
{
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

bool RingElement::is_unit() const
{
    for (std::size_t e = 0; e < ring_->sg().idempotent_count(); ++e)
        if (!coeffs_.count(static_cast<Element>(e)))
            return false;
    return true;
}

RingElement RingElement::inverse() const
{
    if (!is_unit())
        throw Error(ErrorKind::not_a_unit, to_string() + " has a zero idempotent coefficient");
    const auto& c = ring_->cocycle();
    const auto& sg = c.sg();
    // r = u + n with u diagonal and n in the nilpotent span of the arrows.
    Coefficients u_inv_coeffs;
    Coefficients n_coeffs;
    for (const auto& [s, d] : coeffs_) {
        if (sg.is_idempotent(s)) {
            // (d e)(x e) = d alpha_e(x) xi(e,e) e must equal xi(e,e)^-1 e.
            const Scalar xi_inv = c.xi(s, s).inverse();
            u_inv_coeffs.emplace(s, c.alpha(s).inverse()(d.inverse() * xi_inv * xi_inv));
        } else {
            n_coeffs.emplace(s, d);
        }
    }
    const RingElement u_inv(ring_, std::move(u_inv_coeffs));
    const RingElement n(ring_, std::move(n_coeffs));
    // r = (1 + n u^-1) u, so r^-1 = u^-1 sum_m (-n u^-1)^m.
    const RingElement step = -(n * u_inv);
    RingElement term = ring_->one();
    RingElement series = term;
    for (std::size_t m = 0; m <= sg.radical_length() && !term.is_zero(); ++m) {
        term = term * step;
        series = series + term;
    }
    RingElement inv = u_inv * series;
    if (!(*this * inv == ring_->one()) || !(inv * *this == ring_->one()))
        throw std::logic_error("unit inverse failed to verify");
    return inv;
}

std::string RingElement::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, d] : coeffs_) {
        if (!first)
            os << " + ";
        os << "(" << d.to_string() << ")" << ring_->sg().name(s);
        first = false;
    }
    return os.str();
}

RingElement ring_mul(const RingElement& a, const RingElement& b)
{
    return a * b;
}

RingElement ring_add(const RingElement& a, const RingElement& b)
{
    return a + b;
}

RingElement ring_one(const TwistedRing& ring)
{
    return ring.one();
}

InnerAutomorphism::InnerAutomorphism(RingElement r) : r_(std::move(r)), r_inv_(r_.inverse()) {}

InnerAutomorphism inner_auto(const RingElement& r)
{
    return InnerAutomorphism(r);
}

// ---------------------------------------------------------------------------
// MonomialMap

MonomialMap MonomialMap::identity(const SquareFreeSemigroup& sg, const DomainPtr& domain)
{
    return {std::vector<RingAuto>(sg.idempotent_count(), RingAuto::identity(domain)),
            std::vector<Scalar>(sg.size(), Scalar::one(domain)), SemigroupAuto::identity(sg.size())};
}

MonomialMap MonomialMap::from_gauge(const Gauge& g, std::optional<SemigroupAuto> phi)
{
    return {g.mu(), g.eta(), phi ? *phi : SemigroupAuto::identity(g.sg().size())};
}

Gauge MonomialMap::gauge(const SemigroupPtr& sg, const DomainPtr& domain) const
{
    return Gauge(sg, domain, mu, eta);
}

std::strong_ordering operator<=>(const MonomialMap& a, const MonomialMap& b)
{
    if (auto c = a.phi <=> b.phi; c != 0)
        return c;
    for (std::size_t i = 0; i < a.mu.size() && i < b.mu.size(); ++i)
        if (auto c = a.mu[i] <=> b.mu[i]; c != 0)
            return c;
    for (std::size_t i = 0; i < a.eta.size() && i < b.eta.size(); ++i)
        if (auto c = a.eta[i] <=> b.eta[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

MonomialMap compose(const SquareFreeSemigroup& sg, const MonomialMap& a, const MonomialMap& b)
{
    MonomialMap out = b;
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e)
        out.mu[e] = compose(a.mu[b.phi(static_cast<int>(e))], b.mu[e]);
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const int s = static_cast<int>(i);
        out.eta[i] = a.mu[b.phi(sg.src(s))](b.eta[i]) * a.eta[b.phi(s)];
    }
    out.phi = a.phi * b.phi;
    return out;
}

MonomialMap inverse(const SquareFreeSemigroup& sg, const MonomialMap& m)
{
    MonomialMap out = m;
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e)
        out.mu[m.phi(static_cast<int>(e))] = m.mu[e].inverse();
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const int s = static_cast<int>(i);
        out.eta[m.phi(s)] = m.mu[sg.src(s)].inverse()(m.eta[i].inverse());
    }
    out.phi = m.phi.inverse();
    return out;
}

// ---------------------------------------------------------------------------
// RingIso

RingIso::RingIso(RingPtr source, RingPtr target, MonomialMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map))
{
    require_same_setting(source_->cocycle(), target_->cocycle());
    if (map_.mu.size() != source_->sg().idempotent_count() || map_.eta.size() != source_->sg().size() ||
        !is_automorphism(source_->sg(), map_.phi))
        throw Error(ErrorKind::invalid_argument, "monomial map does not fit the rings");
}

RingElement RingIso::operator()(const RingElement& x) const
{
    if (x.ring() != source_)
        throw Error(ErrorKind::ring_mismatch, "element is not in the isomorphism's source ring");
    const auto& sg = source_->sg();
    RingElement::Coefficients out;
    for (const auto& [s, d] : x.coeffs())
        out.emplace(map_.phi(s), map_.mu[sg.src(s)](d) * map_.eta[s]);
    return RingElement(target_, std::move(out));
}

RingIso build_iso(const RingPtr& source, const RingPtr& target, const ClassWitness& witness)
{
    require_same_setting(source->cocycle(), target->cocycle());
    const auto phi = witness.phi ? *witness.phi : SemigroupAuto::identity(source->sg().size());
    if (!is_automorphism(source->sg(), phi))
        throw Error(ErrorKind::witness_invalid, "phi is not a semigroup automorphism");
    const TwoCochain predicted = act_gauge(witness.gauge, act_phi(phi, target->cocycle()));
    const auto& sg = source->sg();
    for (std::size_t i = 0; i < sg.size(); ++i) {
        const int s = static_cast<int>(i);
        if (predicted.alpha(s) != source->cocycle().alpha(s))
            throw Error(ErrorKind::witness_invalid, "alpha relation fails at " + sg.name(s) + ": " +
                                                        predicted.alpha(s).to_string() + " vs " +
                                                        source->cocycle().alpha(s).to_string());
    }
    for (const auto& pair : sg.tuples(2)) {
        if (!(predicted.xi(pair[0], pair[1]) == source->cocycle().xi(pair[0], pair[1])))
            throw Error(ErrorKind::witness_invalid, "xi relation fails at (" + sg.name(pair[0]) + "," +
                                                        sg.name(pair[1]) + ")");
    }
    return RingIso(source, target, MonomialMap::from_gauge(witness.gauge, phi));
}

HomVerdict verify_ring_hom(const RingIso& iso, std::uint64_t seed)
{
    HomVerdict verdict;
    const auto& src = *iso.source();
    const auto& domain = src.domain();
    Rng rng(seed);
    std::vector<Scalar> right = generator_scalars(domain);
    for (int i = 0; i < 3; ++i)
        right.push_back(sample_unit(domain, rng));
    const std::vector<Scalar> left{Scalar::one(domain), sample_unit(domain, rng)};

    auto record = [&](std::string where, const RingElement& expected, const RingElement& actual) {
        verdict.failures.push_back({std::move(where), expected.to_string(), actual.to_string()});
    };

    if (!(iso(src.one()) == iso.target()->one()))
        record("gamma(1)", iso.target()->one(), iso(src.one()));

    const auto& sg = src.sg();
    for (std::size_t s = 0; s < sg.size(); ++s) {
        for (std::size_t t = 0; t < sg.size(); ++t) {
            for (const auto& d1 : left) {
                const RingElement x = src.monomial(d1, static_cast<int>(s));
                const RingElement gx = iso(x);
                for (const auto& d2 : right) {
                    const RingElement y = src.monomial(d2, static_cast<int>(t));
                    const RingElement lhs = iso(x * y);
                    const RingElement rhs = gx * iso(y);
                    if (!(lhs == rhs))
                        record("(" + d1.to_string() + "*" + sg.name(static_cast<int>(s)) + ", " + d2.to_string() +
                                   "*" + sg.name(static_cast<int>(t)) + ")",
                               rhs, lhs);
                }
            }
        }
    }
    verdict.ok = verdict.failures.empty();
    return verdict;
}

std::vector<std::vector<std::optional<std::pair<Scalar, SquareFreeSemigroup::Element>>>>
multiplication_table(const TwistedRing& ring)
{
    const std::size_t n = ring.sg().size();
    std::vector<std::vector<std::optional<std::pair<Scalar, SquareFreeSemigroup::Element>>>> table(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            table[s].push_back(ring.basis_product(static_cast<int>(s), static_cast<int>(t)));
    return table;
}

}  // namespace cforge
