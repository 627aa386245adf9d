#pragma once

#include "cforge/cochain.hpp"

#include <optional>
#include <vector>

namespace cforge {

/**
 * A gauge (mu, eta): mu assigns an automorphism of D to each idempotent,
 * eta a unit of D to each nonzero element.
 *
 * Gauges act on 2-cocycles by (mu, eta) * (alpha, xi) = (beta, zeta) with,
 * for s in e.S.f and t in f.S.g,
 *
 *   beta_s    = mu_e^-1 o rho_eta(s) o alpha_s o mu_f
 *   zeta(s,t) = mu_e^-1( eta(s) alpha_s(eta(t)) xi(s,t) eta(s.t)^-1 )
 *
 * Equivalently, the monomial map d.s -> mu_e(d) eta(s) s is a ring
 * isomorphism from D^beta_zeta S onto D^alpha_xi S. For * to be a left action
 * the group law has to be
 *
 *   (mu1, eta1) . (mu2, eta2) = (mu2 o mu1,  s -> mu2_e(eta1(s)) eta2(s)),
 *
 * so that the monomial map of g1.g2 is the map of g2 composed after g1.
 */
class Gauge
{
  public:
    using Element = SquareFreeSemigroup::Element;

    Gauge(SemigroupPtr semigroup, DomainPtr domain, std::vector<RingAuto> mu, std::vector<Scalar> eta);
    static Gauge identity(const SemigroupPtr& semigroup, const DomainPtr& domain);

    const SemigroupPtr& semigroup() const { return semigroup_; }
    const DomainPtr& domain() const { return domain_; }
    const SquareFreeSemigroup& sg() const { return *semigroup_; }

    // mu indexed by idempotent.
    const RingAuto& mu(Element e) const { return mu_[e]; }
    // mu of the source idempotent of s.
    const RingAuto& mu_src(Element s) const { return mu_[sg().src(s)]; }
    const Scalar& eta(Element s) const { return eta_[s]; }
    const std::vector<RingAuto>& mu() const { return mu_; }
    const std::vector<Scalar>& eta() const { return eta_; }

    void set_mu(Element e, RingAuto a);
    void set_eta(Element s, Scalar value);

    bool is_identity() const;

    friend bool operator==(const Gauge& a, const Gauge& b) { return a.mu_ == b.mu_ && a.eta_ == b.eta_; }
    friend std::strong_ordering operator<=>(const Gauge& a, const Gauge& b);

  private:
    SemigroupPtr semigroup_;
    DomainPtr domain_;
    std::vector<RingAuto> mu_;
    std::vector<Scalar> eta_;
};

void require_same_setting(const TwoCochain& a, const TwoCochain& b);
void require_same_setting(const Gauge& g, const TwoCochain& c);

TwoCochain act_gauge(const Gauge& g, const TwoCochain& c);
Gauge gauge_compose(const Gauge& g1, const Gauge& g2);
Gauge gauge_inverse(const Gauge& g);

// (alpha^phi)_s = alpha_phi(s), xi^phi(s,t) = xi(phi(s), phi(t)).
// This is a right action: act_phi(psi, act_phi(phi, c)) == act_phi(phi * psi, c).
TwoCochain act_phi(const SemigroupAuto& phi, const TwoCochain& c);

// g^phi = (e -> mu_phi(e), s -> eta(phi(s))); satisfies
// act_gauge(g^phi, act_phi(phi, c)) == act_phi(phi, act_gauge(g, c)).
Gauge twist_gauge(const Gauge& g, const SemigroupAuto& phi);

struct Normalization
{
    TwoCochain normalized;
    Gauge gauge;  // act_gauge(gauge, input) == normalized
};

// Uses mu = id and eta(e) = xi(e,e)^-1 on idempotents, 1 elsewhere.
// Throws Error(not_a_cocycle) for non-cocycles.
Normalization normalize(const TwoCochain& c);

struct SearchOptions
{
    unsigned jobs = 1;
};

// Some g with act_gauge(g, from) == to, preferring the first in canonical
// search order (mu assignments in mixed radix, then eta). A nullopt is a
// definitive answer. Throws Error(not_enumerable) for the quaternions.
std::optional<Gauge> cohomologous(const TwoCochain& from, const TwoCochain& to, const SearchOptions& options = {});

// Every g with act_gauge(g, from) == to, sorted. Needs a finite field.
std::vector<Gauge> transporters(const TwoCochain& from, const TwoCochain& to, const SearchOptions& options = {});

// Exact decision over Q, where Aut(Q) = 1 and the problem is a linear system
// over the free abelian group Q* / {+-1} plus a sign system over GF(2).
std::optional<Gauge> rational_transporter(const TwoCochain& from, const TwoCochain& to);

// phi in Aut(S) with [c] = [c^phi], in enumerate_autos order.
std::vector<SemigroupAuto> stabilizer_of_class(const TwoCochain& c, const SearchOptions& options = {});

// Witness for [source] = [target^phi]: act_gauge(gauge, act_phi(phi, target)) == source.
struct ClassWitness
{
    Gauge gauge;
    std::optional<SemigroupAuto> phi;
};

std::string describe(const Gauge& g);

}  // namespace cforge
