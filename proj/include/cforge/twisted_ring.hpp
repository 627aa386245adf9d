#pragma once

#include "cforge/gauge.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cforge {

class TwistedRing;
using RingPtr = std::shared_ptr<const TwistedRing>;

/**
 * Element of D^alpha_xi S in left-coefficient normal form: sum of d_s . s
 * with no explicit zeros.
 */
class RingElement
{
  public:
    using Element = SquareFreeSemigroup::Element;
    using Coefficients = std::map<Element, Scalar>;

    RingElement(RingPtr ring, Coefficients coeffs);

    const RingPtr& ring() const { return ring_; }
    const Coefficients& coeffs() const { return coeffs_; }
    Scalar coefficient(Element s) const;
    bool is_zero() const { return coeffs_.empty(); }

    // Units are exactly the elements with every idempotent coefficient nonzero.
    bool is_unit() const;
    // Throws Error(not_a_unit).
    RingElement inverse() const;

    std::string to_string() const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    // Left scalar multiplication d.(sum d_s s) = sum (d d_s) s.
    friend RingElement operator*(const Scalar& d, const RingElement& a);
    friend bool operator==(const RingElement& a, const RingElement& b);

  private:
    RingPtr ring_;
    Coefficients coeffs_;
};

/**
 * The twisted semigroup ring D^alpha_xi S for a 2-cocycle (alpha, xi):
 * the left D-space on S* with
 *
 *   (d1 s)(d2 t) = d1 alpha_s(d2) xi(s,t) (s.t)   if s.t != 0, else 0.
 */
class TwistedRing : public std::enable_shared_from_this<TwistedRing>
{
  public:
    using Element = SquareFreeSemigroup::Element;

    // Throws Error(not_a_cocycle) unless the cochain satisfies both identities.
    static RingPtr create(TwoCochain cocycle);

    const TwoCochain& cocycle() const { return cocycle_; }
    const SquareFreeSemigroup& sg() const { return cocycle_.sg(); }
    const DomainPtr& domain() const { return cocycle_.domain(); }

    RingElement zero() const;
    // sum over e of xi(e,e)^-1 e, which is sum e for normal cocycles.
    RingElement one() const;
    RingElement basis(Element s) const;
    RingElement monomial(const Scalar& d, Element s) const;

    // Product of basis elements s.t as (coefficient, element), nullopt if zero.
    std::optional<std::pair<Scalar, Element>> basis_product(Element s, Element t) const;

  private:
    explicit TwistedRing(TwoCochain cocycle) : cocycle_(std::move(cocycle)) {}

    TwoCochain cocycle_;
};

RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_one(const TwistedRing& ring);

// x -> r x r^-1 for a unit r.
class InnerAutomorphism
{
  public:
    // Throws Error(not_a_unit).
    explicit InnerAutomorphism(RingElement r);

    RingElement operator()(const RingElement& x) const { return r_ * x * r_inv_; }
    const RingElement& unit() const { return r_; }

  private:
    RingElement r_;
    RingElement r_inv_;
};

InnerAutomorphism inner_auto(const RingElement& r);

/**
 * A monomial map d.s -> mu_e(d) eta(s) phi(s) for s in e.S (the shape every
 * E-preserving ring isomorphism between twisted rings takes). Composition
 * and inversion are the usual ones for maps.
 */
struct MonomialMap
{
    using Element = SquareFreeSemigroup::Element;

    std::vector<RingAuto> mu;  // per source idempotent
    std::vector<Scalar> eta;   // per source element
    SemigroupAuto phi;

    static MonomialMap identity(const SquareFreeSemigroup& sg, const DomainPtr& domain);
    static MonomialMap from_gauge(const Gauge& g, std::optional<SemigroupAuto> phi = std::nullopt);

    Gauge gauge(const SemigroupPtr& sg, const DomainPtr& domain) const;

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
    friend std::strong_ordering operator<=>(const MonomialMap& a, const MonomialMap& b);
};

// (a o b)(x) = a(b(x)); sg is the common underlying semigroup.
MonomialMap compose(const SquareFreeSemigroup& sg, const MonomialMap& a, const MonomialMap& b);
MonomialMap inverse(const SquareFreeSemigroup& sg, const MonomialMap& m);

// Monomial map gamma: source -> target.
class RingIso
{
  public:
    RingIso(RingPtr source, RingPtr target, MonomialMap map);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const MonomialMap& map() const { return map_; }

    RingElement operator()(const RingElement& x) const;

  private:
    RingPtr source_;
    RingPtr target_;
    MonomialMap map_;
};

// gamma(d s) = mu_e(d) eta(s) phi(s) from D^beta_zeta S (source) to
// D^alpha_xi S (target). Requires act_gauge(gauge, act_phi(phi, target)) ==
// source; throws Error(witness_invalid) naming the failing relation otherwise.
RingIso build_iso(const RingPtr& source, const RingPtr& target, const ClassWitness& witness);

struct HomFailure
{
    std::string where;
    std::string expected, actual;
};

struct HomVerdict
{
    bool ok = true;
    std::vector<HomFailure> failures;
};

// Exhaustive over basis pairs (s, t) with scalars d2 drawn from generator
// scalars plus three seeded samples; also checks gamma(1) = 1.
HomVerdict verify_ring_hom(const RingIso& iso, std::uint64_t seed = 0);

// |S*| x |S*| basis table: entry (s,t) is xi(s,t) (s.t) or nullopt.
std::vector<std::vector<std::optional<std::pair<Scalar, SquareFreeSemigroup::Element>>>>
multiplication_table(const TwistedRing& ring);

}  // namespace cforge
