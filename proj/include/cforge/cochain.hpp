#pragma once

#include "cforge/scalars.hpp"
#include "cforge/semigroup.hpp"

#include <string>
#include <vector>

namespace cforge {

/**
 * A 2-cochain (alpha, xi): alpha assigns an automorphism of D to every
 * nonzero element, xi assigns a unit of D to every composable pair.
 *
 * Values are held densely (alpha per element, xi per (s, t) with s.t != 0);
 * a fresh cochain is the trivial one, alpha = id and xi = 1.
 */
class TwoCochain
{
  public:
    using Element = SquareFreeSemigroup::Element;

    TwoCochain(SemigroupPtr semigroup, DomainPtr domain);

    const SemigroupPtr& semigroup() const { return semigroup_; }
    const DomainPtr& domain() const { return domain_; }
    const SquareFreeSemigroup& sg() const { return *semigroup_; }

    const RingAuto& alpha(Element s) const { return alpha_[s]; }
    // Throws Error(invalid_argument) when s.t == theta.
    const Scalar& xi(Element s, Element t) const;

    void set_alpha(Element s, RingAuto a);
    // Throws for zero values and for pairs outside S^<2>.
    void set_xi(Element s, Element t, Scalar value);

    friend bool operator==(const TwoCochain& a, const TwoCochain& b);

  private:
    std::size_t pair_index(Element s, Element t) const { return static_cast<std::size_t>(s) * sg().size() + t; }

    SemigroupPtr semigroup_;
    DomainPtr domain_;
    std::vector<RingAuto> alpha_;
    std::vector<Scalar> xi_;  // entries off S^<2> are unused placeholders
};

struct CocycleViolation
{
    enum class Identity { twisted_associativity, automorphism_twist };
    Identity identity;
    std::vector<TwoCochain::Element> tuple;
    std::string lhs, rhs;
};

struct CocycleVerdict
{
    bool ok = true;
    std::vector<CocycleViolation> violations;  // sorted by identity, then tuple
};

// Checks, for (s,t,u) in S^<3>:  alpha_s(xi(t,u)) xi(s,t.u) = xi(s,t) xi(s.t,u)
// and for (s,t) in S^<2>:       alpha_s o alpha_t = rho_xi(s,t) o alpha_{s.t}.
CocycleVerdict is_cocycle(const TwoCochain& c);

// alpha_e = id and xi(e,e) = 1 for every idempotent e.
bool is_normal(const TwoCochain& c);

// Throws Error(not_a_cocycle) with the first few violations.
void require_cocycle(const TwoCochain& c);

std::string describe(const CocycleViolation& v, const SquareFreeSemigroup& sg);

}  // namespace cforge
