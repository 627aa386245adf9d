#include "cforge/cochain.hpp"

#include "cforge/errors.hpp"

#include <sstream>

namespace cforge {

TwoCochain::TwoCochain(SemigroupPtr semigroup, DomainPtr domain)
    : semigroup_(std::move(semigroup)), domain_(std::move(domain))
{
    const std::size_t n = semigroup_->size();
    alpha_.assign(n, RingAuto::identity(domain_));
    xi_.assign(n * n, Scalar::one(domain_));
}

const Scalar& TwoCochain::xi(Element s, Element t) const
{
    if (sg().compose(s, t) == SquareFreeSemigroup::theta)
        throw Error(ErrorKind::invalid_argument,
                    "xi(" + sg().name(s) + "," + sg().name(t) + ") is undefined: product is zero");
    return xi_[pair_index(s, t)];
}

void TwoCochain::set_alpha(Element s, RingAuto a)
{
    require_same_domain(*domain_, *a.domain());
    alpha_[s] = std::move(a);
}

void TwoCochain::set_xi(Element s, Element t, Scalar value)
{
    require_same_domain(*domain_, *value.domain());
    if (sg().compose(s, t) == SquareFreeSemigroup::theta)
        throw Error(ErrorKind::invalid_argument,
                    "xi(" + sg().name(s) + "," + sg().name(t) + ") is undefined: product is zero");
    if (value.is_zero())
        throw Error(ErrorKind::division_by_zero, "xi values must be units");
    xi_[pair_index(s, t)] = std::move(value);
}

bool operator==(const TwoCochain& a, const TwoCochain& b)
{
    if (!(a.sg() == b.sg()) || !a.domain()->same_as(*b.domain()))
        return false;
    const std::size_t n = a.sg().size();
    for (std::size_t s = 0; s < n; ++s) {
        if (a.alpha_[s] != b.alpha_[s])
            return false;
        for (std::size_t t = 0; t < n; ++t)
            if (a.sg().compose(static_cast<int>(s), static_cast<int>(t)) != SquareFreeSemigroup::theta &&
                !(a.xi_[s * n + t] == b.xi_[s * n + t]))
                return false;
    }
    return true;
}

CocycleVerdict is_cocycle(const TwoCochain& c)
{
    CocycleVerdict verdict;
    const auto& sg = c.sg();
    for (const auto& tuple : sg.tuples(3)) {
        const int s = tuple[0], t = tuple[1], u = tuple[2];
        const Scalar lhs = c.alpha(s)(c.xi(t, u)) * c.xi(s, sg.compose(t, u));
        const Scalar rhs = c.xi(s, t) * c.xi(sg.compose(s, t), u);
        if (!(lhs == rhs))
            verdict.violations.push_back(
                {CocycleViolation::Identity::twisted_associativity, tuple, lhs.to_string(), rhs.to_string()});
    }
    for (const auto& tuple : sg.tuples(2)) {
        const int s = tuple[0], t = tuple[1];
        const RingAuto lhs = compose(c.alpha(s), c.alpha(t));
        const RingAuto rhs = compose(RingAuto::rho(c.xi(s, t)), c.alpha(sg.compose(s, t)));
        if (!auto_eq(lhs, rhs))
            verdict.violations.push_back(
                {CocycleViolation::Identity::automorphism_twist, tuple, lhs.to_string(), rhs.to_string()});
    }
    verdict.ok = verdict.violations.empty();
    return verdict;
}

bool is_normal(const TwoCochain& c)
{
    for (std::size_t e = 0; e < c.sg().idempotent_count(); ++e) {
        const int i = static_cast<int>(e);
        if (!c.alpha(i).is_identity() || !c.xi(i, i).is_one())
            return false;
    }
    return true;
}

std::string describe(const CocycleViolation& v, const SquareFreeSemigroup& sg)
{
    std::ostringstream os;
    os << (v.identity == CocycleViolation::Identity::twisted_associativity ? "xi-identity" : "alpha-identity")
       << " at (";
    for (std::size_t i = 0; i < v.tuple.size(); ++i)
        os << (i ? "," : "") << sg.name(v.tuple[i]);
    os << "): " << v.lhs << " != " << v.rhs;
    return os.str();
}

void require_cocycle(const TwoCochain& c)
{
    const auto verdict = is_cocycle(c);
    if (verdict.ok)
        return;
    std::vector<Issue> issues;
    for (const auto& v : verdict.violations)
        issues.push_back({"CocycleViolation", "", describe(v, c.sg())});
    throw IssueListError(ErrorKind::not_a_cocycle, std::move(issues));
}

}  // namespace cforge
