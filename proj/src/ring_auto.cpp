#include "cforge/errors.hpp"
#include "cforge/scalars.hpp"

namespace cforge {

namespace {

// Scale so the first nonzero Hamilton coefficient is 1; returns nullopt for
// real quaternions, whose conjugation is the identity.
std::optional<Scalar> canonical_conjugator(const Scalar& d)
{
    const Quaternion& q = d.quat();
    int lead = 0;
    while (lead < 4 && q.c[lead] == 0)
        ++lead;
    if (lead == 0 && q.c[1] == 0 && q.c[2] == 0 && q.c[3] == 0)
        return std::nullopt;
    Quaternion scaled = q;
    const Rational factor = q.c[lead];
    for (auto& c : scaled.c)
        c /= factor;
    return Scalar(d.domain(), std::move(scaled));
}

}  // namespace

RingAuto::RingAuto(DomainPtr domain, Form form, int exponent, std::optional<Scalar> conjugator)
    : domain_(std::move(domain)), form_(form), exponent_(exponent), conjugator_(std::move(conjugator))
{
}

RingAuto RingAuto::identity(const DomainPtr& domain)
{
    return RingAuto(domain, Form::identity, 0, std::nullopt);
}

RingAuto RingAuto::frobenius(const DomainPtr& domain, int exponent)
{
    if (domain->kind() != DomainKind::finite_field) {
        if (exponent == 0)
            return identity(domain);
        throw Error(ErrorKind::invalid_argument, "frobenius automorphism requires a finite field");
    }
    const int k = domain->field().degree();
    const int e = ((exponent % k) + k) % k;
    if (e == 0)
        return identity(domain);
    return RingAuto(domain, Form::frobenius, e, std::nullopt);
}

RingAuto RingAuto::rho(const Scalar& d)
{
    if (d.is_zero())
        throw Error(ErrorKind::division_by_zero, "inner automorphism by zero");
    if (d.domain()->is_commutative())
        return identity(d.domain());
    auto canon = canonical_conjugator(d);
    if (!canon)
        return identity(d.domain());
    return RingAuto(d.domain(), Form::inner, 0, std::move(canon));
}

Scalar RingAuto::operator()(const Scalar& x) const
{
    require_same_domain(*domain_, *x.domain());
    switch (form_) {
    case Form::identity: return x;
    case Form::frobenius: return Scalar(x.domain(), domain_->field().frobenius(x.ff(), exponent_));
    case Form::inner: return *conjugator_ * x * conjugator_->inverse();
    }
    return x;
}

RingAuto RingAuto::inverse() const
{
    switch (form_) {
    case Form::identity: return *this;
    case Form::frobenius: return frobenius(domain_, -exponent_);
    case Form::inner: return rho(conjugator_->inverse());
    }
    return *this;
}

std::string RingAuto::to_string() const
{
    switch (form_) {
    case Form::identity: return "id";
    case Form::frobenius: return "frob^" + std::to_string(exponent_);
    case Form::inner: return "rho(" + conjugator_->to_string() + ")";
    }
    return "?";
}

bool operator==(const RingAuto& a, const RingAuto& b)
{
    if (!a.domain_->same_as(*b.domain_) || a.form_ != b.form_)
        return false;
    switch (a.form_) {
    case RingAuto::Form::identity: return true;
    case RingAuto::Form::frobenius: return a.exponent_ == b.exponent_;
    case RingAuto::Form::inner: return *a.conjugator_ == *b.conjugator_;
    }
    return false;
}

std::strong_ordering operator<=>(const RingAuto& a, const RingAuto& b)
{
    if (a.form_ != b.form_)
        return static_cast<int>(a.form_) <=> static_cast<int>(b.form_);
    if (a.form_ == RingAuto::Form::frobenius)
        return a.exponent_ <=> b.exponent_;
    if (a.form_ == RingAuto::Form::inner)
        return *a.conjugator_ <=> *b.conjugator_;
    return std::strong_ordering::equal;
}

RingAuto compose(const RingAuto& a, const RingAuto& b)
{
    require_same_domain(*a.domain(), *b.domain());
    if (a.is_identity())
        return b;
    if (b.is_identity())
        return a;
    if (a.form() == RingAuto::Form::frobenius && b.form() == RingAuto::Form::frobenius)
        return RingAuto::frobenius(a.domain(), a.exponent() + b.exponent());
    if (a.form() == RingAuto::Form::inner && b.form() == RingAuto::Form::inner)
        return RingAuto::rho(a.conjugator() * b.conjugator());
    throw Error(ErrorKind::domain_mismatch, "cannot compose " + a.to_string() + " with " + b.to_string());
}

Scalar apply_auto(const RingAuto& a, const Scalar& x)
{
    return a(x);
}

bool auto_eq(const RingAuto& a, const RingAuto& b)
{
    return a == b;
}

std::vector<RingAuto> enumerate_autos(const DomainPtr& domain)
{
    switch (domain->kind()) {
    case DomainKind::rational: return {RingAuto::identity(domain)};
    case DomainKind::finite_field: {
        std::vector<RingAuto> out;
        for (int i = 0; i < domain->field().degree(); ++i)
            out.push_back(RingAuto::frobenius(domain, i));
        return out;
    }
    case DomainKind::rational_quaternion:
        throw Error(ErrorKind::not_enumerable, "H(Q) has infinitely many inner automorphisms");
    }
    return {};
}

}  // namespace cforge
