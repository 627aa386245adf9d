#include "cforge/scalars.hpp"

#include "cforge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cforge {

// ---------------------------------------------------------------------------
// ScalarDomain

ScalarDomain::ScalarDomain(DomainKind kind) : kind_(kind) {}

DomainPtr ScalarDomain::rationals()
{
    static const DomainPtr instance(new ScalarDomain(DomainKind::rational));
    return instance;
}

DomainPtr ScalarDomain::quaternions()
{
    static const DomainPtr instance(new ScalarDomain(DomainKind::rational_quaternion));
    return instance;
}

DomainPtr ScalarDomain::finite_field(int p, int k, Poly modulus)
{
    if (modulus.empty())
        modulus = GaloisField::default_modulus(p, k);
    auto* domain = new ScalarDomain(DomainKind::finite_field);
    DomainPtr owned(domain);
    domain->field_.emplace(p, k, std::move(modulus));
    return owned;
}

bool ScalarDomain::same_as(const ScalarDomain& other) const
{
    if (this == &other)
        return true;
    if (kind_ != other.kind_)
        return false;
    if (kind_ != DomainKind::finite_field)
        return true;
    return field_->characteristic() == other.field_->characteristic() &&
           field_->degree() == other.field_->degree() && field_->modulus() == other.field_->modulus();
}

const GaloisField& ScalarDomain::field() const
{
    if (!field_)
        throw Error(ErrorKind::invalid_argument, "domain " + describe() + " is not a finite field");
    return *field_;
}

std::string ScalarDomain::describe() const
{
    switch (kind_) {
    case DomainKind::rational: return "Q";
    case DomainKind::rational_quaternion: return "H(Q)";
    case DomainKind::finite_field: {
        std::ostringstream os;
        os << "GF(" << field_->characteristic();
        if (field_->degree() > 1)
            os << "^" << field_->degree();
        os << ")";
        return os.str();
    }
    }
    return "?";
}

void require_same_domain(const ScalarDomain& a, const ScalarDomain& b)
{
    if (!a.same_as(b))
        throw Error(ErrorKind::domain_mismatch, a.describe() + " vs " + b.describe());
}

// ---------------------------------------------------------------------------
// Quaternion

Quaternion operator+(const Quaternion& x, const Quaternion& y)
{
    Quaternion r;
    for (int i = 0; i < 4; ++i)
        r.c[i] = x.c[i] + y.c[i];
    return r;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y)
{
    const auto& [a1, b1, c1, d1] = x.c;
    const auto& [a2, b2, c2, d2] = y.c;
    Quaternion r;
    r.c[0] = a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2;
    r.c[1] = a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2;
    r.c[2] = a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2;
    r.c[3] = a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2;
    return r;
}

Quaternion Quaternion::conjugate() const
{
    return Quaternion{{c[0], -c[1], -c[2], -c[3]}};
}

Rational Quaternion::norm() const
{
    return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

Scalar::Payload zero_payload(const ScalarDomain& domain)
{
    switch (domain.kind()) {
    case DomainKind::rational: return Rational(0);
    case DomainKind::finite_field: return GaloisField::Element{0};
    case DomainKind::rational_quaternion: return Quaternion{};
    }
    return Rational(0);
}

std::string rational_str(const Rational& r)
{
    return r.get_str();
}

}  // namespace

Scalar::Scalar(DomainPtr domain, Payload payload) : domain_(std::move(domain)), payload_(std::move(payload))
{
    switch (domain_->kind()) {
    case DomainKind::rational:
        std::get<Rational>(payload_).canonicalize();
        break;
    case DomainKind::finite_field:
        if (std::get<GaloisField::Element>(payload_) >= domain_->field().order())
            throw Error(ErrorKind::invalid_argument, "finite-field payload out of range");
        break;
    case DomainKind::rational_quaternion:
        for (auto& c : std::get<Quaternion>(payload_).c)
            c.canonicalize();
        break;
    }
}

Scalar Scalar::zero(const DomainPtr& domain)
{
    return Scalar(domain, zero_payload(*domain));
}

Scalar Scalar::one(const DomainPtr& domain)
{
    return integer(domain, 1);
}

Scalar Scalar::integer(const DomainPtr& domain, long value)
{
    switch (domain->kind()) {
    case DomainKind::rational: return Scalar(domain, Rational(value));
    case DomainKind::finite_field: {
        const int p = domain->field().characteristic();
        return Scalar(domain, GaloisField::Element(((value % p) + p) % p));
    }
    case DomainKind::rational_quaternion: return Scalar(domain, Quaternion{{Rational(value), 0, 0, 0}});
    }
    return zero(domain);
}

Scalar Scalar::from_coefficients(const DomainPtr& domain, const Poly& coeffs)
{
    return Scalar(domain, domain->field().from_coefficients(coeffs));
}

Scalar Scalar::quaternion(const DomainPtr& domain, Rational a, Rational b, Rational c, Rational d)
{
    if (domain->kind() != DomainKind::rational_quaternion)
        throw Error(ErrorKind::domain_mismatch, "quaternion payload for " + domain->describe());
    return Scalar(domain, Quaternion{{std::move(a), std::move(b), std::move(c), std::move(d)}});
}

bool Scalar::is_zero() const
{
    return *this == zero(domain_);
}

bool Scalar::is_one() const
{
    return *this == one(domain_);
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::division_by_zero, "inverse of zero in " + domain_->describe());
    switch (domain_->kind()) {
    case DomainKind::rational: return Scalar(domain_, Rational(1) / rational());
    case DomainKind::finite_field: return Scalar(domain_, domain_->field().inv(ff()));
    case DomainKind::rational_quaternion: {
        Quaternion r = quat().conjugate();
        const Rational n = quat().norm();
        for (auto& c : r.c)
            c /= n;
        return Scalar(domain_, std::move(r));
    }
    }
    return *this;
}

std::string Scalar::to_string() const
{
    switch (domain_->kind()) {
    case DomainKind::rational: return rational_str(rational());
    case DomainKind::finite_field: {
        const auto coeffs = domain_->field().coefficients(ff());
        std::string out;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
            const int c = coeffs[i];
            if (c == 0)
                continue;
            if (!out.empty())
                out += "+";
            if (i == 0 || c != 1)
                out += std::to_string(c);
            if (i >= 1)
                out += "x";
            if (i >= 2)
                out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
    case DomainKind::rational_quaternion: {
        static const char* unit[4] = {"", "i", "j", "k"};
        std::string out;
        for (int i = 0; i < 4; ++i) {
            const Rational& c = quat().c[i];
            if (c == 0)
                continue;
            std::string term;
            if (i > 0 && c == 1)
                term = unit[i];
            else if (i > 0 && c == -1)
                term = std::string("-") + unit[i];
            else
                term = rational_str(c) + unit[i];
            if (!out.empty() && term[0] != '-')
                out += "+";
            out += term;
        }
        return out.empty() ? "0" : out;
    }
    }
    return "?";
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    require_same_domain(*a.domain_, *b.domain_);
    switch (a.domain_->kind()) {
    case DomainKind::rational: return Scalar(a.domain_, Rational(a.rational() + b.rational()));
    case DomainKind::finite_field: return Scalar(a.domain_, a.domain_->field().add(a.ff(), b.ff()));
    case DomainKind::rational_quaternion: return Scalar(a.domain_, a.quat() + b.quat());
    }
    return a;
}

Scalar operator-(const Scalar& a)
{
    switch (a.domain_->kind()) {
    case DomainKind::rational: return Scalar(a.domain_, Rational(-a.rational()));
    case DomainKind::finite_field: return Scalar(a.domain_, a.domain_->field().neg(a.ff()));
    case DomainKind::rational_quaternion: {
        Quaternion r = a.quat();
        for (auto& c : r.c)
            c = -c;
        return Scalar(a.domain_, std::move(r));
    }
    }
    return a;
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    require_same_domain(*a.domain_, *b.domain_);
    switch (a.domain_->kind()) {
    case DomainKind::rational: return Scalar(a.domain_, Rational(a.rational() * b.rational()));
    case DomainKind::finite_field: return Scalar(a.domain_, a.domain_->field().mul(a.ff(), b.ff()));
    case DomainKind::rational_quaternion: return Scalar(a.domain_, a.quat() * b.quat());
    }
    return a;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.domain_->same_as(*b.domain_) && a.payload_ == b.payload_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    if (a.payload_.index() != b.payload_.index())
        return a.payload_.index() <=> b.payload_.index();
    switch (a.payload_.index()) {
    case 0: return cmp(a.rational(), b.rational()) <=> 0;
    case 1: return a.ff() <=> b.ff();
    default:
        for (int i = 0; i < 4; ++i)
            if (int c = cmp(a.quat().c[i], b.quat().c[i]); c != 0)
                return c <=> 0;
        return std::strong_ordering::equal;
    }
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op)
{
    return op == ScalarOp::add ? a + b : a * b;
}

Scalar scalar_inv(const Scalar& a)
{
    return a.inverse();
}

std::vector<Scalar> enumerate_units(const DomainPtr& domain)
{
    if (!domain->is_finite())
        throw Error(ErrorKind::not_enumerable, "units of " + domain->describe() + " are infinite");
    std::vector<Scalar> units;
    const auto q = domain->field().order();
    units.reserve(q - 1);
    for (GaloisField::Element x = 1; x < q; ++x)
        units.emplace_back(domain, x);
    return units;
}

namespace {
Rational sample_rational(Rng& rng)
{
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}
}  // namespace

Scalar sample_scalar(const DomainPtr& domain, Rng& rng)
{
    switch (domain->kind()) {
    case DomainKind::rational: return Scalar(domain, sample_rational(rng));
    case DomainKind::finite_field:
        return Scalar(domain, static_cast<GaloisField::Element>(rng() % domain->field().order()));
    case DomainKind::rational_quaternion: {
        Quaternion q;
        for (auto& c : q.c)
            c = sample_rational(rng);
        return Scalar(domain, std::move(q));
    }
    }
    return Scalar::zero(domain);
}

Scalar sample_scalar(const DomainPtr& domain, std::uint64_t seed)
{
    Rng rng(seed);
    return sample_scalar(domain, rng);
}

Scalar sample_unit(const DomainPtr& domain, Rng& rng)
{
    for (;;) {
        Scalar s = sample_scalar(domain, rng);
        if (!s.is_zero())
            return s;
    }
}

std::vector<Scalar> generator_scalars(const DomainPtr& domain)
{
    std::vector<Scalar> out{Scalar::one(domain)};
    auto push = [&](Scalar s) {
        if (!s.is_zero() && std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(std::move(s));
    };
    switch (domain->kind()) {
    case DomainKind::rational:
        push(Scalar::integer(domain, -1));
        push(Scalar::integer(domain, 2));
        push(Scalar(domain, Rational(1, 3)));
        break;
    case DomainKind::finite_field: {
        const auto& f = domain->field();
        for (int i = 1; i < f.degree(); ++i) {
            Poly mono(static_cast<std::size_t>(i) + 1, 0);
            mono[i] = 1;
            push(Scalar::from_coefficients(domain, mono));
        }
        push(Scalar(domain, f.primitive()));
        break;
    }
    case DomainKind::rational_quaternion:
        push(Scalar::quaternion(domain, 0, 1, 0, 0));
        push(Scalar::quaternion(domain, 0, 0, 1, 0));
        push(Scalar::quaternion(domain, 0, 0, 0, 1));
        push(Scalar::quaternion(domain, 1, 1, 0, 0));
        break;
    }
    return out;
}

}  // namespace cforge
