#pragma once

#include "cforge/finite_field.hpp"

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace cforge {

using Rational = mpq_class;

enum class DomainKind { rational, finite_field, rational_quaternion };

class ScalarDomain;
using DomainPtr = std::shared_ptr<const ScalarDomain>;

/**
 * A concrete division ring: Q, GF(p^k), or the rational Hamilton quaternions.
 *
 * Domains are shared, immutable objects. Two domains are interchangeable when
 * `same_as` holds, so separately parsed instance files over GF(4) compare
 * equal.
 */
class ScalarDomain
{
  public:
    static DomainPtr rationals();
    static DomainPtr quaternions();
    // An empty modulus selects the built-in default for (p, k).
    static DomainPtr finite_field(int p, int k, Poly modulus = {});

    DomainKind kind() const { return kind_; }
    bool is_commutative() const { return kind_ != DomainKind::rational_quaternion; }
    bool is_finite() const { return kind_ == DomainKind::finite_field; }
    bool same_as(const ScalarDomain& other) const;

    // Finite-field accessors; throw for other kinds.
    const GaloisField& field() const;

    std::string describe() const;

  private:
    explicit ScalarDomain(DomainKind kind);

    DomainKind kind_;
    std::optional<GaloisField> field_;
};

// Exact rational quaternion a + b i + c j + d k.
struct Quaternion
{
    std::array<Rational, 4> c;

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
    friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.c == y.c; }
    Quaternion conjugate() const;
    Rational norm() const;
};

/**
 * An element of a ScalarDomain.
 *
 * Rationals are kept in lowest terms with positive denominator (GMP
 * canonical form); finite-field elements are stored in the packed digit
 * encoding of GaloisField.
 */
class Scalar
{
  public:
    using Payload = std::variant<Rational, GaloisField::Element, Quaternion>;

    Scalar(DomainPtr domain, Payload payload);

    static Scalar zero(const DomainPtr& domain);
    static Scalar one(const DomainPtr& domain);
    static Scalar integer(const DomainPtr& domain, long value);
    static Scalar from_coefficients(const DomainPtr& domain, const Poly& coeffs);
    static Scalar quaternion(const DomainPtr& domain, Rational a, Rational b, Rational c, Rational d);

    const DomainPtr& domain() const { return domain_; }
    const Payload& payload() const { return payload_; }

    bool is_zero() const;
    bool is_one() const;

    // Throws Error(division_by_zero) for zero.
    Scalar inverse() const;

    const Rational& rational() const { return std::get<Rational>(payload_); }
    GaloisField::Element ff() const { return std::get<GaloisField::Element>(payload_); }
    const Quaternion& quat() const { return std::get<Quaternion>(payload_); }

    // Human-readable: "3/4", "x+1", "1/2+i-3k".
    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    // Total order used for canonical sorting; meaningful within one domain.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  private:
    DomainPtr domain_;
    Payload payload_;
};

// Operation-style entry points mirroring the operators.
enum class ScalarOp { add, mul };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);
Scalar scalar_inv(const Scalar& a);

void require_same_domain(const ScalarDomain& a, const ScalarDomain& b);

// All nonzero elements in canonical order; Error(not_enumerable) unless finite.
std::vector<Scalar> enumerate_units(const DomainPtr& domain);

// Deterministic sampling: the same seed always yields the same scalar.
using Rng = std::mt19937_64;
Scalar sample_scalar(const DomainPtr& domain, Rng& rng);
Scalar sample_scalar(const DomainPtr& domain, std::uint64_t seed);
Scalar sample_unit(const DomainPtr& domain, Rng& rng);

// Scalars that generate the domain additively and multiplicatively (1 first).
std::vector<Scalar> generator_scalars(const DomainPtr& domain);

/**
 * An automorphism of D in canonical form.
 *
 *  - identity
 *  - frobenius(i), 0 < i < k, for GF(p^k): x -> x^(p^i)
 *  - inner(d) for the quaternions: x -> d x d^-1, with d scaled so its first
 *    nonzero Hamilton coefficient is 1 (d is only defined modulo the center Q)
 *
 * Canonical forms make equality syntactic: frobenius(0) and inner of a real
 * quaternion both collapse to identity.
 */
class RingAuto
{
  public:
    enum class Form { identity, frobenius, inner };

    static RingAuto identity(const DomainPtr& domain);
    static RingAuto frobenius(const DomainPtr& domain, int exponent);
    // Conjugation by d; identity in commutative domains. Throws for d == 0.
    static RingAuto rho(const Scalar& d);

    const DomainPtr& domain() const { return domain_; }
    Form form() const { return form_; }
    bool is_identity() const { return form_ == Form::identity; }
    int exponent() const { return exponent_; }
    // Canonical conjugating quaternion; only for Form::inner.
    const Scalar& conjugator() const { return *conjugator_; }

    Scalar operator()(const Scalar& x) const;
    RingAuto inverse() const;

    std::string to_string() const;

    friend bool operator==(const RingAuto& a, const RingAuto& b);
    friend std::strong_ordering operator<=>(const RingAuto& a, const RingAuto& b);

  private:
    RingAuto(DomainPtr domain, Form form, int exponent, std::optional<Scalar> conjugator);

    DomainPtr domain_;
    Form form_;
    int exponent_ = 0;
    std::optional<Scalar> conjugator_;
};

// a o b, i.e. x -> a(b(x)).
RingAuto compose(const RingAuto& a, const RingAuto& b);
Scalar apply_auto(const RingAuto& a, const Scalar& x);
bool auto_eq(const RingAuto& a, const RingAuto& b);

// Frobenius powers for GF(p^k) (identity first), {identity} for Q;
// Error(not_enumerable) for the quaternions.
std::vector<RingAuto> enumerate_autos(const DomainPtr& domain);

}  // namespace cforge
