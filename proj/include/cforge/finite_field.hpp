#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cforge {

using Poly = std::vector<int>;  // coefficients over Z_p, lowest degree first

namespace poly {
// Remainder of a modulo a monic b, coefficients reduced mod p, trailing zeros trimmed.
Poly remainder(Poly a, const Poly& b, int p);
Poly multiply(const Poly& a, const Poly& b, int p);
// True when the monic degree-k polynomial has no monic factor of degree 1..k/2.
bool is_irreducible(const Poly& modulus, int p);
bool is_prime(int n);
}  // namespace poly

/**
 * Arithmetic in GF(p^k) = Z_p[x]/(m(x)).
 *
 * Elements are encoded as integers in [0, p^k): the base-p digits are the
 * polynomial coefficients, lowest degree first. So in GF(4) with modulus
 * x^2+x+1, the class of x is 2 and x+1 is 3. Multiplication goes through
 * discrete log / antilog tables built from a primitive element found at
 * construction; addition is digit-wise.
 */
class GaloisField
{
  public:
    using Element = std::uint32_t;

    static constexpr std::uint32_t max_order = 1u << 20;

    // Throws Error(invalid_domain) for non-prime p, bad degree or reducible modulus.
    GaloisField(int p, int k, Poly modulus);

    // Built-in Conway polynomial when one is shipped, otherwise the smallest
    // monic irreducible (ordered by its integer encoding).
    static Poly default_modulus(int p, int k);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    const Poly& modulus() const { return modulus_; }
    Element primitive() const { return exp_[1 % (q_ - 1)]; }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;  // precondition: a != 0
    // x -> x^(p^i)
    Element frobenius(Element a, int i) const;

    Poly coefficients(Element a) const;  // always length k
    Element from_coefficients(std::span<const int> coeffs) const;

  private:
    int p_;
    int k_;
    std::uint32_t q_;
    Poly modulus_;
    std::vector<Element> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;
    std::vector<std::uint64_t> frob_power_;  // p^i mod (q-1)
};

}  // namespace cforge
