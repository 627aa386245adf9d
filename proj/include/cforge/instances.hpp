#pragma once

#include "cforge/serialize.hpp"

#include <cstdint>

namespace cforge {

// Four idempotents e1..e4 and arrows s12, s13, s24, s34 (s_ij in e_i S e_j);
// every product of two arrows is zero.
SemigroupPtr example_semigroup();

// e1 -> e2 -> e3 with s12 . s23 = s13; its only automorphism is the identity.
SemigroupPtr path_semigroup();

// The total order on e1..e4: arrows s_ij for i < j, s_ij . s_jk = s_ik.
SemigroupPtr chain_semigroup();

// alpha = Frobenius on s34, identity elsewhere, xi = 1; GF(4) by default.
Instance example_instance(DomainPtr domain = ScalarDomain::finite_field(2, 2));

Instance trivial_instance(SemigroupPtr sg, DomainPtr domain);

// A uniformly drawn gauge (mu over enumerate_autos when D is finite,
// identity for Q, inner automorphisms for the quaternions).
Gauge random_gauge(const SemigroupPtr& sg, const DomainPtr& domain, Rng& rng);

// A cohomologous but generally non-normal copy of c.
TwoCochain random_twist(const TwoCochain& c, Rng& rng);

// The trivial cocycle on the chain semigroup moved by a random quaternion
// gauge, so every alpha_s is some rho_d and xi is dense.
TwoCochain quaternion_cocycle(std::uint64_t seed);

}  // namespace cforge
