#pragma once

#include "cforge/twisted_ring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cforge {

// A gauge that fixes the ambient cocycle c under act_gauge.
struct OneCocycle
{
    Gauge gauge;

    friend bool operator==(const OneCocycle&, const OneCocycle&) = default;
    friend auto operator<=>(const OneCocycle& a, const OneCocycle& b) { return a.gauge <=> b.gauge; }
};

// Every routine below that enumerates needs a finite D (Error(not_enumerable)
// otherwise) and a normal cocycle (Error(not_normal) otherwise).

// Z^1: the stabilizer of c, sorted.
std::vector<OneCocycle> z1_enumerate(const TwoCochain& c, const SearchOptions& options = {});

bool in_z1(const Gauge& g, const TwoCochain& c);

// eps * (mu, eta) = (e -> rho_eps(e) o mu_e, s -> eps(e) eta(s) alpha_s(eps(f)^-1))
// for s in e.S.f. eps is indexed by idempotent.
OneCocycle star_act(const std::vector<Scalar>& eps, const OneCocycle& oc, const TwoCochain& c);

// B^1: the star-orbit of the identity gauge, deduplicated and sorted.
std::vector<OneCocycle> b1_enumerate(const TwoCochain& c, const SearchOptions& options = {});

struct CohomologyGroupReport
{
    std::vector<OneCocycle> z1;
    std::vector<OneCocycle> b1;
    std::size_t h1_order = 0;
    std::vector<OneCocycle> h1_cosets;  // one representative per coset, smallest first
    std::vector<std::size_t> coset_of;  // parallel to z1
    // table[i][j] = coset of h1_cosets[i] . h1_cosets[j] (gauge_compose)
    std::vector<std::vector<std::size_t>> table;
    bool b1_subset = false;
    bool b1_normal = false;
};

CohomologyGroupReport h1(const TwoCochain& c, const SearchOptions& options = {});

// (mu, eta, phi) with eta(e) = 1; sigma(d s) = mu_e(d) eta(s) phi(s).
using NormalRingAutoTriple = MonomialMap;

// sigma_{mu eta} for a 1-cocycle, as a triple with phi = identity.
// Throws Error(invalid_argument) if the gauge does not fix c.
NormalRingAutoTriple lambda_map(const OneCocycle& oc, const TwoCochain& c);

// Every E-preserving automorphism of R, as triples, sorted.
std::vector<NormalRingAutoTriple> aut0_enumerate(const TwoCochain& c, const SearchOptions& options = {});

// The triples of the automorphisms rho_r with r = sum eps(e) e.
std::vector<NormalRingAutoTriple> inn0_enumerate(const TwoCochain& c, const SearchOptions& options = {});

struct OutRReport
{
    std::vector<NormalRingAutoTriple> aut0;
    std::vector<NormalRingAutoTriple> inn0;
    std::size_t inn0_order = 0;
    std::size_t out_order = 0;
    bool inn0_in_aut0 = false;
    std::vector<SemigroupAuto> phi_image;
};

OutRReport out_r(const TwoCochain& c, const SearchOptions& options = {});

struct SesClause
{
    std::string name;
    bool ok = false;
    bool applicable = true;
    std::string detail;
};

struct SesVerdict
{
    bool ok = false;
    std::size_t h1_order = 0, out_order = 0, stab_order = 0, aut_s_order = 0;
    bool trivial_class = false;
    std::vector<SesClause> clauses;  // injective, image_kernel, image_stab, orders, split
};

SesVerdict verify_ses(const TwoCochain& c, const SearchOptions& options = {});

}  // namespace cforge
