// Brute-force reference implementations used only by the tests. Nothing
// here calls the pruned searches, the log tables or the ring classes.
#pragma once

#include "cforge/instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace cforge;

// GF(p^k) product by schoolbook multiplication and long division.
inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, int p)
{
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const std::size_t k = modulus.size() - 1;
    for (std::size_t d = prod.size(); d-- > k;) {
        const int c = prod[d];
        if (!c)
            continue;
        for (std::size_t i = 0; i <= k; ++i)
            prod[d - k + i] = ((prod[d - k + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(k, 0);
    return prod;
}

inline Poly poly_add(const Poly& a, const Poly& b, int p)
{
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
    return out;
}

// All k-digit coefficient vectors over Z_p.
inline std::vector<Poly> all_polys(int p, int k)
{
    std::vector<Poly> out;
    Poly cur(k, 0);
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < k && ++cur[i] == p)
            cur[i++] = 0;
        if (i == k)
            break;
    }
    return out;
}

// Aut(S) by testing every permutation of S* (no slot trick).
inline std::vector<SemigroupAuto> brute_autos(const SquareFreeSemigroup& sg)
{
    std::vector<int> perm(sg.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SemigroupAuto> out;
    do {
        bool ok = true;
        for (std::size_t e = 0; e < sg.idempotent_count() && ok; ++e)
            ok = sg.is_idempotent(perm[e]);
        for (std::size_t s = 0; s < sg.size() && ok; ++s)
            for (std::size_t t = 0; t < sg.size() && ok; ++t) {
                const int st = sg.compose(static_cast<int>(s), static_cast<int>(t));
                const int image = sg.compose(perm[s], perm[t]);
                ok = st == SquareFreeSemigroup::theta ? image == SquareFreeSemigroup::theta : image == perm[st];
            }
        if (ok)
            out.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Independent twisted product on coefficient maps.
using Vec = std::map<int, Scalar>;

inline Vec mul(const TwoCochain& c, const Vec& a, const Vec& b)
{
    const auto& sg = c.sg();
    Vec out;
    for (const auto& [s, x] : a)
        for (const auto& [t, y] : b) {
            const int u = sg.compose(s, t);
            if (u == SquareFreeSemigroup::theta)
                continue;
            const Scalar term = x * c.alpha(s)(y) * c.xi(s, t);
            auto it = out.find(u);
            if (it == out.end())
                out.emplace(u, term);
            else
                it->second = it->second + term;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

inline Vec apply(const SquareFreeSemigroup& sg, const MonomialMap& m, const Vec& x)
{
    Vec out;
    for (const auto& [s, d] : x)
        out.emplace(m.phi(s), m.mu[sg.src(s)](d) * m.eta[s]);
    return out;
}

// sigma(x y) == sigma(x) sigma(y) on monomials 1.s and d.t over all units d.
inline bool is_ring_auto(const TwoCochain& c, const MonomialMap& m, const std::vector<Scalar>& units)
{
    const auto& sg = c.sg();
    for (std::size_t s = 0; s < sg.size(); ++s)
        for (std::size_t t = 0; t < sg.size(); ++t)
            for (const auto& d : units) {
                const Vec x{{static_cast<int>(s), Scalar::one(c.domain())}};
                const Vec y{{static_cast<int>(t), d}};
                if (apply(sg, m, mul(c, x, y)) != mul(c, apply(sg, m, x), apply(sg, m, y)))
                    return false;
            }
    return true;
}

// Calls f(digits) for every vector in [0, radix)^n.
template <class F>
void for_each_digits(std::size_t n, std::size_t radix, F&& f)
{
    std::vector<std::size_t> d(n, 0);
    while (true) {
        f(d);
        std::size_t i = 0;
        while (i < n && ++d[i] == radix)
            d[i++] = 0;
        if (i == n)
            break;
    }
}

// Z^1 by testing every (mu, eta) against the defining formulas directly.
inline std::set<std::pair<std::vector<int>, std::vector<Scalar>>> brute_z1(const TwoCochain& c)
{
    const auto& sg = c.sg();
    const auto domain = c.domain();
    const int k = domain->field().degree();
    const auto units = enumerate_units(domain);
    std::set<std::pair<std::vector<int>, std::vector<Scalar>>> out;
    auto frob = [&](int i) { return RingAuto::frobenius(domain, ((i % k) + k) % k); };
    for_each_digits(sg.idempotent_count(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& md) {
        std::vector<int> mu(md.begin(), md.end());
        for (std::size_t s = 0; s < sg.size(); ++s) {
            // Frobenius powers commute, so beta_s = alpha_s iff mu_e = mu_f.
            if (mu[sg.src(static_cast<int>(s))] != mu[sg.tgt(static_cast<int>(s))])
                return;
        }
        for_each_digits(sg.size(), units.size(), [&](const std::vector<std::size_t>& ed) {
            std::vector<Scalar> eta;
            for (auto i : ed)
                eta.push_back(units[i]);
            for (const auto& pair : sg.tuples(2)) {
                const int s = pair[0], t = pair[1], st = sg.compose(s, t);
                const Scalar lhs = eta[s] * c.alpha(s)(eta[t]) * c.xi(s, t) * eta[st].inverse();
                if (!(lhs == frob(mu[sg.src(s)])(c.xi(s, t))))
                    return;
            }
            out.emplace(mu, eta);
        });
    });
    return out;
}

// Aut0 R: every (mu, eta with eta(e) = 1, phi) checked for multiplicativity.
inline std::vector<MonomialMap> brute_aut0(const TwoCochain& c)
{
    const auto& sg = c.sg();
    const auto domain = c.domain();
    const auto autos = enumerate_autos(domain);
    const auto units = enumerate_units(domain);
    const std::size_t m = sg.idempotent_count();
    std::vector<MonomialMap> out;
    for (const auto& phi : brute_autos(sg))
        for_each_digits(m, autos.size(), [&](const std::vector<std::size_t>& md) {
            for_each_digits(sg.size() - m, units.size(), [&](const std::vector<std::size_t>& ed) {
                MonomialMap t = MonomialMap::identity(sg, domain);
                t.phi = phi;
                for (std::size_t e = 0; e < m; ++e)
                    t.mu[e] = autos[md[e]];
                for (std::size_t i = 0; i < ed.size(); ++i)
                    t.eta[m + i] = units[ed[i]];
                if (is_ring_auto(c, t, units))
                    out.push_back(std::move(t));
            });
        });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
