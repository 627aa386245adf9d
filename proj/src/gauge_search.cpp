// Backtracking search for gauges g with g * from == to over finite fields.
//
// The outer loop runs over mu in Aut(D)^E (mixed radix, identity first). For
// a fixed mu the unknowns eta(x) are visited idempotents first, then
// non-idempotents by path length. Idempotent values are forced by the (e,e)
// relation, and an element with a factorization s.t into shorter
// non-idempotents is forced by the (s,t) relation; only the remaining
// irreducible arrows branch over all units. Every relation is checked as soon
// as its last unknown is assigned.

#include "cforge/errors.hpp"
#include "cforge/gauge.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cforge {

namespace {

using Element = SquareFreeSemigroup::Element;

class TransporterSearch
{
  public:
    TransporterSearch(const TwoCochain& from, const TwoCochain& to)
        : from_(from), to_(to), sg_(from.sg()), autos_(enumerate_autos(from.domain())),
          units_(enumerate_units(from.domain()))
    {
        const std::size_t n = sg_.size();
        const std::size_t m = sg_.idempotent_count();

        std::vector<int> depth(n, 0);
        for (std::size_t i = m; i < n; ++i)
            depth[i] = 1;
        // Longer paths are products of shorter ones; iterate to a fixed point.
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t s = m; s < n; ++s)
                for (std::size_t t = m; t < n; ++t) {
                    const Element u = sg_.compose(static_cast<Element>(s), static_cast<Element>(t));
                    if (u == SquareFreeSemigroup::theta)
                        continue;
                    const int d = std::max(depth[s], depth[t]) + 1;
                    if (d > depth[u]) {
                        depth[u] = d;
                        changed = true;
                    }
                }
        }
        for (std::size_t i = 0; i < n; ++i)
            order_.push_back(static_cast<Element>(i));
        std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) { return depth[a] < depth[b]; });
        position_.assign(n, 0);
        for (std::size_t p = 0; p < n; ++p)
            position_[order_[p]] = p;

        checks_.assign(n, {});
        forcing_.assign(n, std::nullopt);
        for (const auto& pair : sg_.tuples(2)) {
            const Element s = pair[0], t = pair[1], u = sg_.compose(s, t);
            const std::size_t last = std::max({position_[s], position_[t], position_[u]});
            checks_[last].push_back({s, t});
            if (!sg_.is_idempotent(s) && !sg_.is_idempotent(t) && !forcing_[u])
                forcing_[u] = std::pair{s, t};
        }
    }

    std::size_t mu_count() const
    {
        std::size_t count = 1;
        for (std::size_t e = 0; e < sg_.idempotent_count(); ++e)
            count *= autos_.size();
        return count;
    }

    // Solutions for the index-th mu assignment, in eta search order.
    void solve(std::size_t index, bool first_only, std::vector<Gauge>& out) const
    {
        const std::size_t m = sg_.idempotent_count();
        std::vector<RingAuto> mu;
        for (std::size_t e = 0; e < m; ++e) {
            mu.push_back(autos_[index % autos_.size()]);
            index /= autos_.size();
        }
        std::vector<RingAuto> mu_inv;
        for (const auto& a : mu)
            mu_inv.push_back(a.inverse());

        const bool commutative = from_.domain()->is_commutative();
        if (commutative) {
            // rho is trivial, so the alpha relations do not involve eta.
            for (std::size_t i = 0; i < sg_.size(); ++i)
                if (!alpha_ok(static_cast<Element>(i), mu, mu_inv, Scalar::one(from_.domain())))
                    return;
        }

        std::vector<Scalar> eta(sg_.size(), Scalar::one(from_.domain()));
        auto visit = [&](auto&& self, std::size_t pos) -> bool {
            if (pos == order_.size()) {
                out.emplace_back(from_.semigroup(), from_.domain(), mu, eta);
                return first_only;
            }
            const Element v = order_[pos];
            auto attempt = [&](const Scalar& candidate) -> bool {
                if (candidate.is_zero())
                    return false;
                eta[v] = candidate;
                if (!commutative && !alpha_ok(v, mu, mu_inv, candidate))
                    return false;
                for (const auto& [s, t] : checks_[pos])
                    if (!pair_ok(s, t, mu, eta))
                        return false;
                return self(self, pos + 1);
            };
            if (sg_.is_idempotent(v)) {
                // zeta(e,e) = mu_e^-1(eta(e) xi_from(e,e)) because alpha_e = rho_xi(e,e).
                return attempt(mu[v](to_.xi(v, v)) * from_.xi(v, v).inverse());
            }
            if (forcing_[v]) {
                const auto [s, t] = *forcing_[v];
                const Scalar x = eta[s] * from_.alpha(s)(eta[t]) * from_.xi(s, t);
                const Scalar y = mu[sg_.src(s)](to_.xi(s, t));
                return attempt(y.inverse() * x);
            }
            for (const auto& u : units_)
                if (attempt(u))
                    return true;
            return false;
        };
        visit(visit, 0);
    }

  private:
    bool alpha_ok(Element s, const std::vector<RingAuto>& mu, const std::vector<RingAuto>& mu_inv,
                  const Scalar& eta_s) const
    {
        const RingAuto beta = compose(mu_inv[sg_.src(s)],
                                      compose(RingAuto::rho(eta_s), compose(from_.alpha(s), mu[sg_.tgt(s)])));
        return beta == to_.alpha(s);
    }

    bool pair_ok(Element s, Element t, const std::vector<RingAuto>& mu, const std::vector<Scalar>& eta) const
    {
        const Element u = sg_.compose(s, t);
        const Scalar lhs = eta[s] * from_.alpha(s)(eta[t]) * from_.xi(s, t);
        const Scalar rhs = mu[sg_.src(s)](to_.xi(s, t)) * eta[u];
        return lhs == rhs;
    }

    const TwoCochain& from_;
    const TwoCochain& to_;
    const SquareFreeSemigroup& sg_;
    std::vector<RingAuto> autos_;
    std::vector<Scalar> units_;
    std::vector<Element> order_;
    std::vector<std::size_t> position_;
    std::vector<std::vector<std::pair<Element, Element>>> checks_;
    std::vector<std::optional<std::pair<Element, Element>>> forcing_;
};

std::vector<std::vector<Gauge>> run(const TransporterSearch& search, bool first_only, unsigned jobs)
{
    const std::size_t total = search.mu_count();
    std::vector<std::vector<Gauge>> per_mu(total);
    std::atomic<std::size_t> best{total};
    auto worker = [&](std::size_t offset, std::size_t stride) {
        for (std::size_t i = offset; i < total; i += stride) {
            if (first_only && i > best.load())
                break;
            search.solve(i, first_only, per_mu[i]);
            if (first_only && !per_mu[i].empty()) {
                std::size_t current = best.load();
                while (i < current && !best.compare_exchange_weak(current, i)) {
                }
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
    if (jobs == 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < jobs; ++w)
            threads.emplace_back(worker, w, jobs);
    }
    return per_mu;
}

void require_enumerable(const TwoCochain& c)
{
    if (!c.domain()->is_finite())
        throw Error(ErrorKind::not_enumerable,
                    "gauge search over " + c.domain()->describe() + " cannot be exhausted");
}

}  // namespace

std::optional<Gauge> cohomologous(const TwoCochain& from, const TwoCochain& to, const SearchOptions& options)
{
    require_same_setting(from, to);
    if (from.domain()->kind() == DomainKind::rational)
        return rational_transporter(from, to);
    require_enumerable(from);
    TransporterSearch search(from, to);
    for (auto& bucket : run(search, true, options.jobs))
        if (!bucket.empty())
            return std::move(bucket.front());
    return std::nullopt;
}

std::vector<Gauge> transporters(const TwoCochain& from, const TwoCochain& to, const SearchOptions& options)
{
    require_same_setting(from, to);
    require_enumerable(from);
    TransporterSearch search(from, to);
    std::vector<Gauge> out;
    for (auto& bucket : run(search, false, options.jobs))
        for (auto& g : bucket)
            out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cforge
