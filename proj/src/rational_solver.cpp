// Exact transporter search over D = Q.
//
// Aut(Q) is trivial, so g * from == to reduces to
//     eta(s) eta(t) / eta(s.t) = q(s,t) := xi_to(s,t) / xi_from(s,t)
// on S^<2>. Writing eta(x) = (-1)^sigma_x * prod_p p^a_{x,p}, this splits into
// one integer system per prime (column Hermite form) and one sign system over
// GF(2). Primes absent from every q(s,t) get exponent zero.

#include "cforge/errors.hpp"
#include "cforge/gauge.hpp"

#include <gmp.h>

#include <map>
#include <set>

namespace cforge {

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

// Solve M a = b over Z. Column operations are unimodular, so solvability of
// the echelon system H y = b (H = M V) is exactly solvability of M a = b.
std::optional<std::vector<mpz_class>> solve_integer(Matrix m, const std::vector<mpz_class>& b)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    Matrix v(cols, std::vector<mpz_class>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i)
        v[i][i] = 1;

    auto column_combine = [&](std::size_t i, std::size_t j, const mpz_class& a, const mpz_class& bb,
                              const mpz_class& c, const mpz_class& d) {
        // (col_i, col_j) <- (a col_i + bb col_j, c col_i + d col_j), det = +-1
        for (auto* mat : {&m, &v}) {
            for (auto& row : *mat) {
                const mpz_class x = row[i], y = row[j];
                row[i] = a * x + bb * y;
                row[j] = c * x + d * y;
            }
        }
    };

    std::vector<std::ptrdiff_t> pivot_col(rows, -1);
    std::size_t next = 0;
    for (std::size_t r = 0; r < rows && next < cols; ++r) {
        for (std::size_t j = next + 1; j < cols; ++j) {
            if (m[r][j] == 0)
                continue;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][next].get_mpz_t(), m[r][j].get_mpz_t());
            const mpz_class x = m[r][next] / g, y = m[r][j] / g;
            column_combine(next, j, s, t, -y, x);
        }
        if (m[r][next] != 0)
            pivot_col[r] = static_cast<std::ptrdiff_t>(next++);
    }

    std::vector<mpz_class> y(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class residual = b[r];
        const std::size_t limit = pivot_col[r] >= 0 ? static_cast<std::size_t>(pivot_col[r]) : cols;
        for (std::size_t j = 0; j < limit; ++j)
            residual -= m[r][j] * y[j];
        if (pivot_col[r] < 0) {
            if (residual != 0)
                return std::nullopt;
            continue;
        }
        const auto c = static_cast<std::size_t>(pivot_col[r]);
        if (!mpz_divisible_p(residual.get_mpz_t(), m[r][c].get_mpz_t()))
            return std::nullopt;
        y[c] = residual / m[r][c];
    }
    std::vector<mpz_class> a(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i] += v[i][j] * y[j];
    return a;
}

std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> m, std::vector<int> b)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c]) {
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] ^= m[r][j];
                b[i] ^= b[r];
            }
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(r++);
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i])
            return std::nullopt;
    std::vector<int> x(cols, 0);
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0)
            x[c] = b[static_cast<std::size_t>(pivot_of_col[c])];
    return x;
}

void collect_primes(mpz_class n, std::set<mpz_class>& primes)
{
    n = abs(n);
    for (mpz_class p = 2; p * p <= n; ++p) {
        if (p > 1000000)
            break;
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            primes.insert(p);
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
                n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw Error(ErrorKind::not_enumerable, "cannot factor " + n.get_str() + " for the rational solver");
        primes.insert(n);
    }
}

long valuation(mpz_class n, const mpz_class& p)
{
    long v = 0;
    n = abs(n);
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

std::optional<Gauge> rational_transporter(const TwoCochain& from, const TwoCochain& to)
{
    require_same_setting(from, to);
    if (from.domain()->kind() != DomainKind::rational)
        throw Error(ErrorKind::invalid_argument, "rational_transporter needs D = Q");
    const auto& sg = from.sg();
    const std::size_t n = sg.size();
    const auto pairs = sg.tuples(2);

    std::vector<Rational> q;
    std::set<mpz_class> primes;
    for (const auto& pair : pairs) {
        Rational value = to.xi(pair[0], pair[1]).rational() / from.xi(pair[0], pair[1]).rational();
        value.canonicalize();
        collect_primes(value.get_num(), primes);
        collect_primes(value.get_den(), primes);
        q.push_back(value);
    }

    Matrix m(pairs.size(), std::vector<mpz_class>(n, 0));
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        const int s = pairs[r][0], t = pairs[r][1];
        m[r][s] += 1;
        m[r][t] += 1;
        m[r][sg.compose(s, t)] -= 1;
    }

    std::vector<Rational> eta(n, Rational(1));
    for (const auto& p : primes) {
        std::vector<mpz_class> b;
        for (const auto& value : q)
            b.emplace_back(valuation(value.get_num(), p) - valuation(value.get_den(), p));
        auto a = solve_integer(m, b);
        if (!a)
            return std::nullopt;
        for (std::size_t x = 0; x < n; ++x) {
            mpz_class power;
            const long e = (*a)[x].get_si();
            mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
            eta[x] *= e < 0 ? Rational(1) / Rational(power) : Rational(power);
        }
    }

    std::vector<std::vector<int>> m2(pairs.size(), std::vector<int>(n, 0));
    std::vector<int> b2;
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        for (std::size_t x = 0; x < n; ++x) {
            mpz_class v = m[r][x] % 2;
            m2[r][x] = v != 0 ? 1 : 0;
        }
        b2.push_back(sgn(q[r]) < 0 ? 1 : 0);
    }
    auto sigma = solve_gf2(m2, b2);
    if (!sigma)
        return std::nullopt;

    std::vector<Scalar> eta_scalars;
    for (std::size_t x = 0; x < n; ++x) {
        Rational value = (*sigma)[x] ? Rational(-eta[x]) : eta[x];
        eta_scalars.emplace_back(from.domain(), value);
    }
    Gauge g(from.semigroup(), from.domain(),
            std::vector<RingAuto>(sg.idempotent_count(), RingAuto::identity(from.domain())), std::move(eta_scalars));
    if (!(act_gauge(g, from) == to))
        return std::nullopt;  // alpha parts differ (impossible for genuine Q-cochains)
    return g;
}

}  // namespace cforge
