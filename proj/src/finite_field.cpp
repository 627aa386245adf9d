#include "cforge/finite_field.hpp"

#include "cforge/errors.hpp"

#include <map>
#include <string>
#include <utility>

namespace cforge {

namespace poly {

namespace {
void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int mod(long v, int p)
{
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}
}  // namespace

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; static_cast<long>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Poly multiply(const Poly& a, const Poly& b, int p)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod(out[i + j] + static_cast<long>(a[i]) * b[j], p);
    trim(out);
    return out;
}

Poly remainder(Poly a, const Poly& b, int p)
{
    for (auto& c : a)
        c = mod(c, p);
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db && !a.empty()) {
        const int lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = mod(a[shift + i] - static_cast<long>(lead) * b[i], p);
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& modulus, int p)
{
    const int k = static_cast<int>(modulus.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        // every monic polynomial of degree d
        long count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (long code = 0; code < count; ++code) {
            Poly divisor(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<int>(c % p);
                c /= p;
            }
            divisor[d] = 1;
            if (remainder(modulus, divisor, p).empty())
                return false;
        }
    }
    return true;
}

}  // namespace poly

Poly GaloisField::default_modulus(int p, int k)
{
    // Conway polynomials, lowest degree first.
    static const std::map<std::pair<int, int>, Poly> builtin = {
        {{2, 2}, {1, 1, 1}},     // x^2+x+1
        {{2, 3}, {1, 1, 0, 1}},  // x^3+x+1
        {{3, 2}, {2, 2, 1}},     // x^2+2x+2
        {{5, 2}, {2, 4, 1}},     // x^2+4x+2
        {{3, 3}, {1, 2, 0, 1}},  // x^3+2x+1
    };
    if (auto it = builtin.find({p, k}); it != builtin.end())
        return it->second;
    if (!poly::is_prime(p) || k < 1)
        throw Error(ErrorKind::invalid_domain, "GF(p^k) needs prime p and k >= 1");
    long count = 1;
    for (int i = 0; i < k; ++i)
        count *= p;
    for (long code = 0; code < count; ++code) {
        Poly candidate(k + 1, 0);
        long c = code;
        for (int i = 0; i < k; ++i) {
            candidate[i] = static_cast<int>(c % p);
            c /= p;
        }
        candidate[k] = 1;
        if (poly::is_irreducible(candidate, p))
            return candidate;
    }
    throw Error(ErrorKind::invalid_domain, "no irreducible polynomial found");
}

GaloisField::GaloisField(int p, int k, Poly modulus) : p_(p), k_(k), q_(1), modulus_(std::move(modulus))
{
    if (!poly::is_prime(p))
        throw Error(ErrorKind::invalid_domain, "characteristic " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw Error(ErrorKind::invalid_domain, "degree must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > max_order)
            throw Error(ErrorKind::invalid_domain, "field order exceeds supported size");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (static_cast<int>(modulus_.size()) != k + 1)
        throw Error(ErrorKind::invalid_domain, "modulus must have exactly k+1 coefficients");
    for (int c : modulus_)
        if (c < 0 || c >= p)
            throw Error(ErrorKind::invalid_domain, "modulus coefficients must lie in [0, p)");
    if (modulus_.back() != 1)
        throw Error(ErrorKind::invalid_domain, "modulus must be monic");
    if (!poly::is_irreducible(modulus_, p))
        throw Error(ErrorKind::invalid_domain, "modulus is reducible over Z_p");

    auto poly_mul = [&](Element a, Element b) {
        auto pa = coefficients(a);
        auto pb = coefficients(b);
        auto r = poly::remainder(poly::multiply(pa, pb, p_), modulus_, p_);
        return from_coefficients(r);
    };

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
        exp_[0] = 1;
    } else {
        bool found = false;
        for (Element g = 2; g < q_ && !found; ++g) {
            Element x = 1;
            std::uint32_t i = 0;
            do {
                exp_[i++] = x;
                x = poly_mul(x, g);
            } while (x != 1 && i < q_ - 1);
            found = (x == 1 && i == q_ - 1);
        }
        if (!found)
            throw Error(ErrorKind::invalid_domain, "no primitive element (modulus not irreducible?)");
    }
    for (std::uint32_t i = 0; i < q_ - 1; ++i)
        log_[exp_[i]] = i;

    frob_power_.assign(static_cast<std::size_t>(k_), 1);
    for (int i = 1; i < k_; ++i)
        frob_power_[i] = (frob_power_[i - 1] * static_cast<std::uint64_t>(p_)) % (q_ - 1 == 0 ? 1 : q_ - 1);
}

GaloisField::Element GaloisField::add(Element a, Element b) const
{
    Element out = 0;
    Element scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += scale * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

GaloisField::Element GaloisField::neg(Element a) const
{
    Element out = 0;
    Element scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += scale * ((p_ - a % p_) % p_);
        a /= p_;
        scale *= p_;
    }
    return out;
}

GaloisField::Element GaloisField::mul(Element a, Element b) const
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GaloisField::Element GaloisField::inv(Element a) const
{
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Element GaloisField::frobenius(Element a, int i) const
{
    if (a == 0)
        return 0;
    const int r = ((i % k_) + k_) % k_;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * frob_power_[r]) % (q_ - 1)];
}

Poly GaloisField::coefficients(Element a) const
{
    Poly out(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
        out[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return out;
}

GaloisField::Element GaloisField::from_coefficients(std::span<const int> coeffs) const
{
    if (static_cast<int>(coeffs.size()) > k_)
        throw Error(ErrorKind::invalid_argument, "too many coefficients for GF(p^k) element");
    Element out = 0;
    Element scale = 1;
    for (int c : coeffs) {
        out += scale * static_cast<Element>(((c % p_) + p_) % p_);
        scale *= p_;
    }
    return out;
}

}  // namespace cforge
