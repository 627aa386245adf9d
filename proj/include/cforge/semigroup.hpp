#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cforge {

// Raw, unvalidated description of a square-free semigroup (mirrors the JSON).
struct SemigroupDescription
{
    struct ElementDecl
    {
        std::string name, src, tgt;
    };
    struct ProductDecl
    {
        std::string left, right, result;  // result "theta" means zero
    };

    std::vector<std::string> idempotents;
    std::vector<ElementDecl> elements;  // may or may not repeat the idempotents
    std::vector<ProductDecl> products;  // nonzero products beyond the forced idempotent laws
};

struct SemigroupOptions
{
    std::size_t max_idempotents = 8;
};

/**
 * A finite square-free semigroup S with zero.
 *
 * Nonzero elements S* are indexed 0..size()-1: the idempotents first in
 * declared order, then the remaining elements sorted by (src, tgt). Each
 * element s lives in e.S.f for exactly one pair (e, f) = (src(s), tgt(s)),
 * and each such slot holds at most one element. The zero is `theta`.
 */
class SquareFreeSemigroup
{
  public:
    using Element = int;
    static constexpr Element theta = -1;

    // Throws IssueListError(invalid_semigroup) listing every violated invariant.
    static SquareFreeSemigroup validate(const SemigroupDescription& raw, const SemigroupOptions& options = {});

    std::size_t size() const { return names_.size(); }
    std::size_t idempotent_count() const { return idempotents_; }
    bool is_idempotent(Element s) const { return s >= 0 && static_cast<std::size_t>(s) < idempotents_; }

    Element src(Element s) const { return src_[s]; }
    Element tgt(Element s) const { return tgt_[s]; }
    const std::string& name(Element s) const { return names_[s]; }
    // Throws Error(unknown_element).
    Element find(std::string_view name) const;
    std::optional<Element> at_slot(Element e, Element f) const;

    // theta-absorbing product.
    Element compose(Element s, Element t) const
    {
        if (s == theta || t == theta)
            return theta;
        return table_[static_cast<std::size_t>(s) * size() + t];
    }

    // S^<n>: n-tuples with nonzero product, lexicographic in element index.
    // n == 0 yields the idempotents as one-element tuples (S^<0> = E).
    std::vector<std::vector<Element>> tuples(std::size_t n) const;

    // Largest m such that some product of m non-idempotents is nonzero.
    std::size_t radical_length() const { return radical_length_; }

    // Canonical description: idempotents, non-idempotents, nonzero
    // non-forced products. Equal semigroups produce equal descriptions.
    SemigroupDescription describe() const;

    friend bool operator==(const SquareFreeSemigroup& a, const SquareFreeSemigroup& b);

  private:
    SquareFreeSemigroup() = default;

    std::size_t idempotents_ = 0;
    std::vector<std::string> names_;
    std::vector<Element> src_, tgt_;
    std::vector<Element> table_;
    std::size_t radical_length_ = 0;
};

using SemigroupPtr = std::shared_ptr<const SquareFreeSemigroup>;

/**
 * An automorphism of S stored as a permutation of element indices.
 * Composition is ordinary function composition: (a * b)(s) = a(b(s)).
 */
class SemigroupAuto
{
  public:
    using Element = SquareFreeSemigroup::Element;

    explicit SemigroupAuto(std::vector<Element> perm) : perm_(std::move(perm)) {}
    static SemigroupAuto identity(std::size_t size);

    Element operator()(Element s) const { return s == SquareFreeSemigroup::theta ? s : perm_[s]; }
    const std::vector<Element>& perm() const { return perm_; }
    bool is_identity() const;
    SemigroupAuto inverse() const;

    friend SemigroupAuto operator*(const SemigroupAuto& a, const SemigroupAuto& b);
    friend bool operator==(const SemigroupAuto&, const SemigroupAuto&) = default;
    friend auto operator<=>(const SemigroupAuto&, const SemigroupAuto&) = default;

  private:
    std::vector<Element> perm_;
};

// Product-preserving bijections, identity first, sorted by permutation.
std::vector<SemigroupAuto> enumerate_autos(const SquareFreeSemigroup& sg);

// Checks bijectivity, E -> E, and phi(s.t) = phi(s).phi(t).
bool is_automorphism(const SquareFreeSemigroup& sg, const SemigroupAuto& phi);

std::string describe(const SquareFreeSemigroup& sg, const SemigroupAuto& phi);

}  // namespace cforge
