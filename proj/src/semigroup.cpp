#include "cforge/semigroup.hpp"

#include "cforge/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cforge {

namespace {

std::string tuple_str(std::initializer_list<std::string_view> names)
{
    std::string out = "(";
    bool first = true;
    for (auto n : names) {
        if (!first)
            out += ",";
        out += n;
        first = false;
    }
    return out + ")";
}

}  // namespace

SquareFreeSemigroup SquareFreeSemigroup::validate(const SemigroupDescription& raw, const SemigroupOptions& options)
{
    std::vector<Issue> issues;
    auto fail = [&](std::string code, std::string location, std::string message) {
        issues.push_back({std::move(code), std::move(location), std::move(message)});
    };

    if (raw.idempotents.empty())
        fail("NoIdempotents", "", "a square-free semigroup needs at least one idempotent");
    if (raw.idempotents.size() > options.max_idempotents)
        fail("TooManyIdempotents", "",
             std::to_string(raw.idempotents.size()) + " idempotents exceed the cap of " +
                 std::to_string(options.max_idempotents));

    std::map<std::string, int> idem_index;
    for (const auto& e : raw.idempotents) {
        if (!idem_index.emplace(e, static_cast<int>(idem_index.size())).second)
            fail("DuplicateName", e, "idempotent declared twice");
        if (e == "theta")
            fail("ReservedName", e, "'theta' denotes the zero");
    }

    struct Arrow
    {
        std::string name;
        int src, tgt;
    };
    std::vector<Arrow> arrows;
    std::set<std::string> seen_names;
    std::map<std::pair<int, int>, std::string> slots;
    for (const auto& [e, i] : idem_index)
        slots[{i, i}] = e;

    for (const auto& decl : raw.elements) {
        if (idem_index.count(decl.name)) {
            if (decl.src != decl.name || decl.tgt != decl.name)
                fail("BadTyping", decl.name, "an idempotent must have src = tgt = itself");
            continue;
        }
        if (decl.name == "theta")
            fail("ReservedName", decl.name, "'theta' denotes the zero");
        if (!seen_names.insert(decl.name).second) {
            fail("DuplicateName", decl.name, "element declared twice");
            continue;
        }
        auto s = idem_index.find(decl.src);
        auto t = idem_index.find(decl.tgt);
        if (s == idem_index.end() || t == idem_index.end()) {
            fail("UnknownElement", decl.name, "src/tgt must be declared idempotents");
            continue;
        }
        auto [slot, inserted] = slots.emplace(std::pair{s->second, t->second}, decl.name);
        if (!inserted) {
            fail("SquareFreeViolation", tuple_str({decl.src, decl.tgt}),
                 "'" + decl.name + "' and '" + slot->second + "' both lie in " + decl.src + ".S." + decl.tgt);
            continue;
        }
        arrows.push_back({decl.name, s->second, t->second});
    }
    if (!issues.empty())
        throw IssueListError(ErrorKind::invalid_semigroup, std::move(issues));

    SquareFreeSemigroup sg;
    sg.idempotents_ = raw.idempotents.size();
    for (std::size_t i = 0; i < raw.idempotents.size(); ++i) {
        sg.names_.push_back(raw.idempotents[i]);
        sg.src_.push_back(static_cast<int>(i));
        sg.tgt_.push_back(static_cast<int>(i));
    }
    std::stable_sort(arrows.begin(), arrows.end(),
                     [](const Arrow& a, const Arrow& b) { return std::pair(a.src, a.tgt) < std::pair(b.src, b.tgt); });
    for (const auto& a : arrows) {
        sg.names_.push_back(a.name);
        sg.src_.push_back(a.src);
        sg.tgt_.push_back(a.tgt);
    }

    const std::size_t n = sg.size();
    sg.table_.assign(n * n, theta);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            Element value = theta;
            if (sg.is_idempotent(static_cast<Element>(s)) && sg.src_[t] == static_cast<Element>(s))
                value = static_cast<Element>(t);
            else if (sg.is_idempotent(static_cast<Element>(t)) && sg.tgt_[s] == static_cast<Element>(t))
                value = static_cast<Element>(s);
            sg.table_[s * n + t] = value;
        }
    }

    std::map<std::pair<Element, Element>, Element> declared;
    for (const auto& prod : raw.products) {
        const std::string where = tuple_str({prod.left, prod.right});
        auto lookup = [&](const std::string& name) -> std::optional<Element> {
            for (std::size_t i = 0; i < n; ++i)
                if (sg.names_[i] == name)
                    return static_cast<Element>(i);
            fail("UnknownElement", where, "unknown element '" + name + "'");
            return std::nullopt;
        };
        auto l = lookup(prod.left);
        auto r = lookup(prod.right);
        std::optional<Element> res = theta;
        if (prod.result != "theta")
            res = lookup(prod.result);
        if (!l || !r || !res)
            continue;
        const Element s = *l, t = *r, u = *res;
        if (auto [it, inserted] = declared.emplace(std::pair{s, t}, u); !inserted && it->second != u) {
            fail("InconsistentProduct", where, "product declared twice with different results");
            continue;
        }
        if (sg.is_idempotent(s) || sg.is_idempotent(t)) {
            if (sg.table_[s * n + t] != u)
                fail("BadTyping", where, "contradicts the forced idempotent law");
            continue;
        }
        if (u == theta)
            continue;
        if (sg.tgt_[s] != sg.src_[t] || sg.src_[u] != sg.src_[s] || sg.tgt_[u] != sg.tgt_[t]) {
            fail("BadTyping", where, "result '" + prod.result + "' does not lie in src(left).S.tgt(right)");
            continue;
        }
        if (sg.is_idempotent(u)) {
            fail("NotNilpotent", where, "a product of non-idempotents cannot be an idempotent");
            continue;
        }
        sg.table_[s * n + t] = u;
    }
    if (!issues.empty())
        throw IssueListError(ErrorKind::invalid_semigroup, std::move(issues));

    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t u = 0; u < n; ++u) {
                const auto a = static_cast<Element>(s), b = static_cast<Element>(t), c = static_cast<Element>(u);
                if (sg.compose(sg.compose(a, b), c) != sg.compose(a, sg.compose(b, c)))
                    fail("NotAssociative", tuple_str({sg.names_[s], sg.names_[t], sg.names_[u]}),
                         "(s.t).u != s.(t.u)");
            }
    if (!issues.empty())
        throw IssueListError(ErrorKind::invalid_semigroup, std::move(issues));

    // Powers of the non-idempotent span; products are simple paths, so this
    // stops after at most |E| rounds.
    std::set<Element> layer;
    for (std::size_t s = sg.idempotents_; s < n; ++s)
        layer.insert(static_cast<Element>(s));
    while (!layer.empty()) {
        ++sg.radical_length_;
        std::set<Element> next;
        for (Element x : layer)
            for (std::size_t t = sg.idempotents_; t < n; ++t)
                if (Element y = sg.compose(x, static_cast<Element>(t)); y != theta)
                    next.insert(y);
        layer = std::move(next);
        if (sg.radical_length_ > n)
            throw Error(ErrorKind::invalid_semigroup, "non-idempotent span is not nilpotent");
    }
    return sg;
}

SquareFreeSemigroup::Element SquareFreeSemigroup::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<Element>(i);
    throw Error(ErrorKind::unknown_element, "no element named '" + std::string(name) + "'");
}

std::optional<SquareFreeSemigroup::Element> SquareFreeSemigroup::at_slot(Element e, Element f) const
{
    for (std::size_t i = 0; i < size(); ++i)
        if (src_[i] == e && tgt_[i] == f)
            return static_cast<Element>(i);
    return std::nullopt;
}

std::vector<std::vector<SquareFreeSemigroup::Element>> SquareFreeSemigroup::tuples(std::size_t n) const
{
    std::vector<std::vector<Element>> out;
    if (n == 0) {
        for (std::size_t e = 0; e < idempotents_; ++e)
            out.push_back({static_cast<Element>(e)});
        return out;
    }
    std::vector<Element> current;
    auto extend = [&](auto&& self, Element product) -> void {
        if (current.size() == n) {
            out.push_back(current);
            return;
        }
        for (std::size_t s = 0; s < size(); ++s) {
            const Element next = current.empty() ? static_cast<Element>(s) : compose(product, static_cast<Element>(s));
            if (next == theta)
                continue;
            current.push_back(static_cast<Element>(s));
            self(self, next);
            current.pop_back();
        }
    };
    extend(extend, theta);
    return out;
}

SemigroupDescription SquareFreeSemigroup::describe() const
{
    SemigroupDescription d;
    for (std::size_t e = 0; e < idempotents_; ++e)
        d.idempotents.push_back(names_[e]);
    for (std::size_t s = idempotents_; s < size(); ++s)
        d.elements.push_back({names_[s], names_[src_[s]], names_[tgt_[s]]});
    for (std::size_t s = idempotents_; s < size(); ++s)
        for (std::size_t t = idempotents_; t < size(); ++t)
            if (Element u = table_[s * size() + t]; u != theta)
                d.products.push_back({names_[s], names_[t], names_[u]});
    return d;
}

bool operator==(const SquareFreeSemigroup& a, const SquareFreeSemigroup& b)
{
    return a.idempotents_ == b.idempotents_ && a.names_ == b.names_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ &&
           a.table_ == b.table_;
}

// ---------------------------------------------------------------------------

SemigroupAuto SemigroupAuto::identity(std::size_t size)
{
    std::vector<Element> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    return SemigroupAuto(std::move(perm));
}

bool SemigroupAuto::is_identity() const
{
    for (std::size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != static_cast<Element>(i))
            return false;
    return true;
}

SemigroupAuto SemigroupAuto::inverse() const
{
    std::vector<Element> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i)
        inv[perm_[i]] = static_cast<Element>(i);
    return SemigroupAuto(std::move(inv));
}

SemigroupAuto operator*(const SemigroupAuto& a, const SemigroupAuto& b)
{
    std::vector<SemigroupAuto::Element> perm(b.perm_.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = a.perm_[b.perm_[i]];
    return SemigroupAuto(std::move(perm));
}

bool is_automorphism(const SquareFreeSemigroup& sg, const SemigroupAuto& phi)
{
    const std::size_t n = sg.size();
    if (phi.perm().size() != n)
        return false;
    std::vector<bool> hit(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        const auto image = phi(static_cast<int>(s));
        if (image < 0 || static_cast<std::size_t>(image) >= n || hit[image])
            return false;
        hit[image] = true;
        if (sg.is_idempotent(static_cast<int>(s)) != sg.is_idempotent(image))
            return false;
    }
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const auto a = static_cast<int>(s), b = static_cast<int>(t);
            if (phi(sg.compose(a, b)) != sg.compose(phi(a), phi(b)))
                return false;
        }
    return true;
}

std::vector<SemigroupAuto> enumerate_autos(const SquareFreeSemigroup& sg)
{
    const std::size_t m = sg.idempotent_count();
    std::vector<int> eperm(m);
    std::iota(eperm.begin(), eperm.end(), 0);
    std::vector<SemigroupAuto> out;
    do {
        std::vector<int> perm(sg.size());
        bool extends = true;
        for (std::size_t s = 0; s < sg.size() && extends; ++s) {
            auto slot = sg.at_slot(eperm[sg.src(static_cast<int>(s))], eperm[sg.tgt(static_cast<int>(s))]);
            if (!slot)
                extends = false;
            else
                perm[s] = *slot;
        }
        if (!extends)
            continue;
        SemigroupAuto phi(std::move(perm));
        if (is_automorphism(sg, phi))
            out.push_back(std::move(phi));
    } while (std::next_permutation(eperm.begin(), eperm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string describe(const SquareFreeSemigroup& sg, const SemigroupAuto& phi)
{
    if (phi.is_identity())
        return "id";
    std::ostringstream os;
    bool first = true;
    for (std::size_t s = 0; s < sg.size(); ++s) {
        const int image = phi(static_cast<int>(s));
        if (image == static_cast<int>(s))
            continue;
        if (!first)
            os << ", ";
        os << sg.name(static_cast<int>(s)) << "->" << sg.name(image);
        first = false;
    }
    return os.str();
}

}  // namespace cforge
