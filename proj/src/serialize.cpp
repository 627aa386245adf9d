#include "cforge/serialize.hpp"

#include "cforge/errors.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace cforge {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message)
{
    throw IssueListError(ErrorKind::parse_error, {{"ParseError", where.empty() ? "/" : where, message}});
}

std::string at(const std::string& where, const std::string& key)
{
    return where + "/" + key;
}

std::string at(const std::string& where, std::size_t index)
{
    return where + "/" + std::to_string(index);
}

const Json& require(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

const Json* optional_field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& require_array(const Json& j, const std::string& where)
{
    if (!j.is_array())
        fail(where, "expected an array");
    return j;
}

std::string get_string(const Json& j, const std::string& where)
{
    if (!j.is_string())
        fail(where, "expected a string");
    return j.get<std::string>();
}

long get_int(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where, "expected an integer");
    return j.get<long>();
}

// Wraps library errors raised while building a value at `where`.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const IssueListError&) {
        throw;
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

SquareFreeSemigroup::Element element_named(const SquareFreeSemigroup& sg, const Json& j, const std::string& where)
{
    const std::string name = get_string(j, where);
    return located(where, [&] { return sg.find(name); });
}

Rational rational_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
    const std::string text = get_string(j, where);
    if (!std::regex_match(text, pattern))
        fail(where, "expected a rational \"p/q\", got \"" + text + "\"");
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0)
        fail(where, "invalid rational \"" + text + "\"");
    r.canonicalize();
    return r;
}

Json rational_to_json(const Rational& r)
{
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

}  // namespace

Json domain_to_json(const ScalarDomain& domain)
{
    switch (domain.kind()) {
    case DomainKind::rational: return {{"kind", "rational"}};
    case DomainKind::rational_quaternion: return {{"kind", "quaternion"}};
    case DomainKind::finite_field: {
        const auto& f = domain.field();
        return {{"kind", "finite_field"}, {"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
    }
    }
    return nullptr;
}

DomainPtr domain_from_json(const Json& j, const std::string& where)
{
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        if (text == "Q" || text == "rational")
            return ScalarDomain::rationals();
        if (text == "H(Q)" || text == "quaternion")
            return ScalarDomain::quaternions();
        std::smatch m;
        static const std::regex power(R"(GF\((\d+)\^(\d+)\))");
        static const std::regex order(R"(GF\((\d+)\))");
        if (std::regex_match(text, m, power))
            return located(where, [&] { return ScalarDomain::finite_field(std::stoi(m[1]), std::stoi(m[2])); });
        if (std::regex_match(text, m, order)) {
            const int q = std::stoi(m[1]);
            for (int p = 2; p <= q; ++p) {
                if (q % p)
                    continue;
                int k = 0, rest = q;
                while (rest % p == 0) {
                    rest /= p;
                    ++k;
                }
                if (rest != 1)
                    break;
                return located(where, [&] { return ScalarDomain::finite_field(p, k); });
            }
            fail(where, text + " is not a prime power");
        }
        fail(where, "unknown division ring \"" + text + "\"");
    }
    const std::string kind = get_string(require(j, "kind", where), at(where, "kind"));
    if (kind == "rational")
        return ScalarDomain::rationals();
    if (kind == "quaternion")
        return ScalarDomain::quaternions();
    if (kind != "finite_field")
        fail(at(where, "kind"), "unknown kind \"" + kind + "\"");
    const long p = get_int(require(j, "p", where), at(where, "p"));
    const long k = get_int(require(j, "k", where), at(where, "k"));
    Poly modulus;
    if (const Json* m = optional_field(j, "modulus", where)) {
        require_array(*m, at(where, "modulus"));
        for (std::size_t i = 0; i < m->size(); ++i)
            modulus.push_back(static_cast<int>(get_int((*m)[i], at(at(where, "modulus"), i))));
    }
    if (p < 2 || p > 1 << 20 || k < 1 || k > 20)
        fail(where, "field parameters out of range");
    return located(where, [&] {
        return ScalarDomain::finite_field(static_cast<int>(p), static_cast<int>(k), std::move(modulus));
    });
}

Json scalar_to_json(const Scalar& x)
{
    switch (x.domain()->kind()) {
    case DomainKind::rational: return rational_to_json(x.rational());
    case DomainKind::finite_field: return x.domain()->field().coefficients(x.ff());
    case DomainKind::rational_quaternion: {
        Json out = Json::array();
        for (const auto& c : x.quat().c)
            out.push_back(rational_to_json(c));
        return out;
    }
    }
    return nullptr;
}

Scalar scalar_from_json(const Json& j, const DomainPtr& domain, const std::string& where)
{
    switch (domain->kind()) {
    case DomainKind::rational: return Scalar(domain, rational_from_json(j, where));
    case DomainKind::finite_field: {
        const auto& f = domain->field();
        require_array(j, where);
        if (j.size() > static_cast<std::size_t>(f.degree()))
            fail(where, "at most " + std::to_string(f.degree()) + " coefficients expected");
        Poly coeffs;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const long c = get_int(j[i], at(where, i));
            if (c < 0 || c >= f.characteristic())
                fail(at(where, i), "coefficient outside 0.." + std::to_string(f.characteristic() - 1));
            coeffs.push_back(static_cast<int>(c));
        }
        return Scalar::from_coefficients(domain, coeffs);
    }
    case DomainKind::rational_quaternion: {
        require_array(j, where);
        if (j.size() != 4)
            fail(where, "a quaternion needs 4 rational components");
        return Scalar::quaternion(domain, rational_from_json(j[0], at(where, 0)), rational_from_json(j[1], at(where, 1)),
                                  rational_from_json(j[2], at(where, 2)), rational_from_json(j[3], at(where, 3)));
    }
    }
    fail(where, "unsupported domain");
}

namespace {

Scalar unit_from_json(const Json& j, const DomainPtr& domain, const std::string& where)
{
    Scalar x = scalar_from_json(j, domain, where);
    if (x.is_zero())
        fail(where, "value must be nonzero");
    return x;
}

}  // namespace

Json auto_to_json(const RingAuto& a)
{
    switch (a.form()) {
    case RingAuto::Form::identity: return "identity";
    case RingAuto::Form::frobenius: return {{"frobenius", a.exponent()}};
    case RingAuto::Form::inner: return {{"inner", scalar_to_json(a.conjugator())}};
    }
    return nullptr;
}

RingAuto auto_from_json(const Json& j, const DomainPtr& domain, const std::string& where)
{
    if (j.is_string()) {
        if (j.get<std::string>() != "identity")
            fail(where, "expected \"identity\", {\"frobenius\": i} or {\"inner\": d}");
        return RingAuto::identity(domain);
    }
    if (const Json* f = optional_field(j, "frobenius", where)) {
        if (domain->kind() != DomainKind::finite_field)
            fail(where, "Frobenius needs a finite field");
        const long i = get_int(*f, at(where, "frobenius"));
        if (i < 0 || i >= domain->field().degree())
            fail(at(where, "frobenius"), "exponent outside 0.." + std::to_string(domain->field().degree() - 1));
        return RingAuto::frobenius(domain, static_cast<int>(i));
    }
    if (const Json* d = optional_field(j, "inner", where))
        return RingAuto::rho(unit_from_json(*d, domain, at(where, "inner")));
    fail(where, "expected \"identity\", {\"frobenius\": i} or {\"inner\": d}");
}

Json semigroup_to_json(const SquareFreeSemigroup& sg)
{
    const auto d = sg.describe();
    Json elements = Json::array();
    for (const auto& e : d.elements)
        elements.push_back({{"name", e.name}, {"src", e.src}, {"tgt", e.tgt}});
    Json products = Json::array();
    for (const auto& p : d.products)
        products.push_back({{"left", p.left}, {"right", p.right}, {"result", p.result}});
    return {{"idempotents", d.idempotents}, {"elements", elements}, {"products", products}};
}

SemigroupDescription semigroup_description_from_json(const Json& j, const std::string& where)
{
    SemigroupDescription d;
    const std::string idem_at = at(where, "idempotents");
    const Json& idems = require_array(require(j, "idempotents", where), idem_at);
    for (std::size_t i = 0; i < idems.size(); ++i)
        d.idempotents.push_back(get_string(idems[i], at(idem_at, i)));
    if (const Json* elements = optional_field(j, "elements", where)) {
        const std::string base = at(where, "elements");
        require_array(*elements, base);
        for (std::size_t i = 0; i < elements->size(); ++i) {
            const std::string loc = at(base, i);
            const Json& e = (*elements)[i];
            d.elements.push_back({get_string(require(e, "name", loc), at(loc, "name")),
                                  get_string(require(e, "src", loc), at(loc, "src")),
                                  get_string(require(e, "tgt", loc), at(loc, "tgt"))});
        }
    }
    if (const Json* products = optional_field(j, "products", where)) {
        const std::string base = at(where, "products");
        require_array(*products, base);
        for (std::size_t i = 0; i < products->size(); ++i) {
            const std::string loc = at(base, i);
            const Json& p = (*products)[i];
            d.products.push_back({get_string(require(p, "left", loc), at(loc, "left")),
                                  get_string(require(p, "right", loc), at(loc, "right")),
                                  get_string(require(p, "result", loc), at(loc, "result"))});
        }
    }
    return d;
}

SemigroupPtr semigroup_from_json(const Json& j, const SemigroupOptions& options, const std::string& where)
{
    const auto description = semigroup_description_from_json(j, where);
    try {
        return std::make_shared<const SquareFreeSemigroup>(SquareFreeSemigroup::validate(description, options));
    } catch (const IssueListError& e) {
        std::vector<Issue> issues = e.issues();
        for (auto& issue : issues)
            issue.location = (where.empty() ? "/" : where) + (issue.location.empty() ? "" : " " + issue.location);
        throw IssueListError(e.kind(), std::move(issues));
    }
}

Json cochain_to_json(const TwoCochain& c)
{
    const auto& sg = c.sg();
    Json alpha = Json::array();
    for (std::size_t s = 0; s < sg.size(); ++s) {
        const auto& a = c.alpha(static_cast<int>(s));
        if (!a.is_identity())
            alpha.push_back({{"on", sg.name(static_cast<int>(s))}, {"auto", auto_to_json(a)}});
    }
    Json xi = Json::array();
    for (const auto& pair : sg.tuples(2)) {
        const auto& v = c.xi(pair[0], pair[1]);
        if (!v.is_one())
            xi.push_back({{"left", sg.name(pair[0])}, {"right", sg.name(pair[1])}, {"value", scalar_to_json(v)}});
    }
    return {{"alpha", alpha}, {"xi", xi}};
}

TwoCochain cochain_from_json(const Json& j, const SemigroupPtr& sg, const DomainPtr& domain, const std::string& where)
{
    TwoCochain c(sg, domain);
    if (!j.is_object())
        fail(where, "expected an object");
    if (const Json* alpha = optional_field(j, "alpha", where)) {
        const std::string base = at(where, "alpha");
        require_array(*alpha, base);
        for (std::size_t i = 0; i < alpha->size(); ++i) {
            const std::string loc = at(base, i);
            const auto s = element_named(*sg, require((*alpha)[i], "on", loc), at(loc, "on"));
            c.set_alpha(s, auto_from_json(require((*alpha)[i], "auto", loc), domain, at(loc, "auto")));
        }
    }
    if (const Json* xi = optional_field(j, "xi", where)) {
        const std::string base = at(where, "xi");
        require_array(*xi, base);
        for (std::size_t i = 0; i < xi->size(); ++i) {
            const std::string loc = at(base, i);
            const Json& entry = (*xi)[i];
            const auto s = element_named(*sg, require(entry, "left", loc), at(loc, "left"));
            const auto t = element_named(*sg, require(entry, "right", loc), at(loc, "right"));
            if (sg->compose(s, t) == SquareFreeSemigroup::theta)
                fail(loc, "(" + sg->name(s) + ", " + sg->name(t) + ") has zero product");
            c.set_xi(s, t, unit_from_json(require(entry, "value", loc), domain, at(loc, "value")));
        }
    }
    return c;
}

Json gauge_to_json(const Gauge& g)
{
    const auto& sg = g.sg();
    Json mu = Json::array();
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e)
        mu.push_back({{"on", sg.name(static_cast<int>(e))}, {"auto", auto_to_json(g.mu(static_cast<int>(e)))}});
    Json eta = Json::array();
    for (std::size_t s = 0; s < sg.size(); ++s)
        eta.push_back({{"on", sg.name(static_cast<int>(s))}, {"value", scalar_to_json(g.eta(static_cast<int>(s)))}});
    return {{"mu", mu}, {"eta", eta}};
}

Gauge gauge_from_json(const Json& j, const SemigroupPtr& sg, const DomainPtr& domain, const std::string& where)
{
    Gauge g = Gauge::identity(sg, domain);
    if (!j.is_object())
        fail(where, "expected an object");
    if (const Json* mu = optional_field(j, "mu", where)) {
        const std::string base = at(where, "mu");
        require_array(*mu, base);
        for (std::size_t i = 0; i < mu->size(); ++i) {
            const std::string loc = at(base, i);
            const auto e = element_named(*sg, require((*mu)[i], "on", loc), at(loc, "on"));
            if (!sg->is_idempotent(e))
                fail(at(loc, "on"), sg->name(e) + " is not an idempotent");
            g.set_mu(e, auto_from_json(require((*mu)[i], "auto", loc), domain, at(loc, "auto")));
        }
    }
    if (const Json* eta = optional_field(j, "eta", where)) {
        const std::string base = at(where, "eta");
        require_array(*eta, base);
        for (std::size_t i = 0; i < eta->size(); ++i) {
            const std::string loc = at(base, i);
            const auto s = element_named(*sg, require((*eta)[i], "on", loc), at(loc, "on"));
            g.set_eta(s, unit_from_json(require((*eta)[i], "value", loc), domain, at(loc, "value")));
        }
    }
    return g;
}

Json semigroup_auto_to_json(const SquareFreeSemigroup& sg, const SemigroupAuto& phi)
{
    Json out = Json::object();
    for (std::size_t s = 0; s < sg.size(); ++s)
        out[sg.name(static_cast<int>(s))] = sg.name(phi(static_cast<int>(s)));
    return out;
}

SemigroupAuto semigroup_auto_from_json(const Json& j, const SquareFreeSemigroup& sg, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object mapping element names");
    std::vector<SquareFreeSemigroup::Element> perm(sg.size());
    for (std::size_t s = 0; s < sg.size(); ++s)
        perm[s] = static_cast<int>(s);
    for (const auto& [key, value] : j.items()) {
        const auto s = located(at(where, key), [&] { return sg.find(key); });
        perm[s] = element_named(sg, value, at(where, key));
    }
    SemigroupAuto phi(std::move(perm));
    if (!is_automorphism(sg, phi))
        fail(where, "not a semigroup automorphism");
    return phi;
}

Json witness_to_json(const ClassWitness& w)
{
    return {{"phi", w.phi ? semigroup_auto_to_json(w.gauge.sg(), *w.phi) : Json(nullptr)},
            {"gauge", gauge_to_json(w.gauge)}};
}

ClassWitness witness_from_json(const Json& j, const SemigroupPtr& sg, const DomainPtr& domain, const std::string& where)
{
    ClassWitness w{gauge_from_json(require(j, "gauge", where), sg, domain, at(where, "gauge")), std::nullopt};
    if (const Json* phi = optional_field(j, "phi", where))
        w.phi = semigroup_auto_from_json(*phi, *sg, at(where, "phi"));
    return w;
}

Json triple_to_json(const SquareFreeSemigroup& sg, const MonomialMap& m)
{
    Json mu = Json::array();
    for (std::size_t e = 0; e < sg.idempotent_count(); ++e)
        mu.push_back({{"on", sg.name(static_cast<int>(e))}, {"auto", auto_to_json(m.mu[e])}});
    Json eta = Json::array();
    for (std::size_t s = 0; s < sg.size(); ++s)
        eta.push_back({{"on", sg.name(static_cast<int>(s))}, {"value", scalar_to_json(m.eta[s])}});
    return {{"mu", mu}, {"eta", eta}, {"phi", semigroup_auto_to_json(sg, m.phi)}};
}

Json element_to_json(const RingElement& x)
{
    Json coeffs = Json::array();
    for (const auto& [s, d] : x.coeffs())
        coeffs.push_back({{"on", x.ring()->sg().name(s)}, {"value", scalar_to_json(d)}});
    return {{"coeffs", coeffs}};
}

RingElement element_from_json(const Json& j, const RingPtr& ring, const std::string& where)
{
    const std::string base = at(where, "coeffs");
    const Json& coeffs = require_array(require(j, "coeffs", where), base);
    RingElement out = ring->zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::string loc = at(base, i);
        const auto s = element_named(ring->sg(), require(coeffs[i], "on", loc), at(loc, "on"));
        out = out + ring->monomial(scalar_from_json(require(coeffs[i], "value", loc), ring->domain(), at(loc, "value")), s);
    }
    return out;
}

Json instance_to_json(const Instance& inst)
{
    return {{"division_ring", domain_to_json(*inst.domain)},
            {"semigroup", semigroup_to_json(*inst.semigroup)},
            {"cocycle", cochain_to_json(inst.cocycle)}};
}

Instance instance_from_json(const Json& j, const SemigroupOptions& options)
{
    if (!j.is_object())
        fail("", "an instance must be a JSON object");
    std::vector<Issue> issues;
    DomainPtr domain;
    SemigroupPtr sg;
    try {
        domain = domain_from_json(require(j, "division_ring", ""), "/division_ring");
    } catch (const IssueListError& e) {
        issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    }
    try {
        sg = semigroup_from_json(require(j, "semigroup", ""), options, "/semigroup");
    } catch (const IssueListError& e) {
        issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    }
    if (!issues.empty())
        throw IssueListError(ErrorKind::parse_error, std::move(issues));
    if (const Json* c = optional_field(j, "cocycle", ""))
        return {domain, sg, cochain_from_json(*c, sg, domain, "/cocycle")};
    return {domain, sg, TwoCochain(sg, domain)};
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IssueListError(ErrorKind::parse_error, {{"FileError", path.string(), "cannot open file"}});
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw IssueListError(ErrorKind::parse_error,
                             {{"ParseError", path.string() + " byte " + std::to_string(e.byte), e.what()}});
    }
}

Instance load_instance(const std::filesystem::path& path, const SemigroupOptions& options)
{
    return instance_from_json(read_json_file(path), options);
}

void write_json_file(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::invalid_argument, "cannot write " + path.string());
    out << j.dump(2) << "\n";
}

}  // namespace cforge
