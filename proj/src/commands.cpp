#include "cforge/commands.hpp"

#include "cforge/errors.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace cforge {

namespace {

const char* identity_name(CocycleViolation::Identity id)
{
    return id == CocycleViolation::Identity::twisted_associativity ? "twisted_associativity" : "automorphism_twist";
}

Json verdict_json(const CocycleVerdict& v, const SquareFreeSemigroup& sg)
{
    Json violations = Json::array();
    for (const auto& x : v.violations) {
        Json tuple = Json::array();
        for (auto s : x.tuple)
            tuple.push_back(sg.name(s));
        violations.push_back({{"identity", identity_name(x.identity)}, {"tuple", tuple}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    }
    return {{"ok", v.ok}, {"violations", violations}};
}

Json gauges_json(const std::vector<OneCocycle>& v)
{
    Json out = Json::array();
    for (const auto& oc : v)
        out.push_back(gauge_to_json(oc.gauge));
    return out;
}

Json autos_json(const SquareFreeSemigroup& sg, const std::vector<SemigroupAuto>& v)
{
    Json out = Json::array();
    for (const auto& phi : v)
        out.push_back(semigroup_auto_to_json(sg, phi));
    return out;
}

std::string autos_text(const SquareFreeSemigroup& sg, const std::vector<SemigroupAuto>& v)
{
    std::string out;
    for (const auto& phi : v)
        out += "  " + describe(sg, phi) + "\n";
    return out;
}

void require_instance_cocycle(const Instance& inst)
{
    require_cocycle(inst.cocycle);
}

}  // namespace

CommandResult error_result(const Error& e)
{
    CommandResult r;
    r.exit_code = 2;
    Json issues = Json::array();
    std::ostringstream os;
    if (const auto* list = dynamic_cast<const IssueListError*>(&e)) {
        os << "error (" << to_string(e.kind()) << "): " << list->issues().size() << " issue(s)\n";
        for (const auto& i : list->issues()) {
            issues.push_back({{"code", i.code}, {"location", i.location}, {"message", i.message}});
            os << "  " << i.code << " at " << (i.location.empty() ? "-" : i.location) << ": " << i.message << "\n";
        }
    } else {
        os << "error: " << e.what() << "\n";
    }
    r.json = {{"error", to_string(e.kind())}, {"message", e.what()}, {"issues", issues}};
    r.text = os.str();
    return r;
}

CommandResult cmd_validate(const Instance& inst, const RunConfig&)
{
    const auto verdict = is_cocycle(inst.cocycle);
    const bool normal = verdict.ok && is_normal(inst.cocycle);
    CommandResult r;
    r.exit_code = verdict.ok ? 0 : 1;
    r.json = {{"valid", verdict.ok},
              {"division_ring", inst.domain->describe()},
              {"idempotents", inst.semigroup->idempotent_count()},
              {"elements", inst.semigroup->size()},
              {"cocycle", verdict_json(verdict, *inst.semigroup)},
              {"normal", normal}};
    std::ostringstream os;
    os << "division ring " << inst.domain->describe() << ", |E| = " << inst.semigroup->idempotent_count()
       << ", |S*| = " << inst.semigroup->size() << "\n";
    if (verdict.ok) {
        os << "valid 2-cocycle, " << (normal ? "normal" : "not normal") << "\n";
    } else {
        os << "not a cocycle: " << verdict.violations.size() << " violation(s)\n";
        for (const auto& v : verdict.violations)
            os << "  " << describe(v, *inst.semigroup) << "\n";
    }
    r.text = os.str();
    return r;
}

CommandResult cmd_is_cocycle(const Instance& inst, const RunConfig& config)
{
    CommandResult r = cmd_validate(inst, config);
    r.json = verdict_json(is_cocycle(inst.cocycle), *inst.semigroup);
    return r;
}

CommandResult cmd_normalize(const Instance& inst, const RunConfig&)
{
    const auto n = normalize(inst.cocycle);
    const Instance out{inst.domain, inst.semigroup, n.normalized};
    CommandResult r;
    r.json = {{"instance", instance_to_json(out)},
              {"gauge", gauge_to_json(n.gauge)},
              {"changed", !(n.normalized == inst.cocycle)}};
    r.text = (n.gauge.is_identity() ? "already normal\n" : "normalized with gauge " + describe(n.gauge) + "\n") +
             instance_to_json(out)["cocycle"].dump() + "\n";
    return r;
}

CommandResult cmd_act(const Instance& inst, const ClassWitness& w, const RunConfig&)
{
    require_instance_cocycle(inst);
    const SemigroupAuto phi = w.phi ? *w.phi : SemigroupAuto::identity(inst.semigroup->size());
    const Instance out{inst.domain, inst.semigroup, act_gauge(w.gauge, act_phi(phi, inst.cocycle))};
    CommandResult r;
    r.json = {{"instance", instance_to_json(out)}, {"is_cocycle", is_cocycle(out.cocycle).ok}};
    r.text = instance_to_json(out)["cocycle"].dump() + "\n";
    return r;
}

CommandResult cmd_iso_check(const Instance& a, const Instance& b, const RunConfig& config)
{
    require_same_setting(a.cocycle, b.cocycle);
    require_instance_cocycle(a);
    require_instance_cocycle(b);
    CommandResult r;
    if (a.domain->kind() == DomainKind::rational_quaternion) {
        r.json = {{"status", "unknown"}, {"reason", "gauge search over H(Q) cannot be exhausted"}};
        r.text = "unknown: the quaternion domain is not enumerable\n";
        return r;
    }
    const auto& sg = *a.semigroup;
    for (const auto& phi : enumerate_autos(sg)) {
        auto g = cohomologous(act_phi(phi, a.cocycle), b.cocycle, config.search());
        if (!g)
            continue;
        const ClassWitness w{*g, phi};
        const auto source = TwistedRing::create(b.cocycle);
        const auto target = TwistedRing::create(a.cocycle);
        const RingIso iso = build_iso(source, target, w);
        const HomVerdict hom = verify_ring_hom(iso, config.seed);
        Json failures = Json::array();
        for (const auto& f : hom.failures)
            failures.push_back({{"where", f.where}, {"expected", f.expected}, {"actual", f.actual}});
        r.exit_code = hom.ok ? 0 : 1;
        r.json = {{"status", "isomorphic"},
                  {"witness", witness_to_json(w)},
                  {"iso", triple_to_json(sg, iso.map())},
                  {"verified", hom.ok},
                  {"failures", failures}};
        r.text = "isomorphic: phi = " + describe(sg, phi) + ", gauge " + describe(*g) + "\nring map " +
                 (hom.ok ? "verified" : "FAILED verification") + "\n";
        return r;
    }
    r.json = {{"status", "none"}};
    r.text = "none: no automorphism of S and gauge relate the two cocycles\n";
    return r;
}

CommandResult cmd_ring_table(const Instance& inst, const RunConfig&)
{
    const auto ring = TwistedRing::create(inst.cocycle);
    const auto& sg = *inst.semigroup;
    const auto table = multiplication_table(*ring);
    Json rows = Json::array();
    std::vector<std::vector<std::string>> cells(sg.size());
    std::size_t width = 1;
    for (std::size_t s = 0; s < sg.size(); ++s) {
        Json row = Json::array();
        for (std::size_t t = 0; t < sg.size(); ++t) {
            const auto& entry = table[s][t];
            std::string cell = "0";
            if (entry) {
                row.push_back({{"coeff", scalar_to_json(entry->first)}, {"element", sg.name(entry->second)}});
                cell = entry->first.is_one() ? sg.name(entry->second)
                                             : "(" + entry->first.to_string() + ")" + sg.name(entry->second);
            } else {
                row.push_back(nullptr);
            }
            width = std::max(width, cell.size());
            cells[s].push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    Json alpha = Json::array();
    for (std::size_t s = 0; s < sg.size(); ++s)
        alpha.push_back({{"on", sg.name(static_cast<int>(s))}, {"auto", auto_to_json(inst.cocycle.alpha(static_cast<int>(s)))}});
    std::vector<std::string> names;
    for (std::size_t s = 0; s < sg.size(); ++s) {
        names.push_back(sg.name(static_cast<int>(s)));
        width = std::max(width, names.back().size());
    }
    CommandResult r;
    r.json = {{"elements", names}, {"table", rows}, {"alpha", alpha}};
    std::ostringstream os;
    os << std::setw(static_cast<int>(width)) << "";
    for (const auto& n : names)
        os << "  " << std::setw(static_cast<int>(width)) << n;
    os << "\n";
    for (std::size_t s = 0; s < sg.size(); ++s) {
        os << std::setw(static_cast<int>(width)) << names[s];
        for (const auto& cell : cells[s])
            os << "  " << std::setw(static_cast<int>(width)) << cell;
        os << "\n";
    }
    for (std::size_t s = 0; s < sg.size(); ++s)
        if (!inst.cocycle.alpha(static_cast<int>(s)).is_identity())
            os << "alpha_" << names[s] << " = " << inst.cocycle.alpha(static_cast<int>(s)).to_string() << "\n";
    r.text = os.str();
    return r;
}

CommandResult cmd_aut_s(const Instance& inst, const RunConfig& config)
{
    const auto& sg = *inst.semigroup;
    const auto autos = enumerate_autos(sg);
    CommandResult r;
    r.json = {{"order", autos.size()}, {"automorphisms", autos_json(sg, autos)}, {"stabilizer", nullptr}};
    std::ostringstream os;
    os << "|Aut S| = " << autos.size() << "\n" << autos_text(sg, autos);
    if (inst.domain->kind() != DomainKind::rational_quaternion && is_cocycle(inst.cocycle).ok) {
        const auto stab = stabilizer_of_class(inst.cocycle, config.search());
        r.json["stabilizer"] = autos_json(sg, stab);
        os << "stabilizer of the class: " << stab.size() << "\n" << autos_text(sg, stab);
    }
    r.text = os.str();
    return r;
}

CommandResult cmd_z1(const Instance& inst, const RunConfig& config)
{
    const auto z1 = z1_enumerate(inst.cocycle, config.search());
    CommandResult r;
    r.json = {{"order", z1.size()}, {"elements", gauges_json(z1)}};
    r.text = "|Z1| = " + std::to_string(z1.size()) + "\n";
    return r;
}

CommandResult cmd_b1(const Instance& inst, const RunConfig& config)
{
    const auto b1 = b1_enumerate(inst.cocycle, config.search());
    CommandResult r;
    r.json = {{"order", b1.size()}, {"elements", gauges_json(b1)}};
    r.text = "|B1| = " + std::to_string(b1.size()) + "\n";
    return r;
}

CommandResult cmd_h1(const Instance& inst, const RunConfig& config)
{
    const auto h = h1(inst.cocycle, config.search());
    CommandResult r;
    r.exit_code = h.b1_subset && h.b1_normal ? 0 : 1;
    r.json = {{"z1_order", h.z1.size()},
              {"b1_order", h.b1.size()},
              {"h1_order", h.h1_order},
              {"b1_subset", h.b1_subset},
              {"b1_normal", h.b1_normal},
              {"cosets", gauges_json(h.h1_cosets)},
              {"table", h.table}};
    std::ostringstream os;
    os << "|Z1| = " << h.z1.size() << ", |B1| = " << h.b1.size() << ", |H1| = " << h.h1_order
       << (h.b1_normal ? "" : " (B1 not normal!)") << "\n";
    for (std::size_t i = 0; i < h.h1_cosets.size(); ++i)
        os << "  [" << i << "] " << describe(h.h1_cosets[i].gauge) << "\n";
    os << "coset table:\n";
    for (const auto& row : h.table) {
        os << " ";
        for (auto k : row)
            os << " " << k;
        os << "\n";
    }
    r.text = os.str();
    return r;
}

CommandResult cmd_aut0(const Instance& inst, const RunConfig& config)
{
    const auto aut0 = aut0_enumerate(inst.cocycle, config.search());
    Json triples = Json::array();
    for (const auto& t : aut0)
        triples.push_back(triple_to_json(*inst.semigroup, t));
    CommandResult r;
    r.json = {{"order", aut0.size()}, {"triples", triples}};
    r.text = "|Aut0 R| = " + std::to_string(aut0.size()) + "\n";
    return r;
}

CommandResult cmd_out_r(const Instance& inst, const RunConfig& config)
{
    const auto out = out_r(inst.cocycle, config.search());
    const auto& sg = *inst.semigroup;
    CommandResult r;
    r.exit_code = out.inn0_in_aut0 ? 0 : 1;
    r.json = {{"aut0_order", out.aut0.size()},
              {"inn0_order", out.inn0_order},
              {"out_order", out.out_order},
              {"inn0_in_aut0", out.inn0_in_aut0},
              {"phi_image", autos_json(sg, out.phi_image)}};
    std::ostringstream os;
    os << "|Aut0 R| = " << out.aut0.size() << ", |Inn0 R| = " << out.inn0_order << ", |Out R| = " << out.out_order
       << "\nimage of Phi (" << out.phi_image.size() << "):\n"
       << autos_text(sg, out.phi_image);
    r.text = os.str();
    return r;
}

CommandResult cmd_verify_ses(const Instance& inst, const RunConfig& config)
{
    const auto v = verify_ses(inst.cocycle, config.search());
    Json clauses = Json::array();
    std::ostringstream os;
    os << "1 -> H1 (" << v.h1_order << ") -> Out R (" << v.out_order << ") -> Stab (" << v.stab_order << ") -> 1\n";
    for (const auto& c : v.clauses) {
        clauses.push_back({{"name", c.name}, {"ok", c.ok}, {"applicable", c.applicable}, {"detail", c.detail}});
        os << "  " << (c.applicable ? (c.ok ? "PASS " : "FAIL ") : "n/a  ") << c.name << ": " << c.detail << "\n";
    }
    os << (v.ok ? "exact" : "NOT exact") << "\n";
    CommandResult r;
    r.exit_code = v.ok ? 0 : 1;
    r.json = {{"ok", v.ok},
              {"h1_order", v.h1_order},
              {"out_order", v.out_order},
              {"stab_order", v.stab_order},
              {"aut_s_order", v.aut_s_order},
              {"trivial_class", v.trivial_class},
              {"clauses", clauses}};
    r.text = os.str();
    return r;
}

CommandResult cmd_demo(const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    const Instance inst = example_instance();
    const auto& c = inst.cocycle;
    const auto opts = config.search();

    const std::size_t aut_s = enumerate_autos(*inst.semigroup).size();
    const auto h = h1(c, opts);
    const auto out = out_r(c, opts);
    const std::size_t stab = stabilizer_of_class(c, opts).size();
    const auto ses = verify_ses(c, opts);

    struct Row
    {
        const char* label;
        const char* key;
        std::size_t got, want;
    };
    const Row rows[] = {{"|Aut S|", "aut_s", aut_s, 2},       {"|Z1|", "z1", h.z1.size(), 162},
                        {"|B1|", "b1", h.b1.size(), 81},       {"|H1|", "h1", h.h1_order, 2},
                        {"|Out R|", "out_r", out.out_order, 4}, {"|Stab|", "stab", stab, 2}};
    std::ostringstream os;
    os << "Example over " << inst.domain->describe() << ", alpha = Frobenius on s34, xi = 1\n";
    bool ok = true;
    CommandResult r;
    for (const auto& row : rows) {
        const bool pass = row.got == row.want;
        ok = ok && pass;
        os << "  " << std::left << std::setw(8) << row.label << " " << row.got << (pass ? "" : "  (expected ")
           << (pass ? "" : std::to_string(row.want) + ")") << "\n";
        r.json[row.key] = row.got;
    }
    ok = ok && ses.ok;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    os << "  exactness " << (ses.ok ? "PASS" : "FAIL") << "\n";
    os << (ok ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2) << seconds << " s)\n";
    r.json["ses"] = ses.ok;
    r.json["pass"] = ok;
    r.exit_code = ok ? 0 : 1;
    r.text = os.str();
    return r;
}

}  // namespace cforge
