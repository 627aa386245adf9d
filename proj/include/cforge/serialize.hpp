#pragma once

#include "cforge/cohomology.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace cforge {

using Json = nlohmann::json;

// Every *_from_json throws IssueListError(parse_error) whose issues carry the
// JSON pointer of the offending value, prefixed by `where`.

// {"kind": "rational"} | {"kind": "quaternion"} |
// {"kind": "finite_field", "p": 2, "k": 2, "modulus": [1, 1, 1]}.
// The strings "Q", "H(Q)", "GF(q)" and "GF(p^k)" are accepted as shorthand.
Json domain_to_json(const ScalarDomain& domain);
DomainPtr domain_from_json(const Json& j, const std::string& where = "");

// Rational "p/q" (just "p" for integers), finite-field coefficient array
// lowest degree first, quaternion as four rational strings.
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const DomainPtr& domain, const std::string& where = "");

// "identity" | {"frobenius": i} | {"inner": scalar}
Json auto_to_json(const RingAuto& a);
RingAuto auto_from_json(const Json& j, const DomainPtr& domain, const std::string& where = "");

Json semigroup_to_json(const SquareFreeSemigroup& sg);
SemigroupDescription semigroup_description_from_json(const Json& j, const std::string& where = "");
// Parses and validates; validation issues get `where` prepended.
SemigroupPtr semigroup_from_json(const Json& j, const SemigroupOptions& options = {},
                                 const std::string& where = "");

// Sparse: only alpha != identity and xi != 1 are written.
Json cochain_to_json(const TwoCochain& c);
TwoCochain cochain_from_json(const Json& j, const SemigroupPtr& sg, const DomainPtr& domain,
                             const std::string& where = "");

Json gauge_to_json(const Gauge& g);
Gauge gauge_from_json(const Json& j, const SemigroupPtr& sg, const DomainPtr& domain, const std::string& where = "");

// {"e1": "e1", "e2": "e3", ...}
Json semigroup_auto_to_json(const SquareFreeSemigroup& sg, const SemigroupAuto& phi);
SemigroupAuto semigroup_auto_from_json(const Json& j, const SquareFreeSemigroup& sg, const std::string& where = "");

// {"phi": auto or null, "gauge": gauge}
Json witness_to_json(const ClassWitness& w);
ClassWitness witness_from_json(const Json& j, const SemigroupPtr& sg, const DomainPtr& domain,
                               const std::string& where = "");

// {"mu": [...], "eta": [...], "phi": {...}}
Json triple_to_json(const SquareFreeSemigroup& sg, const MonomialMap& m);

// {"coeffs": [{"on": s, "value": scalar}]}
Json element_to_json(const RingElement& x);
RingElement element_from_json(const Json& j, const RingPtr& ring, const std::string& where = "");

struct Instance
{
    DomainPtr domain;
    SemigroupPtr semigroup;
    TwoCochain cocycle;
};

// {"division_ring": ..., "semigroup": ..., "cocycle": ...}; a missing cocycle
// means the trivial one. The cocycle identities are not enforced here.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j, const SemigroupOptions& options = {});

// Reads and parses a file; JSON syntax errors report the byte offset.
Json read_json_file(const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path, const SemigroupOptions& options = {});
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace cforge
