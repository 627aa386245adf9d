#include "cforge/errors.hpp"

#include <sstream>

namespace cforge {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::domain_mismatch: return "DomainMismatch";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::not_enumerable: return "NotEnumerable";
    case ErrorKind::invalid_domain: return "InvalidDomain";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::invalid_semigroup: return "InvalidSemigroup";
    case ErrorKind::not_a_cocycle: return "NotACocycle";
    case ErrorKind::not_normal: return "NotNormal";
    case ErrorKind::ring_mismatch: return "RingMismatch";
    case ErrorKind::not_a_unit: return "NotAUnit";
    case ErrorKind::witness_invalid: return "WitnessInvalid";
    case ErrorKind::setting_mismatch: return "SettingMismatch";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

namespace {
std::string summarize(const std::vector<Issue>& issues)
{
    std::ostringstream os;
    os << issues.size() << " issue(s)";
    for (const auto& issue : issues) {
        os << "; " << issue.code;
        if (!issue.location.empty())
            os << " at " << issue.location;
        if (!issue.message.empty())
            os << ": " << issue.message;
    }
    return os.str();
}
}  // namespace

IssueListError::IssueListError(ErrorKind kind, std::vector<Issue> issues)
    : Error(kind, summarize(issues)), issues_(std::move(issues))
{
}

}  // namespace cforge
