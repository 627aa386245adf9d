#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cforge {

enum class ErrorKind {
    domain_mismatch,
    division_by_zero,
    not_enumerable,
    invalid_domain,
    unknown_element,
    invalid_semigroup,
    not_a_cocycle,
    not_normal,
    ring_mismatch,
    not_a_unit,
    witness_invalid,
    setting_mismatch,
    parse_error,
    invalid_argument,
};

const char* to_string(ErrorKind kind);

// Base exception for everything the library throws on contract violations.
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// One located problem inside a structured input (semigroup table, instance file).
struct Issue
{
    std::string code;      // e.g. "SquareFreeViolation", "NotAssociative"
    std::string location;  // JSON pointer or element tuple, may be empty
    std::string message;
};

// An error carrying a full list of issues rather than just the first.
class IssueListError : public Error
{
  public:
    IssueListError(ErrorKind kind, std::vector<Issue> issues);

    const std::vector<Issue>& issues() const { return issues_; }

  private:
    std::vector<Issue> issues_;
};

}  // namespace cforge
