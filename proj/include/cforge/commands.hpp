#pragma once

#include "cforge/errors.hpp"
#include "cforge/instances.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cforge {

struct RunConfig
{
    std::uint64_t seed = 0;
    std::size_t max_idempotents = 8;
    unsigned jobs = 1;
    bool json = false;

    SearchOptions search() const { return {jobs}; }
    SemigroupOptions semigroup() const { return {max_idempotents}; }
};

// Both renderings are always filled; the caller prints the one selected.
struct CommandResult
{
    int exit_code = 0;
    Json json;
    std::string text;
};

// Library errors are reported as {"error": kind, "issues": [...]}, exit 2.
CommandResult error_result(const Error& e);

CommandResult cmd_validate(const Instance& inst, const RunConfig& config);
CommandResult cmd_is_cocycle(const Instance& inst, const RunConfig& config);
CommandResult cmd_normalize(const Instance& inst, const RunConfig& config);
// act_gauge(w.gauge, act_phi(w.phi, c)) as a new instance.
CommandResult cmd_act(const Instance& inst, const ClassWitness& w, const RunConfig& config);

// Searches phi in Aut(S) and a gauge g with act_gauge(g, act_phi(phi, a)) == b;
// on success the ring map R_b -> R_a is built and verified. "status" is
// "isomorphic", "none" or "unknown" (quaternions).
CommandResult cmd_iso_check(const Instance& a, const Instance& b, const RunConfig& config);

CommandResult cmd_ring_table(const Instance& inst, const RunConfig& config);
CommandResult cmd_aut_s(const Instance& inst, const RunConfig& config);
CommandResult cmd_z1(const Instance& inst, const RunConfig& config);
CommandResult cmd_b1(const Instance& inst, const RunConfig& config);
CommandResult cmd_h1(const Instance& inst, const RunConfig& config);
CommandResult cmd_aut0(const Instance& inst, const RunConfig& config);
CommandResult cmd_out_r(const Instance& inst, const RunConfig& config);
CommandResult cmd_verify_ses(const Instance& inst, const RunConfig& config);

// The GF(4) walkthrough; exit 0 iff every printed check passes.
CommandResult cmd_demo(const RunConfig& config);

}  // namespace cforge
