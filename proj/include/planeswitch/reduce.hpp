#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "planeswitch/game.hpp"

namespace planeswitch {

/// One constructive move: a switch plan that extinguishes exactly
/// `targets` and leaves every other bulb unchanged.
struct ReductionStep {
    std::vector<std::uint32_t> targets;  // 1 or 2 point indices
    SwitchPlan plan;
    std::string tag;  // which rule produced the step
};

inline constexpr const char* kStepTagLineFlip = "line-flip";
inline constexpr const char* kStepTagPair = "pair-elimination";
inline constexpr const char* kStepTagParallel = "parallel-class-elimination";
inline constexpr const char* kStepTagCoset = "coset-witness";

/// Order-2 plane move: flip the lowest-index line holding at least two lit
/// bulbs. Requires PG(2,2) and lit_count >= 2; strictly reduces.
ReductionStep reduce_fano_step(const Configuration& c);

/// Extinguish the two lit bulbs a and b: flip every line through a and every
/// line through b except their common line. Requires a structure with an
/// even number N of lines through each point (N-1 odd flips turn a and b
/// off; everything else is hit 0 or 2 times). 2(N-1) switches.
ReductionStep reduce_pair_step(const Configuration& c, std::uint32_t a, std::uint32_t b);

/// Extinguish the single lit bulb a on an odd-order affine plane: flip the
/// q lines through a other than the excluded line (the lowest-index line
/// through a), then every line of the excluded line's parallel class except
/// the excluded line itself (q-1 lines). Bulbs on the excluded line are hit
/// 0 times, every other non-target bulb exactly twice.
ReductionStep reduce_affine_step(const Configuration& c, std::uint32_t a);

struct ReductionResult {
    Configuration final_config;
    std::vector<ReductionStep> steps;
};

/// True when reduce_to_floor has a constructive strategy for this board.
bool constructively_reducible(const IncidenceStructure& s);

/// Iterate constructive steps until none applies. Odd-order projective
/// boards (and higher even-dimensional spaces with odd order) finish at
/// their lit-count parity; odd-order affine planes finish all-dark; PG(2,2)
/// finishes with at most one bulb lit. Even-order boards beyond PG(2,2) are
/// not constructively reducible and are rejected.
ReductionResult reduce_to_floor(const Configuration& c);

/// Replayable certificate: structure id, initial bits, steps, final bits.
nlohmann::json certificate_json(const Configuration& initial, const ReductionResult& result);

/// Re-applies the certificate through apply_plan and checks every claim:
/// monotone lit-count decrease, surgical precision for constructive tags,
/// and the recorded final configuration. Throws VerificationError on any
/// mismatch.
void replay_certificate(const IncidenceStructure& s, const nlohmann::json& certificate);

}  // namespace planeswitch
