#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planeswitch/bitvec.hpp"
#include "planeswitch/geometry.hpp"

namespace planeswitch {

/// Which bulbs are lit on a given board. Values are immutable: every game
/// operation returns a fresh Configuration.
struct Configuration {
    const IncidenceStructure* structure = nullptr;
    BitVec bits;

    std::size_t lit_count() const { return bits.count(); }
};

/// A set of switches to flip, stored as flip parity per line: order never
/// matters and double flips cancel, so applying a plan twice is the identity.
struct SwitchPlan {
    BitVec line_parity;

    static SwitchPlan from_lines(const IncidenceStructure& s,
                                 const std::vector<std::uint32_t>& lines);
    static SwitchPlan empty(const IncidenceStructure& s);

    std::vector<std::uint32_t> lines() const { return line_parity.set_indices(); }
    std::size_t line_count() const { return line_parity.count(); }
};

enum class Parity { even, odd };

Configuration all_dark(const IncidenceStructure& s);
Configuration config_from_bits(const IncidenceStructure& s, BitVec bits);

/// Seeded random configuration: each bit drawn independently with
/// probability 1/2 from a splitmix64 stream (bit i is bit i%64 of the
/// (i/64)-th output). Identical across platforms for a given seed.
Configuration random_configuration(const IncidenceStructure& s, std::uint64_t seed);

/// XOR the line's characteristic vector into the configuration.
Configuration toggle(const Configuration& c, std::uint32_t line);

Configuration apply_plan(const Configuration& c, const SwitchPlan& plan);

/// True iff the plan leaves strictly fewer bulbs lit.
bool is_reduced_by(const Configuration& c, const SwitchPlan& plan);

/// Lit count mod 2. Invariant under apply_plan exactly when every line of
/// the structure has even size.
Parity parity_class(const Configuration& c);

std::string to_hex(const Configuration& c);
Configuration config_from_hex(const IncidenceStructure& s, const std::string& hex);

/// splitmix64 step; the generator behind seeded configurations.
std::uint64_t splitmix64_next(std::uint64_t& state);

}  // namespace planeswitch
