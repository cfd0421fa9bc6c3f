#include "planeswitch/game.hpp"

#include <stdexcept>

namespace planeswitch {

SwitchPlan SwitchPlan::from_lines(const IncidenceStructure& s,
                                  const std::vector<std::uint32_t>& lines) {
    SwitchPlan p{BitVec(s.num_lines())};
    for (auto li : lines) p.line_parity.flip(li);  // multiset: double flips cancel
    return p;
}

SwitchPlan SwitchPlan::empty(const IncidenceStructure& s) {
    return SwitchPlan{BitVec(s.num_lines())};
}

Configuration all_dark(const IncidenceStructure& s) {
    return Configuration{&s, BitVec(s.num_points)};
}

Configuration config_from_bits(const IncidenceStructure& s, BitVec bits) {
    if (bits.size() != s.num_points)
        throw std::invalid_argument("configuration has " + std::to_string(bits.size()) +
                                    " bits for " + std::to_string(s.num_points) + " points");
    return Configuration{&s, std::move(bits)};
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Configuration random_configuration(const IncidenceStructure& s, std::uint64_t seed) {
    BitVec bits(s.num_points);
    std::uint64_t state = seed;
    std::uint64_t word = 0;
    for (std::uint32_t i = 0; i < s.num_points; ++i) {
        if (i % 64 == 0) word = splitmix64_next(state);
        if ((word >> (i % 64)) & 1u) bits.set(i);
    }
    return Configuration{&s, std::move(bits)};
}

Configuration toggle(const Configuration& c, std::uint32_t line) {
    if (line >= c.structure->num_lines())
        throw std::out_of_range("line index " + std::to_string(line) + " out of range");
    Configuration out = c;
    out.bits ^= c.structure->line_masks[line];
    return out;
}

Configuration apply_plan(const Configuration& c, const SwitchPlan& plan) {
    if (plan.line_parity.size() != c.structure->num_lines())
        throw std::invalid_argument("plan size does not match structure");
    Configuration out = c;
    for (auto li : plan.line_parity.set_indices())
        out.bits ^= c.structure->line_masks[li];
    return out;
}

bool is_reduced_by(const Configuration& c, const SwitchPlan& plan) {
    return apply_plan(c, plan).lit_count() < c.lit_count();
}

Parity parity_class(const Configuration& c) {
    return c.lit_count() % 2 == 0 ? Parity::even : Parity::odd;
}

std::string to_hex(const Configuration& c) { return c.bits.to_hex(); }

Configuration config_from_hex(const IncidenceStructure& s, const std::string& hex) {
    return Configuration{&s, BitVec::from_hex(hex, s.num_points)};
}

}  // namespace planeswitch
