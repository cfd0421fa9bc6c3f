#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "planeswitch/game.hpp"
#include "planeswitch/geometry.hpp"

namespace planeswitch {

/// GF(2) span of the lines' characteristic vectors in reduced row echelon
/// form. The reachable states of a configuration form its coset of this
/// code. Each basis row remembers which lines were combined to produce it,
/// so improving moves can be handed back as switch plans.
struct SwitchCode {
    std::uint32_t m = 0;  // ambient length = num_points
    std::uint32_t k = 0;  // rank
    std::vector<BitVec> basis;            // k rows, length m, RREF
    std::vector<std::uint32_t> pivot_columns;  // sorted, one per row
    std::vector<BitVec> row_lines;        // per row: line combination, length num_lines
    std::uint32_t num_lines = 0;

    std::uint32_t redundancy() const { return m - k; }

    /// Membership test; when in the span, also yields the line combination.
    std::optional<BitVec> express_as_lines(const BitVec& v) const;
};

SwitchCode switch_code(const IncidenceStructure& s);

/// Enumeration budget: no route may enumerate more than 2^max_bits items.
/// The PLANESWITCH_MAX_BITS environment variable may lower this through the
/// CLI, never raise it.
constexpr int kDefaultMaxBits = 28;

struct CosetMin {
    std::uint32_t weight = 0;
    BitVec witness;  // lexicographically smallest minimizer
};

/// Minimum lit count over everything reachable from c, with one minimizer.
/// Enumerates the 2^k codewords when k fits the budget, otherwise walks
/// vectors by weight until c's syndrome appears (needs m-k within budget).
CosetMin coset_min_weight(const SwitchCode& code, const Configuration& c,
                          int max_bits = kDefaultMaxBits);

struct ReducibleResult {
    bool reducible = false;
    CosetMin best;
    std::optional<SwitchPlan> plan;  // improving move when reducible
};

ReducibleResult is_reducible(const Configuration& c, const SwitchCode& code,
                             int max_bits = kDefaultMaxBits);

enum class WorstCaseMethod {
    automatic,  // sweep when m fits the budget, else leaders
    sweep,      // Gray-order pass over all 2^m configurations
    leaders     // weight-ordered expansion until every coset has a leader
};

struct SearchOptions {
    WorstCaseMethod method = WorstCaseMethod::automatic;
    int workers = 1;
    int max_bits = kDefaultMaxBits;
    std::size_t witness_cap = 16;
};

/// Exact worst-case analysis of a board: leader weight of every coset.
struct WorstCaseReport {
    std::string structure_id;
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::uint64_t num_cosets = 0;
    std::uint32_t covering_radius = 0;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> spectrum;  // weight -> cosets
    std::vector<BitVec> witnesses;  // lex-smallest irreducible configs at the radius
    WorstCaseMethod method_used = WorstCaseMethod::sweep;
};

WorstCaseReport worst_case(const IncidenceStructure& s, const SearchOptions& options = {});

/// Even-order analysis: T = the maximum number of lit bulbs such that no
/// line holds more than floor(line_size/2) of them (no single flip reduces),
/// whether every configuration attaining T is irreducible, and how T
/// compares with the covering radius.
struct ConjectureReport {
    std::string structure_id;
    std::uint32_t order = 0;
    std::uint32_t line_size = 0;
    std::uint32_t per_line_cap = 0;
    std::uint32_t max_no_trivial_flip = 0;  // T
    std::uint64_t num_maximum_configs = 0;
    bool all_maxima_irreducible = false;
    std::uint32_t covering_radius = 0;
    bool equals_covering_radius = false;
    bool plus_one_single_flip_reducible = false;
    std::vector<BitVec> witnesses;  // lex-smallest maximum configurations
};

ConjectureReport conjecture_check(const IncidenceStructure& s,
                                  const SearchOptions& options = {});

nlohmann::json to_json(const WorstCaseReport& report);
nlohmann::json to_json(const ConjectureReport& report);
std::string to_text(const WorstCaseReport& report);
std::string to_text(const ConjectureReport& report);

}  // namespace planeswitch
