#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "planeswitch/bitvec.hpp"
#include "planeswitch/gf.hpp"

namespace planeswitch {

enum class GeometryKind { grid, projective, affine };

std::string to_string(GeometryKind kind);

/// A point-line incidence structure: the game board. Points are bulb
/// positions, lines are switch scopes. Immutable once built.
struct IncidenceStructure {
    GeometryKind kind = GeometryKind::grid;
    std::uint32_t order = 0;      // q; 0 for grids
    std::uint32_t dimension = 0;  // d; 0 for grids
    std::uint32_t grid_side = 0;  // n; grids only
    std::uint32_t num_points = 0;
    std::vector<std::vector<std::uint32_t>> lines;   // sorted point indices
    std::vector<std::string> point_labels;
    std::vector<std::uint32_t> parallel_class_of;    // per line; affine only
    std::vector<std::vector<std::uint32_t>> parallel_classes;  // class -> lines
    std::vector<std::vector<std::uint32_t>> lines_of_point;
    std::vector<BitVec> line_masks;                  // characteristic vectors
    std::string id;  // canonical name: "PG(2,3)", "AG(2,4)", "grid(10)"

    std::uint32_t num_lines() const { return static_cast<std::uint32_t>(lines.size()); }

    /// Lines through each point all have the same count for the structures
    /// built here; throws VerificationError if not.
    std::uint32_t lines_per_point() const;

    /// True when every line has an even number of points (the parity
    /// invariant of the lit count holds exactly then).
    bool all_lines_even() const;
};

/// n x n board; lines are the n rows then the n columns. Cap: n <= 32.
IncidenceStructure grid_board(std::uint32_t n);

constexpr std::uint32_t kMaxGridSide = 32;
constexpr std::uint32_t kMaxPoints = 4096;

/// Projective space PG(d, q): points are the 1-dimensional subspaces of
/// GF(q)^(d+1) labeled by the representative whose first nonzero coordinate
/// is 1, in lexicographic order; lines are the 2-dimensional subspaces,
/// listed as sorted point sets in sorted order. d must be even (d = 2 is the
/// projective plane); num_points is capped at 4096.
IncidenceStructure projective_space(const FiniteField& field, std::uint32_t d);

/// Affine space AG(d, q), built from PG(d, q) by deleting the hyperplane
/// "first coordinate = 0" with its points, dropping lines inside it and
/// truncating the rest. Lines whose closures met the same deleted point are
/// grouped into one parallel class.
IncidenceStructure affine_space(const FiniteField& field, std::uint32_t d);

struct AxiomCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample when failed
};

struct AxiomReport {
    std::string structure_id;
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
};

/// Checks every kind-specific incidence invariant of s and reports each with
/// the first counterexample on failure. Structures built by this module pass.
AxiomReport verify_axioms(const IncidenceStructure& s);

/// The unique line through `point` in the same parallel class as `line`.
/// Requires an affine structure and point not on line.
std::uint32_t parallel_line_through(const IncidenceStructure& s, std::uint32_t point,
                                    std::uint32_t line);

/// Plain-text incidence export: "<num_points> <num_lines>\n" then one line of
/// sorted point indices per geometric line. Stable across platforms.
void write_incidence_text(const IncidenceStructure& s, std::ostream& out);

nlohmann::json to_json(const IncidenceStructure& s);
nlohmann::json to_json(const AxiomReport& report);

}  // namespace planeswitch
