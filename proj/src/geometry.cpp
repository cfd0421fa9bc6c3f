#include "planeswitch/geometry.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "planeswitch/errors.hpp"

namespace planeswitch {
namespace {

// Homogeneous coordinate vector over GF(q), first coordinate at index 0.
using Coord = std::vector<unsigned>;

std::uint64_t encode(const Coord& v, unsigned q) {
    std::uint64_t key = 0;
    for (unsigned c : v) key = key * q + c;
    return key;
}

Coord canonical_rep(const FiniteField& f, Coord v) {
    std::size_t nz = 0;
    while (nz < v.size() && v[nz] == 0) ++nz;
    const unsigned s = f.inv(v[nz]);
    for (auto& c : v) c = f.mul(s, c);
    return v;
}

// All canonical projective points of PG(d, q) in lexicographic coordinate
// order: enumerate GF(q)^(d+1) lexicographically, keep vectors whose first
// nonzero coordinate is 1.
std::vector<Coord> projective_points(const FiniteField& f, std::uint32_t d) {
    std::vector<Coord> pts;
    Coord v(d + 1, 0);
    while (true) {
        std::size_t nz = 0;
        while (nz < v.size() && v[nz] == 0) ++nz;
        if (nz < v.size() && v[nz] == 1) pts.push_back(v);
        // lexicographic increment with coordinate 0 most significant
        std::size_t i = v.size();
        while (i > 0 && v[i - 1] == f.q() - 1) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
    }
    return pts;
}

std::string proj_label(const Coord& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ":";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string affine_label(const Coord& v) {
    // kept points have first coordinate 1; the label shows the rest
    std::string s = "(";
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void finalize_incidence(IncidenceStructure& s) {
    s.lines_of_point.assign(s.num_points, {});
    s.line_masks.clear();
    s.line_masks.reserve(s.lines.size());
    for (std::uint32_t li = 0; li < s.lines.size(); ++li) {
        BitVec mask(s.num_points);
        for (auto p : s.lines[li]) {
            if (p >= s.num_points) throw VerificationError("line point index out of range");
            s.lines_of_point[p].push_back(li);
            mask.set(p);
        }
        s.line_masks.push_back(std::move(mask));
    }
    if (!s.parallel_class_of.empty()) {
        const std::uint32_t nclasses =
            1 + *std::max_element(s.parallel_class_of.begin(), s.parallel_class_of.end());
        s.parallel_classes.assign(nclasses, {});
        for (std::uint32_t li = 0; li < s.parallel_class_of.size(); ++li)
            s.parallel_classes[s.parallel_class_of[li]].push_back(li);
    }
}

struct ProjectiveData {
    std::vector<Coord> points;
    std::vector<std::vector<std::uint32_t>> lines;
};

ProjectiveData build_projective(const FiniteField& f, std::uint32_t d) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("dimension must be 2 or an even number > 2, got " +
                                    std::to_string(d));
    const unsigned q = f.q();
    std::uint64_t npts = 1;  // (q^(d+1) - 1) / (q - 1)
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        power *= q;
        npts += power;
    }
    if (npts > kMaxPoints)
        throw SizeLimitError("PG(" + std::to_string(d) + "," + std::to_string(q) + ") has " +
                             std::to_string(npts) + " points, over the cap of " +
                             std::to_string(kMaxPoints));

    ProjectiveData out;
    out.points = projective_points(f, d);
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(out.points.size() * 2);
    for (std::uint32_t i = 0; i < out.points.size(); ++i)
        index.emplace(encode(out.points[i], q), i);

    // The line through points u, v is {[v]} + {[u + t v] : t in GF(q)}.
    std::set<std::vector<std::uint32_t>> lines;
    const std::uint32_t n = static_cast<std::uint32_t>(out.points.size());
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const Coord& u = out.points[i];
            const Coord& v = out.points[j];
            std::vector<std::uint32_t> line{j};
            for (unsigned t = 0; t < q; ++t) {
                Coord w(u.size());
                for (std::size_t c = 0; c < u.size(); ++c)
                    w[c] = f.add(u[c], f.mul(t, v[c]));
                line.push_back(index.at(encode(canonical_rep(f, std::move(w)), q)));
            }
            std::sort(line.begin(), line.end());
            lines.insert(std::move(line));
        }
    }
    out.lines.assign(lines.begin(), lines.end());
    return out;
}

}  // namespace

std::string to_string(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::grid: return "grid";
        case GeometryKind::projective: return "projective";
        case GeometryKind::affine: return "affine";
    }
    return "?";
}

std::uint32_t IncidenceStructure::lines_per_point() const {
    if (num_points == 0) throw VerificationError("empty structure");
    const auto n = static_cast<std::uint32_t>(lines_of_point[0].size());
    for (const auto& lp : lines_of_point)
        if (lp.size() != n) throw VerificationError("lines-per-point is not uniform");
    return n;
}

bool IncidenceStructure::all_lines_even() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const auto& l) { return l.size() % 2 == 0; });
}

IncidenceStructure grid_board(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("grid side must be positive");
    if (n > kMaxGridSide)
        throw SizeLimitError("grid side " + std::to_string(n) + " over the cap of " +
                             std::to_string(kMaxGridSide));
    IncidenceStructure s;
    s.kind = GeometryKind::grid;
    s.grid_side = n;
    s.num_points = n * n;
    s.id = "grid(" + std::to_string(n) + ")";
    for (std::uint32_t r = 0; r < n; ++r) {
        std::vector<std::uint32_t> row(n);
        for (std::uint32_t c = 0; c < n; ++c) row[c] = r * n + c;
        s.lines.push_back(std::move(row));
    }
    for (std::uint32_t c = 0; c < n; ++c) {
        std::vector<std::uint32_t> col(n);
        for (std::uint32_t r = 0; r < n; ++r) col[r] = r * n + c;
        s.lines.push_back(std::move(col));
    }
    s.point_labels.reserve(s.num_points);
    for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c)
            s.point_labels.push_back("(" + std::to_string(r) + "," + std::to_string(c) + ")");
    finalize_incidence(s);
    return s;
}

IncidenceStructure projective_space(const FiniteField& field, std::uint32_t d) {
    ProjectiveData data = build_projective(field, d);
    IncidenceStructure s;
    s.kind = GeometryKind::projective;
    s.order = field.q();
    s.dimension = d;
    s.num_points = static_cast<std::uint32_t>(data.points.size());
    s.id = "PG(" + std::to_string(d) + "," + std::to_string(field.q()) + ")";
    s.lines = std::move(data.lines);
    s.point_labels.reserve(s.num_points);
    for (const auto& v : data.points) s.point_labels.push_back(proj_label(v));
    finalize_incidence(s);
    return s;
}

IncidenceStructure affine_space(const FiniteField& field, std::uint32_t d) {
    ProjectiveData data = build_projective(field, d);
    const std::uint32_t proj_points_n = static_cast<std::uint32_t>(data.points.size());

    // Points with first coordinate 0 form the deleted hyperplane.
    std::vector<std::uint32_t> old_to_new(proj_points_n, UINT32_MAX);
    std::vector<std::uint32_t> kept;
    for (std::uint32_t i = 0; i < proj_points_n; ++i) {
        if (data.points[i][0] != 0) {
            old_to_new[i] = static_cast<std::uint32_t>(kept.size());
            kept.push_back(i);
        }
    }

    // Keep lines not inside the hyperplane; each meets it in exactly one
    // point, which identifies the line's parallel class.
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> truncated;
    for (const auto& line : data.lines) {
        std::vector<std::uint32_t> new_line;
        std::uint32_t deleted_point = UINT32_MAX;
        for (auto p : line) {
            if (old_to_new[p] != UINT32_MAX)
                new_line.push_back(old_to_new[p]);
            else
                deleted_point = p;
        }
        if (new_line.size() == line.size())
            throw VerificationError("projective line missed the hyperplane at infinity");
        if (new_line.empty()) continue;  // line inside the hyperplane
        if (new_line.size() != line.size() - 1)
            throw VerificationError("projective line met the hyperplane in > 1 point");
        std::sort(new_line.begin(), new_line.end());
        truncated.emplace_back(std::move(new_line), deleted_point);
    }
    std::sort(truncated.begin(), truncated.end());

    IncidenceStructure s;
    s.kind = GeometryKind::affine;
    s.order = field.q();
    s.dimension = d;
    s.num_points = static_cast<std::uint32_t>(kept.size());
    s.id = "AG(" + std::to_string(d) + "," + std::to_string(field.q()) + ")";
    std::map<std::uint32_t, std::uint32_t> class_of_infinity_point;
    for (auto& [line, inf_point] : truncated) {
        s.lines.push_back(std::move(line));
        auto [it, inserted] = class_of_infinity_point.emplace(
            inf_point, static_cast<std::uint32_t>(class_of_infinity_point.size()));
        s.parallel_class_of.push_back(it->second);
        (void)inserted;
    }
    s.point_labels.reserve(s.num_points);
    for (auto old : kept) s.point_labels.push_back(affine_label(data.points[old]));
    finalize_incidence(s);
    return s;
}

namespace {

void add_check(AxiomReport& r, const std::string& name, bool passed,
               const std::string& detail = "") {
    r.checks.push_back({name, passed, passed ? "" : detail});
}

void check_count(AxiomReport& r, const std::string& name, std::uint64_t got,
                 std::uint64_t expected) {
    add_check(r, name, got == expected,
              "expected " + std::to_string(expected) + ", got " + std::to_string(got));
}

void check_line_sizes(AxiomReport& r, const IncidenceStructure& s, std::uint32_t expected) {
    for (std::uint32_t li = 0; li < s.lines.size(); ++li) {
        if (s.lines[li].size() != expected) {
            add_check(r, "line size", false,
                      "line " + std::to_string(li) + " has " +
                          std::to_string(s.lines[li].size()) + " points, expected " +
                          std::to_string(expected));
            return;
        }
    }
    add_check(r, "line size", true);
}

void check_lines_per_point(AxiomReport& r, const IncidenceStructure& s,
                           std::uint32_t expected) {
    for (std::uint32_t p = 0; p < s.num_points; ++p) {
        if (s.lines_of_point[p].size() != expected) {
            add_check(r, "lines per point", false,
                      "point " + std::to_string(p) + " lies on " +
                          std::to_string(s.lines_of_point[p].size()) + " lines, expected " +
                          std::to_string(expected));
            return;
        }
    }
    add_check(r, "lines per point", true);
}

// Any two distinct points lie on exactly one common line.
void check_pair_coverage(AxiomReport& r, const IncidenceStructure& s) {
    std::vector<std::uint8_t> cover(static_cast<std::size_t>(s.num_points) * s.num_points, 0);
    std::vector<std::uint32_t> first_line(cover.size(), 0);
    for (std::uint32_t li = 0; li < s.lines.size(); ++li) {
        const auto& line = s.lines[li];
        for (std::size_t i = 0; i < line.size(); ++i) {
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                const std::size_t key =
                    static_cast<std::size_t>(line[i]) * s.num_points + line[j];
                if (cover[key] == 0) first_line[key] = li;
                if (cover[key] < 2) ++cover[key];
                if (cover[key] == 2) {
                    add_check(r, "two points on one line", false,
                              "points " + std::to_string(line[i]) + " and " +
                                  std::to_string(line[j]) + " lie on lines " +
                                  std::to_string(first_line[key]) + " and " +
                                  std::to_string(li));
                    return;
                }
            }
        }
    }
    for (std::uint32_t a = 0; a < s.num_points; ++a) {
        for (std::uint32_t b = a + 1; b < s.num_points; ++b) {
            if (cover[static_cast<std::size_t>(a) * s.num_points + b] == 0) {
                add_check(r, "two points on one line", false,
                          "points " + std::to_string(a) + " and " + std::to_string(b) +
                              " lie on no common line");
                return;
            }
        }
    }
    add_check(r, "two points on one line", true);
}

void check_parallel_classes(AxiomReport& r, const IncidenceStructure& s) {
    if (s.parallel_class_of.size() != s.lines.size()) {
        add_check(r, "parallel classes cover lines", false,
                  "class map has " + std::to_string(s.parallel_class_of.size()) +
                      " entries for " + std::to_string(s.lines.size()) + " lines");
        return;
    }
    add_check(r, "parallel classes cover lines", true);
    for (std::uint32_t ci = 0; ci < s.parallel_classes.size(); ++ci) {
        std::vector<std::uint8_t> seen(s.num_points, 0);
        std::uint64_t covered = 0;
        for (auto li : s.parallel_classes[ci]) {
            for (auto p : s.lines[li]) {
                if (seen[p]) {
                    add_check(r, "each class partitions the points", false,
                              "class " + std::to_string(ci) + ": point " + std::to_string(p) +
                                  " covered twice (line " + std::to_string(li) + ")");
                    return;
                }
                seen[p] = 1;
                ++covered;
            }
        }
        if (covered != s.num_points) {
            add_check(r, "each class partitions the points", false,
                      "class " + std::to_string(ci) + " covers " + std::to_string(covered) +
                          " of " + std::to_string(s.num_points) + " points");
            return;
        }
    }
    add_check(r, "each class partitions the points", true);
}

void check_double_counting(AxiomReport& r, const IncidenceStructure& s) {
    std::uint64_t size_sum = 0;
    for (const auto& l : s.lines) size_sum += l.size();
    std::uint64_t incidence_sum = 0;
    for (const auto& lp : s.lines_of_point) incidence_sum += lp.size();
    add_check(r, "double counting", size_sum == incidence_sum,
              "sum of line sizes " + std::to_string(size_sum) + " != point incidences " +
                  std::to_string(incidence_sum));
}

std::uint64_t geometric_series(std::uint64_t q, std::uint32_t terms) {
    std::uint64_t sum = 0, p = 1;
    for (std::uint32_t i = 0; i < terms; ++i) {
        sum += p;
        p *= q;
    }
    return sum;
}

}  // namespace

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.passed; });
}

AxiomReport verify_axioms(const IncidenceStructure& s) {
    AxiomReport r;
    r.structure_id = s.id;
    const std::uint64_t q = s.order;
    switch (s.kind) {
        case GeometryKind::grid: {
            const std::uint64_t n = s.grid_side;
            check_count(r, "point count", s.num_points, n * n);
            check_count(r, "line count", s.num_lines(), 2 * n);
            check_line_sizes(r, s, static_cast<std::uint32_t>(n));
            check_lines_per_point(r, s, 2);
            check_double_counting(r, s);
            break;
        }
        case GeometryKind::projective: {
            const std::uint32_t d = s.dimension;
            check_count(r, "point count", s.num_points, geometric_series(q, d + 1));
            if (d == 2) {
                check_count(r, "line count", s.num_lines(), q * q + q + 1);
            } else {
                // Gaussian binomial [d+1 choose 2]_q
                std::uint64_t qd1 = 1, qd = 1;
                for (std::uint32_t i = 0; i < d + 1; ++i) qd1 *= q;
                for (std::uint32_t i = 0; i < d; ++i) qd *= q;
                const std::uint64_t expected =
                    (qd1 - 1) / (q - 1) * ((qd - 1) / (q * q - 1));
                check_count(r, "line count", s.num_lines(), expected);
            }
            check_line_sizes(r, s, static_cast<std::uint32_t>(q + 1));
            const std::uint64_t per_point = geometric_series(q, d);
            check_lines_per_point(r, s, static_cast<std::uint32_t>(per_point));
            if (d % 2 == 0 && q % 2 == 1)
                add_check(r, "even line count through points", per_point % 2 == 0,
                          std::to_string(per_point) + " lines per point is odd");
            check_pair_coverage(r, s);
            check_double_counting(r, s);
            break;
        }
        case GeometryKind::affine: {
            const std::uint32_t d = s.dimension;
            std::uint64_t qd = 1;
            for (std::uint32_t i = 0; i < d; ++i) qd *= q;
            check_count(r, "point count", s.num_points, qd);
            check_count(r, "line count", s.num_lines(),
                        (qd / q) * geometric_series(q, d));
            check_line_sizes(r, s, static_cast<std::uint32_t>(q));
            check_lines_per_point(r, s,
                                  static_cast<std::uint32_t>(geometric_series(q, d)));
            check_pair_coverage(r, s);
            check_parallel_classes(r, s);
            check_double_counting(r, s);
            break;
        }
    }
    return r;
}

std::uint32_t parallel_line_through(const IncidenceStructure& s, std::uint32_t point,
                                    std::uint32_t line) {
    if (s.kind != GeometryKind::affine)
        throw std::invalid_argument("parallel lines exist only in affine structures");
    if (point >= s.num_points) throw std::out_of_range("point index out of range");
    if (line >= s.lines.size()) throw std::out_of_range("line index out of range");
    const auto& l = s.lines[line];
    if (std::binary_search(l.begin(), l.end(), point))
        throw std::invalid_argument("point " + std::to_string(point) + " lies on line " +
                                    std::to_string(line));
    for (auto li : s.parallel_classes[s.parallel_class_of[line]]) {
        const auto& cand = s.lines[li];
        if (std::binary_search(cand.begin(), cand.end(), point)) return li;
    }
    throw VerificationError("parallel class misses a point");  // classes partition: unreachable
}

void write_incidence_text(const IncidenceStructure& s, std::ostream& out) {
    out << s.num_points << ' ' << s.num_lines() << '\n';
    for (const auto& line : s.lines) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << ' ';
            out << line[i];
        }
        out << '\n';
    }
}

nlohmann::json to_json(const IncidenceStructure& s) {
    nlohmann::json j;
    j["kind"] = to_string(s.kind);
    j["id"] = s.id;
    j["num_points"] = s.num_points;
    j["num_lines"] = s.num_lines();
    j["lines"] = s.lines;
    j["point_labels"] = s.point_labels;
    if (s.kind == GeometryKind::grid) {
        j["n"] = s.grid_side;
    } else {
        j["order"] = s.order;
        j["dimension"] = s.dimension;
    }
    if (s.kind == GeometryKind::affine) j["parallel_class_of"] = s.parallel_class_of;
    return j;
}

nlohmann::json to_json(const AxiomReport& report) {
    nlohmann::json j;
    j["structure"] = report.structure_id;
    j["all_passed"] = report.all_passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (!c.passed) cj["detail"] = c.detail;
        j["checks"].push_back(cj);
    }
    return j;
}

}  // namespace planeswitch
