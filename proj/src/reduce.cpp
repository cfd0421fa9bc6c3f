#include "planeswitch/reduce.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "planeswitch/errors.hpp"

namespace planeswitch {
namespace {

std::uint32_t common_line(const IncidenceStructure& s, std::uint32_t a, std::uint32_t b) {
    for (auto li : s.lines_of_point[a]) {
        const auto& line = s.lines[li];
        if (std::binary_search(line.begin(), line.end(), b)) return li;
    }
    throw std::invalid_argument("points " + std::to_string(a) + " and " + std::to_string(b) +
                                " share no line");
}

void require_lit(const Configuration& c, std::uint32_t p) {
    if (p >= c.structure->num_points)
        throw std::out_of_range("point index " + std::to_string(p) + " out of range");
    if (!c.bits.test(p))
        throw std::invalid_argument("bulb " + std::to_string(p) + " is not lit");
}

enum class FloorStrategy { fano, pair, affine_single };

std::optional<FloorStrategy> floor_strategy(const IncidenceStructure& s) {
    if (s.kind == GeometryKind::projective && s.order == 2 && s.dimension == 2)
        return FloorStrategy::fano;
    if (s.kind == GeometryKind::affine && s.dimension == 2 && s.order % 2 == 1)
        return FloorStrategy::affine_single;
    if ((s.kind == GeometryKind::projective || s.kind == GeometryKind::affine) &&
        s.lines_per_point() % 2 == 0)
        return FloorStrategy::pair;
    return std::nullopt;
}

}  // namespace

ReductionStep reduce_fano_step(const Configuration& c) {
    const IncidenceStructure& s = *c.structure;
    if (s.kind != GeometryKind::projective || s.order != 2 || s.dimension != 2)
        throw std::invalid_argument("this step applies to PG(2,2) only, not " + s.id);
    if (c.lit_count() < 2)
        throw std::invalid_argument("need at least 2 lit bulbs, have " +
                                    std::to_string(c.lit_count()));
    for (std::uint32_t li = 0; li < s.num_lines(); ++li) {
        std::uint32_t lit = 0;
        std::vector<std::uint32_t> lit_points;
        for (auto p : s.lines[li])
            if (c.bits.test(p)) {
                ++lit;
                lit_points.push_back(p);
            }
        if (lit >= 2) {
            return ReductionStep{std::move(lit_points), SwitchPlan::from_lines(s, {li}),
                                 kStepTagLineFlip};
        }
    }
    // two lit bulbs always share a line: unreachable with lit_count >= 2
    throw VerificationError("no line with two lit bulbs found");
}

ReductionStep reduce_pair_step(const Configuration& c, std::uint32_t a, std::uint32_t b) {
    const IncidenceStructure& s = *c.structure;
    if (s.kind == GeometryKind::grid)
        throw std::invalid_argument("pair elimination needs a projective or affine board");
    if (a == b) throw std::invalid_argument("the two bulbs must be distinct");
    require_lit(c, a);
    require_lit(c, b);
    const std::uint32_t per_point = s.lines_per_point();
    if (per_point % 2 != 0)
        throw std::invalid_argument(s.id + " has an odd number of lines per point (" +
                                    std::to_string(per_point) +
                                    "); pair elimination needs an even count");
    const std::uint32_t ab = common_line(s, a, b);
    SwitchPlan plan = SwitchPlan::empty(s);
    for (auto li : s.lines_of_point[a])
        if (li != ab) plan.line_parity.flip(li);
    for (auto li : s.lines_of_point[b])
        if (li != ab) plan.line_parity.flip(li);
    return ReductionStep{{a, b}, std::move(plan), kStepTagPair};
}

ReductionStep reduce_affine_step(const Configuration& c, std::uint32_t a) {
    const IncidenceStructure& s = *c.structure;
    if (s.kind != GeometryKind::affine)
        throw std::invalid_argument("single-bulb elimination needs an affine board, not " +
                                    s.id);
    if (s.order % 2 == 0)
        throw std::invalid_argument(s.id + " has even order; use the search module instead");
    if (s.dimension != 2)
        throw std::invalid_argument(
            "single-bulb elimination is implemented for planes (d = 2) only");
    require_lit(c, a);

    const std::uint32_t excluded = s.lines_of_point[a].front();  // lowest index through a
    SwitchPlan plan = SwitchPlan::empty(s);
    for (auto li : s.lines_of_point[a])
        if (li != excluded) plan.line_parity.flip(li);
    // Every line of the excluded line's parallel class except the excluded
    // line itself; together they cover each point off that line exactly once.
    for (auto li : s.parallel_classes[s.parallel_class_of[excluded]])
        if (li != excluded) plan.line_parity.flip(li);
    return ReductionStep{{a}, std::move(plan), kStepTagParallel};
}

bool constructively_reducible(const IncidenceStructure& s) {
    return floor_strategy(s).has_value();
}

ReductionResult reduce_to_floor(const Configuration& c) {
    const IncidenceStructure& s = *c.structure;
    const auto strategy = floor_strategy(s);
    if (!strategy)
        throw std::invalid_argument(s.id +
                                    " has no constructive reduction; run the exact search");

    ReductionResult out{c, {}};
    for (;;) {
        const auto lit = out.final_config.bits.set_indices();
        std::optional<ReductionStep> step;
        switch (*strategy) {
            case FloorStrategy::fano:
                if (lit.size() >= 2) step = reduce_fano_step(out.final_config);
                break;
            case FloorStrategy::pair:
                if (lit.size() >= 2)
                    step = reduce_pair_step(out.final_config, lit[0], lit[1]);
                break;
            case FloorStrategy::affine_single:
                if (!lit.empty()) step = reduce_affine_step(out.final_config, lit[0]);
                break;
        }
        if (!step) break;
        out.final_config = apply_plan(out.final_config, step->plan);
        out.steps.push_back(std::move(*step));
    }
    return out;
}

nlohmann::json certificate_json(const Configuration& initial, const ReductionResult& result) {
    nlohmann::json j;
    j["structure"] = initial.structure->id;
    j["initial"] = to_hex(initial);
    j["initial_lit"] = initial.lit_count();
    j["steps"] = nlohmann::json::array();
    for (const auto& step : result.steps) {
        nlohmann::json sj;
        sj["tag"] = step.tag;
        sj["targets"] = step.targets;
        sj["lines"] = step.plan.lines();
        j["steps"].push_back(std::move(sj));
    }
    j["final"] = to_hex(result.final_config);
    j["final_lit"] = result.final_config.lit_count();
    return j;
}

void replay_certificate(const IncidenceStructure& s, const nlohmann::json& certificate) {
    if (certificate.at("structure").get<std::string>() != s.id)
        throw VerificationError("certificate is for " +
                                certificate.at("structure").get<std::string>() + ", not " +
                                s.id);
    Configuration cur = config_from_hex(s, certificate.at("initial").get<std::string>());
    if (cur.lit_count() != certificate.at("initial_lit").get<std::size_t>())
        throw VerificationError("initial lit count mismatch");
    for (const auto& sj : certificate.at("steps")) {
        const auto plan =
            SwitchPlan::from_lines(s, sj.at("lines").get<std::vector<std::uint32_t>>());
        const Configuration next = apply_plan(cur, plan);
        if (next.lit_count() >= cur.lit_count())
            throw VerificationError("step does not reduce the lit count");
        const std::string tag = sj.at("tag").get<std::string>();
        if (tag == kStepTagPair || tag == kStepTagParallel) {
            // surgical steps switch off exactly their targets; a line flip
            // may also light the line's dark bulbs and a coset witness may
            // rearrange freely, so those only owe the strict decrease above
            BitVec expected = cur.bits;
            for (auto t : sj.at("targets").get<std::vector<std::uint32_t>>()) {
                if (!expected.test(t)) throw VerificationError("target bulb was not lit");
                expected.set(t, false);
            }
            if (!(expected == next.bits))
                throw VerificationError("step changed bulbs outside its targets");
        }
        cur = next;
    }
    if (to_hex(cur) != certificate.at("final").get<std::string>())
        throw VerificationError("final configuration mismatch");
    if (cur.lit_count() != certificate.at("final_lit").get<std::size_t>())
        throw VerificationError("final lit count mismatch");
}

}  // namespace planeswitch
