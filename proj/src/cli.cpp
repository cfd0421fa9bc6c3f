#include "planeswitch/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "planeswitch/errors.hpp"
#include "planeswitch/game.hpp"
#include "planeswitch/geometry.hpp"
#include "planeswitch/reduce.hpp"
#include "planeswitch/search.hpp"

namespace planeswitch::cli {
namespace {

struct RunSpec {
    std::string geometry;
    std::uint32_t order = 0;
    std::uint32_t dimension = 2;
    std::uint32_t grid_side = 0;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    std::string config_hex;
    bool random_config = false;
    int workers = 1;
};

std::pair<unsigned, unsigned> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("order must be at least 2");
    unsigned p = 0;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1};  // q itself is prime
    unsigned k = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1)
        throw std::invalid_argument("no field of order " + std::to_string(q) +
                                    " (not a prime power)");
    return {p, k};
}

IncidenceStructure build_structure(const RunSpec& spec) {
    if (spec.geometry == "grid") {
        if (spec.grid_side == 0)
            throw std::invalid_argument("grid geometry needs --n");
        return grid_board(spec.grid_side);
    }
    if (spec.order == 0)
        throw std::invalid_argument(spec.geometry + " geometry needs --order");
    const auto [p, k] = factor_prime_power(spec.order);
    const FiniteField field(p, k);
    if (spec.geometry == "projective") return projective_space(field, spec.dimension);
    return affine_space(field, spec.dimension);
}

SearchOptions search_options(const RunSpec& spec) {
    SearchOptions options;
    options.workers = std::max(1, spec.workers);
    options.max_bits = kDefaultMaxBits;
    if (const char* env = std::getenv("PLANESWITCH_MAX_BITS")) {
        std::size_t pos = 0;
        const int v = std::stoi(env, &pos);
        if (pos != std::string(env).size() || v < 0)
            throw std::invalid_argument("PLANESWITCH_MAX_BITS must be a non-negative integer");
        options.max_bits = std::min(options.max_bits, v);  // may lower, never raise
    }
    return options;
}

class Output {
public:
    explicit Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file " + path);
            stream_ = &file_;
        } else {
            stream_ = &fallback;
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

void print_structure(const IncidenceStructure& s, const RunSpec& spec, std::ostream& os) {
    if (spec.format == "json")
        os << to_json(s).dump(2) << '\n';
    else
        write_incidence_text(s, os);
}

void print_axiom_report(const AxiomReport& report, const RunSpec& spec, std::ostream& os) {
    if (spec.format == "json") {
        os << to_json(report).dump(2) << '\n';
        return;
    }
    os << "axiom report for " << report.structure_id << '\n';
    for (const auto& c : report.checks) {
        os << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.passed) os << " (" << c.detail << ")";
        os << '\n';
    }
}

int cmd_build(const RunSpec& spec, std::ostream& out, std::ostream& err, bool verify_only,
              bool skip_verify) {
    const IncidenceStructure s = build_structure(spec);
    if (!skip_verify) {
        const AxiomReport report = verify_axioms(s);
        if (verify_only) {
            Output output(spec.out_path, out);
            print_axiom_report(report, spec, output.stream());
            return report.all_passed() ? kOk : kVerificationFailure;
        }
        if (!report.all_passed()) {
            print_axiom_report(report, spec, err);
            return kVerificationFailure;
        }
    }
    Output output(spec.out_path, out);
    print_structure(s, spec, output.stream());
    return kOk;
}

int cmd_worst(const RunSpec& spec, std::ostream& out) {
    const IncidenceStructure s = build_structure(spec);
    const WorstCaseReport report = worst_case(s, search_options(spec));
    Output output(spec.out_path, out);
    if (spec.format == "json")
        output.stream() << to_json(report).dump(2) << '\n';
    else
        output.stream() << to_text(report);
    return kOk;
}

int cmd_conjecture(const RunSpec& spec, std::ostream& out) {
    const IncidenceStructure s = build_structure(spec);
    const ConjectureReport report = conjecture_check(s, search_options(spec));
    Output output(spec.out_path, out);
    if (spec.format == "json")
        output.stream() << to_json(report).dump(2) << '\n';
    else
        output.stream() << to_text(report);
    return kOk;
}

int cmd_reduce(const RunSpec& spec, std::ostream& out) {
    const IncidenceStructure s = build_structure(spec);
    if (spec.random_config == !spec.config_hex.empty())
        throw std::invalid_argument("provide exactly one of --config or --random");
    const Configuration initial = spec.random_config
                                      ? random_configuration(s, spec.seed)
                                      : config_from_hex(s, spec.config_hex);

    ReductionResult result{initial, {}};
    if (constructively_reducible(s)) {
        result = reduce_to_floor(initial);
    } else {
        // no constructive route: walk improving coset witnesses instead
        const SwitchCode code = switch_code(s);
        const int max_bits = search_options(spec).max_bits;
        Configuration cur = initial;
        for (;;) {
            const ReducibleResult step = is_reducible(cur, code, max_bits);
            if (!step.reducible) break;
            const Configuration next = apply_plan(cur, *step.plan);
            std::vector<std::uint32_t> extinguished;
            for (std::uint32_t p = 0; p < s.num_points; ++p)
                if (cur.bits.test(p) && !next.bits.test(p)) extinguished.push_back(p);
            result.steps.push_back(
                ReductionStep{std::move(extinguished), *step.plan, kStepTagCoset});
            cur = next;
        }
        result.final_config = cur;
    }

    const nlohmann::json certificate = certificate_json(initial, result);
    replay_certificate(s, certificate);  // throws VerificationError on mismatch

    Output output(spec.out_path, out);
    if (spec.format == "json") {
        output.stream() << certificate.dump(2) << '\n';
    } else {
        output.stream() << "reduction on " << s.id << ": " << initial.lit_count() << " -> "
                        << result.final_config.lit_count() << " lit in "
                        << result.steps.size() << " steps\n";
        for (const auto& step : result.steps) {
            output.stream() << "  " << step.tag << " targets [";
            for (std::size_t i = 0; i < step.targets.size(); ++i)
                output.stream() << (i ? " " : "") << step.targets[i];
            output.stream() << "] flips " << step.plan.line_count() << " lines\n";
        }
        output.stream() << "  final: " << to_hex(result.final_config) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-geometry switching games: boards, reductions, exact worst cases"};
    app.require_subcommand(1);

    RunSpec spec;
    const auto add_common = [&](CLI::App* cmd, bool with_config) {
        cmd->add_option("--geometry", spec.geometry, "grid | projective | affine")
            ->required()
            ->check(CLI::IsMember({"grid", "projective", "affine"}));
        cmd->add_option("--order", spec.order, "field order q (projective/affine)");
        cmd->add_option("--dimension", spec.dimension, "space dimension (default 2)");
        cmd->add_option("--n", spec.grid_side, "grid side length");
        cmd->add_option("--format", spec.format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", spec.out_path, "write output to this file");
        cmd->add_option("--workers", spec.workers, "worker threads for enumeration");
        if (with_config) {
            cmd->add_option("--seed", spec.seed, "seed for --random");
            cmd->add_option("--config", spec.config_hex, "configuration as little-endian hex");
            cmd->add_flag("--random", spec.random_config, "draw a seeded random configuration");
        }
    };

    CLI::App* build = app.add_subcommand("build", "construct a board and verify its axioms");
    add_common(build, false);
    CLI::App* verify = app.add_subcommand("verify", "print the axiom report for a board");
    add_common(verify, false);
    CLI::App* export_cmd = app.add_subcommand("export", "write the incidence structure");
    add_common(export_cmd, false);
    CLI::App* worst = app.add_subcommand("worst", "exact worst-case irreducible lit count");
    add_common(worst, false);
    CLI::App* reduce = app.add_subcommand("reduce", "reduce a configuration, with certificate");
    add_common(reduce, true);
    CLI::App* conjecture =
        app.add_subcommand("conjecture", "maximal no-trivial-flip configuration check");
    add_common(conjecture, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidSpec;
    }

    try {
        if (build->parsed()) return cmd_build(spec, out, err, false, false);
        if (verify->parsed()) return cmd_build(spec, out, err, true, false);
        if (export_cmd->parsed()) return cmd_build(spec, out, err, false, true);
        if (worst->parsed()) return cmd_worst(spec, out);
        if (reduce->parsed()) return cmd_reduce(spec, out);
        if (conjecture->parsed()) return cmd_conjecture(spec, out);
        err << "error: no subcommand\n";
        return kInvalidSpec;
    } catch (const SizeLimitError& e) {
        err << "refused: " << e.what() << '\n';
        return kSizeRefusal;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidSpec;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidSpec;
    }
}

}  // namespace planeswitch::cli
