#include "planeswitch/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "planeswitch/errors.hpp"

namespace planeswitch {
namespace {

std::string size_refusal(const std::string& id, std::uint32_t m, std::uint32_t k,
                         int max_bits) {
    std::ostringstream os;
    os << "exact analysis of " << id << " refused: m = " << m << ", rank k = " << k
       << ", m - k = " << (m - k) << "; needs m <= " << max_bits << " (sweep) or m - k <= "
       << max_bits << " (coset table)";
    return os.str();
}

// Syndrome of a vector = its residue modulo the code, packed over the free
// (non-pivot) columns. In RREF the residue of a unit vector is immediate:
// free column -> the matching syndrome unit; pivot column -> that row
// restricted to the free columns.
struct SyndromeMap {
    explicit SyndromeMap(const SwitchCode& code) {
        const std::uint32_t m = code.m;
        std::vector<std::int32_t> free_index(m, -1);
        std::vector<std::int32_t> row_of_pivot(m, -1);
        for (std::uint32_t i = 0; i < code.k; ++i) row_of_pivot[code.pivot_columns[i]] = i;
        for (std::uint32_t j = 0; j < m; ++j)
            if (row_of_pivot[j] < 0) {
                free_index[j] = static_cast<std::int32_t>(free_columns.size());
                free_columns.push_back(j);
            }
        bits = static_cast<std::uint32_t>(free_columns.size());
        if (bits > 31) throw std::logic_error("syndrome wider than 31 bits");
        column.assign(m, 0);
        for (std::uint32_t j = 0; j < m; ++j) {
            if (free_index[j] >= 0) {
                column[j] = std::uint32_t{1} << free_index[j];
            } else {
                const BitVec& row = code.basis[row_of_pivot[j]];
                std::uint32_t syn = 0;
                for (std::uint32_t t = 0; t < bits; ++t)
                    if (row.test(free_columns[t])) syn |= std::uint32_t{1} << t;
                column[j] = syn;
            }
        }
    }

    std::uint32_t of(const BitVec& v) const {
        std::uint32_t syn = 0;
        for (auto j : v.set_indices()) syn ^= column[j];
        return syn;
    }

    std::uint32_t bits = 0;
    std::vector<std::uint32_t> column;
    std::vector<std::uint32_t> free_columns;
};

BitVec bitvec_from_u32(std::uint32_t v, std::uint32_t m) {
    BitVec out(m);
    while (v) {
        const int j = std::countr_zero(v);
        out.set(static_cast<std::uint32_t>(j));
        v &= v - 1;
    }
    return out;
}

// Keeps the cap lexicographically smallest vectors seen.
class BoundedLexSet {
public:
    explicit BoundedLexSet(std::size_t cap) : cap_(cap) {}

    void insert(const BitVec& v) {
        if (cap_ == 0) return;
        if (set_.size() == cap_ && !v.lex_less(*std::prev(set_.end()))) return;
        set_.insert(v);
        if (set_.size() > cap_) set_.erase(std::prev(set_.end()));
    }

    void merge(const BoundedLexSet& other) {
        for (const auto& v : other.set_) insert(v);
    }

    std::vector<BitVec> take() const { return {set_.begin(), set_.end()}; }

private:
    struct Less {
        bool operator()(const BitVec& a, const BitVec& b) const { return a.lex_less(b); }
    };
    std::size_t cap_;
    std::set<BitVec, Less> set_;
};

void atomic_min_u8(std::atomic<std::uint8_t>& slot, std::uint8_t value) {
    std::uint8_t cur = slot.load(std::memory_order_relaxed);
    while (value < cur &&
           !slot.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

struct SweepResult {
    std::vector<std::uint8_t> leader_weight;  // per syndrome
    std::uint32_t covering_radius = 0;
    std::vector<BitVec> witnesses;
};

// Gray-order pass over all 2^m configurations with O(1) incremental weight
// and syndrome updates; a second pass collects the lexicographically
// smallest configurations attaining the covering radius.
SweepResult sweep_all_configurations(const SwitchCode& code, const SyndromeMap& syn,
                                     const SearchOptions& options) {
    const std::uint32_t m = code.m;
    const std::uint64_t total = std::uint64_t{1} << m;
    const std::size_t table_size = std::size_t{1} << syn.bits;
    const int workers = std::max(1, options.workers);

    std::vector<std::uint32_t> colsyn = syn.column;
    auto table = std::make_unique<std::atomic<std::uint8_t>[]>(table_size);
    for (std::size_t i = 0; i < table_size; ++i)
        table[i].store(0xFF, std::memory_order_relaxed);

    const auto sweep_range = [&](std::uint64_t t0, std::uint64_t t1,
                                 const std::function<void(std::uint32_t, std::uint32_t,
                                                          std::uint32_t)>& visit) {
        if (t0 >= t1) return;
        std::uint32_t v = static_cast<std::uint32_t>(t0 ^ (t0 >> 1));
        std::uint32_t w = static_cast<std::uint32_t>(std::popcount(v));
        std::uint32_t s = 0;
        for (std::uint32_t rest = v; rest;) {
            const int j = std::countr_zero(rest);
            s ^= colsyn[j];
            rest &= rest - 1;
        }
        visit(v, w, s);
        for (std::uint64_t t = t0 + 1; t < t1; ++t) {
            const int b = std::countr_zero(t);
            v ^= std::uint32_t{1} << b;
            w += ((v >> b) & 1u) ? 1u : -1u;
            s ^= colsyn[b];
            visit(v, w, s);
        }
    };

    const auto run_parallel = [&](const std::function<void(std::uint64_t, std::uint64_t, int)>&
                                      body) {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) {
            const std::uint64_t t0 = total / workers * wi + std::min<std::uint64_t>(wi, total % workers);
            const std::uint64_t len = total / workers + (static_cast<std::uint64_t>(wi) < total % workers ? 1 : 0);
            pool.emplace_back(body, t0, t0 + len, wi);
        }
        for (auto& th : pool) th.join();
    };

    run_parallel([&](std::uint64_t t0, std::uint64_t t1, int) {
        sweep_range(t0, t1, [&](std::uint32_t, std::uint32_t w, std::uint32_t s) {
            atomic_min_u8(table[s], static_cast<std::uint8_t>(w));
        });
    });

    SweepResult result;
    result.leader_weight.resize(table_size);
    std::uint8_t radius = 0;
    for (std::size_t i = 0; i < table_size; ++i) {
        const std::uint8_t w = table[i].load(std::memory_order_relaxed);
        if (w == 0xFF) throw VerificationError("sweep left a coset without a leader");
        result.leader_weight[i] = w;
        radius = std::max(radius, w);
    }
    result.covering_radius = radius;

    std::vector<BoundedLexSet> found(workers, BoundedLexSet(options.witness_cap));
    run_parallel([&](std::uint64_t t0, std::uint64_t t1, int wi) {
        sweep_range(t0, t1, [&](std::uint32_t v, std::uint32_t w, std::uint32_t s) {
            if (w == radius && result.leader_weight[s] == radius)
                found[wi].insert(bitvec_from_u32(v, m));
        });
    });
    BoundedLexSet merged(options.witness_cap);
    for (const auto& f : found) merged.merge(f);
    result.witnesses = merged.take();
    return result;
}

struct LeadersResult {
    std::vector<std::uint16_t> leader_weight;
    std::uint32_t covering_radius = 0;
    std::vector<BitVec> witnesses;
};

// Visit every weight-w subset of [0, m); syn arrives incrementally.
template <typename Visit>
void for_each_combination(std::uint32_t m, std::uint32_t w,
                          const std::vector<std::uint32_t>& colsyn, Visit&& visit) {
    if (w == 0) {
        std::vector<std::uint32_t> none;
        visit(std::uint32_t{0}, none);
        return;
    }
    if (w > m) return;
    std::vector<std::uint32_t> idx(w);
    std::vector<std::uint32_t> prefix(w);  // prefix[i] = xor of colsyn[idx[0..i]]
    for (std::uint32_t i = 0; i < w; ++i) {
        idx[i] = i;
        prefix[i] = (i ? prefix[i - 1] : 0) ^ colsyn[i];
    }
    for (;;) {
        visit(prefix[w - 1], idx);
        std::int32_t j = static_cast<std::int32_t>(w) - 1;
        while (j >= 0 && idx[j] == m - w + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (std::uint32_t i = j + 1; i < w; ++i) idx[i] = idx[i - 1] + 1;
        for (std::uint32_t i = j; i < w; ++i)
            prefix[i] = (i ? prefix[i - 1] : 0) ^ colsyn[idx[i]];
    }
}

// Weight-ordered expansion: the first weight class that completes the
// syndrome table is the covering radius; that class also carries every
// minimum-weight member of the worst cosets, so witnesses fall out of the
// same scan.
LeadersResult expand_coset_leaders(const SwitchCode& code, const SyndromeMap& syn,
                                   const SearchOptions& options) {
    const std::uint32_t m = code.m;
    const std::size_t table_size = std::size_t{1} << syn.bits;
    LeadersResult result;
    result.leader_weight.assign(table_size, 0xFFFF);
    std::size_t remaining = table_size;

    for (std::uint32_t w = 0; w <= m; ++w) {
        BoundedLexSet candidates(options.witness_cap);
        for_each_combination(m, w, syn.column,
                             [&](std::uint32_t s, const std::vector<std::uint32_t>& idx) {
                                 auto& slot = result.leader_weight[s];
                                 if (slot == 0xFFFF) {
                                     slot = static_cast<std::uint16_t>(w);
                                     --remaining;
                                 }
                                 if (slot == w)
                                     candidates.insert(BitVec::from_indices(m, idx));
                             });
        if (remaining == 0) {
            result.covering_radius = w;
            result.witnesses = candidates.take();
            return result;
        }
    }
    throw VerificationError("coset expansion exhausted all weights");  // unreachable
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> spectrum_of(
    const std::vector<std::uint16_t>& weights) {
    std::map<std::uint32_t, std::uint64_t> hist;
    for (auto w : weights) ++hist[w];
    return {hist.begin(), hist.end()};
}

}  // namespace

std::optional<BitVec> SwitchCode::express_as_lines(const BitVec& v) const {
    BitVec residue = v;
    BitVec combo(num_lines);
    for (std::uint32_t i = 0; i < k; ++i) {
        if (residue.test(pivot_columns[i])) {
            residue ^= basis[i];
            combo ^= row_lines[i];
        }
    }
    if (residue.any()) return std::nullopt;
    return combo;
}

SwitchCode switch_code(const IncidenceStructure& s) {
    if (s.num_points > kMaxPoints)
        throw SizeLimitError(s.id + " exceeds the " + std::to_string(kMaxPoints) +
                             "-point cap");
    SwitchCode code;
    code.m = s.num_points;
    code.num_lines = s.num_lines();

    // row echelon by incremental insertion, pivot = lowest set bit
    std::vector<std::int32_t> row_of_pivot(code.m, -1);
    std::vector<BitVec> rows, combos;
    for (std::uint32_t li = 0; li < s.num_lines(); ++li) {
        BitVec v = s.line_masks[li];
        BitVec combo(code.num_lines);
        combo.set(li);
        while (v.any()) {
            const auto p = static_cast<std::uint32_t>(v.find_first());
            if (row_of_pivot[p] < 0) {
                row_of_pivot[p] = static_cast<std::int32_t>(rows.size());
                rows.push_back(std::move(v));
                combos.push_back(std::move(combo));
                break;
            }
            v ^= rows[row_of_pivot[p]];
            combo ^= combos[row_of_pivot[p]];
        }
    }

    // back-substitution to reduced form, rows ordered by pivot
    std::vector<std::uint32_t> order;
    for (std::uint32_t p = 0; p < code.m; ++p)
        if (row_of_pivot[p] >= 0) order.push_back(static_cast<std::uint32_t>(row_of_pivot[p]));
    code.k = static_cast<std::uint32_t>(order.size());
    for (auto r : order) {
        code.basis.push_back(rows[r]);
        code.row_lines.push_back(combos[r]);
    }
    code.pivot_columns.clear();
    for (std::uint32_t p = 0; p < code.m; ++p)
        if (row_of_pivot[p] >= 0) code.pivot_columns.push_back(p);
    for (std::uint32_t i = code.k; i-- > 0;) {
        for (std::uint32_t j = 0; j < i; ++j) {
            if (code.basis[j].test(code.pivot_columns[i])) {
                code.basis[j] ^= code.basis[i];
                code.row_lines[j] ^= code.row_lines[i];
            }
        }
    }
    return code;
}

CosetMin coset_min_weight(const SwitchCode& code, const Configuration& c, int max_bits) {
    if (c.bits.size() != code.m)
        throw std::invalid_argument("configuration length does not match the code");
    if (code.k <= static_cast<std::uint32_t>(max_bits)) {
        // enumerate all 2^k codewords in Gray order
        BitVec current = c.bits;
        std::uint32_t best_w = static_cast<std::uint32_t>(current.count());
        BitVec best = current;
        const std::uint64_t total = std::uint64_t{1} << code.k;
        for (std::uint64_t t = 1; t < total; ++t) {
            const int b = std::countr_zero(t);
            current ^= code.basis[b];
            const auto w = static_cast<std::uint32_t>(current.count());
            if (w < best_w || (w == best_w && current.lex_less(best))) {
                best_w = w;
                best = current;
            }
        }
        return CosetMin{best_w, std::move(best)};
    }
    if (code.redundancy() <= static_cast<std::uint32_t>(max_bits)) {
        // weight-ordered scan for the first vectors in c's coset
        const SyndromeMap syn(code);
        const std::uint32_t target = syn.of(c.bits);
        for (std::uint32_t w = 0; w <= code.m; ++w) {
            bool found = false;
            BitVec best;
            for_each_combination(code.m, w, syn.column,
                                 [&](std::uint32_t s, const std::vector<std::uint32_t>& idx) {
                                     if (s != target) return;
                                     BitVec v = BitVec::from_indices(code.m, idx);
                                     if (!found || v.lex_less(best)) {
                                         found = true;
                                         best = std::move(v);
                                     }
                                 });
            if (found) return CosetMin{w, std::move(best)};
        }
        throw VerificationError("coset scan exhausted all weights");  // unreachable
    }
    throw SizeLimitError(size_refusal("coset minimisation", code.m, code.k, max_bits));
}

ReducibleResult is_reducible(const Configuration& c, const SwitchCode& code, int max_bits) {
    ReducibleResult out;
    out.best = coset_min_weight(code, c, max_bits);
    out.reducible = out.best.weight < c.lit_count();
    if (out.reducible) {
        const BitVec improving = c.bits ^ out.best.witness;  // a codeword
        auto combo = code.express_as_lines(improving);
        if (!combo) throw VerificationError("coset witness is not reachable by switches");
        out.plan = SwitchPlan{std::move(*combo)};
    }
    return out;
}

WorstCaseReport worst_case(const IncidenceStructure& s, const SearchOptions& options) {
    const SwitchCode code = switch_code(s);
    const auto max_bits = static_cast<std::uint32_t>(options.max_bits);

    WorstCaseMethod method = options.method;
    if (method == WorstCaseMethod::automatic) {
        if (code.m <= max_bits)
            method = WorstCaseMethod::sweep;
        else if (code.redundancy() <= max_bits)
            method = WorstCaseMethod::leaders;
        else
            throw SizeLimitError(size_refusal(s.id, code.m, code.k, options.max_bits));
    }
    if (method == WorstCaseMethod::sweep && code.m > max_bits)
        throw SizeLimitError(size_refusal(s.id, code.m, code.k, options.max_bits) +
                             " (sweep requested)");
    if (method == WorstCaseMethod::leaders && code.redundancy() > max_bits)
        throw SizeLimitError(size_refusal(s.id, code.m, code.k, options.max_bits) +
                             " (coset table requested)");

    WorstCaseReport report;
    report.structure_id = s.id;
    report.m = code.m;
    report.k = code.k;
    report.num_cosets = std::uint64_t{1} << code.redundancy();
    report.method_used = method;

    const SyndromeMap syn(code);
    if (method == WorstCaseMethod::sweep) {
        SweepResult r = sweep_all_configurations(code, syn, options);
        report.covering_radius = r.covering_radius;
        std::vector<std::uint16_t> weights(r.leader_weight.begin(), r.leader_weight.end());
        report.spectrum = spectrum_of(weights);
        report.witnesses = std::move(r.witnesses);
    } else {
        LeadersResult r = expand_coset_leaders(code, syn, options);
        report.covering_radius = r.covering_radius;
        report.spectrum = spectrum_of(r.leader_weight);
        report.witnesses = std::move(r.witnesses);
    }
    return report;
}

ConjectureReport conjecture_check(const IncidenceStructure& s, const SearchOptions& options) {
    if (s.kind == GeometryKind::grid)
        throw std::invalid_argument("the maximal-configuration check needs a plane, not a grid");
    if (s.order % 2 != 0)
        throw std::invalid_argument(s.id + " has odd order; the check applies to even orders");

    // feasibility gate and covering radius in one shot
    const WorstCaseReport wc = worst_case(s, options);
    const SwitchCode code = switch_code(s);

    const std::uint32_t m = s.num_points;
    std::vector<std::uint32_t> cap(s.num_lines());
    for (std::uint32_t li = 0; li < s.num_lines(); ++li)
        cap[li] = static_cast<std::uint32_t>(s.lines[li].size() / 2);

    std::vector<std::uint32_t> occupancy(s.num_lines(), 0);
    std::vector<std::uint32_t> chosen;

    const auto fits = [&](std::uint32_t p) {
        for (auto li : s.lines_of_point[p])
            if (occupancy[li] + 1 > cap[li]) return false;
        return true;
    };
    const auto push = [&](std::uint32_t p) {
        for (auto li : s.lines_of_point[p]) ++occupancy[li];
        chosen.push_back(p);
    };
    const auto pop = [&](std::uint32_t p) {
        for (auto li : s.lines_of_point[p]) --occupancy[li];
        chosen.pop_back();
    };

    // phase 1: the maximum lit count T under the per-line caps
    std::uint32_t best = 0;
    std::function<void(std::uint32_t)> find_best = [&](std::uint32_t idx) {
        best = std::max(best, static_cast<std::uint32_t>(chosen.size()));
        if (idx >= m) return;
        if (chosen.size() + (m - idx) <= best) return;  // cannot beat best
        if (fits(idx)) {
            push(idx);
            find_best(idx + 1);
            pop(idx);
        }
        find_best(idx + 1);
    };
    find_best(0);

    // phase 2: every configuration attaining T
    std::vector<BitVec> maxima;
    std::function<void(std::uint32_t)> collect = [&](std::uint32_t idx) {
        if (chosen.size() == best) {
            maxima.push_back(BitVec::from_indices(m, chosen));
            return;
        }
        if (idx >= m || chosen.size() + (m - idx) < best) return;
        if (fits(idx)) {
            push(idx);
            collect(idx + 1);
            pop(idx);
        }
        collect(idx + 1);
    };
    collect(0);
    std::sort(maxima.begin(), maxima.end(),
              [](const BitVec& a, const BitVec& b) { return a.lex_less(b); });

    ConjectureReport report;
    report.structure_id = s.id;
    report.order = s.order;
    report.line_size = static_cast<std::uint32_t>(s.lines.empty() ? 0 : s.lines[0].size());
    report.per_line_cap = report.line_size / 2;
    report.max_no_trivial_flip = best;
    report.num_maximum_configs = maxima.size();
    report.covering_radius = wc.covering_radius;
    report.equals_covering_radius = best == wc.covering_radius;

    report.all_maxima_irreducible = true;
    for (const auto& config : maxima) {
        const Configuration c = config_from_bits(s, config);
        if (coset_min_weight(code, c, options.max_bits).weight < c.lit_count()) {
            report.all_maxima_irreducible = false;
            break;
        }
    }

    // lighting any further bulb must leave some line a single flip can fix
    report.plus_one_single_flip_reducible = true;
    for (const auto& config : maxima) {
        for (std::uint32_t x = 0; x < m && report.plus_one_single_flip_reducible; ++x) {
            if (config.test(x)) continue;
            Configuration plus = config_from_bits(s, config);
            plus.bits.set(x);
            bool reduced = false;
            for (auto li : s.lines_of_point[x]) {
                std::uint32_t lit = 0;
                for (auto p : s.lines[li]) lit += plus.bits.test(p);
                if (lit > cap[li] &&
                    is_reduced_by(plus, SwitchPlan::from_lines(s, {li}))) {
                    reduced = true;
                    break;
                }
            }
            if (!reduced) report.plus_one_single_flip_reducible = false;
        }
        if (!report.plus_one_single_flip_reducible) break;
    }

    if (maxima.size() > options.witness_cap) maxima.resize(options.witness_cap);
    report.witnesses = std::move(maxima);
    return report;
}

namespace {

std::string method_name(WorstCaseMethod m) {
    switch (m) {
        case WorstCaseMethod::automatic: return "auto";
        case WorstCaseMethod::sweep: return "sweep";
        case WorstCaseMethod::leaders: return "leaders";
    }
    return "?";
}

}  // namespace

nlohmann::json to_json(const WorstCaseReport& report) {
    nlohmann::json j;
    j["structure"] = report.structure_id;
    j["num_points"] = report.m;
    j["rank"] = report.k;
    j["num_cosets"] = std::to_string(report.num_cosets);
    j["covering_radius"] = report.covering_radius;
    j["method"] = method_name(report.method_used);
    j["spectrum"] = nlohmann::json::array();
    for (const auto& [w, count] : report.spectrum)
        j["spectrum"].push_back({w, std::to_string(count)});
    j["witnesses"] = nlohmann::json::array();
    for (const auto& v : report.witnesses) j["witnesses"].push_back(v.to_hex());
    return j;
}

nlohmann::json to_json(const ConjectureReport& report) {
    nlohmann::json j;
    j["structure"] = report.structure_id;
    j["order"] = report.order;
    j["line_size"] = report.line_size;
    j["per_line_cap"] = report.per_line_cap;
    j["max_no_trivial_flip"] = report.max_no_trivial_flip;
    j["num_maximum_configs"] = std::to_string(report.num_maximum_configs);
    j["all_maxima_irreducible"] = report.all_maxima_irreducible;
    j["covering_radius"] = report.covering_radius;
    j["equals_covering_radius"] = report.equals_covering_radius;
    j["plus_one_single_flip_reducible"] = report.plus_one_single_flip_reducible;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& v : report.witnesses) j["witnesses"].push_back(v.to_hex());
    return j;
}

std::string to_text(const WorstCaseReport& report) {
    std::ostringstream os;
    os << "worst case for " << report.structure_id << "\n"
       << "  points: " << report.m << "  rank: " << report.k
       << "  cosets: " << report.num_cosets << "  method: " << method_name(report.method_used)
       << "\n"
       << "  covering radius: " << report.covering_radius << "\n"
       << "  spectrum (leader weight: cosets):";
    for (const auto& [w, count] : report.spectrum) os << ' ' << w << ':' << count;
    os << "\n  witnesses:";
    for (const auto& v : report.witnesses) os << ' ' << v.to_hex();
    os << '\n';
    return os.str();
}

std::string to_text(const ConjectureReport& report) {
    std::ostringstream os;
    os << "maximal-configuration check for " << report.structure_id << "\n"
       << "  per-line cap: " << report.per_line_cap << " of " << report.line_size << "\n"
       << "  T (max lit, no single flip reduces): " << report.max_no_trivial_flip << " ("
       << report.num_maximum_configs << " configurations)\n"
       << "  all maxima irreducible: " << (report.all_maxima_irreducible ? "yes" : "no")
       << "\n"
       << "  covering radius: " << report.covering_radius << " ("
       << (report.equals_covering_radius ? "equals T" : "differs from T") << ")\n"
       << "  plus-one bulb reducible by one flip: "
       << (report.plus_one_single_flip_reducible ? "yes" : "no") << "\n  witnesses:";
    for (const auto& v : report.witnesses) os << ' ' << v.to_hex();
    os << '\n';
    return os.str();
}

}  // namespace planeswitch
