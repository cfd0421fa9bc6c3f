#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "planeswitch/errors.hpp"
#include "planeswitch/reduce.hpp"
#include "planeswitch/search.hpp"

using namespace planeswitch;

namespace {

FiniteField field_of_order(unsigned q) {
    for (unsigned p = 2; p <= q; ++p) {
        if (!FiniteField::is_prime(p)) continue;
        unsigned power = p, k = 1;
        while (power < q) {
            power *= p;
            ++k;
        }
        if (power == q) return FiniteField(p, k);
    }
    throw std::invalid_argument("not a prime power");
}

// independent rank oracle: plain dense elimination over bool matrices
std::uint32_t naive_rank(const IncidenceStructure& s) {
    std::vector<std::vector<bool>> rows;
    for (const auto& line : s.lines) {
        std::vector<bool> row(s.num_points, false);
        for (auto p : line) row[p] = true;
        rows.push_back(std::move(row));
    }
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < s.num_points; ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col]) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][col])
                for (std::uint32_t c = 0; c < s.num_points; ++c)
                    rows[r][c] = rows[r][c] != rows[rank][c];
        }
        ++rank;
        if (rank == rows.size()) break;
    }
    return rank;
}

// independent coset-minimum oracle for tiny boards: enumerate all plans
std::uint32_t brute_coset_min(const IncidenceStructure& s, const BitVec& config) {
    REQUIRE(s.num_lines() <= 12);
    std::uint32_t best = UINT32_MAX;
    for (std::uint32_t mask = 0; mask < (1u << s.num_lines()); ++mask) {
        BitVec v = config;
        for (std::uint32_t li = 0; li < s.num_lines(); ++li)
            if ((mask >> li) & 1) v ^= s.line_masks[li];
        best = std::min(best, static_cast<std::uint32_t>(v.count()));
    }
    return best;
}

BitVec random_bits(const IncidenceStructure& s, std::mt19937_64& rng) {
    BitVec v(s.num_points);
    for (std::uint32_t i = 0; i < s.num_points; ++i)
        if (rng() & 1) v.set(i);
    return v;
}

// a random element of the switch span
BitVec random_codeword(const IncidenceStructure& s, std::mt19937_64& rng) {
    BitVec w(s.num_points);
    for (std::uint32_t li = 0; li < s.num_lines(); ++li)
        if (rng() & 1) w ^= s.line_masks[li];
    return w;
}

std::map<std::uint32_t, std::uint64_t> spectrum_map(const WorstCaseReport& r) {
    return {r.spectrum.begin(), r.spectrum.end()};
}

// lex-first 6-point set meeting every line in at most 2 points, by brute
// force over all C(21,6) subsets
BitVec brute_lex_first_hyperoval(const IncidenceStructure& pg4, std::uint64_t* count_out) {
    REQUIRE(pg4.num_points == 21);
    std::vector<std::uint32_t> masks(pg4.num_lines(), 0);
    for (std::uint32_t li = 0; li < pg4.num_lines(); ++li)
        for (auto p : pg4.lines[li]) masks[li] |= 1u << p;

    std::uint64_t count = 0;
    std::uint32_t first = 0;
    std::vector<std::uint32_t> idx{0, 1, 2, 3, 4, 5};
    for (;;) {
        std::uint32_t bits = 0;
        for (auto i : idx) bits |= 1u << i;
        bool ok = true;
        for (auto m : masks)
            if (std::popcount(bits & m) > 2) {
                ok = false;
                break;
            }
        if (ok) {
            if (count == 0) first = bits;
            ++count;
        }
        std::int32_t j = 5;
        while (j >= 0 && idx[j] == 21 - 6 + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (std::uint32_t i = j + 1; i < 6; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (count_out) *count_out = count;
    BitVec v(21);
    for (std::uint32_t i = 0; i < 21; ++i)
        if ((first >> i) & 1) v.set(i);
    return v;
}

}  // namespace

TEST_CASE("switch code ranks match the independent elimination") {
    for (std::uint32_t n = 2; n <= 6; ++n) {
        const auto g = grid_board(n);
        const auto code = switch_code(g);
        CHECK(code.k == 2 * n - 1);  // rows and columns share one dependency
        CHECK(code.k == naive_rank(g));
    }
    const auto ag3 = affine_space(FiniteField(3, 1), 2);
    CHECK(switch_code(ag3).k == 9);  // full rank: every configuration reachable
    const auto pg3 = projective_space(FiniteField(3, 1), 2);
    CHECK(switch_code(pg3).k == 12);  // m - 1: the two parity classes
    CHECK(naive_rank(pg3) == 12);
    const auto pg4 = projective_space(FiniteField(2, 2), 2);
    CHECK(switch_code(pg4).k == 10);
    CHECK(naive_rank(pg4) == 10);
    const auto ag4 = affine_space(FiniteField(2, 2), 2);
    CHECK(switch_code(ag4).k == 9);
    CHECK(naive_rank(ag4) == 9);
    const auto ag5 = affine_space(FiniteField(5, 1), 2);
    CHECK(switch_code(ag5).k == 25);
}

TEST_CASE("switch code is a reduced echelon basis spanning every line") {
    std::vector<IncidenceStructure> structures;
    structures.push_back(projective_space(FiniteField(2, 2), 2));
    structures.push_back(affine_space(FiniteField(3, 1), 2));
    structures.push_back(grid_board(4));
    for (const auto& structure : structures) {
        const auto* s = &structure;
        const auto code = switch_code(*s);
        REQUIRE(code.basis.size() == code.k);
        REQUIRE(code.pivot_columns.size() == code.k);
        CHECK(std::is_sorted(code.pivot_columns.begin(), code.pivot_columns.end()));
        CHECK(code.k <= std::min<std::uint32_t>(code.m, s->num_lines()));
        for (std::uint32_t i = 0; i < code.k; ++i) {
            CHECK(code.basis[i].test(code.pivot_columns[i]));
            CHECK(code.basis[i].find_first() == code.pivot_columns[i]);
            for (std::uint32_t j = 0; j < code.k; ++j)
                if (i != j) CHECK_FALSE(code.basis[j].test(code.pivot_columns[i]));
            // the recorded line combination reproduces the row
            BitVec rebuilt(code.m);
            for (auto li : code.row_lines[i].set_indices()) rebuilt ^= s->line_masks[li];
            CHECK(rebuilt == code.basis[i]);
        }
        // every line lies in the span
        for (std::uint32_t li = 0; li < s->num_lines(); ++li)
            CHECK(code.express_as_lines(s->line_masks[li]).has_value());
    }
}

TEST_CASE("express_as_lines rejects vectors outside the span") {
    const auto pg3 = projective_space(FiniteField(3, 1), 2);
    const auto code = switch_code(pg3);
    BitVec odd(13);
    odd.set(0);  // weight 1 is odd: not in the even-weight span
    CHECK_FALSE(code.express_as_lines(odd).has_value());
}

TEST_CASE("coset minimum against the brute-force oracle on the Fano plane") {
    const auto fano = projective_space(FiniteField(2, 1), 2);
    const auto code = switch_code(fano);
    for (std::uint32_t bits = 0; bits < 128; ++bits) {
        BitVec v(7);
        for (std::uint32_t i = 0; i < 7; ++i)
            if ((bits >> i) & 1) v.set(i);
        const auto c = config_from_bits(fano, v);
        const auto result = coset_min_weight(code, c);
        CHECK(result.weight == brute_coset_min(fano, v));
        CHECK(result.witness.count() == result.weight);
        // the witness is reachable: difference lies in the span
        CHECK(code.express_as_lines(v ^ result.witness).has_value());
        // anything with two or more lit bulbs drops to one or fewer
        if (v.count() >= 2) CHECK(result.weight <= 1);
    }
}

TEST_CASE("coset minimum witness is the lexicographically smallest minimizer") {
    const auto fano = projective_space(FiniteField(2, 1), 2);
    const auto code = switch_code(fano);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const BitVec v = random_bits(fano, rng);
        const auto result = coset_min_weight(code, config_from_bits(fano, v));
        // enumerate the whole coset by brute force
        for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
            BitVec w = v;
            for (std::uint32_t li = 0; li < 7; ++li)
                if ((mask >> li) & 1) w ^= fano.line_masks[li];
            if (w.count() < result.weight) FAIL("missed a lighter vector");
            if (w.count() == result.weight) {
                const bool not_smaller = !w.lex_less(result.witness);
                CHECK(not_smaller);
            }
        }
    }
}

TEST_CASE("coset minimum on odd projective planes is the parity") {
    const auto pg3 = projective_space(FiniteField(3, 1), 2);
    const auto code = switch_code(pg3);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const BitVec v = random_bits(pg3, rng);
        const auto r = coset_min_weight(code, config_from_bits(pg3, v));
        CHECK(r.weight == v.count() % 2);
    }
    // code member -> 0
    const auto member = config_from_bits(pg3, random_codeword(pg3, rng));
    CHECK(coset_min_weight(code, member).weight == 0);
}

TEST_CASE("both coset minimisation routes agree") {
    const auto pg3 = projective_space(FiniteField(3, 1), 2);
    const auto code = switch_code(pg3);  // k = 12, m - k = 1
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const BitVec v = random_bits(pg3, rng);
        const auto c = config_from_bits(pg3, v);
        const auto gray = coset_min_weight(code, c, 28);  // k <= 28: codeword walk
        const auto leaders = coset_min_weight(code, c, 4);  // k > 4: weight expansion
        CHECK(gray.weight == leaders.weight);
        CHECK(gray.witness == leaders.witness);
    }
    // both routes over budget
    CHECK_THROWS_AS(coset_min_weight(code, config_from_bits(pg3, random_bits(pg3, rng)), 0),
                    SizeLimitError);
}

TEST_CASE("coset soundness: adding a codeword never changes the minimum") {
    std::mt19937_64 rng(8);
    std::vector<IncidenceStructure> structures;
    structures.push_back(projective_space(FiniteField(3, 1), 2));
    structures.push_back(affine_space(FiniteField(2, 2), 2));
    for (const auto& structure : structures) {
        const auto* s = &structure;
        const auto code = switch_code(*s);
        for (int trial = 0; trial < 20; ++trial) {
            const BitVec v = random_bits(*s, rng);
            const BitVec w = random_codeword(*s, rng);
            const auto a = coset_min_weight(code, config_from_bits(*s, v));
            const auto b = coset_min_weight(code, config_from_bits(*s, v ^ w));
            CHECK(a.weight == b.weight);
            CHECK(a.witness == b.witness);  // same coset, same leader
        }
    }
}

TEST_CASE("is_reducible yields a working improving plan") {
    const auto pg3 = projective_space(FiniteField(3, 1), 2);
    const auto code = switch_code(pg3);

    CHECK_FALSE(is_reducible(all_dark(pg3), code).reducible);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const BitVec v = random_bits(pg3, rng);
        const auto c = config_from_bits(pg3, v);
        const auto r = is_reducible(c, code);
        CHECK(r.reducible == (r.best.weight < c.lit_count()));
        if (r.reducible) {
            REQUIRE(r.plan.has_value());
            const auto after = apply_plan(c, *r.plan);
            CHECK(after.lit_count() < c.lit_count());
            CHECK(after.bits == r.best.witness);  // the plan lands on the leader
        }
    }
}

TEST_CASE("worst case of the Fano plane: radius 1, everything above is reducible") {
    const auto fano = projective_space(FiniteField(2, 1), 2);
    const auto report = worst_case(fano);
    CHECK(report.covering_radius == 1);
    CHECK(report.num_cosets == 8);
    const auto spec = spectrum_map(report);
    CHECK(spec.at(0) == 1);
    CHECK(spec.at(1) == 7);
}

TEST_CASE("worst case of odd-order planes") {
    const auto pg3 = worst_case(projective_space(FiniteField(3, 1), 2));
    CHECK(pg3.covering_radius == 1);
    CHECK(spectrum_map(pg3) == std::map<std::uint32_t, std::uint64_t>{{0, 1}, {1, 1}});

    const auto ag3 = worst_case(affine_space(FiniteField(3, 1), 2));
    CHECK(ag3.covering_radius == 0);
    CHECK(ag3.num_cosets == 1);
    CHECK(ag3.witnesses.size() == 1);
    CHECK(ag3.witnesses[0].none());

    const auto ag5 = worst_case(affine_space(FiniteField(5, 1), 2));
    CHECK(ag5.covering_radius == 0);
    CHECK(ag5.k == 25);

    // PG(2,5) is over the sweep budget but has only two cosets
    const auto pg5 = worst_case(projective_space(FiniteField(5, 1), 2));
    CHECK(pg5.method_used == WorstCaseMethod::leaders);
    CHECK(pg5.covering_radius == 1);
}

TEST_CASE("worst case of PG(2,4): radius 6 with hyperoval witnesses") {
    const auto pg4 = projective_space(FiniteField(2, 2), 2);
    const auto report = worst_case(pg4);
    CHECK(report.k == 10);
    CHECK(report.num_cosets == 2048);
    CHECK(report.covering_radius == 6);
    const auto spec = spectrum_map(report);
    CHECK(spec == std::map<std::uint32_t, std::uint64_t>{
                      {0, 1}, {1, 21}, {2, 210}, {3, 1120}, {4, 630}, {5, 63}, {6, 3}});

    std::uint64_t hyperoval_count = 0;
    const BitVec lex_first = brute_lex_first_hyperoval(pg4, &hyperoval_count);
    CHECK(hyperoval_count == 168);
    REQUIRE(report.witnesses.size() == 16);
    CHECK(report.witnesses[0] == lex_first);
    CHECK(lex_first.set_indices() ==
          std::vector<std::uint32_t>{0, 1, 5, 10, 16, 19});

    const auto code = switch_code(pg4);
    for (const auto& w : report.witnesses) {
        CHECK(w.count() == 6);
        CHECK_FALSE(is_reducible(config_from_bits(pg4, w), code).reducible);
    }
}

TEST_CASE("worst case of AG(2,4): radius 4") {
    const auto ag4 = affine_space(FiniteField(2, 2), 2);
    const auto report = worst_case(ag4);
    CHECK(report.k == 9);
    CHECK(report.covering_radius == 4);
    CHECK(spectrum_map(report) == std::map<std::uint32_t, std::uint64_t>{
                                      {0, 1}, {1, 16}, {2, 60}, {3, 48}, {4, 3}});
}

TEST_CASE("sweep and leader routes agree on every small structure") {
    std::vector<IncidenceStructure> structures;
    structures.push_back(grid_board(2));
    structures.push_back(grid_board(3));
    structures.push_back(grid_board(4));
    structures.push_back(projective_space(FiniteField(2, 1), 2));
    structures.push_back(projective_space(FiniteField(3, 1), 2));
    structures.push_back(affine_space(FiniteField(2, 1), 2));
    structures.push_back(affine_space(FiniteField(3, 1), 2));
    structures.push_back(affine_space(FiniteField(2, 2), 2));
    for (const auto& s : structures) {
        CAPTURE(s.id);
        SearchOptions sweep;
        sweep.method = WorstCaseMethod::sweep;
        SearchOptions leaders;
        leaders.method = WorstCaseMethod::leaders;
        const auto a = worst_case(s, sweep);
        const auto b = worst_case(s, leaders);
        CHECK(a.covering_radius == b.covering_radius);
        CHECK(a.spectrum == b.spectrum);
        CHECK(a.witnesses.size() == b.witnesses.size());
        for (std::size_t i = 0; i < a.witnesses.size(); ++i)
            CHECK(a.witnesses[i] == b.witnesses[i]);
    }
}

TEST_CASE("grid worst cases, cross-validated values") {
    const std::map<std::uint32_t, std::uint32_t> expected{{2, 1}, {3, 2}, {4, 4}, {5, 7}};
    for (const auto& [n, radius] : expected) {
        CAPTURE(n);
        const auto report = worst_case(grid_board(n));
        CHECK(report.k == 2 * n - 1);
        CHECK(report.covering_radius == radius);
    }
    // the frozen full spectra for the two smallest boards
    CHECK(spectrum_map(worst_case(grid_board(3))) ==
          std::map<std::uint32_t, std::uint64_t>{{0, 1}, {1, 9}, {2, 6}});
    CHECK(spectrum_map(worst_case(grid_board(4))) ==
          std::map<std::uint32_t, std::uint64_t>{{0, 1}, {1, 16}, {2, 96}, {3, 240}, {4, 159}});
}

TEST_CASE("spectrum counts always sum to the coset count") {
    std::vector<IncidenceStructure> structures;
    structures.push_back(grid_board(4));
    structures.push_back(projective_space(FiniteField(2, 2), 2));
    structures.push_back(affine_space(FiniteField(2, 2), 2));
    for (const auto& structure : structures) {
        const auto* s = &structure;
        const auto report = worst_case(*s);
        std::uint64_t total = 0;
        for (const auto& [w, count] : report.spectrum) total += count;
        CHECK(total == report.num_cosets);
        CHECK(spectrum_map(report).at(0) == 1);  // the code itself
    }
}

TEST_CASE("parity stratification on odd-order planes") {
    const auto pg3 = projective_space(FiniteField(3, 1), 2);
    const auto code = switch_code(pg3);
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        const BitVec v = random_bits(pg3, rng);
        const auto r = coset_min_weight(code, config_from_bits(pg3, v));
        CHECK(r.weight % 2 == v.count() % 2);  // cosets are parity-pure
    }
}

TEST_CASE("constructive floors equal the coset minima") {
    // every configuration of PG(2,3)
    const auto pg3 = projective_space(FiniteField(3, 1), 2);
    const auto code3 = switch_code(pg3);
    for (std::uint32_t bits = 0; bits < (1u << 13); ++bits) {
        BitVec v(13);
        for (std::uint32_t i = 0; i < 13; ++i)
            if ((bits >> i) & 1) v.set(i);
        const auto c = config_from_bits(pg3, v);
        const auto floor = reduce_to_floor(c).final_config.lit_count();
        if (floor != coset_min_weight(code3, c).weight) {
            REQUIRE(floor == coset_min_weight(code3, c).weight);
        }
    }

    // every configuration of AG(2,3)
    const auto ag3 = affine_space(FiniteField(3, 1), 2);
    const auto code9 = switch_code(ag3);
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        BitVec v(9);
        for (std::uint32_t i = 0; i < 9; ++i)
            if ((bits >> i) & 1) v.set(i);
        const auto c = config_from_bits(ag3, v);
        REQUIRE(reduce_to_floor(c).final_config.lit_count() == 0);
        REQUIRE(coset_min_weight(code9, c).weight == 0);
    }

    // sampled configurations of PG(2,5)
    const auto pg5 = projective_space(FiniteField(5, 1), 2);
    const auto code5 = switch_code(pg5);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const auto c = config_from_bits(pg5, random_bits(pg5, rng));
        CHECK(reduce_to_floor(c).final_config.lit_count() ==
              coset_min_weight(code5, c).weight);
    }
}

TEST_CASE("size refusals carry diagnostics") {
    const auto g10 = grid_board(10);
    CHECK_THROWS_WITH_AS(worst_case(g10),
                         doctest::Contains("m = 100"), SizeLimitError);

    // PG(2,8): rank 28 leaves 45 free bits, over any allowed budget
    const auto pg8 = projective_space(FiniteField(2, 3), 2);
    const auto code = switch_code(pg8);
    CHECK(code.m == 73);
    CHECK(code.k == 28);
    CHECK_THROWS_AS(worst_case(pg8), SizeLimitError);

    SearchOptions tiny;
    tiny.max_bits = 3;
    CHECK_THROWS_AS(worst_case(grid_board(3), tiny), SizeLimitError);  // m = 9, m - k = 4
}

TEST_CASE("worker count never changes the report") {
    const auto pg4 = projective_space(FiniteField(2, 2), 2);
    SearchOptions one;
    one.workers = 1;
    SearchOptions eight;
    eight.workers = 8;
    const auto a = worst_case(pg4, one);
    const auto b = worst_case(pg4, eight);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("maximal-configuration check on PG(2,4)") {
    const auto pg4 = projective_space(FiniteField(2, 2), 2);
    const auto report = conjecture_check(pg4);
    CHECK(report.per_line_cap == 2);
    CHECK(report.max_no_trivial_flip == 6);
    CHECK(report.num_maximum_configs == 168);
    CHECK(report.all_maxima_irreducible);
    CHECK(report.covering_radius == 6);
    CHECK(report.equals_covering_radius);
    CHECK(report.plus_one_single_flip_reducible);
    REQUIRE(report.witnesses.size() == 16);
    CHECK(report.witnesses[0] == brute_lex_first_hyperoval(pg4, nullptr));
}

TEST_CASE("maximal-configuration check on AG(2,4) refutes the equality") {
    // The no-trivial-flip maximum is 6 (hyperovals of the parent plane that
    // miss the deleted line), strictly above the covering radius 4, and the
    // 6-point maxima are all reducible. Confirmed by brute force below.
    const auto ag4 = affine_space(FiniteField(2, 2), 2);
    const auto report = conjecture_check(ag4);
    CHECK(report.per_line_cap == 2);
    CHECK(report.max_no_trivial_flip == 6);
    CHECK(report.num_maximum_configs == 48);
    CHECK_FALSE(report.all_maxima_irreducible);
    CHECK(report.covering_radius == 4);
    CHECK_FALSE(report.equals_covering_radius);
    CHECK(report.plus_one_single_flip_reducible);

    // brute force over all 6- and 7-point subsets of the 16 points
    std::vector<std::uint32_t> masks(ag4.num_lines(), 0);
    for (std::uint32_t li = 0; li < ag4.num_lines(); ++li)
        for (auto p : ag4.lines[li]) masks[li] |= 1u << p;
    std::uint64_t six = 0, seven = 0;
    for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
        const int w = std::popcount(bits);
        if (w != 6 && w != 7) continue;
        bool ok = true;
        for (auto m : masks)
            if (std::popcount(bits & m) > 2) {
                ok = false;
                break;
            }
        if (!ok) continue;
        (w == 6 ? six : seven) += 1;
    }
    CHECK(six == 48);
    CHECK(seven == 0);

    // and the 6-point maxima really are reducible
    const auto code = switch_code(ag4);
    for (const auto& w : report.witnesses) {
        CHECK(w.count() == 6);
        CHECK(is_reducible(config_from_bits(ag4, w), code).reducible);
    }
}

TEST_CASE("maximal-configuration check on the order-2 boards") {
    const auto ag2 = conjecture_check(affine_space(FiniteField(2, 1), 2));
    CHECK(ag2.max_no_trivial_flip == 1);
    CHECK(ag2.num_maximum_configs == 4);
    CHECK(ag2.covering_radius == 1);
    CHECK(ag2.equals_covering_radius);
    CHECK(ag2.all_maxima_irreducible);

    const auto fano = conjecture_check(projective_space(FiniteField(2, 1), 2));
    CHECK(fano.max_no_trivial_flip == 1);
    CHECK(fano.num_maximum_configs == 7);
    CHECK(fano.equals_covering_radius);
}

TEST_CASE("maximal-configuration check rejects odd orders and grids") {
    CHECK_THROWS_AS(conjecture_check(projective_space(FiniteField(3, 1), 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(conjecture_check(grid_board(4)), std::invalid_argument);
}

TEST_CASE("reports serialize with string counts") {
    const auto report = worst_case(projective_space(FiniteField(2, 1), 2));
    const auto j = to_json(report);
    CHECK(j["num_cosets"] == "8");
    CHECK(j["covering_radius"] == 1);
    CHECK(j["spectrum"][0][1] == "1");
    CHECK(j["witnesses"].size() == 7);  // only 7 weight-1 irreducible configs exist
    const auto text = to_text(report);
    CHECK(text.find("covering radius: 1") != std::string::npos);
}
