#include <doctest.h>

#include "ppp/enumerate.hpp"
#include "ppp/generating.hpp"

using namespace ppp;

namespace {
const Conventions kDefault{};
const Conventions kTopAligned{Seam::TopAligned, HeightRule::GtMark, Degeneracy::RectTop};
} // namespace

TEST_CASE("polyomino generation follows the catalan numbers") {
    CHECK(all_pps(2).size() == 1);
    CHECK(all_pps(3).size() == 2);
    Series1 cat = catalan_series(10);
    for (int n = 2; n <= 9; ++n)
        CHECK((long long)all_pps(n).size() == cat.coeff(n - 1).as_int64());
}

TEST_CASE("marked generation") {
    SUBCASE("every generated PPP re-validates and is non-degenerate") {
        for (const Ppp& p : all_ppps(GenLimits{6, 2}, kDefault)) {
            CHECK(make_ppp(p.pp, p.mark) == p);
            CHECK_FALSE(is_degenerate(p, kDefault));
            int k = intrinsic_thickness(p, kDefault);
            CHECK(k >= 1);
            CHECK(k <= 2);
        }
    }
    SUBCASE("saturation: one more level of headroom changes nothing") {
        GenStats st;
        auto pop = all_ppps(GenLimits{6, 2}, kDefault, &st);
        CHECK(st.height_bound >= 2);
        CHECK(!pop.empty());
    }
    SUBCASE("the default seam leaves thickness-0 objects out, and reports them") {
        GenStats st;
        auto pop = all_ppps(GenLimits{5, 2}, kDefault, &st);
        CHECK(st.thickness_zero > 0);
        for (const Ppp& p : pop) CHECK(intrinsic_thickness(p, kDefault) >= 1);
    }
}

TEST_CASE("count tables") {
    SUBCASE("marginals are consistent") {
        CountTable table = count_table(GenLimits{6, 2}, kDefault);
        std::map<int, long long> bySp;
        for (const auto& [key, count] : table.cells)
            bySp[std::get<0>(key) + std::get<1>(key)] += count;
        CHECK(bySp == table.by_sp);
    }
    SUBCASE("cells are thickness-independent") {
        for (const Conventions& conv : {kDefault, kTopAligned}) {
            CountTable table = count_table(GenLimits{6, 3}, conv);
            for (const auto& [key, count] : table.cells) {
                auto [w, h, k] = key;
                if (k == 1) continue;
                auto it = table.cells.find({w, h, 1});
                REQUIRE(it != table.cells.end());
                CHECK(it->second == count);
            }
        }
    }
    SUBCASE("the aligned seam matches the marked-sequence series") {
        CountTable table = count_table(GenLimits{6, 2}, kTopAligned);
        Series2 p1 = ppp_zpart(6).sequence;
        for (int k = 1; k <= 2; ++k)
            for (int w = 1; w < 6; ++w)
                for (int h = 1; w + h <= 6; ++h) {
                    auto it = table.cells.find({w, h, k});
                    long long got = it == table.cells.end() ? 0 : it->second;
                    CHECK(got == p1.coeff(w, h).as_int64());
                }
    }
    SUBCASE("the default seam misses the series at (1,1) and this is reported") {
        CountTable table = count_table(GenLimits{4, 1}, kDefault);
        CHECK(table.cells.count({1, 1, 1}) == 0); // the (1,1) objects are degenerate here
        CHECK(ppp_zpart(2).sequence.coeff(1, 1).as_int64() == 1);
        CalibrationReport report = calibrate(4, 2);
        bool defaultComboFails = false;
        for (const auto& combo : report.combos)
            if (combo.conv == kDefault)
                for (const auto& prop : combo.properties)
                    if (prop.name == "p_coefficient_match") defaultComboFails = !prop.pass;
        CHECK(defaultComboFails);
    }
}

TEST_CASE("orbit counts") {
    SUBCASE("the aligned seam matches the cycle-construction series") {
        auto orbits = orbit_counts(GenLimits{6, 2}, kTopAligned);
        Series1 s = strip_zpart(6);
        for (int k = 1; k <= 2; ++k)
            for (int sp = 2; sp <= 6; ++sp) {
                auto it = orbits.find({sp, k});
                long long got = it == orbits.end() ? 0 : it->second;
                CHECK(got == s.coeff(sp).as_int64());
            }
    }
}

TEST_CASE("codomain oracles") {
    SUBCASE("one tree with no non-root vertices") {
        CHECK(all_trees(Color::Black, 0, 0).size() == 1);
        CHECK(all_trees(Color::White, 0, 0).size() == 1);
    }
    SUBCASE("tuples of weight 3") {
        CHECK(all_tuples(1, 2).size() + all_tuples(2, 1).size() == 4);
        Series1 g = four_tuple_series(4);
        CHECK(g.coeff(3).as_int64() == 4);
    }
    SUBCASE("marked tuples of weight 3 count 6") {
        auto marked = marked_tuple_counts(3);
        CHECK(marked[{1, 2}] + marked[{2, 1}] == 6);
    }
    SUBCASE("tree counts match the bicolored series") {
        BicoloredPair bi = bicolored_series(6);
        for (int b = 0; b <= 5; ++b)
            for (int w = 0; b + w <= 5; ++w) {
                // the series counts the root as one vertex of its color
                long long blackRooted = (long long)all_trees(Color::Black, b, w).size();
                long long fromSeries =
                    b + 1 + w <= 6 ? bi.white_rooted.coeff(b + 1, w).as_int64() : -1;
                if (fromSeries >= 0) {
                    // white_rooted counts trees whose root is white? no: its
                    // variable zb counts blacks; a black-rooted tree weighted
                    // with its root is zb * Ab
                    fromSeries = bi.black_rooted.coeff(b, w).as_int64();
                    CHECK(blackRooted == fromSeries);
                }
            }
    }
    SUBCASE("necklaces by weight match the cycle series") {
        auto necklaces = necklace_counts(7);
        Series1 s = strip_zpart(7);
        for (int w = 2; w <= 7; ++w) CHECK(necklaces[w] == s.coeff(w).as_int64());
    }
    SUBCASE("marked sequences match the sequence series") {
        auto counts = marked_sequence_counts(7);
        Series2 p1 = ppp_zpart(7).sequence;
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; a + b <= 7; ++b) {
                auto it = counts.find({a, b});
                long long got = it == counts.end() ? 0 : it->second;
                CHECK(got == p1.coeff(a, b).as_int64());
            }
    }
}

TEST_CASE("calibration") {
    CalibrationReport report = calibrate(5, 2);
    SUBCASE("deterministic output") {
        CHECK(to_json(report) == to_json(calibrate(5, 2)));
    }
    SUBCASE("every combination is covered") { CHECK(report.combos.size() == 8); }
    SUBCASE("the aligned seam with strict heights passes the count matches") {
        bool found = false;
        for (const auto& combo : report.combos) {
            if (!(combo.conv.seam == Seam::TopAligned &&
                  combo.conv.height == HeightRule::GtMark))
                continue;
            found = true;
            for (const auto& prop : combo.properties) {
                if (prop.name == "p_coefficient_match" || prop.name == "b_orbit_match" ||
                    prop.name == "psi_roundtrip")
                    CHECK(prop.pass);
            }
        }
        CHECK(found);
    }
    SUBCASE("the aligned seam fails the reference trunk vertex count (7 != 8)") {
        for (const auto& combo : report.combos)
            if (combo.conv.seam == Seam::TopAligned)
                for (const auto& prop : combo.properties)
                    if (prop.name == "trunk_shape") {
                        CHECK_FALSE(prop.pass);
                        CHECK(prop.note.find("7") != std::string::npos);
                    }
    }
    SUBCASE("the default combination reproduces the staircase chain structure") {
        for (const auto& combo : report.combos)
            if (combo.conv == kDefault)
                for (const auto& prop : combo.properties)
                    if (prop.name == "trunk_shape" || prop.name == "vertex_count_equals_sp" ||
                        prop.name == "cycles_equal_even" || prop.name == "psi_roundtrip")
                        CHECK(prop.pass);
    }
}
