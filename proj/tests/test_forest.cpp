#include <doctest.h>

#include <numeric>

#include "ppp/enumerate.hpp"

using namespace ppp;

namespace {

const Conventions kDefault{};

Ppp trunk24() { return trunk_ppp(2, 4, kDefault); }
Ppp vertical_domino(int mark) { return make_ppp(Pp{{{1, 2}}}, mark); }

std::vector<size_t> cycle_sizes(const OrderedCyclicForest& f) {
    std::vector<size_t> sizes;
    for (const auto& c : cycles(f)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

TEST_CASE("trunk geometry") {
    CHECK(trunk24() == make_ppp(Pp{{{1, 3}, {2, 4}, {3, 5}, {4, 6}}}, 3));
    CHECK(trunk_ppp(1, 1, kDefault) == make_ppp(Pp{{{1, 2}}}, 2));
}

TEST_CASE("forest of a PPP") {
    SUBCASE("vertical domino marked at the bottom") {
        PhiResult phi = to_forest(vertical_domino(1), kDefault);
        CHECK(phi.mf.forest.size() == 3);
        // one 2-cycle {column, top row} plus the bottom row as a pendant son
        CHECK(cycle_sizes(phi.mf.forest) == std::vector<size_t>{2});
        CHECK(phi.mf.forest.v[0].color == Color::Black);
        CHECK(phi.mf.forest.v[0].sons.size() == 2);
        CHECK(phi.mf.mark == 0);
        CHECK(validate_forest(phi.mf.forest).ok);
    }
    SUBCASE("trunk(2,4) splits into two 4-cycles") {
        PhiResult phi = to_forest(trunk24(), kDefault);
        CHECK(phi.mf.forest.size() == 8);
        CHECK(cycle_sizes(phi.mf.forest) == std::vector<size_t>{4, 4});
    }
    SUBCASE("trunk(3,3) vertex count and computed cycle structure") {
        PhiResult phi = to_forest(trunk_ppp(3, 3, kDefault), kDefault);
        CHECK(phi.mf.forest.size() == 6);
        // gcd(3,3) = 3 cycles of size 2*3/3 = 2
        CHECK(cycle_sizes(phi.mf.forest) == std::vector<size_t>{2, 2, 2});
    }
    SUBCASE("degenerated input is rejected") {
        CHECK_THROWS_WITH_AS((void)to_forest(make_ppp(Pp{{{1, 1}}}, 1), kDefault),
                             doctest::Contains("DegeneratedInput"), Error);
    }
}

TEST_CASE("validate_forest") {
    SUBCASE("a single 2-cycle") {
        OrderedCyclicForest f;
        f.v.resize(2);
        f.v[0] = {Color::Black, 1, {1}};
        f.v[1] = {Color::White, 0, {0}};
        CHECK(validate_forest(f).ok);
    }
    SUBCASE("self-loop breaks the color flip") {
        OrderedCyclicForest f;
        f.v.resize(1);
        f.v[0] = {Color::Black, 0, {0}};
        CHECK_FALSE(validate_forest(f).ok);
    }
    SUBCASE("a 2-cycle with a pendant is one unicyclic component") {
        OrderedCyclicForest f;
        f.v.resize(3);
        f.v[0] = {Color::Black, 1, {1}};
        f.v[1] = {Color::White, 0, {0, 2}};
        f.v[2] = {Color::Black, 1, {}};
        CHECK(validate_forest(f).ok);
    }
    SUBCASE("sons must match the father fibers") {
        OrderedCyclicForest f;
        f.v.resize(2);
        f.v[0] = {Color::Black, 1, {1}};
        f.v[1] = {Color::White, 0, {}};
        CHECK_FALSE(validate_forest(f).ok);
    }
}

TEST_CASE("cycles") {
    CHECK(cycle_sizes(to_forest(vertical_domino(1), kDefault).mf.forest) ==
          std::vector<size_t>{2});
    CHECK(cycle_sizes(to_forest(trunk24(), kDefault).mf.forest) == std::vector<size_t>{4, 4});
    SUBCASE("all forests of the population have equal even cycle sizes") {
        for (const Ppp& p : all_ppps(GenLimits{7, 3}, kDefault)) {
            auto sizes = cycle_sizes(to_forest(p, kDefault).mf.forest);
            CHECK(sizes.front() % 2 == 0);
            CHECK(sizes.front() == sizes.back());
        }
    }
}

TEST_CASE("pruning") {
    SUBCASE("an all-cycle forest is already pruned") {
        PhiResult phi = to_forest(trunk24(), kDefault);
        PruneResult pruned = prune(phi.mf);
        CHECK(pruned.log.empty());
    }
    SUBCASE("the domino sheds one white leaf") {
        PhiResult phi = to_forest(vertical_domino(1), kDefault);
        PruneResult pruned = prune(phi.mf);
        REQUIRE(pruned.log.size() == 1);
        CHECK(pruned.log[0].role == Color::White);
        CHECK(alive_subforest(pruned).size() == 2);
    }
    SUBCASE("replay reconstructs forest and mark exhaustively") {
        for (const Ppp& p : all_ppps(GenLimits{6, 2}, kDefault)) {
            PhiResult phi = to_forest(p, kDefault);
            MarkedForest back = unprune(prune(phi.mf));
            CHECK(encode(back.forest, back.mark) == encode(phi.mf.forest, phi.mf.mark));
        }
    }
}

TEST_CASE("trunk decomposition") {
    SUBCASE("the staircase is its own trunk") {
        TrunkResult tr = prune_to_trunk(trunk24(), kDefault);
        CHECK(tr.trunk == trunk24());
        CHECK(tr.k == 2);
        CHECK(tr.l == 4);
    }
    SUBCASE("computed cycle law for staircases: gcd(k,l) cycles of size 2l/gcd(k,l)") {
        const Conventions kTopAligned{Seam::TopAligned, HeightRule::GtMark, Degeneracy::RectTop};
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l)
                for (const Conventions& conv : {kDefault, kTopAligned}) {
                    // the width-1 staircase is a marked-top rectangle under
                    // the default seam; its forest only exists top-aligned
                    if (l == 1 && conv.seam == Seam::AboveTop) continue;
                    PhiResult phi = to_forest(trunk_ppp(k, l, conv), conv);
                    int g = std::gcd(k, l);
                    auto sizes = cycle_sizes(phi.mf.forest);
                    CHECK((int)sizes.size() == g);
                    for (size_t s : sizes) CHECK((int)s == 2 * l / g);
                }
    }
    SUBCASE("a pruned object keeps its trunk forest") {
        for (const Ppp& p : all_ppps(GenLimits{6, 2}, kDefault)) {
            TrunkResult tr = prune_to_trunk(p, kDefault);
            if (is_degenerate(tr.trunk, kDefault)) continue; // width-1 trunks
            PhiResult trunkPhi = to_forest(tr.trunk, kDefault);
            CHECK(isomorphic_unmarked(alive_subforest(tr.pruned), trunkPhi.mf.forest));
        }
    }
}

TEST_CASE("intrinsic thickness") {
    CHECK(intrinsic_thickness(trunk24(), kDefault) == 2);
    CHECK(intrinsic_thickness(trunk_ppp(1, 2, kDefault), kDefault) == 1);
    SUBCASE("width-one trunks read back k = height - 1, including 0") {
        CHECK(intrinsic_thickness(vertical_domino(1), kDefault) == 0);
        CHECK(intrinsic_thickness(make_ppp(Pp{{{1, 3}}}, 2), kDefault) == 1);
        CHECK(intrinsic_thickness(make_ppp(Pp{{{1, 4}}}, 3), kDefault) == 1);
        CHECK(intrinsic_thickness(make_ppp(Pp{{{1, 5}}}, 4), kDefault) == 2);
    }
    SUBCASE("the forest is rotation-invariant where rotation exists") {
        for (const Ppp& p : all_ppps(GenLimits{6, 2}, kDefault)) {
            if (p.width() == 1) continue;
            try {
                Ppp q = rotated(p, kDefault);
                CHECK(isomorphic_unmarked(to_forest(p, kDefault).mf.forest,
                                          to_forest(q, kDefault).mf.forest));
                CHECK(intrinsic_thickness(q, kDefault) == intrinsic_thickness(p, kDefault));
            } catch (const Error& e) {
                CHECK(e.code() == Errc::InvalidRotation);
            }
        }
    }
}
