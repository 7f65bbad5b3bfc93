// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Criteria 6, 7, 9, 10 run under the default conventions; criterion 8 runs
// under the rotation-coherent pair (top_aligned, gt_mark); criterion 11
// accepts either a fully matching conventions combination or a
// deterministic calibration report with counterexamples.

#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "ppp/cli.hpp"
#include "ppp/enumerate.hpp"
#include "ppp/generating.hpp"

using namespace ppp;

namespace {

const Conventions kDefault{};
const Conventions kRotation{Seam::TopAligned, HeightRule::GtMark, Degeneracy::RectTop};

int failures = 0;

void report(int criterion, bool pass, const std::string& label, const std::string& detail = "") {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

// 1. PP counts equal Catalan(n-1) for n = 2..11.
void criterion1() {
    Series1 cat = catalan_series(11);
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= 11; ++n) {
        long long got = (long long)all_pps(n).size();
        long long expected = cat.coeff(n - 1).as_int64();
        if (got != expected) {
            pass = false;
            detail = "n=" + std::to_string(n) + ": " + std::to_string(got) + " != " +
                     std::to_string(expected);
            break;
        }
    }
    report(1, pass, "polyomino counts match Catalan(n-1) for n = 2..11", detail);
}

// 2. Series sanity: catalan coefficients + residual, bicolored symmetry +
// squared closed form.
void criterion2() {
    Series1 a = catalan_series(16);
    long long frozen[] = {1, 1, 2, 5, 14, 42};
    bool pass = true;
    for (int i = 0; i < 6; ++i) pass = pass && a.coeff(i) == Rat(frozen[i]);
    pass = pass && catalan_residual(a).valuation() > 16;

    BicoloredPair bi = bicolored_series(10);
    pass = pass && bi.black_rooted.swapped() == bi.white_rooted;
    Series2 one = Series2::constant(10, Rat(1));
    Series2 zb(10), zw(10);
    zb.c[1][0] = Rat(1);
    zw.c[0][1] = Rat(1);
    Series2 u = zb - zw + one;
    Series2 lhs = shift_black(bi.black_rooted) + shift_black(bi.black_rooted) - u;
    Series2 residual = lhs * lhs - (u * u - (zb + zb + zb + zb));
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; i + j <= 10; ++j) pass = pass && residual.coeff(i, j).is_zero();
    report(2, pass, "series sanity: catalan fixed point and bicolored closed form");
}

// 3. Cycle-construction coefficients equal brute-force necklace counts, w <= 10.
void criterion3() {
    Series1 s = strip_zpart(10);
    auto necklaces = necklace_counts(10);
    bool pass = true;
    std::string detail;
    for (int w = 1; w <= 10; ++w) {
        long long got = necklaces.count(w) ? necklaces[w] : 0;
        long long expected = s.coeff(w).as_int64();
        if (got != expected) {
            pass = false;
            detail = "weight " + std::to_string(w);
            break;
        }
    }
    report(3, pass, "necklace oracle matches the cycle construction to weight 10", detail);
}

// 4. Q, M, P1 coefficients equal brute-force (marked) counts, weight <= 10.
void criterion4() {
    PppSeries ps = ppp_zpart(10);
    auto q = tuple_counts(10);
    auto m = marked_tuple_counts(10);
    auto p = marked_sequence_counts(10);
    bool pass = true;
    std::string detail;
    for (int a = 0; a <= 10 && pass; ++a)
        for (int b = 0; a + b <= 10 && pass; ++b) {
            auto key = std::make_pair(a, b);
            long long qg = q.count(key) ? q[key] : 0;
            long long mg = m.count(key) ? m[key] : 0;
            long long pg = p.count(key) ? p[key] : 0;
            if (qg != ps.tuple.coeff(a, b).as_int64() ||
                mg != ps.marked.coeff(a, b).as_int64() ||
                pg != ps.sequence.coeff(a, b).as_int64()) {
                pass = false;
                detail = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        }
    report(4, pass, "tuple and marked-sequence oracles match Q, M, P1 to weight 10", detail);
}

// 5. A008549: diagonal P1 at z^(n+1) equals dyck_area_sum(n) and the frozen
// sequence, n = 1..6.
void criterion5() {
    Series1 diag = ppp_zpart(8).sequence.diagonal();
    long long frozen[] = {1, 6, 29, 130, 562, 2380};
    bool pass = true;
    for (int n = 1; n <= 6; ++n) {
        long long expected = frozen[n - 1];
        pass = pass && dyck_area_sum(n) == expected &&
               diag.coeff(n + 1).as_int64() == expected;
    }
    report(5, pass, "thickness-1 diagonal equals the dyck area sums 1,6,29,130,562,2380");
}

// 6. Bijection roundtrips at sp <= 7, thickness <= 3 under the defaults.
void criterion6(const std::vector<Ppp>& pop) {
    bool pass = true;
    std::string detail;
    for (const Ppp& p : pop) {
        try {
            Decomposition d = decompose(p, kDefault);
            if (!(compose(d.k, d.ms, kDefault) == p)) {
                pass = false;
                detail = encode(p);
                break;
            }
            PhiResult phi = to_forest(p, kDefault);
            MarkedForest back = unprune(prune(phi.mf));
            if (encode(back.forest, back.mark) != encode(phi.mf.forest, phi.mf.mark)) {
                pass = false;
                detail = encode(p) + " (prune replay)";
                break;
            }
        } catch (const Error& e) {
            pass = false;
            detail = encode(p) + ": " + e.what();
            break;
        }
    }
    report(6, pass, "decompose/compose and prune replay are exact at sp <= 7, k <= 3", detail);
}

// 7. Forest structure under the defaults, including the two staircase pins
// from the source material (the trunk(3,3) pin contradicts direct
// computation; see the notes ledger).
void criterion7(const std::vector<Ppp>& pop) {
    bool pass = true;
    std::string detail;
    for (const Ppp& p : pop) {
        PhiResult phi = to_forest(p, kDefault);
        if (!validate_forest(phi.mf.forest).ok ||
            phi.mf.forest.size() != stats(p, kDefault).semi_perimeter) {
            pass = false;
            detail = encode(p);
            break;
        }
        auto cyc = cycles(phi.mf.forest);
        for (const auto& c : cyc)
            if (c.size() != cyc.front().size() || c.size() % 2 != 0) {
                pass = false;
                detail = encode(p);
            }
        if (!pass) break;
    }

    auto sizes = [&](int k, int l) {
        std::vector<size_t> out;
        for (const auto& c : cycles(to_forest(trunk_ppp(k, l, kDefault), kDefault).mf.forest))
            out.push_back(c.size());
        std::sort(out.begin(), out.end());
        return out;
    };
    if (sizes(2, 4) != std::vector<size_t>{4, 4}) {
        pass = false;
        detail = "trunk(2,4) cycle structure";
    }
    auto s33 = sizes(3, 3);
    if (s33 != std::vector<size_t>{6}) {
        pass = false;
        std::ostringstream os;
        os << "trunk(3,3): stated as one cycle of size 6, computed ";
        os << s33.size() << " cycles of size " << s33.front()
           << " (gcd(k,l) cycles of size 2l/gcd(k,l); the stated l/gcd-cycles-of-2gcd form "
              "only matches when gcd = l/gcd, e.g. trunk(2,4))";
        detail = os.str();
    }
    report(7, pass, "forest structure: validation, even equal cycles, vertex count = sp,"
                    " staircase cycle pins",
           detail);
}

// 8. Rotation under the rotation-coherent conventions.
void criterion8(const std::vector<Ppp>& pop) {
    bool pass = true;
    std::string detail;
    for (const Ppp& p : pop) {
        try {
            PppStats st = stats(p, kRotation);
            int k = intrinsic_thickness(p, kRotation);
            std::string forest0 = encode(to_forest(p, kRotation).mf.forest);
            Ppp q = p;
            for (int i = 0; i < p.width(); ++i) {
                q = rotated(q, kRotation);
                if (stats(q, kRotation).semi_perimeter != st.semi_perimeter ||
                    intrinsic_thickness(q, kRotation) != k ||
                    encode(to_forest(q, kRotation).mf.forest) != forest0) {
                    pass = false;
                    detail = encode(p) + " (invariance)";
                    break;
                }
            }
            if (!(q == p)) {
                pass = false;
                detail = encode(p) + " (r^width)";
            }
        } catch (const Error& e) {
            pass = false;
            detail = encode(p) + ": " + e.what();
        }
        if (!pass) break;
    }
    report(8, pass,
           "rotation: r^width = id, sp/thickness/forest invariant (under " +
               to_string(kRotation) + ")",
           detail);
}

// 9. Thickness independence of the (width, height) tables at sp <= 7.
void criterion9(const std::vector<Ppp>& pop) {
    CountTable table = count_table(pop, kDefault);
    bool pass = true;
    std::string detail;
    for (int w = 1; w < 7 && pass; ++w)
        for (int h = 1; w + h <= 7 && pass; ++h) {
            auto cell = [&](int k) {
                auto it = table.cells.find({w, h, k});
                return it == table.cells.end() ? 0LL : it->second;
            };
            if (cell(2) != cell(1) || cell(3) != cell(1)) {
                pass = false;
                detail = "width=" + std::to_string(w) + ",height=" + std::to_string(h);
            }
        }
    report(9, pass, "count tables by (width, height) identical for thickness 1, 2, 3", detail);
}

// 10. Exactly one degenerate PPP per (column height <= 5, width <= 5).
void criterion10() {
    bool pass = true;
    std::string detail;
    long long found[6][6] = {};
    // enumerate all shapes with heights and widths up to 5 and count the
    // degenerate marked objects
    for (int n = 2; n <= 10; ++n)
        for (const Pp& pp : all_pps(n)) {
            if (pp.width() > 5 || pp.rows() > 5) continue;
            for (int m = 1; m <= std::min(pp.cols.front().size(), pp.cols.back().size()); ++m) {
                Ppp p{pp, m};
                if (!is_degenerate(p, kDefault)) continue;
                int c = pp.cols.front().size();
                if (c <= 5) ++found[c][pp.width()];
            }
        }
    for (int c = 1; c <= 5; ++c)
        for (int w = 1; w <= 5; ++w)
            if (found[c][w] != 1) {
                pass = false;
                detail = "height=" + std::to_string(c) + ",width=" + std::to_string(w) + ": " +
                         std::to_string(found[c][w]);
            }
    report(10, pass, "one degenerate PPP per (column height, width) up to 5", detail);
}

// 11. Coefficient match under at least one conventions combination, with the
// deterministic calibration report as the documented fallback.
void criterion11() {
    CalibrationReport rep = calibrate(7, 3);
    std::string json = to_json(rep);
    bool deterministic = json == to_json(calibrate(7, 3));

    bool matched = false;
    for (const CombinationReport& combo : rep.combos) {
        bool countsMatch = true;
        for (const PropertyResult& prop : combo.properties)
            if (prop.name == "p_coefficient_match" || prop.name == "b_orbit_match")
                countsMatch = countsMatch && prop.pass;
        matched = matched || countsMatch;
    }
    bool counterexamplesPresent = true;
    for (const CombinationReport& combo : rep.combos)
        for (const PropertyResult& prop : combo.properties)
            if (!prop.pass && prop.counterexample.empty()) counterexamplesPresent = false;

    std::string matching;
    for (const CombinationReport& combo : rep.combos) {
        bool countsMatch = true;
        for (const PropertyResult& prop : combo.properties)
            if (prop.name == "p_coefficient_match" || prop.name == "b_orbit_match")
                countsMatch = countsMatch && prop.pass;
        if (countsMatch) matching += (matching.empty() ? "" : "; ") + to_string(combo.conv);
    }
    bool pass = deterministic && counterexamplesPresent && matched;
    report(11, pass,
           "count_table and orbit_counts match the series under at least one combination",
           matched ? "matching: " + matching : "no combination matches; report carries "
                                               "counterexamples");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    std::vector<Ppp> defaults = all_ppps(GenLimits{7, 3}, kDefault);
    std::vector<Ppp> rotation = all_ppps(GenLimits{7, 3}, kRotation);
    criterion6(defaults);
    criterion7(defaults);
    criterion8(rotation);
    criterion9(defaults);
    criterion10();
    criterion11();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
