#include "ppp/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "ppp/generating.hpp"

namespace ppp {

std::vector<Pp> all_pps(int n) {
    if (n < 2) fail(Errc::InvariantViolation, "all_pps needs n >= 2");
    std::vector<Pp> out;
    std::vector<ColumnSpan> cols;
    // width w and row count R = n - w; the last column's top must be R
    for (int w = 1; w <= n - 1; ++w) {
        int rows = n - w;
        std::function<void(int)> rec = [&](int j) {
            int prevB = j == 0 ? 1 : cols[j - 1].bottom;
            int prevT = j == 0 ? 0 : cols[j - 1].top;
            int bLo = j == 0 ? 1 : prevB;
            int bHi = j == 0 ? 1 : prevT; // adjacency
            for (int b = bLo; b <= bHi; ++b) {
                int tLo = std::max(b, prevT);
                for (int t = tLo; t <= rows; ++t) {
                    if (j == w - 1 && t != rows) continue;
                    cols.push_back({b, t});
                    if (j == w - 1)
                        out.push_back(Pp{cols});
                    else
                        rec(j + 1);
                    cols.pop_back();
                }
            }
        };
        rec(0);
    }
    return out;
}

namespace {

// Shapes with column height <= maxHeight that can carry a mark with
// sp <= maxSp under either height rule. A width-w shape only admits a mark
// when its last bottom is at most maxSp - w + 1 and its rows extend at most
// maxSp - w above the first column's top, which caps the recursion sharply.
void enumerate_shapes(int maxSp, int maxHeight, const std::function<void(const Pp&)>& emit) {
    std::vector<ColumnSpan> cols;
    std::function<void(int)> rec = [&](int j) {
        if (j > 0) emit(Pp{cols});
        if (j == maxSp - 1) return; // height >= 1 forces width < maxSp
        int prevB = j == 0 ? 1 : cols[j - 1].bottom;
        int prevT = j == 0 ? 0 : cols[j - 1].top;
        int bLo = j == 0 ? 1 : prevB;
        int bHi = j == 0 ? 1 : std::min(prevT, maxSp - j);
        for (int b = bLo; b <= bHi; ++b) {
            int tLo = std::max(b, prevT);
            int tHi = std::min(b + maxHeight - 1,
                               j == 0 ? maxHeight : cols[0].top + maxSp - j - 1);
            for (int t = tLo; t <= tHi; ++t) {
                cols.push_back({b, t});
                rec(j + 1);
                cols.pop_back();
            }
        }
    };
    rec(0);
}

std::vector<Ppp> generate_with_height(const GenLimits& lim, const Conventions& conv,
                                      int maxHeight, GenStats& gs) {
    std::vector<Ppp> out;
    gs = GenStats{};
    gs.height_bound = maxHeight;
    enumerate_shapes(lim.max_sp, maxHeight, [&](const Pp& shape) {
        int hiMark = std::min(shape.cols.front().size(), shape.cols.back().size());
        int loMark = std::max(1, shape.rows() - lim.max_sp + shape.width());
        for (int m = loMark; m <= hiMark; ++m) {
            Ppp p{shape, m};
            ++gs.marked_shapes;
            if (stats(p, conv).semi_perimeter > lim.max_sp) continue;
            if (is_degenerate(p, conv)) {
                ++gs.degenerate;
                continue;
            }
            int k;
            try {
                k = intrinsic_thickness(p, conv);
            } catch (const Error&) {
                ++gs.trunk_errors;
                continue;
            }
            if (k == 0) {
                ++gs.thickness_zero;
                continue;
            }
            if (k > lim.max_thickness) {
                ++gs.over_thickness;
                continue;
            }
            out.push_back(p);
        }
    });
    std::sort(out.begin(), out.end(),
              [](const Ppp& a, const Ppp& b) { return encode(a) < encode(b); });
    return out;
}

} // namespace

std::vector<Ppp> all_ppps(const GenLimits& lim, const Conventions& conv, GenStats* statsOut) {
    if (lim.max_sp < 1 || lim.max_thickness < 1)
        fail(Errc::InvariantViolation, "generation bounds must be >= 1");
    // sp does not bound column heights, so grow the bound until saturation.
    // A trunk chain holds at most max_thickness + 1 of the levels of each
    // strip period, which caps useful heights near (k + 2) * sp.
    int ceiling = (lim.max_thickness + 3) * lim.max_sp + 4;
    std::vector<Ppp> prev;
    bool havePrev = false;
    for (int h = std::max(1, lim.max_sp + lim.max_thickness); h <= ceiling; ++h) {
        GenStats cur;
        std::vector<Ppp> pop = generate_with_height(lim, conv, h, cur);
        if (havePrev && pop == prev) {
            if (statsOut) *statsOut = cur;
            return pop;
        }
        prev = std::move(pop);
        havePrev = true;
    }
    fail(Errc::SaturationNotReached,
         "column-height bound hit " + std::to_string(ceiling) + " without saturating");
}

CountTable count_table(const std::vector<Ppp>& pop, const Conventions& conv) {
    CountTable table;
    for (const Ppp& p : pop) {
        PppStats st = stats(p, conv);
        int k = intrinsic_thickness(p, conv);
        ++table.cells[{st.width, st.height, k}];
        ++table.by_sp[st.semi_perimeter];
    }
    return table;
}

CountTable count_table(const GenLimits& lim, const Conventions& conv) {
    return count_table(all_ppps(lim, conv), conv);
}

std::map<std::pair<int, int>, long long> orbit_counts(const std::vector<Ppp>& pop,
                                                      const Conventions& conv) {
    std::map<std::pair<int, int>, long long> counts;
    std::set<std::string> seen;
    for (const Ppp& p : pop) {
        OrbitInfo orbit = strip_orbit(p, conv);
        if (!seen.insert(orbit.representative).second) continue;
        PppStats st = stats(p, conv);
        ++counts[{st.semi_perimeter, intrinsic_thickness(p, conv)}];
    }
    return counts;
}

std::map<std::pair<int, int>, long long> orbit_counts(const GenLimits& lim,
                                                      const Conventions& conv) {
    return orbit_counts(all_ppps(lim, conv), conv);
}

// ---------------------------------------------------------------------------
// codomain oracles
// ---------------------------------------------------------------------------

namespace {

using Forests = std::vector<std::vector<OrderedTree>>;

// guards the enumeration memos; generation stays callable from workers
std::recursive_mutex memo_mutex;

// ordered forests of `rootColor`-rooted subtrees with exact total counts,
// each subtree root included in its color's count
const Forests& forests_exact(Color rootColor, int blacks, int whites);

const std::vector<OrderedTree>& trees_exact(Color root, int blacks, int whites) {
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    static std::map<std::tuple<int, int, int>, std::vector<OrderedTree>> memo;
    auto key = std::make_tuple(root == Color::Black ? 0 : 1, blacks, whites);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Color kidColor = root == Color::Black ? Color::White : Color::Black;
    std::vector<OrderedTree> out;
    for (const auto& forest : forests_exact(kidColor, blacks, whites))
        out.push_back(OrderedTree{forest});
    return memo.emplace(key, std::move(out)).first->second;
}

const Forests& forests_exact(Color rootColor, int blacks, int whites) {
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    static std::map<std::tuple<int, int, int>, Forests> memo;
    auto key = std::make_tuple(rootColor == Color::Black ? 0 : 1, blacks, whites);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Forests out;
    if (blacks == 0 && whites == 0) {
        out.push_back({});
    } else if (blacks >= 0 && whites >= 0) {
        int rb = rootColor == Color::Black ? 1 : 0;
        int rw = 1 - rb;
        for (int fb = 0; fb + rb <= blacks; ++fb)
            for (int fw = 0; fw + rw <= whites; ++fw)
                for (const OrderedTree& first : trees_exact(rootColor, fb, fw))
                    for (const auto& rest :
                         forests_exact(rootColor, blacks - fb - rb, whites - fw - rw)) {
                        std::vector<OrderedTree> forest{first};
                        forest.insert(forest.end(), rest.begin(), rest.end());
                        out.push_back(std::move(forest));
                    }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

} // namespace

std::vector<OrderedTree> all_trees(Color root, int blacks, int whites) {
    if (blacks < 0 || whites < 0) return {};
    return trees_exact(root, blacks, whites);
}

std::vector<FourTuple> all_tuples(int blacks, int whites) {
    std::vector<FourTuple> out;
    int nb = blacks - 1, nw = whites - 1; // non-root counts
    if (nb < 0 || nw < 0) return out;
    for (int b0 = 0; b0 <= nb; ++b0)
        for (int w0 = 0; w0 <= nw; ++w0)
            for (int b1 = 0; b0 + b1 <= nb; ++b1)
                for (int w1 = 0; w0 + w1 <= nw; ++w1)
                    for (int b2 = 0; b0 + b1 + b2 <= nb; ++b2)
                        for (int w2 = 0; w0 + w1 + w2 <= nw; ++w2) {
                            int b3 = nb - b0 - b1 - b2, w3 = nw - w0 - w1 - w2;
                            for (const auto& t0 : all_trees(Color::Black, b0, w0))
                                for (const auto& t1 : all_trees(Color::Black, b1, w1))
                                    for (const auto& t2 : all_trees(Color::White, b2, w2))
                                        for (const auto& t3 : all_trees(Color::White, b3, w3))
                                            out.push_back(FourTuple{{t0, t1, t2, t3}});
                        }
    return out;
}

std::vector<std::vector<FourTuple>> all_tuple_sequences(int max_weight) {
    // tuples grouped by weight first
    std::vector<std::pair<TupleWeight, FourTuple>> tuples;
    for (int a = 1; a <= max_weight - 1; ++a)
        for (int b = 1; a + b <= max_weight; ++b)
            for (const FourTuple& ft : all_tuples(a, b)) tuples.push_back({{a, b}, ft});
    std::vector<std::vector<FourTuple>> out;
    std::vector<FourTuple> seq;
    std::function<void(int)> rec = [&](int weightLeft) {
        if (!seq.empty()) out.push_back(seq);
        for (const auto& [tw, ft] : tuples) {
            if (tw.blacks + tw.whites > weightLeft) continue;
            seq.push_back(ft);
            rec(weightLeft - tw.blacks - tw.whites);
            seq.pop_back();
        }
    };
    rec(max_weight);
    return out;
}

std::map<std::pair<int, int>, long long> tuple_counts(int max_weight) {
    std::map<std::pair<int, int>, long long> counts;
    for (int a = 1; a <= max_weight - 1; ++a)
        for (int b = 1; a + b <= max_weight; ++b)
            counts[{a, b}] = (long long)all_tuples(a, b).size();
    return counts;
}

std::map<std::pair<int, int>, long long> marked_tuple_counts(int max_weight) {
    // one mark per black vertex: the two roots jointly, or any non-root black
    std::map<std::pair<int, int>, long long> counts;
    for (int a = 1; a <= max_weight - 1; ++a)
        for (int b = 1; a + b <= max_weight; ++b)
            counts[{a, b}] = (long long)all_tuples(a, b).size() * a;
    return counts;
}

std::map<std::pair<int, int>, long long> marked_sequence_counts(int max_weight) {
    std::map<std::pair<int, int>, long long> counts;
    for (const auto& seq : all_tuple_sequences(max_weight)) {
        int a = 0, b = 0;
        for (const FourTuple& ft : seq) {
            TupleWeight tw = tuple_weight(ft);
            a += tw.blacks;
            b += tw.whites;
        }
        counts[{a, b}] += tuple_weight(seq.front()).blacks;
    }
    return counts;
}

std::map<int, long long> necklace_counts(int max_weight) {
    std::set<std::string> seen;
    std::map<int, long long> counts;
    for (const auto& seq : all_tuple_sequences(max_weight)) {
        Necklace neck = canonical_necklace(seq);
        if (!seen.insert(encode(neck)).second) continue;
        int w = 0;
        for (const FourTuple& ft : seq) {
            TupleWeight tw = tuple_weight(ft);
            w += tw.blacks + tw.whites;
        }
        ++counts[w];
    }
    return counts;
}

// ---------------------------------------------------------------------------
// calibration
// ---------------------------------------------------------------------------

namespace {

PropertyResult check_vertex_count(const std::vector<Ppp>& pop, const Conventions& conv) {
    PropertyResult r{"vertex_count_equals_sp", true, 0, "", ""};
    for (const Ppp& p : pop) {
        ++r.checked;
        try {
            if (to_forest(p, conv).mf.forest.size() != stats(p, conv).semi_perimeter) {
                r.pass = false;
                r.counterexample = encode(p);
                return r;
            }
        } catch (const Error& e) {
            r.pass = false;
            r.counterexample = encode(p);
            r.note = e.what();
            return r;
        }
    }
    return r;
}

PropertyResult check_even_cycles(const std::vector<Ppp>& pop, const Conventions& conv) {
    PropertyResult r{"cycles_equal_even", true, 0, "", ""};
    for (const Ppp& p : pop) {
        ++r.checked;
        auto cyc = cycles(to_forest(p, conv).mf.forest);
        size_t size0 = cyc.front().size();
        bool ok = size0 % 2 == 0;
        for (const auto& c : cyc) ok = ok && c.size() == size0;
        if (!ok) {
            r.pass = false;
            r.counterexample = encode(p);
            return r;
        }
    }
    return r;
}

PropertyResult check_psi_roundtrip(const std::vector<Ppp>& pop, const Conventions& conv) {
    PropertyResult r{"psi_roundtrip", true, 0, "", ""};
    for (const Ppp& p : pop) {
        ++r.checked;
        try {
            Decomposition d = decompose(p, conv);
            if (!(compose(d.k, d.ms, conv) == p)) {
                r.pass = false;
                r.counterexample = encode(p);
                return r;
            }
        } catch (const Error& e) {
            r.pass = false;
            r.counterexample = encode(p);
            r.note = e.what();
            return r;
        }
    }
    return r;
}

PropertyResult check_p_match(const std::vector<Ppp>& pop, const GenLimits& lim,
                             const Conventions& conv) {
    PropertyResult r{"p_coefficient_match", true, 0, "", ""};
    CountTable table = count_table(pop, conv);
    Series2 p1 = ppp_zpart(lim.max_sp).sequence;
    for (int k = 1; k <= lim.max_thickness; ++k)
        for (int w = 1; w < lim.max_sp; ++w)
            for (int h = 1; w + h <= lim.max_sp; ++h) {
                ++r.checked;
                long long expected = p1.coeff(w, h).as_int64();
                auto it = table.cells.find({w, h, k});
                long long got = it == table.cells.end() ? 0 : it->second;
                if (got != expected && r.pass) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "width=" << w << ",height=" << h << ",thickness=" << k
                       << ": counted " << got << ", series " << expected;
                    r.counterexample = os.str();
                }
            }
    return r;
}

PropertyResult check_b_match(const std::vector<Ppp>& pop, const GenLimits& lim,
                             const Conventions& conv) {
    PropertyResult r{"b_orbit_match", true, 0, "", ""};
    auto orbits = orbit_counts(pop, conv);
    Series1 s = strip_zpart(lim.max_sp);
    for (int k = 1; k <= lim.max_thickness; ++k)
        for (int sp = 2; sp <= lim.max_sp; ++sp) {
            ++r.checked;
            long long expected = s.coeff(sp).as_int64();
            auto it = orbits.find({sp, k});
            long long got = it == orbits.end() ? 0 : it->second;
            if (got != expected && r.pass) {
                r.pass = false;
                std::ostringstream os;
                os << "sp=" << sp << ",thickness=" << k << ": counted " << got << ", series "
                   << expected;
                r.counterexample = os.str();
            }
        }
    return r;
}

PropertyResult check_trunk_shape(const std::vector<Ppp>& pop, const Conventions& conv) {
    PropertyResult r{"trunk_shape", true, 0, "", ""};
    // the reference staircase marked topmost must keep its 8 vertices
    Ppp probe = make_ppp(Pp{{{1, 3}, {2, 4}, {3, 5}, {4, 6}}}, 3);
    try {
        int vertices = to_forest(probe, conv).mf.forest.size();
        if (vertices != 8) {
            r.pass = false;
            r.counterexample = encode(probe);
            r.note = "trunk(2,4) forest has " + std::to_string(vertices) + " vertices, not 8";
        }
    } catch (const Error& e) {
        r.pass = false;
        r.counterexample = encode(probe);
        r.note = e.what();
    }
    for (const Ppp& p : pop) {
        ++r.checked;
        try {
            TrunkResult tr = prune_to_trunk(p, conv);
            (void)tr;
        } catch (const Error& e) {
            if (r.pass) {
                r.pass = false;
                r.counterexample = encode(p);
                r.note = e.what();
            }
        }
    }
    return r;
}

} // namespace

std::vector<Conventions> CalibrationReport::fully_passing() const {
    std::vector<Conventions> out;
    for (const CombinationReport& combo : combos)
        if (combo.all_pass()) out.push_back(combo.conv);
    return out;
}

CalibrationReport calibrate(int max_sp, int max_thickness) {
    if (max_sp < 2 || max_thickness < 2)
        fail(Errc::InvariantViolation, "calibration bounds must be >= 2");
    CalibrationReport report;
    report.max_sp = max_sp;
    report.max_thickness = max_thickness;
    GenLimits lim{max_sp, max_thickness};
    for (const Conventions& conv : all_conventions()) {
        CombinationReport combo;
        combo.conv = conv;
        std::vector<Ppp> pop = all_ppps(lim, conv, &combo.stats);
        combo.properties.push_back(check_vertex_count(pop, conv));
        combo.properties.push_back(check_even_cycles(pop, conv));
        combo.properties.push_back(check_psi_roundtrip(pop, conv));
        combo.properties.push_back(check_p_match(pop, lim, conv));
        combo.properties.push_back(check_b_match(pop, lim, conv));
        combo.properties.push_back(check_trunk_shape(pop, conv));
        report.combos.push_back(std::move(combo));
    }
    return report;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string to_json(const CalibrationReport& report) {
    std::ostringstream os;
    os << "{\"max_sp\":" << report.max_sp << ",\"max_thickness\":" << report.max_thickness
       << ",\"combinations\":[";
    for (size_t i = 0; i < report.combos.size(); ++i) {
        const CombinationReport& combo = report.combos[i];
        if (i) os << ',';
        os << "{\"conventions\":\"" << to_string(combo.conv) << "\"";
        os << ",\"population\":" << (combo.stats.marked_shapes - combo.stats.degenerate -
                                      combo.stats.thickness_zero - combo.stats.over_thickness -
                                      combo.stats.trunk_errors)
           << ",\"degenerate\":" << combo.stats.degenerate
           << ",\"thickness_zero\":" << combo.stats.thickness_zero
           << ",\"trunk_errors\":" << combo.stats.trunk_errors
           << ",\"height_bound\":" << combo.stats.height_bound << ",\"properties\":[";
        for (size_t j = 0; j < combo.properties.size(); ++j) {
            const PropertyResult& p = combo.properties[j];
            if (j) os << ',';
            os << "{\"name\":\"" << p.name << "\",\"pass\":" << (p.pass ? "true" : "false")
               << ",\"checked\":" << p.checked;
            if (!p.pass) os << ",\"counterexample\":\"" << json_escape(p.counterexample) << "\"";
            if (!p.note.empty()) os << ",\"note\":\"" << json_escape(p.note) << "\"";
            os << "}";
        }
        os << "],\"all_pass\":" << (combo.all_pass() ? "true" : "false") << "}";
    }
    os << "]}";
    return os.str();
}

} // namespace ppp
