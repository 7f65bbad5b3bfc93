#include "ppp/tuples.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace ppp {

namespace {

void weigh(const OrderedTree& t, Color c, int& blacks, int& whites) {
    for (const OrderedTree& kid : t.kids) {
        Color kc = c == Color::Black ? Color::White : Color::Black;
        (kc == Color::Black ? blacks : whites) += 1;
        weigh(kid, kc, blacks, whites);
    }
}

} // namespace

TupleWeight tuple_weight(const FourTuple& ft) {
    int blacks = 1, whites = 1; // the two cycle vertices behind the four roots
    weigh(ft.t[0], Color::Black, blacks, whites);
    weigh(ft.t[1], Color::Black, blacks, whites);
    weigh(ft.t[2], Color::White, blacks, whites);
    weigh(ft.t[3], Color::White, blacks, whites);
    return {blacks, whites};
}

std::string encode(const OrderedTree& t) {
    std::string s;
    for (const OrderedTree& kid : t.kids) {
        s.push_back('(');
        s += encode(kid);
        s.push_back(')');
    }
    return s;
}

std::string encode(const FourTuple& ft) {
    return "(" + encode(ft.t[0]) + "|" + encode(ft.t[1]) + "|" + encode(ft.t[2]) + "|" +
           encode(ft.t[3]) + ")";
}

std::string encode(const MarkedSequence& ms) {
    std::string s;
    for (size_t i = 0; i < ms.seq.size(); ++i) {
        if (i) s.push_back(';');
        s += encode(ms.seq[i]);
    }
    s += "!";
    if (!ms.mark) {
        s += "roots";
    } else {
        s += std::to_string(ms.mark->slot);
        for (int idx : ms.mark->path) s += "." + std::to_string(idx);
    }
    return s;
}

std::string encode(const Necklace& n) {
    std::string s;
    for (size_t i = 0; i < n.tuples.size(); ++i) {
        if (i) s.push_back(';');
        s += encode(n.tuples[i]);
    }
    return s;
}

Necklace canonical_necklace(const std::vector<FourTuple>& seq) {
    if (seq.empty()) fail(Errc::InvariantViolation, "a necklace needs at least one tuple");
    size_t n = seq.size();
    size_t best = 0;
    std::string bestText;
    for (size_t r = 0; r < n; ++r) {
        std::string text;
        for (size_t i = 0; i < n; ++i) text += encode(seq[(r + i) % n]) + ";";
        if (bestText.empty() || text < bestText) {
            bestText = text;
            best = r;
        }
    }
    Necklace out;
    for (size_t i = 0; i < n; ++i) out.tuples.push_back(seq[(best + i) % n]);
    return out;
}

// ---------------------------------------------------------------------------
// decompose (the forest-to-tuples direction)
// ---------------------------------------------------------------------------

Decomposition decompose(const Ppp& p, const Conventions& conv) {
    TrunkResult tr = prune_to_trunk(p, conv);
    const OrderedCyclicForest& f = tr.phi.mf.forest;
    std::vector<char> cyc = on_cycle_flags(f);

    std::function<OrderedTree(int)> pendant_tree = [&](int v) {
        OrderedTree t;
        for (int s : f.v[v].sons) t.kids.push_back(pendant_tree(s));
        return t;
    };
    // split the sons of a cycle vertex around its cycle son
    auto split = [&](int u, OrderedTree& greater, OrderedTree& smaller) {
        int cycleSon = -1;
        for (int s : f.v[u].sons) {
            if (cyc[s]) {
                cycleSon = s;
                continue;
            }
            (cycleSon == -1 ? greater : smaller).kids.push_back(pendant_tree(s));
        }
        if (cycleSon == -1) fail(Errc::InvariantViolation, "cycle vertex without a cycle son");
        return cycleSon;
    };

    int l = tr.l;
    std::vector<FourTuple> tuples(l);
    std::vector<int> tuple_of_column(p.width(), -1);
    for (int i = 0; i < l; ++i) {
        int v1 = tr.surviving_columns[i]; // black vertex ids equal column indices
        tuple_of_column[v1] = i;
        int v2 = split(v1, tuples[i].t[0], tuples[i].t[1]);
        split(v2, tuples[i].t[2], tuples[i].t[3]);
    }

    int start = 0;
    std::optional<MarkAddress> mark;
    if (cyc[0]) {
        start = tuple_of_column[0];
    } else {
        std::vector<int> up; // pendant chain from the first column's vertex
        int x = 0;
        while (!cyc[x]) {
            up.push_back(x);
            x = f.v[x].father;
        }
        int u = x;
        int v1 = f.v[u].color == Color::Black ? u : f.v[u].father;
        start = tuple_of_column[v1];

        MarkAddress addr;
        int top = up.back();
        bool afterCycleSon = false;
        int idxInSplit = 0;
        bool seenCycleSon = false;
        for (int s : f.v[u].sons) {
            if (cyc[s]) {
                seenCycleSon = true;
                idxInSplit = 0;
                continue;
            }
            if (s == top) {
                afterCycleSon = seenCycleSon;
                break;
            }
            ++idxInSplit;
        }
        addr.slot = (f.v[u].color == Color::Black ? 0 : 2) + (afterCycleSon ? 1 : 0);
        addr.path.push_back(idxInSplit);
        for (int i = (int)up.size() - 2; i >= 0; --i) {
            const auto& sons = f.v[up[i + 1]].sons;
            addr.path.push_back(
                (int)(std::find(sons.begin(), sons.end(), up[i]) - sons.begin()));
        }
        mark = addr;
    }

    MarkedSequence ms;
    for (int i = 0; i < l; ++i) ms.seq.push_back(tuples[(start + i) % l]);
    ms.mark = mark;
    return {tr.k, ms};
}

// ---------------------------------------------------------------------------
// compose (the geometric unpruning direction)
// ---------------------------------------------------------------------------

namespace {

/// A materialized window of the infinite strip: several periods of columns
/// with explicit integer spans. Inserts are applied to every copy so the
/// window stays periodic away from its edges; slot lookups happen near the
/// central copy.
class Window {
public:
    struct Rec {
        Color color = Color::Black;
        int x = -1;     // window column index (terminal column for rows)
        int level = -1; // terminal level, rows only
    };

    Window(int k, int l, int copies, Conventions conv)
        : conv_(conv), w_(l), d_(l), copies_(copies), c0_(copies / 2) {
        for (int x = 0; x < copies * l; ++x) cols_.push_back({x + 1, x + k + 1});
        for (int i = 0; i < l; ++i) recs_.push_back({Color::Black, c0_ * l + i, -1});
        for (int i = 0; i < l; ++i)
            recs_.push_back({Color::White, c0_ * l + i, c0_ * l + i + 1});
    }

    Rec rec(int id) const { return recs_[id]; }

    ColumnSpan span(int x) const {
        if (x < 1 || x >= (int)cols_.size() - 1)
            fail(Errc::Overflow, "strip window too small");
        return cols_[x];
    }

    int run_start(int termX, int level) const {
        int x = termX;
        while (span(x - 1).contains(level)) --x;
        return x;
    }

    /// The column of the class of `classRec` whose top lies in the run
    /// ending at (termX, level); the cycle son of a white vertex may sit in
    /// a neighboring copy.
    int class_instance_in_run(int classRec, int termX, int level) const {
        int start = run_start(termX, level);
        for (int x = termX; x >= start; --x)
            if ((x - recs_[classRec].x) % w_ == 0 && span(x).top == level) return x;
        fail(Errc::InvalidMark, "cycle son has no top in its run");
    }

    /// New column whose top joins the run at `level`, in the slot between
    /// window columns y and y+1. Returns the record id.
    int insert_column(int y, int level) {
        if (span(y).top > level) fail(Errc::InvalidMark, "column insert would lower a top");
        if (!(span(y + 1).bottom <= level && level <= span(y + 1).top))
            fail(Errc::InvalidMark, "column insert does not touch its run");
        int newRec = -1;
        for (int c = copies_ - 1; c >= 0; --c) {
            long long idx = (long long)y + 1 + (long long)(c - c0_) * w_;
            if (idx < 1 || idx >= (long long)cols_.size()) continue;
            ColumnSpan nspan{cols_[idx].bottom, level + (c - c0_) * d_};
            for (Rec& r : recs_)
                if (r.x >= idx) ++r.x;
            cols_.insert(cols_.begin() + idx, nspan);
            if (c == c0_) {
                newRec = (int)recs_.size();
                recs_.push_back({Color::Black, (int)idx, -1});
            }
        }
        ++w_;
        return newRec;
    }

    /// New row ending at column x: in the gap just above `lambda` (a son's
    /// terminal level) or, with bottomSlot, below the column's bottom cell.
    /// The row runs leftward through every column straddling the gap and
    /// extends, as a new bottom cell, every column whose bottom sits right
    /// above it. Returns the record id.
    int insert_row(int x, int lambda, bool bottomSlot) {
        if (bottomSlot) {
            lambda = span(x).bottom - 1;
        } else {
            if (!(span(x).bottom <= lambda && lambda < span(x).top))
                fail(Errc::InvalidMark, "row insert would move a column top");
        }
        int newRec = -1;
        for (int c = copies_ - 1; c >= 0; --c) {
            long long lam = (long long)lambda + (long long)(c - c0_) * d_;
            long long xc = (long long)x + (long long)(c - c0_) * w_;
            // columns gaining the new cell as their new bottom
            std::vector<long long> extended;
            for (long long xw = xc; xw >= 1 && xw < (long long)cols_.size() - 1; --xw) {
                const ColumnSpan& col = cols_[xw];
                if (col.top <= lam || col.bottom > lam + 1) break;
                if (col.bottom == lam + 1) extended.push_back(xw);
            }
            for (ColumnSpan& col : cols_) {
                if (col.bottom > lam) ++col.bottom;
                if (col.top > lam) ++col.top;
            }
            for (long long xw : extended) --cols_[xw].bottom;
            for (Rec& r : recs_)
                if (r.color == Color::White && r.level > lam) ++r.level;
            if (c == c0_) {
                newRec = (int)recs_.size();
                recs_.push_back({Color::White, x, (int)lam + 1});
            }
        }
        ++d_;
        return newRec;
    }

    Ppp cut_at(int xm) const {
        ColumnSpan first = span(xm);
        int markLevel = conv_.seam == Seam::AboveTop ? span(xm - 1).top + 1 : span(xm - 1).top;
        if (!first.contains(markLevel))
            fail(Errc::InvalidMark, "the marked column carries no admissible seam mark");
        Pp pp;
        for (int j = 0; j < w_; ++j) {
            ColumnSpan col = span(xm + j);
            pp.cols.push_back({col.bottom - first.bottom + 1, col.top - first.bottom + 1});
        }
        int mark = markLevel - first.bottom + 1;
        try {
            return make_ppp(std::move(pp), mark);
        } catch (const Error& e) {
            fail(Errc::InvalidMark, std::string("marked cut is not a valid PPP: ") + e.what());
        }
    }

private:
    Conventions conv_;
    int w_, d_, copies_, c0_;
    std::vector<ColumnSpan> cols_;
    std::vector<Rec> recs_;
};

/// Grafts the pendant trees of the sequence onto the trunk window: parents
/// before children, brothers from biggest to smallest. Each new vertex is
/// inserted directly against its anchor (the cycle son, the previous
/// brother, or the parent's own run start / column bottom), which realizes
/// the required brother order.
class Grafter {
public:
    Grafter(Window& win, int l, int k) : win_(win), l_(l), k_(k) {}

    void attach(int tuple, const FourTuple& ft) {
        int blackRec = tuple, whiteRec = l_ + tuple;
        for (size_t j = 0; j < ft.t[0].kids.size(); ++j)
            graft_row(ft.t[0].kids[j], blackRec, whiteRec, addr(tuple, 0, (int)j));
        for (size_t j = 0; j < ft.t[1].kids.size(); ++j)
            graft_row(ft.t[1].kids[j], blackRec, -1, addr(tuple, 1, (int)j));
        int csClass = ((tuple - k_) % l_ + l_) % l_;
        for (size_t j = 0; j < ft.t[2].kids.size(); ++j) {
            Window::Rec w = win_.rec(whiteRec);
            int csX = win_.class_instance_in_run(csClass, w.x, w.level);
            graft_column(ft.t[2].kids[j], whiteRec, csX, false, addr(tuple, 2, (int)j));
        }
        for (size_t j = 0; j < ft.t[3].kids.size(); ++j) {
            Window::Rec w = win_.rec(whiteRec);
            int anchor = j == 0 ? win_.class_instance_in_run(csClass, w.x, w.level)
                                : win_.rec(lastSmallerKid_).x;
            graft_column(ft.t[3].kids[j], whiteRec, anchor, true, addr(tuple, 3, (int)j));
        }
    }

    int resolve(const MarkAddress& m) const {
        auto it = tuple0_nodes_.find(address_key(m.slot, m.path));
        return it == tuple0_nodes_.end() ? -1 : it->second;
    }

private:
    Window& win_;
    int l_, k_;
    std::map<std::string, int> tuple0_nodes_;
    int lastSmallerKid_ = -1; // most recent t4-side kid of the current tuple

    struct Addr {
        bool tracked = false;
        int slot = 0;
        std::vector<int> path;
    };

    Addr addr(int tuple, int slot, int idx) const {
        Addr a;
        if (tuple == 0) {
            a.tracked = true;
            a.slot = slot;
            a.path = {idx};
        }
        return a;
    }

    static std::string address_key(int slot, const std::vector<int>& path) {
        std::string s = std::to_string(slot);
        for (int i : path) s += "." + std::to_string(i);
        return s;
    }

    void remember(const Addr& a, int rec) {
        if (a.tracked) tuple0_nodes_[address_key(a.slot, a.path)] = rec;
    }

    Addr extend(const Addr& a, int idx) const {
        Addr b = a;
        if (b.tracked) b.path.push_back(idx);
        return b;
    }

    /// New row ending at the parent column. With an anchor white the row
    /// goes directly above the anchor's terminal; otherwise it goes below
    /// the column's bottom (which also realizes "below all brothers").
    int graft_row(const OrderedTree& node, int parentRec, int anchorWhiteRec, const Addr& a) {
        int px = win_.rec(parentRec).x;
        int rec = anchorWhiteRec >= 0
                      ? win_.insert_row(px, win_.rec(anchorWhiteRec).level, false)
                      : win_.insert_row(px, 0, true);
        remember(a, rec);
        int prevKid = -1;
        for (size_t j = 0; j < node.kids.size(); ++j) {
            Window::Rec r = win_.rec(rec);
            // kids extend the run leftward: the first against the run start,
            // the rest against their bigger brother
            int anchorX = j == 0 ? win_.run_start(r.x, r.level) : win_.rec(prevKid).x;
            prevKid = graft_column(node.kids[j], rec, anchorX, true, extend(a, (int)j));
        }
        return rec;
    }

    /// New column with its top in the parent row's run: directly left of the
    /// anchor (smallerSide or first kid at the run start) or directly right
    /// of it (the greater side of a cycle vertex).
    int graft_column(const OrderedTree& node, int parentRec, int anchorX, bool smallerSide,
                     const Addr& a) {
        int level = win_.rec(parentRec).level;
        int rec = smallerSide ? win_.insert_column(anchorX - 1, level)
                              : win_.insert_column(anchorX, level);
        remember(a, rec);
        lastSmallerKid_ = rec;
        for (size_t j = 0; j < node.kids.size(); ++j)
            graft_row(node.kids[j], rec, -1, extend(a, (int)j));
        lastSmallerKid_ = rec;
        return rec;
    }
};

} // namespace

Ppp compose(int k, const MarkedSequence& ms, const Conventions& conv) {
    int l = (int)ms.seq.size();
    if (l < 1) fail(Errc::InvalidMark, "empty tuple sequence");
    if (k < 0) fail(Errc::InvalidMark, "negative thickness");
    if (k == 0 && (l > 1 || conv.seam == Seam::TopAligned))
        fail(Errc::InvalidMark, "thickness 0 only yields a single-cell trunk");

    int nodes = 0;
    for (const FourTuple& ft : ms.seq) {
        TupleWeight tw = tuple_weight(ft);
        nodes += tw.blacks + tw.whites;
    }
    int copies = 2 * (nodes + k + 8) + 1;
    Window win(k, l, copies, conv);
    Grafter grafter(win, l, k);
    for (int i = 0; i < l; ++i) grafter.attach(i, ms.seq[i]);

    int markRec = 0; // the black cycle vertex of the first tuple
    if (ms.mark) {
        markRec = grafter.resolve(*ms.mark);
        if (markRec < 0) fail(Errc::InvalidMark, "mark address does not resolve");
        if (win.rec(markRec).color != Color::Black)
            fail(Errc::InvalidMark, "mark address is not a black vertex");
    }
    return win.cut_at(win.rec(markRec).x);
}

std::pair<int, Necklace> strip_necklace(const Ppp& p, const Conventions& conv) {
    Decomposition d = decompose(p, conv);
    return {d.k, canonical_necklace(d.ms.seq)};
}

} // namespace ppp
