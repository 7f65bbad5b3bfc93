#include "ppp/forest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ppp {

ForestDiagnostics validate_forest(const OrderedCyclicForest& f) {
    ForestDiagnostics diag;
    auto problem = [&](const std::string& p) {
        diag.ok = false;
        diag.problems.push_back(p);
    };
    int n = f.size();
    for (int i = 0; i < n; ++i) {
        int fa = f.v[i].father;
        if (fa < 0 || fa >= n) {
            problem("vertex " + std::to_string(i) + " has no father");
            continue;
        }
        if (fa == i) problem("vertex " + std::to_string(i) + " is its own father");
        if (f.v[fa].color == f.v[i].color)
            problem("father edge " + std::to_string(i) + "->" + std::to_string(fa) +
                    " does not flip color");
    }
    if (!diag.ok) return diag;
    // sons must be exactly the fibers of father
    for (int i = 0; i < n; ++i) {
        std::multiset<int> fiber, listed(f.v[i].sons.begin(), f.v[i].sons.end());
        for (int j = 0; j < n; ++j)
            if (f.v[j].father == i) fiber.insert(j);
        if (fiber != listed) problem("sons of " + std::to_string(i) + " are not the father fiber");
    }
    // every component has exactly one cycle; with a total father map this is
    // equivalent to: each component's cycle count is one
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] != -1) continue;
        // walk up until a visited vertex, then flood the component id
        std::vector<int> path;
        int x = i;
        while (comp[x] == -1) {
            comp[x] = -2; // in progress
            path.push_back(x);
            x = f.v[x].father;
        }
        int id = comp[x] >= 0 ? comp[x] : ncomp++;
        for (int y : path) comp[y] = id;
    }
    int ncycles = (int)cycles(f).size();
    if (ncycles != ncomp)
        problem("found " + std::to_string(ncycles) + " cycles in " + std::to_string(ncomp) +
                " components");
    return diag;
}

std::vector<std::vector<int>> cycles(const OrderedCyclicForest& f) {
    int n = f.size();
    std::vector<int> state(n, 0); // 0 unseen, 1 in progress, 2 done
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (state[i]) continue;
        std::vector<int> path;
        int x = i;
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = f.v[x].father;
        }
        if (state[x] == 1) {
            // found a new cycle; extract it from the path
            auto it = std::find(path.begin(), path.end(), x);
            std::vector<int> cyc(it, path.end());
            auto least = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), least, cyc.end());
            out.push_back(std::move(cyc));
        }
        for (int y : path) state[y] = 2;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

std::vector<char> on_cycle_flags(const OrderedCyclicForest& f) {
    std::vector<char> flags(f.size(), 0);
    for (const auto& cyc : cycles(f))
        for (int v : cyc) flags[v] = 1;
    return flags;
}

PhiResult to_forest(const Ppp& p, const Conventions& conv) {
    if (is_degenerate(p, conv))
        fail(Errc::DegeneratedInput, "the forest map excludes degenerated PPPs");
    std::vector<std::vector<int>> chains = cylinder_rows(p, conv);
    int w = p.width();
    int rows = p.pp.rows();

    std::vector<int> chain_of_level(rows + 1, -1), pos_in_chain(rows + 1, -1);
    for (size_t ci = 0; ci < chains.size(); ++ci)
        for (size_t k = 0; k < chains[ci].size(); ++k) {
            chain_of_level[chains[ci][k]] = (int)ci;
            pos_in_chain[chains[ci][k]] = (int)k;
        }

    auto last_col_of_level = [&](int level) {
        int j = w - 1;
        while (j >= 0 && p.pp.cols[j].bottom > level) --j;
        return j;
    };

    PhiResult res;
    res.blacks = w;
    OrderedCyclicForest& f = res.mf.forest;
    f.v.resize(w + chains.size());
    for (int j = 0; j < w; ++j) {
        f.v[j].color = Color::Black;
        f.v[j].father = w + chain_of_level[p.pp.cols[j].top];
        res.black_column.push_back(j);
    }
    for (size_t ci = 0; ci < chains.size(); ++ci) {
        int vtx = w + (int)ci;
        f.v[vtx].color = Color::White;
        int terminal = chains[ci].back();
        f.v[vtx].father = last_col_of_level(terminal);
        res.white_chain.push_back(chains[ci]);
    }
    // son lists, biggest first: for whites, position along the chain then
    // column; for blacks, terminal level of the row
    for (int j = 0; j < w; ++j) f.v[f.v[j].father].sons.push_back(j);
    for (size_t ci = 0; ci < chains.size(); ++ci) f.v[f.v[w + (int)ci].father].sons.push_back(w + (int)ci);
    for (int i = 0; i < f.size(); ++i) {
        auto& sons = f.v[i].sons;
        if (f.v[i].color == Color::White) {
            std::sort(sons.begin(), sons.end(), [&](int a, int b) {
                int la = p.pp.cols[a].top, lb = p.pp.cols[b].top;
                if (pos_in_chain[la] != pos_in_chain[lb]) return pos_in_chain[la] > pos_in_chain[lb];
                return a > b;
            });
        } else {
            std::sort(sons.begin(), sons.end(), [&](int a, int b) {
                return res.white_chain[a - w].back() > res.white_chain[b - w].back();
            });
        }
    }
    res.mf.mark = 0;
    return res;
}

PruneResult prune(const MarkedForest& mf) {
    PruneResult r;
    r.forest = mf.forest;
    r.mark = mf.mark;
    r.alive.assign(mf.forest.size(), 1);
    std::vector<char> cyc = on_cycle_flags(mf.forest);
    while (true) {
        int leaf = -1;
        for (int i = 0; i < r.forest.size(); ++i) {
            if (r.alive[i] && !cyc[i] && r.forest.v[i].sons.empty()) {
                leaf = i;
                break;
            }
        }
        if (leaf == -1) break;
        int fa = r.forest.v[leaf].father;
        auto& sons = r.forest.v[fa].sons;
        int pos = (int)(std::find(sons.begin(), sons.end(), leaf) - sons.begin());
        sons.erase(sons.begin() + pos);
        r.alive[leaf] = 0;
        r.log.push_back({leaf, fa, pos, r.forest.v[leaf].color});
    }
    return r;
}

MarkedForest unprune(PruneResult pruned) {
    for (auto it = pruned.log.rbegin(); it != pruned.log.rend(); ++it) {
        auto& sons = pruned.forest.v[it->father].sons;
        sons.insert(sons.begin() + it->position, it->vertex);
        pruned.alive[it->vertex] = 1;
    }
    return {pruned.forest, pruned.mark};
}

OrderedCyclicForest alive_subforest(const PruneResult& pruned) {
    std::vector<int> newid(pruned.forest.size(), -1);
    int n = 0;
    for (int i = 0; i < pruned.forest.size(); ++i)
        if (pruned.alive[i]) newid[i] = n++;
    OrderedCyclicForest out;
    out.v.resize(n);
    for (int i = 0; i < pruned.forest.size(); ++i) {
        if (!pruned.alive[i]) continue;
        auto& dst = out.v[newid[i]];
        dst.color = pruned.forest.v[i].color;
        dst.father = newid[pruned.forest.v[i].father];
        for (int s : pruned.forest.v[i].sons) dst.sons.push_back(newid[s]);
    }
    return out;
}

Ppp trunk_ppp(int k, int l, const Conventions& conv) {
    Pp pp;
    for (int j = 0; j < l; ++j) pp.cols.push_back({j + 1, j + k + 1});
    int mark = conv.seam == Seam::AboveTop ? k + 1 : k;
    return make_ppp(std::move(pp), mark);
}

TrunkResult prune_to_trunk(const Ppp& p, const Conventions& conv) {
    TrunkResult res;
    res.phi = to_forest(p, conv);
    res.pruned = prune(res.phi.mf);

    int w = p.width();
    std::vector<char> col_alive(w, 1);
    std::vector<char> level_alive(p.pp.rows() + 1, 1);
    for (const Removal& rm : res.pruned.log) {
        if (rm.role == Color::Black) {
            col_alive[res.phi.black_column[rm.vertex]] = 0;
        } else {
            for (int level : res.phi.white_chain[rm.vertex - res.phi.blacks]) level_alive[level] = 0;
        }
    }
    std::vector<int> level_rank(p.pp.rows() + 1, 0);
    int rank = 0;
    for (int level = 1; level <= p.pp.rows(); ++level) {
        if (level_alive[level]) ++rank;
        level_rank[level] = rank;
    }
    Pp shape;
    for (int j = 0; j < w; ++j) {
        if (!col_alive[j]) continue;
        int lo = p.pp.cols[j].bottom, hi = p.pp.cols[j].top;
        while (lo <= hi && !level_alive[lo]) ++lo;
        while (hi >= lo && !level_alive[hi]) --hi;
        if (lo > hi)
            fail(Errc::TrunkShapeMismatch, "pruning emptied column " + std::to_string(j));
        shape.cols.push_back({level_rank[lo], level_rank[hi]});
        res.surviving_columns.push_back(j);
    }
    int base = shape.cols.front().bottom - 1;
    for (ColumnSpan& col : shape.cols) {
        col.bottom -= base;
        col.top -= base;
    }

    int l = shape.width();
    int k = shape.cols.front().size() - 1;
    for (int j = 0; j < l; ++j) {
        if (shape.cols[j].bottom != j + 1 || shape.cols[j].top != j + k + 1)
            fail(Errc::TrunkShapeMismatch, "pruning fixed point " + encode({shape, 1}) +
                                               " is not a staircase");
    }
    if (conv.seam == Seam::TopAligned && k < 1)
        fail(Errc::TrunkShapeMismatch, "top-aligned trunk needs k >= 1");
    res.k = k;
    res.l = l;
    res.trunk = trunk_ppp(k, l, conv);
    return res;
}

int intrinsic_thickness(const Ppp& p, const Conventions& conv) {
    return prune_to_trunk(p, conv).k;
}

namespace {

std::string vertex_text(const OrderedCyclicForest& f, int vtx, int mark,
                        const std::vector<char>& cyc) {
    std::string s(1, f.v[vtx].color == Color::Black ? 'B' : 'W');
    if (vtx == mark) s.push_back('!');
    s.push_back('(');
    for (int son : f.v[vtx].sons) {
        if (cyc[son]) continue; // the cycle itself is rendered by the group
        s += vertex_text(f, son, mark, cyc);
    }
    s.push_back(')');
    return s;
}

} // namespace

std::string encode(const OrderedCyclicForest& f, int mark) {
    std::vector<char> cyc = on_cycle_flags(f);
    std::vector<std::string> groups;
    for (const auto& cycle : cycles(f)) {
        // canonical rotation of the cycle rendering
        std::vector<std::string> parts;
        for (int v : cycle) parts.push_back(vertex_text(f, v, mark, cyc));
        std::string best;
        for (size_t r = 0; r < parts.size(); ++r) {
            std::string cand = "(";
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) cand.push_back(' ');
                cand += parts[(r + i) % parts.size()];
            }
            cand += ")*";
            if (best.empty() || cand < best) best = cand;
        }
        groups.push_back(best);
    }
    std::sort(groups.begin(), groups.end());
    std::string out;
    for (size_t i = 0; i < groups.size(); ++i) {
        if (i) out.push_back(' ');
        out += groups[i];
    }
    return out;
}

bool isomorphic_unmarked(const OrderedCyclicForest& a, const OrderedCyclicForest& b) {
    return encode(a) == encode(b);
}

} // namespace ppp
