#ifndef PPP_FOREST_HPP
#define PPP_FOREST_HPP

#include <string>
#include <vector>

#include "ppp/geometry.hpp"

namespace ppp {

enum class Color { Black, White }; // black = column role, white = row role

/// Functional graph with one cycle per component, bipartite between black
/// and white vertices, with totally ordered son lists (biggest first:
/// "at the right or above").
struct OrderedCyclicForest {
    struct Vertex {
        Color color = Color::Black;
        int father = -1;
        std::vector<int> sons; // descending order
    };
    std::vector<Vertex> v;

    int size() const { return (int)v.size(); }
};

struct MarkedForest {
    OrderedCyclicForest forest;
    int mark = 0; // a black vertex
};

struct ForestDiagnostics {
    bool ok = true;
    std::vector<std::string> problems;
};

ForestDiagnostics validate_forest(const OrderedCyclicForest& f);

/// One cycle per component, each rotated to start at its least vertex id,
/// ordered by that id. Cycle entries follow the father map.
std::vector<std::vector<int>> cycles(const OrderedCyclicForest& f);

std::vector<char> on_cycle_flags(const OrderedCyclicForest& f);

/// Forest of a PPP: black vertices are columns, white vertices cylinder
/// rows; father links per the topmost/rightmost cell rules.
struct PhiResult {
    MarkedForest mf;
    std::vector<int> black_column;           // black vertex -> column index
    std::vector<std::vector<int>> white_chain; // white vertex -> chain levels
    int blacks = 0;

    bool is_black(int vtx) const { return vtx < blacks; }
};

PhiResult to_forest(const Ppp& p, const Conventions& conv);

struct Removal {
    int vertex = -1;
    int father = -1;
    int position = 0; // index among the father's sons at removal time
    Color role = Color::Black;
};
using RemovalLog = std::vector<Removal>;

/// Forest after leaf pruning. Vertex ids are stable; removed vertices keep
/// their slot but are detached. Replaying the log in reverse restores the
/// input exactly.
struct PruneResult {
    OrderedCyclicForest forest;
    std::vector<char> alive;
    RemovalLog log;
    int mark = 0;
};

PruneResult prune(const MarkedForest& mf);
MarkedForest unprune(PruneResult pruned);

/// Compact copy of the alive part (ids renumbered, order preserved).
OrderedCyclicForest alive_subforest(const PruneResult& pruned);

/// Trunk of a PPP: prunes the forest and mirrors each removal on the
/// polyomino. The fixed point is the staircase with upper path N^k (NE)^l.
struct TrunkResult {
    Ppp trunk;
    int k = 0;
    int l = 0;
    std::vector<int> surviving_columns; // original column indices, in order
    PhiResult phi;                      // forest of the input
    PruneResult pruned;
};

TrunkResult prune_to_trunk(const Ppp& p, const Conventions& conv);

/// The k of the trunk decomposition.
int intrinsic_thickness(const Ppp& p, const Conventions& conv);

/// The staircase trunk geometry for parameters (k, l) under a convention:
/// upper path N^k (NE)^l, lower path (EN)^l N^k, marked at the seam level.
Ppp trunk_ppp(int k, int l, const Conventions& conv);

/// Deterministic text form: one "(v1 v2 ...)*" group per cycle with pendant
/// subtrees in parentheses, colors prefixed B/W, mark suffixed '!'.
std::string encode(const OrderedCyclicForest& f, int mark = -1);

bool isomorphic_unmarked(const OrderedCyclicForest& a, const OrderedCyclicForest& b);

} // namespace ppp

#endif
