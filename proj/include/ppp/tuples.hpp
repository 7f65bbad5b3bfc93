#ifndef PPP_TUPLES_HPP
#define PPP_TUPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ppp/forest.hpp"

namespace ppp {

/// Ordered tree; the root color is given by context and colors alternate
/// by depth. Only the shape is stored.
struct OrderedTree {
    std::vector<OrderedTree> kids;
    bool operator==(const OrderedTree&) const = default;
};

/// Two black-rooted trees (slots 0, 1) and two white-rooted trees (2, 3).
/// Slot 0 holds the black cycle vertex's sons above/right of its cycle son,
/// slot 1 the ones below/left; slots 2 and 3 likewise for the white vertex.
struct FourTuple {
    OrderedTree t[4];
    bool operator==(const FourTuple& o) const {
        return t[0] == o.t[0] && t[1] == o.t[1] && t[2] == o.t[2] && t[3] == o.t[3];
    }
};

struct TupleWeight {
    int blacks = 0;
    int whites = 0;
    bool operator==(const TupleWeight&) const = default;
};

/// (blacks, whites) including one black and one white root per tuple.
TupleWeight tuple_weight(const FourTuple& ft);

/// Address of a non-root black vertex: slot index then child-index path.
struct MarkAddress {
    int slot = 0;
    std::vector<int> path;
    bool operator==(const MarkAddress&) const = default;
};

/// Sequence of tuples with a mark in the first one; no mark address means
/// the two black roots are marked.
struct MarkedSequence {
    std::vector<FourTuple> seq;
    std::optional<MarkAddress> mark;
    bool operator==(const MarkedSequence&) const = default;
};

/// Rotation-canonical cyclic sequence of tuples.
struct Necklace {
    std::vector<FourTuple> tuples;
    bool operator==(const Necklace&) const = default;
};

std::string encode(const OrderedTree& t);
std::string encode(const FourTuple& ft);
std::string encode(const MarkedSequence& ms);
std::string encode(const Necklace& n);

/// Least rotation under the lexicographic order on tuple encodings.
Necklace canonical_necklace(const std::vector<FourTuple>& seq);

struct Decomposition {
    int k = 0;
    MarkedSequence ms;
};

/// Cuts the forest of p along its trunk cycles into one 4-tuple per trunk
/// column, ordered cyclically from the tuple holding the first column.
Decomposition decompose(const Ppp& p, const Conventions& conv);

/// Rebuilds the polyomino: trunk(k, l), grafted tuples, geometric unpruning,
/// then the cut at the marked vertex's column. Throws Errc::InvalidMark when
/// the marked cut is not realizable.
Ppp compose(int k, const MarkedSequence& ms, const Conventions& conv);

/// The strip invariant: thickness plus the rotation-canonical necklace.
std::pair<int, Necklace> strip_necklace(const Ppp& p, const Conventions& conv);

} // namespace ppp

#endif
