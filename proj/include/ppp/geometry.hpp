#ifndef PPP_GEOMETRY_HPP
#define PPP_GEOMETRY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppp/errors.hpp"

namespace ppp {

/// One column of a parallelogram polyomino: the cells at levels
/// bottom..top inclusive. Levels are 1-based.
struct ColumnSpan {
    int bottom = 1;
    int top = 1;
    int size() const { return top - bottom + 1; }
    bool contains(int level) const { return bottom <= level && level <= top; }
    bool operator==(const ColumnSpan&) const = default;
};

/// Parallelogram polyomino in column-interval form. Invariants: bottoms and
/// tops weakly increase, adjacent columns overlap, first bottom is 1.
struct Pp {
    std::vector<ColumnSpan> cols;

    int width() const { return (int)cols.size(); }
    int rows() const { return cols.back().top; } // normalized, so min level is 1
    bool operator==(const Pp&) const = default;
};

/// Validates the Pp invariants; throws Errc::InvariantViolation.
void validate(const Pp& pp);

/// Periodic parallelogram polyomino: a Pp plus the marked cell height in the
/// first column (1-based from its bottom; equals the level since bottom = 1).
struct Ppp {
    Pp pp;
    int mark = 1; // admissible: mark <= size of last column

    int width() const { return pp.width(); }
    int mark_level() const { return mark; }
    bool operator==(const Ppp&) const = default;
};

enum class Seam { AboveTop, TopAligned };
enum class HeightRule { GeqMark, GtMark };
enum class Degeneracy { RectTop, FlatTop };

/// Switches resolving the seam/height/degeneracy ambiguities. The defaults
/// reproduce the trunk chain structure used by the forest pipeline.
struct Conventions {
    Seam seam = Seam::AboveTop;
    HeightRule height = HeightRule::GeqMark;
    Degeneracy degeneracy = Degeneracy::RectTop;
    bool operator==(const Conventions&) const = default;
};

std::string to_string(const Conventions& c);
Conventions conventions_from_string(std::string_view s);
std::vector<Conventions> all_conventions();

/// Builds the column representation from the two boundary paths.
Pp pp_from_paths(std::string_view upper, std::string_view lower);
/// The boundary paths of a Pp; round-trips with pp_from_paths.
std::pair<std::string, std::string> pp_to_paths(const Pp& pp);

Ppp make_ppp(Pp pp, int mark);

/// Vertical shift of the strip per period: the next copy of the polyomino
/// is glued this many levels up.
int seam_shift(const Ppp& p, const Conventions& conv);

/// Pairs (lastColumnLevel, firstColumnLevel): the row ending at the last
/// column at the first level continues as the row starting at the second
/// level of the next copy. Ordered by descending last-column level.
std::vector<std::pair<int, int>> seam_links(const Ppp& p, const Conventions& conv);

/// Maximal chains of PP row levels merged across the seam, each listed in
/// decreasing level order; ordered by descending first level. Throws
/// Errc::SpiralRow when a link closes a cycle.
std::vector<std::vector<int>> cylinder_rows(const Ppp& p, const Conventions& conv);

struct PppStats {
    int width = 0;
    int height = 0;
    int semi_perimeter = 0;
    bool operator==(const PppStats&) const = default;
};

PppStats stats(const Ppp& p, const Conventions& conv);

bool is_degenerate(const Ppp& p, const Conventions& conv);

/// Moves the first column to the last position along the strip and re-marks
/// the new first column at the seam level. Width 1 is the identity. Throws
/// Errc::InvalidRotation when the shifted cut carries no valid mark.
Ppp rotated(const Ppp& p, const Conventions& conv);

/// Cut of the infinite strip of p starting at column index x (mod width);
/// nullopt when the mark of that cut is not realizable.
std::optional<Ppp> strip_cut(const Ppp& p, const Conventions& conv, int x);

struct OrbitInfo {
    std::string representative; // lexicographically least encoding
    int size = 0;               // distinct PPPs generating the same strip
};

OrbitInfo strip_orbit(const Ppp& p, const Conventions& conv);

/// '#' cells, '@' marked cell, top level first.
std::string render_ascii(const Ppp& p);

/// "PPP1:<b>..<t>[,<b>..<t>]*;m=<h>"
std::string encode(const Ppp& p);
Ppp decode(std::string_view text);

} // namespace ppp

#endif
