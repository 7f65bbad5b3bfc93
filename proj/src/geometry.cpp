#include "ppp/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ppp {

void validate(const Pp& pp) {
    if (pp.cols.empty()) fail(Errc::InvariantViolation, "a polyomino needs at least one column");
    if (pp.cols[0].bottom != 1) fail(Errc::InvariantViolation, "first bottom must be 1");
    for (size_t j = 0; j < pp.cols.size(); ++j) {
        if (pp.cols[j].bottom > pp.cols[j].top)
            fail(Errc::InvariantViolation, "empty column " + std::to_string(j));
        if (j > 0) {
            if (pp.cols[j].bottom < pp.cols[j - 1].bottom)
                fail(Errc::InvariantViolation, "bottoms must weakly increase");
            if (pp.cols[j].top < pp.cols[j - 1].top)
                fail(Errc::InvariantViolation, "tops must weakly increase");
            if (pp.cols[j].bottom > pp.cols[j - 1].top)
                fail(Errc::InvariantViolation, "gap between columns " + std::to_string(j - 1) +
                                                   " and " + std::to_string(j));
        }
    }
}

std::string to_string(const Conventions& c) {
    std::string s = "seam=";
    s += c.seam == Seam::AboveTop ? "above_top" : "top_aligned";
    s += ",height=";
    s += c.height == HeightRule::GeqMark ? "geq_mark" : "gt_mark";
    s += ",degeneracy=";
    s += c.degeneracy == Degeneracy::RectTop ? "rect_top" : "flat_top";
    return s;
}

Conventions conventions_from_string(std::string_view s) {
    Conventions c;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = s.find(',', pos);
        if (end == std::string_view::npos) end = s.size();
        std::string_view item = s.substr(pos, end - pos);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos) fail(Errc::ParseError, "expected key=value in conventions");
        std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "seam") {
            if (val == "above_top") c.seam = Seam::AboveTop;
            else if (val == "top_aligned") c.seam = Seam::TopAligned;
            else fail(Errc::ParseError, "unknown seam value");
        } else if (key == "height") {
            if (val == "geq_mark") c.height = HeightRule::GeqMark;
            else if (val == "gt_mark") c.height = HeightRule::GtMark;
            else fail(Errc::ParseError, "unknown height value");
        } else if (key == "degeneracy") {
            if (val == "rect_top") c.degeneracy = Degeneracy::RectTop;
            else if (val == "flat_top") c.degeneracy = Degeneracy::FlatTop;
            else fail(Errc::ParseError, "unknown degeneracy value");
        } else {
            fail(Errc::ParseError, "unknown conventions key");
        }
        pos = end + 1;
    }
    return c;
}

std::vector<Conventions> all_conventions() {
    std::vector<Conventions> out;
    for (Seam s : {Seam::AboveTop, Seam::TopAligned})
        for (HeightRule h : {HeightRule::GeqMark, HeightRule::GtMark})
            for (Degeneracy d : {Degeneracy::RectTop, Degeneracy::FlatTop})
                out.push_back({s, h, d});
    return out;
}

Pp pp_from_paths(std::string_view upper, std::string_view lower) {
    auto count_steps = [](std::string_view path) {
        int n = 0, e = 0;
        for (char ch : path) {
            if (ch == 'N') ++n;
            else if (ch == 'E') ++e;
            else fail(Errc::ParseError, "path steps must be N or E");
        }
        return std::pair<int, int>{n, e};
    };
    auto [un, ue] = count_steps(upper);
    auto [ln, le] = count_steps(lower);
    if (un != ln || ue != le) fail(Errc::EndpointMismatch, "paths end at different points");
    if (ue == 0 || un == 0) fail(Errc::PathsCross, "paths coincide");

    // tops: height before each E of the upper path; bottoms: height before
    // each E of the lower path, plus one
    std::vector<int> tops, bottoms;
    int h = 0;
    for (char ch : upper) {
        if (ch == 'N') ++h;
        else tops.push_back(h);
    }
    if (h != tops.back()) fail(Errc::PathsCross, "paths share their final segment");
    h = 0;
    for (char ch : lower) {
        if (ch == 'N') ++h;
        else bottoms.push_back(h + 1);
    }
    if (bottoms[0] != 1) fail(Errc::PathsCross, "paths share their initial segment");

    Pp pp;
    for (size_t j = 0; j < tops.size(); ++j) pp.cols.push_back({bottoms[j], tops[j]});
    try {
        validate(pp);
    } catch (const Error&) {
        fail(Errc::PathsCross, "paths meet strictly between their endpoints");
    }
    return pp;
}

std::pair<std::string, std::string> pp_to_paths(const Pp& pp) {
    std::string upper, lower;
    int h = 0;
    for (const ColumnSpan& col : pp.cols) {
        upper.append(col.top - h, 'N');
        upper.push_back('E');
        h = col.top;
    }
    h = 0;
    for (const ColumnSpan& col : pp.cols) {
        lower.append(col.bottom - 1 - h, 'N');
        lower.push_back('E');
        h = col.bottom - 1;
    }
    lower.append(pp.rows() - h, 'N');
    return {upper, lower};
}

Ppp make_ppp(Pp pp, int mark) {
    validate(pp);
    if (mark < 1 || mark > pp.cols.front().size())
        fail(Errc::NotInFirstColumn, "mark height " + std::to_string(mark) +
                                         " outside the first column");
    if (mark > pp.cols.back().size())
        fail(Errc::NotAdmissible, "mark height " + std::to_string(mark) +
                                      " exceeds the last column size " +
                                      std::to_string(pp.cols.back().size()));
    return Ppp{std::move(pp), mark};
}

int seam_shift(const Ppp& p, const Conventions& conv) {
    int t = p.pp.cols.back().top;
    return conv.seam == Seam::AboveTop ? t + 1 - p.mark_level() : t - p.mark_level();
}

std::vector<std::pair<int, int>> seam_links(const Ppp& p, const Conventions& conv) {
    int d = seam_shift(p, conv);
    const ColumnSpan& first = p.pp.cols.front();
    const ColumnSpan& last = p.pp.cols.back();
    std::vector<std::pair<int, int>> links;
    for (int b = first.top; b >= first.bottom; --b) {
        int a = b + d;
        if (a >= last.bottom && a <= last.top) links.emplace_back(a, b);
    }
    return links;
}

std::vector<std::vector<int>> cylinder_rows(const Ppp& p, const Conventions& conv) {
    int rows = p.pp.rows();
    std::vector<int> next(rows + 1, 0);
    std::vector<char> is_target(rows + 1, 0);
    for (auto [a, b] : seam_links(p, conv)) {
        if (a == b) fail(Errc::SpiralRow, "seam link closes a one-row cycle");
        next[a] = b;
        is_target[b] = 1;
    }
    std::vector<std::vector<int>> chains;
    std::vector<char> seen(rows + 1, 0);
    for (int start = rows; start >= 1; --start) {
        if (is_target[start]) continue;
        std::vector<int> chain;
        for (int level = start; level != 0; level = next[level]) {
            chain.push_back(level);
            seen[level] = 1;
        }
        chains.push_back(std::move(chain));
    }
    for (int level = 1; level <= rows; ++level)
        if (!seen[level]) fail(Errc::SpiralRow, "seam links close a cycle through level " +
                                                    std::to_string(level));
    return chains;
}

PppStats stats(const Ppp& p, const Conventions& conv) {
    int rows = p.pp.rows();
    int m = p.mark_level();
    int height = conv.height == HeightRule::GeqMark ? rows - m + 1 : rows - m;
    return {p.width(), height, p.width() + height};
}

bool is_degenerate(const Ppp& p, const Conventions& conv) {
    if (conv.degeneracy == Degeneracy::FlatTop) return p.mark_level() == p.pp.cols.back().top;
    const ColumnSpan& first = p.pp.cols.front();
    for (const ColumnSpan& col : p.pp.cols)
        if (!(col == first)) return false;
    return p.mark == first.size();
}

namespace {

// Column span of the infinite strip at position x (x may be any integer).
ColumnSpan strip_span(const Ppp& p, int d, int x) {
    int w = p.width();
    int q = x >= 0 ? x / w : -((-x + w - 1) / w);
    int r = x - q * w;
    const ColumnSpan& base = p.pp.cols[r];
    return {base.bottom + q * d, base.top + q * d};
}

} // namespace

std::optional<Ppp> strip_cut(const Ppp& p, const Conventions& conv, int x) {
    int d = seam_shift(p, conv);
    int w = p.width();
    ColumnSpan firstCol = strip_span(p, d, x);
    ColumnSpan prevCol = strip_span(p, d, x - 1);
    int markLevel = conv.seam == Seam::AboveTop ? prevCol.top + 1 : prevCol.top;
    if (!firstCol.contains(markLevel)) return std::nullopt;
    Pp cut;
    for (int j = 0; j < w; ++j) {
        ColumnSpan col = strip_span(p, d, x + j);
        cut.cols.push_back({col.bottom - firstCol.bottom + 1, col.top - firstCol.bottom + 1});
    }
    int mark = markLevel - firstCol.bottom + 1;
    try {
        validate(cut);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (mark > cut.cols.back().size()) return std::nullopt;
    return Ppp{std::move(cut), mark};
}

Ppp rotated(const Ppp& p, const Conventions& conv) {
    if (is_degenerate(p, conv)) fail(Errc::DegeneratedInput, "rotation needs a non-degenerated PPP");
    if (p.width() == 1) return p;
    std::optional<Ppp> cut = strip_cut(p, conv, 1);
    if (!cut)
        fail(Errc::InvalidRotation, "the shifted cut of " + encode(p) +
                                        " carries no admissible mark under " + to_string(conv));
    return *cut;
}

OrbitInfo strip_orbit(const Ppp& p, const Conventions& conv) {
    if (is_degenerate(p, conv)) fail(Errc::DegeneratedInput, "orbits need a non-degenerated PPP");
    std::set<std::string> members;
    for (int x = 0; x < p.width(); ++x)
        if (std::optional<Ppp> cut = strip_cut(p, conv, x)) members.insert(encode(*cut));
    return {*members.begin(), (int)members.size()};
}

std::string render_ascii(const Ppp& p) {
    std::string out;
    for (int level = p.pp.rows(); level >= 1; --level) {
        std::string line;
        for (int j = 0; j < p.width(); ++j) {
            if (p.pp.cols[j].contains(level))
                line.push_back(j == 0 && level == p.mark_level() ? '@' : '#');
            else
                line.push_back(' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        if (level > 1) out.push_back('\n');
    }
    return out;
}

std::string encode(const Ppp& p) {
    std::ostringstream os;
    os << "PPP1:";
    for (size_t j = 0; j < p.pp.cols.size(); ++j) {
        if (j) os << ',';
        os << p.pp.cols[j].bottom << ".." << p.pp.cols[j].top;
    }
    os << ";m=" << p.mark;
    return os.str();
}

namespace {

int parse_int(std::string_view s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start || pos - start > 8) fail(Errc::ParseError, "expected a number");
    int v = 0;
    for (size_t i = start; i < pos; ++i) v = v * 10 + (s[i] - '0');
    return v;
}

void expect(std::string_view s, size_t& pos, std::string_view token) {
    if (s.substr(pos, token.size()) != token)
        fail(Errc::ParseError, "expected '" + std::string(token) + "'");
    pos += token.size();
}

} // namespace

Ppp decode(std::string_view text) {
    size_t pos = 0;
    expect(text, pos, "PPP1:");
    Pp pp;
    while (true) {
        int b = parse_int(text, pos);
        expect(text, pos, "..");
        int t = parse_int(text, pos);
        pp.cols.push_back({b, t});
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(text, pos, ";m=");
    int mark = parse_int(text, pos);
    if (pos != text.size()) fail(Errc::ParseError, "trailing characters");
    try {
        return make_ppp(std::move(pp), mark);
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        fail(Errc::InvariantViolation, e.what());
    }
}

} // namespace ppp
