#include "rhombil/lattice.hpp"

#include "rhombil/errors.hpp"

#include <algorithm>
#include <vector>

namespace rhombil {

std::array<Cell, 3> neighbors(Cell c)
{
    if (c.up()) return {Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}};
    return {Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}, Cell{c.row - 1, c.col}};
}

bool adjacent(Cell a, Cell b)
{
    for (Cell n : neighbors(a))
        if (n == b) return true;
    return false;
}

Edge make_edge(Cell a, Cell b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Rational Region::weight(Cell a, Cell b) const
{
    auto it = weights.find(make_edge(a, b));
    return it == weights.end() ? Rational(1) : it->second;
}

std::size_t Region::up_count() const
{
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](Cell c) { return c.up(); }));
}

std::size_t Region::down_count() const { return cells.size() - up_count(); }

void Region::set_weight(Cell a, Cell b, const Rational& w)
{
    if (!contains(a) || !contains(b)) throw MissingCell("weight on a cell outside the region");
    if (!adjacent(a, b)) throw BadParameters("weight on a non-adjacent pair");
    if (w <= 0) throw BadParameters("weights must be positive");
    if (w == 1) weights.erase(make_edge(a, b));
    else weights[make_edge(a, b)] = w;
}

void Region::erase(Cell c)
{
    if (!cells.erase(c)) return;
    for (Cell n : neighbors(c)) weights.erase(make_edge(c, n));
}

namespace {

using Line = std::vector<int>;

// Cells between two boundary polylines given per lattice line 0..H.
void fill_band(Region& r, const Line& L, const Line& R, int row_offset = 0)
{
    for (std::size_t h = 0; h + 1 < L.size(); ++h) {
        int lo = std::min(L[h], L[h + 1]) + 1;
        int hi = std::max(R[h], R[h + 1]) - 1;
        for (int c = lo; c <= hi; ++c) r.cells.insert(Cell{static_cast<int>(h) + row_offset, c});
    }
}

// Up-pointing triangle of side n with apex on line h0 at abscissa p.
void remove_up_tri(Region& r, int h0, int p, int n)
{
    for (int j = 0; j < n; ++j)
        for (int c = p - j; c <= p + j; ++c) r.erase(Cell{h0 + j, c});
}

// Down-pointing triangle of side n whose top edge spans p..p+2n on line h0.
void remove_down_tri(Region& r, int h0, int p, int n)
{
    for (int j = 0; j < n; ++j)
        for (int c = p + 1 + j; c <= p + 2 * n - 1 - j; ++c) r.erase(Cell{h0 + j, c});
}

int zigzag(int h) { return h % 2 == 0 ? 0 : -1; }

const Rational kHalf(1, 2);

// Vertical lozenges (r,col)-(r+1,col) with an up cell on top, r in [r0, r1).
void weight_column(Region& reg, int col, int r0, int r1)
{
    for (int r = r0; r < r1; ++r) {
        Cell u{r, col}, d{r + 1, col};
        if (u.up() && reg.contains(u) && reg.contains(d)) reg.weights[make_edge(u, d)] = kHalf;
    }
}

enum class Trap { Q, Qp, K, Kp };

Region build_trapezoid(const HoleSeq& t, Trap kind)
{
    check_entries(t);
    if (t.size() % 2) throw OddLength("trapezoid needs an even-length sequence");
    const int E = static_cast<int>(seq_E(t)), O = static_cast<int>(seq_O(t));
    const bool k = kind == Trap::K || kind == Trap::Kp;
    const int H = 2 * E - (k ? 1 : 0);
    if (H < 0) throw BadParameters("K trapezoid needs E(t) >= 1");

    Region reg;
    Line L(H + 1), R(H + 1);
    for (int h = 0; h <= H; ++h) {
        L[h] = zigzag(h);
        R[h] = 2 * O + h;
    }
    fill_band(reg, L, R);
    int pos = 0;
    for (std::size_t i = 0; i < t.size(); i += 2) {
        pos += t[i];
        const int n = t[i + 1];
        if (n) remove_up_tri(reg, H - n, L[H] + 2 * pos + n, n);
        pos += n;
    }
    if (kind == Trap::Qp || kind == Trap::Kp)
        for (int r = 0; r < H; r += 2) weight_column(reg, 0, r, r + 1);

    RegionSpec s;
    s.family = kind == Trap::Q ? Family::Q : kind == Trap::Qp ? Family::Qp : kind == Trap::K ? Family::K : Family::Kp;
    s.seq = t;
    reg.spec = s;
    return reg;
}

Region build_halved_hexagon(int a, int b, int c, bool weighted)
{
    if (a > b) throw ParameterOrder("P: a=" + std::to_string(a) + " > b=" + std::to_string(b));
    if (a < 0 || c < 0) throw BadParameters("P: negative parameter");
    const int H = a + b;
    Line L(H + 1), R(H + 1);
    for (int h = 0; h <= H; ++h) {
        L[h] = h <= 2 * a ? zigzag(h) : h - 2 * a;
        R[h] = h <= b ? 2 * c + h : 2 * c + 2 * b - h;
    }
    Region reg;
    fill_band(reg, L, R);
    if (weighted)
        for (int r = 0; r < 2 * a; r += 2) weight_column(reg, 0, r, r + 1);
    RegionSpec s;
    s.family = weighted ? Family::Pp : Family::P;
    s.a = a, s.b = b, s.c = c;
    reg.spec = s;
    return reg;
}

HoleSeq h_holes(const HoleSeq& a)
{
    HoleSeq r = a;
    if (r.size() % 2) r.push_back(0);
    if (r.empty()) r = {0, 0};
    return r;
}

struct Pentagon {
    Line L, R;
    int hole_line = 0;
};

Pentagon h_pentagon(int m, int x, int y, int z, const HoleSeq& a, const GeometryConventions& g)
{
    if (m < 1 || m > 8) throw BadParameters("H family index " + std::to_string(m));
    if (x < 0 || y < 0 || z < 0) throw BadParameters("H: negative side parameter");
    check_entries(a);
    const HGeometry& hg = g.h[m - 1];
    const int E = static_cast<int>(seq_E(a)), O = static_cast<int>(seq_O(a));
    const int N = x + E;
    const int NE = y + z + 2 * O + hg.ne_delta;
    const int SE = y + z + 2 * E;
    if (NE < 0) throw BadParameters("H" + std::to_string(m) + ": negative northeastern side");
    const int Ht = NE + SE;
    Pentagon p;
    p.L.resize(Ht + 1);
    p.R.resize(Ht + 1);
    for (int h = 0; h <= Ht; ++h) {
        p.L[h] = zigzag(h);
        p.R[h] = h <= NE ? 2 * N + h : 2 * N + 2 * NE - h;
    }
    p.hole_line = Ht - (2 * z + 2 * E) + g.hole_level;
    return p;
}

} // namespace

Region build_P(int a, int b, int c) { return build_halved_hexagon(a, b, c, false); }
Region build_Pprime(int a, int b, int c) { return build_halved_hexagon(a, b, c, true); }
Region build_Q(const HoleSeq& t) { return build_trapezoid(t, Trap::Q); }
Region build_Qprime(const HoleSeq& t) { return build_trapezoid(t, Trap::Qp); }
Region build_K(const HoleSeq& t) { return build_trapezoid(t, Trap::K); }
Region build_Kprime(const HoleSeq& t) { return build_trapezoid(t, Trap::Kp); }

int h_hole_line(int m, int x, int y, int z, const HoleSeq& a, const GeometryConventions& g)
{
    return h_pentagon(m, x, y, z, a, g).hole_line;
}

Region build_H(int m, int x, int y, int z, const HoleSeq& a0, const GeometryConventions& g)
{
    const Pentagon pg = h_pentagon(m, x, y, z, a0, g);
    const HGeometry& hg = g.h[m - 1];
    const HoleSeq a = h_holes(a0);
    const int Ht = static_cast<int>(pg.L.size()) - 1;
    const int hl = pg.hole_line;

    Region reg;
    fill_band(reg, pg.L, pg.R);

    // Western half triangle, then alternating down/up triangles eastwards.
    const int half = 2 * a[0] + hg.half_delta;
    if (half > 0) remove_up_tri(reg, hl - half, g.hole_column, half);
    int pos = g.hole_column + std::max(half, 0);
    for (std::size_t i = 1; i < a.size(); ++i) {
        const int n = a[i];
        if (n) {
            if (i % 2 == 1) remove_down_tri(reg, hl, pos, n);
            else remove_up_tri(reg, hl - n, pos + n, n);
        }
        pos += 2 * n;
    }

    struct Part {
        WestMode mode;
        int r0, r1;
        bool upper;
    };
    const Part parts[2] = {{hg.upper, 0, std::clamp(hl, 0, Ht), true},
                           {hg.lower, std::clamp(hl, 0, Ht), Ht, false}};
    for (const Part& p : parts)
        if (p.mode == WestMode::Remove || p.mode == WestMode::RemoveWeighted)
            for (int r = p.r0; r < p.r1; ++r) reg.erase(Cell{r, 0});
    for (const Part& p : parts) {
        if (p.mode != WestMode::KeepWeighted && p.mode != WestMode::RemoveWeighted) continue;
        const int col = p.mode == WestMode::KeepWeighted ? 0 : 1;
        // Upper lozenges must lie entirely above the hole line.
        weight_column(reg, col, p.r0, p.upper ? p.r1 - 1 : p.r1);
    }

    RegionSpec s;
    s.family = h_family(m);
    s.x = x, s.y = y, s.z = z;
    s.seq = a0;
    reg.spec = s;
    return reg;
}

Region build_S(int x, int y, int z, const HoleSeq& a, const GeometryConventions& g)
{
    if (a.empty() || std::any_of(a.begin(), a.end(), [](int v) { return v < 1; }))
        throw BadParameters("S: hole entries must be positive");
    if (x < 0 || y < 0 || z < 0) throw BadParameters("S: negative side");
    if ((x - z) % 2) throw ParityMismatch("S: x and z must have the same parity");
    const int E = static_cast<int>(seq_E(a)), O = static_cast<int>(seq_O(a));
    const int north = x + (g.s_north == GeometryConventions::SNorth::FourE ? 4 : 2) * E;
    const int ne = y + 2 * O - a[0];
    const int se = y + 2 * E;
    const int h0 = north % 2;  // keeps +-north on lattice points
    const int Ht = ne + se;

    Line L(Ht + 1), R(Ht + 1);
    for (int j = 0; j <= Ht; ++j) {
        const int w = j <= ne ? north + j : north + 2 * ne - j;
        L[j] = -w;
        R[j] = w;
    }
    Region reg;
    fill_band(reg, L, R, h0);

    const int hl = h0 + Ht - z;
    std::size_t hole_cells = static_cast<std::size_t>(a[0] * a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) hole_cells += 2 * static_cast<std::size_t>(a[i] * a[i]);
    const std::size_t full = reg.cells.size();
    remove_up_tri(reg, hl - a[0], 0, a[0]);
    int pos = a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        const int n = a[i];
        if (i % 2 == 1) {
            remove_down_tri(reg, hl, pos, n);
            remove_down_tri(reg, hl, -pos - 2 * n, n);
        } else {
            remove_up_tri(reg, hl - n, pos + n, n);
            remove_up_tri(reg, hl - n, -pos - n, n);
        }
        pos += 2 * n;
    }
    if (full - reg.cells.size() != hole_cells) throw BadParameters("S: hole array does not fit inside the hexagon");
    RegionSpec s;
    s.family = Family::S;
    s.x = x, s.y = y, s.z = z;
    s.seq = a;
    reg.spec = s;
    return reg;
}

Region build(const RegionSpec& s, const GeometryConventions& g)
{
    switch (s.family) {
    case Family::P: return build_P(s.a, s.b, s.c);
    case Family::Pp: return build_Pprime(s.a, s.b, s.c);
    case Family::Q: return build_Q(s.seq);
    case Family::Qp: return build_Qprime(s.seq);
    case Family::K: return build_K(s.seq);
    case Family::Kp: return build_Kprime(s.seq);
    case Family::S: return build_S(s.x, s.y, s.z, s.seq, g);
    default: return build_H(h_index(s.family), s.x, s.y, s.z, s.seq, g);
    }
}

Outline measure_outline(const Region& r)
{
    Outline o;
    if (r.cells.empty()) return o;
    const int top = r.cells.begin()->row;
    const int bottom = r.cells.rbegin()->row;
    o.rows = bottom - top + 1;
    std::map<int, Cell> east;
    for (Cell c : r.cells) {
        if (c.row == top && !c.up()) ++o.north;
        if (c.row == bottom && c.up()) ++o.south;
        auto it = east.find(c.row);
        if (it == east.end() || it->second.col < c.col) east[c.row] = c;
    }
    for (const auto& [row, c] : east) (c.up() ? o.northeast : o.southeast) += 1;
    return o;
}

CiucuSplit ciucu_split(const Region& r)
{
    for (Cell c : r.cells)
        if (!r.contains(Cell{c.row, -c.col})) throw NotSymmetric("cell without mirror image");
    for (const auto& [e, w] : r.weights) {
        Cell a{e.first.row, -e.first.col}, b{e.second.row, -e.second.col};
        if (r.weight(a, b) != w) throw NotSymmetric("weights are not mirror symmetric");
    }
    std::vector<Cell> axis;
    for (Cell c : r.cells)
        if (c.col == 0) axis.push_back(c);
    if (axis.size() % 2) throw AxisNotCutSet("axis must carry an even number of cells");

    // Axis cells alternate a1,b1,a2,b2,... top to bottom; a1 is black.
    const bool black_up = !axis.empty() && axis.front().up();
    std::set<Cell> east_axis;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        const bool black = axis[i].up() == black_up;
        const bool is_a = i % 2 == 0;
        if ((is_a && black) || (!is_a && !black)) east_axis.insert(axis[i]);
    }

    Region whole = r;
    for (Cell v : axis) {
        Cell below{v.row + 1, 0};
        if (v.up() && whole.contains(below)) whole.weights[make_edge(v, below)] = whole.weight(v, below) / 2;
    }

    CiucuSplit out;
    for (Cell c : whole.cells) {
        const bool east = c.col > 0 || (c.col == 0 && east_axis.count(c));
        (east ? out.minus : out.plus).cells.insert(c);
    }
    for (const auto& [e, w] : whole.weights) {
        for (Region* side : {&out.plus, &out.minus})
            if (side->contains(e.first) && side->contains(e.second)) side->weights[e] = w;
    }
    out.k = static_cast<int>(axis.size() / 2);
    return out;
}

std::pair<Region, Region> region_split_check(const Region& r, int line)
{
    Region upper, lower;
    for (Cell c : r.cells) (c.row < line ? upper : lower).cells.insert(c);
    if (upper.cells.empty() || lower.cells.empty()) throw Indivisible("cut line does not cross the region");
    if (!upper.balanced() || !lower.balanced()) throw Indivisible("a side of the cut is unbalanced");
    for (const auto& [e, w] : r.weights) {
        if (upper.contains(e.first) && upper.contains(e.second)) upper.weights[e] = w;
        if (lower.contains(e.first) && lower.contains(e.second)) lower.weights[e] = w;
    }
    return {std::move(upper), std::move(lower)};
}

} // namespace rhombil
