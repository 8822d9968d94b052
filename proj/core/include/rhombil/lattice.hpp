#pragma once

#include "rhombil/combinat.hpp"
#include "rhombil/region_spec.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace rhombil {

// Unit triangle. Rows run top to bottom; (row+col) even is an up-pointing
// triangle with its apex on lattice line `row` at doubled abscissa `col`.
struct Cell {
    int row = 0;
    int col = 0;

    bool up() const { return ((row + col) & 1) == 0; }
    auto operator<=>(const Cell&) const = default;
};

// Up(r,c) touches (r,c±1) and (r+1,c); Down(r,c) touches (r,c±1) and (r-1,c).
std::array<Cell, 3> neighbors(Cell c);
bool adjacent(Cell a, Cell b);

using Edge = std::pair<Cell, Cell>;  // first < second
Edge make_edge(Cell a, Cell b);

struct Region {
    std::set<Cell> cells;
    std::map<Edge, Rational> weights;  // absent means weight 1
    std::optional<RegionSpec> spec;

    bool contains(Cell c) const { return cells.count(c) != 0; }
    Rational weight(Cell a, Cell b) const;
    std::size_t up_count() const;
    std::size_t down_count() const;
    bool balanced() const { return 2 * up_count() == cells.size(); }
    void set_weight(Cell a, Cell b, const Rational& w);  // throws if not an edge of the region
    void erase(Cell c);                                 // drops its weights too
};

// Western boundary handling on one side of the H hole line.
enum class WestMode {
    Keep,           // zigzag column kept, unweighted
    KeepWeighted,   // kept, vertical lozenges on it weighted 1/2
    Remove,         // column-0 cells removed
    RemoveWeighted  // removed, vertical lozenges on the next column weighted 1/2
};

struct HGeometry {
    WestMode upper = WestMode::Keep;
    WestMode lower = WestMode::Keep;
    int half_delta = 0;  // side of the western half triangle is 2a1 + half_delta
    int ne_delta = 0;    // added to the northeastern side
};

struct GeometryConventions {
    std::array<HGeometry, 8> h = {{
        {WestMode::Keep, WestMode::Keep, 0, 0},
        {WestMode::Remove, WestMode::Remove, 0, 0},
        {WestMode::KeepWeighted, WestMode::KeepWeighted, 0, 0},
        {WestMode::RemoveWeighted, WestMode::RemoveWeighted, 0, 0},
        {WestMode::KeepWeighted, WestMode::Remove, 1, 1},
        {WestMode::KeepWeighted, WestMode::Remove, 0, 0},
        {WestMode::Remove, WestMode::KeepWeighted, 0, 0},
        {WestMode::Remove, WestMode::KeepWeighted, -1, -1},
    }};
    int hole_column = 0;  // doubled-abscissa shift of the whole H hole array
    int hole_level = 0;   // line shift of the H hole line (positive is lower)

    // Northern side of S: x+4E(a) fits; x+2E(a) is the literal reading.
    enum class SNorth { FourE, TwoE } s_north = SNorth::FourE;
};

Region build_P(int a, int b, int c);
Region build_Pprime(int a, int b, int c);
Region build_Q(const HoleSeq& t);
Region build_Qprime(const HoleSeq& t);
Region build_K(const HoleSeq& t);
Region build_Kprime(const HoleSeq& t);
Region build_H(int m, int x, int y, int z, const HoleSeq& a, const GeometryConventions& g = {});
Region build_S(int x, int y, int z, const HoleSeq& a, const GeometryConventions& g = {});
Region build(const RegionSpec& spec, const GeometryConventions& g = {});

// Line index of the H hole array (holes sit on both sides of it).
int h_hole_line(int m, int x, int y, int z, const HoleSeq& a, const GeometryConventions& g = {});

// Boundary measurement of a region, in lattice units, for side-length checks.
struct Outline {
    int rows = 0;
    int north = 0;      // width of the top line
    int south = 0;      // width of the bottom line
    int northeast = 0;  // lines over which the east boundary moves right
    int southeast = 0;  // lines over which it moves left
};
Outline measure_outline(const Region& r);

struct CiucuSplit {
    Region plus;   // west of the axis
    Region minus;  // east of the axis
    int k = 0;     // half the number of axis cells
};
// Axis is col = 0. Throws NotSymmetric or AxisNotCutSet.
CiucuSplit ciucu_split(const Region& r);

// Splits along the horizontal lattice line `line` (rows < line versus rows
// >= line). Throws Indivisible unless both sides are balanced.
std::pair<Region, Region> region_split_check(const Region& r, int line);

enum class RenderFormat { ASCII, SVG };
std::string render_region(const Region& r, RenderFormat f);

std::string region_to_json(const Region& r);
std::string spec_params_json(const RegionSpec& s);  // the "params" object alone
Region region_from_json(const std::string& text);  // throws ParseError

} // namespace rhombil
