#include "rhombil/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rhombil {

namespace {

std::set<Cell> weighted_cells(const Region& r)
{
    std::set<Cell> out;
    for (const auto& [e, w] : r.weights) {
        out.insert(e.first);
        out.insert(e.second);
    }
    return out;
}

std::string header(const Region& r)
{
    std::ostringstream os;
    os << (r.spec ? describe(*r.spec) : std::string("region")) << " cells=" << r.cells.size()
       << " up=" << r.up_count() << " down=" << r.down_count() << " weighted=" << r.weights.size();
    return os.str();
}

std::string render_ascii(const Region& r)
{
    std::ostringstream os;
    os << "# " << header(r) << "\n";
    if (r.cells.empty()) {
        os << "# empty region\n";
        return os.str();
    }
    int cmin = r.cells.begin()->col, cmax = cmin;
    for (Cell c : r.cells) {
        cmin = std::min(cmin, c.col);
        cmax = std::max(cmax, c.col);
    }
    const std::set<Cell> marked = weighted_cells(r);
    const int top = r.cells.begin()->row, bottom = r.cells.rbegin()->row;
    // '^' up, 'v' down, upper case when on a weighted lozenge, '.' outside.
    for (int row = top; row <= bottom; ++row) {
        std::string line;
        for (int col = cmin; col <= cmax; ++col) {
            Cell c{row, col};
            if (!r.contains(c)) line += '.';
            else if (marked.count(c)) line += c.up() ? 'A' : 'V';
            else line += c.up() ? '^' : 'v';
        }
        while (!line.empty() && line.back() == '.') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string render_svg(const Region& r)
{
    const double unit = 24.0, hstep = unit * std::sqrt(3.0) / 2.0, pad = 8.0;
    std::ostringstream os;
    if (r.cells.empty()) {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\">"
           << "<!-- " << header(r) << " (empty region) --></svg>\n";
        return os.str();
    }
    int cmin = r.cells.begin()->col, cmax = cmin;
    for (Cell c : r.cells) {
        cmin = std::min(cmin, c.col);
        cmax = std::max(cmax, c.col);
    }
    const int top = r.cells.begin()->row, bottom = r.cells.rbegin()->row;
    auto X = [&](int col) { return pad + (col - cmin + 1) * unit / 2.0; };
    auto Y = [&](int line) { return pad + (line - top) * hstep; };
    const double width = X(cmax + 1) + pad, height = Y(bottom + 1) + pad;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    os << "<title>" << header(r) << "</title>\n";
    for (Cell c : r.cells) {
        double pts[6];
        if (c.up()) {
            pts[0] = X(c.col), pts[1] = Y(c.row);
            pts[2] = X(c.col - 1), pts[3] = Y(c.row + 1);
            pts[4] = X(c.col + 1), pts[5] = Y(c.row + 1);
        } else {
            pts[0] = X(c.col - 1), pts[1] = Y(c.row);
            pts[2] = X(c.col + 1), pts[3] = Y(c.row);
            pts[4] = X(c.col), pts[5] = Y(c.row + 1);
        }
        os << "<polygon class=\"" << (c.up() ? "up" : "down") << "\" points=\"" << fmt(pts[0]) << ","
           << fmt(pts[1]) << " " << fmt(pts[2]) << "," << fmt(pts[3]) << " " << fmt(pts[4]) << "," << fmt(pts[5])
           << "\" fill=\"" << (c.up() ? "#f4f1e8" : "#dfe7ef") << "\" stroke=\"#555\" stroke-width=\"0.5\"/>\n";
    }
    // Weighted lozenge positions: a shaded core joining the two centroids.
    for (const auto& [e, w] : r.weights) {
        auto cx = [&](Cell c) { return X(c.col); };
        auto cy = [&](Cell c) { return c.up() ? Y(c.row) + 2.0 * hstep / 3.0 : Y(c.row) + hstep / 3.0; };
        os << "<line class=\"weighted\" x1=\"" << fmt(cx(e.first)) << "\" y1=\"" << fmt(cy(e.first)) << "\" x2=\""
           << fmt(cx(e.second)) << "\" y2=\"" << fmt(cy(e.second))
           << "\" stroke=\"#999\" stroke-width=\"4\" stroke-linecap=\"round\"><title>" << to_string(w)
           << "</title></line>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render_region(const Region& r, RenderFormat f)
{
    return f == RenderFormat::SVG ? render_svg(r) : render_ascii(r);
}

} // namespace rhombil
