#include "rhombil/engine.hpp"

#include "rhombil/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

namespace rhombil {

EngineOptions EngineOptions::from_env()
{
    EngineOptions o;
    if (const char* v = std::getenv("RHOMBIL_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && cap > 0) o.state_cap = static_cast<std::size_t>(cap);
    }
    return o;
}

namespace {

struct Link {
    int offset;
    const Rational* weight;  // null for weight 1
};

struct Layout {
    std::vector<Cell> order;
    std::vector<std::vector<Link>> later;  // neighbours further along the order
    int width = 0;
};

Layout make_layout(const Region& r, SweepAxis axis)
{
    Layout lay;
    lay.order.assign(r.cells.begin(), r.cells.end());
    if (axis == SweepAxis::Columns)
        std::sort(lay.order.begin(), lay.order.end(),
                  [](Cell a, Cell b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
    auto index_of = [&](Cell c) -> int {
        auto it = axis == SweepAxis::Rows
            ? std::lower_bound(lay.order.begin(), lay.order.end(), c)
            : std::lower_bound(lay.order.begin(), lay.order.end(), c, [](Cell a, Cell b) {
                  return a.col != b.col ? a.col < b.col : a.row < b.row;
              });
        return (it != lay.order.end() && *it == c) ? static_cast<int>(it - lay.order.begin()) : -1;
    };
    lay.later.resize(lay.order.size());
    for (std::size_t i = 0; i < lay.order.size(); ++i) {
        for (Cell n : neighbors(lay.order[i])) {
            const int j = index_of(n);
            if (j <= static_cast<int>(i)) continue;
            auto w = r.weights.find(make_edge(lay.order[i], n));
            lay.later[i].push_back({j - static_cast<int>(i), w == r.weights.end() ? nullptr : &w->second});
            lay.width = std::max(lay.width, j - static_cast<int>(i));
        }
    }
    return lay;
}

struct Hash128 {
    std::size_t operator()(unsigned __int128 v) const noexcept
    {
        const auto lo = static_cast<std::uint64_t>(v), hi = static_cast<std::uint64_t>(v >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

template <class Mask, class H>
Rational sweep(const Layout& lay, std::size_t cap, CountStats& st)
{
    std::unordered_map<Mask, Rational, H> cur, next;
    cur.emplace(Mask(0), Rational(1));
    const Mask one = 1;
    for (std::size_t i = 0; i < lay.order.size(); ++i) {
        next.clear();
        next.reserve(cur.size() * 2);
        for (const auto& [mask, val] : cur) {
            if (mask & one) {
                next[mask >> 1] += val;
                continue;
            }
            for (const Link& l : lay.later[i]) {
                if ((mask >> l.offset) & one) continue;
                Rational& slot = next[(mask | (one << l.offset)) >> 1];
                if (l.weight) slot += val * *l.weight;
                else slot += val;
            }
        }
        cur.swap(next);
        st.peak_states = std::max(st.peak_states, cur.size());
        if (cur.size() > cap)
            throw ResourceLimit("frontier state count " + std::to_string(cur.size()) + " exceeds cap " +
                                    std::to_string(cap) + " at window width " + std::to_string(lay.width),
                                lay.width);
    }
    auto it = cur.find(Mask(0));
    return it == cur.end() ? Rational(0) : it->second;
}

} // namespace

Rational count_tilings(const Region& r, const EngineOptions& opt, CountStats* stats)
{
    CountStats local;
    CountStats& st = stats ? *stats : local;
    st = CountStats{};
    if (r.cells.empty()) return 1;
    if (!r.balanced()) return 0;

    // Narrowest window wins; ties keep the top-to-bottom sweep.
    Layout rows = make_layout(r, SweepAxis::Rows);
    Layout cols = make_layout(r, SweepAxis::Columns);
    const bool use_cols = cols.width < rows.width;
    const Layout& lay = use_cols ? cols : rows;
    st.axis = use_cols ? SweepAxis::Columns : SweepAxis::Rows;
    st.width = lay.width;

    if (lay.width < 64) return sweep<std::uint64_t, std::hash<std::uint64_t>>(lay, opt.state_cap, st);
    if (lay.width < 128) return sweep<unsigned __int128, Hash128>(lay, opt.state_cap, st);
    throw ResourceLimit("frontier window " + std::to_string(lay.width) + " is wider than 127 cells", lay.width);
}

namespace {

Rational brute(const Region& r, const std::vector<Cell>& cells, std::vector<char>& free_)
{
    std::size_t i = 0;
    while (i < cells.size() && !free_[i]) ++i;
    if (i == cells.size()) return 1;
    Rational total = 0;
    free_[i] = 0;
    for (Cell n : neighbors(cells[i])) {
        auto it = std::lower_bound(cells.begin(), cells.end(), n);
        if (it == cells.end() || *it != n) continue;
        const std::size_t j = static_cast<std::size_t>(it - cells.begin());
        if (!free_[j]) continue;
        free_[j] = 0;
        total += r.weight(cells[i], n) * brute(r, cells, free_);
        free_[j] = 1;
    }
    free_[i] = 1;
    return total;
}

} // namespace

Rational count_tilings_reference(const Region& r)
{
    if (r.cells.size() > kReferenceCap)
        throw TooLarge("reference counter takes at most " + std::to_string(kReferenceCap) + " cells, got " +
                       std::to_string(r.cells.size()));
    std::vector<Cell> cells(r.cells.begin(), r.cells.end());
    std::vector<char> free_(cells.size(), 1);
    return brute(r, cells, free_);
}

Reduction reduce_forced(const Region& r)
{
    Reduction out{r, Rational(1)};
    Region& g = out.region;
    std::deque<Cell> work(g.cells.begin(), g.cells.end());
    while (!work.empty()) {
        const Cell c = work.front();
        work.pop_front();
        if (!g.contains(c)) continue;
        int degree = 0;
        Cell partner{};
        for (Cell n : neighbors(c))
            if (g.contains(n)) {
                ++degree;
                partner = n;
            }
        if (degree == 0) {
            out.factor = 0;
            return out;
        }
        if (degree > 1) continue;
        out.factor *= g.weight(c, partner);
        g.erase(c);
        g.erase(partner);
        for (Cell n : neighbors(partner))
            if (g.contains(n)) work.push_back(n);
    }
    return out;
}

Region delete_pair(const Region& r, Cell a, Cell b)
{
    if (!r.contains(a) || !r.contains(b)) throw MissingCell("Kuo corner cell not in region");
    if (a.up() == b.up()) throw ClassViolation("deleted pair must have opposite orientations");
    Region g = r;
    g.erase(a);
    g.erase(b);
    return g;
}

Region kuo_corner_delete(const Region& r, const KuoQuad& q, KuoTerm term)
{
    for (Cell c : {q.u, q.v, q.w, q.s})
        if (!r.contains(c)) throw MissingCell("Kuo corner cell not in region");
    if (q.u.up() != q.w.up() || q.v.up() != q.s.up() || q.u.up() == q.v.up())
        throw ClassViolation("Kuo quad needs u,w in one class and v,s in the other");
    switch (term) {
    case KuoTerm::UV: return delete_pair(r, q.u, q.v);
    case KuoTerm::WS: return delete_pair(r, q.w, q.s);
    case KuoTerm::US: return delete_pair(r, q.u, q.s);
    case KuoTerm::VW: return delete_pair(r, q.v, q.w);
    case KuoTerm::UVWS: return delete_pair(delete_pair(r, q.u, q.v), q.w, q.s);
    }
    return r;
}

KuoQuad corner_quad(const Region& r)
{
    if (r.cells.empty()) throw MissingCell("empty region has no corners");
    const int top = r.cells.begin()->row, bottom = r.cells.rbegin()->row;
    std::optional<Cell> v, w;
    for (Cell c : r.cells) {
        if (c.row == top && !c.up()) v = c;     // cells iterate by column within a row
        if (c.row == bottom && c.up()) w = c;
    }
    if (!v || !w) throw MissingCell("boundary rows lack the corner cells");
    KuoQuad q{Cell{v->row, v->col - 1}, *v, *w, Cell{w->row, w->col - 1}};
    if (!r.contains(q.u) || !r.contains(q.s)) throw MissingCell("corner neighbours missing");
    return q;
}

} // namespace rhombil
