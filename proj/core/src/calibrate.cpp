#include "rhombil/errors.hpp"
#include "rhombil/verify.hpp"

#include <algorithm>

namespace rhombil {

int SwitchOutcome::passing() const
{
    return static_cast<int>(std::count(passed.begin(), passed.end(), true));
}

std::string SwitchOutcome::chosen() const
{
    if (!resolved()) return "";
    return variants[static_cast<std::size_t>(std::find(passed.begin(), passed.end(), true) - passed.begin())];
}

bool CalibrationReport::all_resolved() const
{
    return std::all_of(switches.begin(), switches.end(), [](const SwitchOutcome& s) { return s.resolved(); });
}

void require_resolved(const CalibrationReport& rep)
{
    for (const auto& s : rep.switches) {
        if (s.passing() == 0) throw NoVariantPasses("no variant of '" + s.name + "' matches the engine");
        if (s.passing() > 1) throw AmbiguousCalibration("several variants of '" + s.name + "' match the engine");
    }
}

namespace {

struct Variant {
    std::string name;
    Conventions cv;
    GeometryConventions geo;
};

// A variant passes when every point with a defined formula matches the
// engine and at least one point was compared.
std::pair<bool, std::string> run_variant(const Variant& v, const std::vector<RegionSpec>& pts, const VerifyOptions& opt)
{
    int compared = 0;
    for (const RegionSpec& s : pts) {
        Rational f;
        try {
            f = evaluate(s, v.cv).value;
        } catch (const FormulaSingular&) {
            continue;
        } catch (const Error& e) {
            return {false, describe(s) + ": " + e.what()};
        }
        Rational c;
        try {
            c = count_tilings(build(s, v.geo), opt.engine);
        } catch (const ResourceLimit&) {
            continue;
        } catch (const Error& e) {
            return {false, describe(s) + ": " + e.what()};
        }
        if (f != c) return {false, describe(s) + ": formula " + to_string(f) + " engine " + to_string(c)};
        ++compared;
    }
    if (compared == 0) return {false, "no comparable point"};
    return {true, ""};
}

SwitchOutcome run_switch(std::string name, std::string frozen, const std::vector<Variant>& variants,
                         const std::vector<RegionSpec>& pts, const VerifyOptions& opt)
{
    SwitchOutcome out;
    out.name = std::move(name);
    out.frozen = std::move(frozen);
    out.variants.resize(variants.size());
    out.passed.resize(variants.size());
    out.first_mismatch.resize(variants.size());
    parallel_for(variants.size(), opt.jobs, [&](std::size_t i) {
        auto [ok, why] = run_variant(variants[i], pts, opt);
        out.variants[i] = variants[i].name;
        out.passed[i] = ok;
        out.first_mismatch[i] = why;
    });
    return out;
}

std::vector<RegionSpec> h_grid(Family f, int max_param, std::vector<int> lengths, int min_entry, int max_entry)
{
    GridSpec g;
    g.family = f;
    g.max_param = max_param;
    g.lengths = std::move(lengths);
    g.min_entry = min_entry;
    g.max_entry = max_entry;
    return enumerate(g);
}

std::vector<RegionSpec> join(std::vector<RegionSpec> a, const std::vector<RegionSpec>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <class F>
std::vector<Variant> formula_variants(const VerifyOptions& opt, std::initializer_list<std::pair<const char*, F>> opts)
{
    std::vector<Variant> out;
    for (const auto& [name, set] : opts) {
        Variant v{name, opt.conventions, opt.geometry};
        set(v.cv);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

CalibrationReport calibrate_geometry(const VerifyOptions& opt)
{
    CalibrationReport rep;
    using CvSet = void (*)(Conventions&);
    using GeoSet = void (*)(GeometryConventions&);
    auto geo_variants = [&](std::initializer_list<std::pair<const char*, GeoSet>> opts) {
        std::vector<Variant> out;
        for (const auto& [name, set] : opts) {
            Variant v{name, opt.conventions, opt.geometry};
            set(v.geo);
            out.push_back(std::move(v));
        }
        return out;
    };

    rep.switches.push_back(run_switch(
        "odd double factorial reading", "skip",
        formula_variants<CvSet>(opt, {{"skip", [](Conventions& c) { c.h2 = H2Reading::Skip; }},
                                      {"printed", [](Conventions& c) { c.h2 = H2Reading::Printed; }}}),
        h_grid(Family::Q, 0, {2, 4}, 0, 2), opt));

    GridSpec pp;
    pp.family = Family::Pp;
    pp.max_param = 3;
    rep.switches.push_back(run_switch(
        "weighted P product limit", "a",
        formula_variants<CvSet>(opt, {{"a", [](Conventions& c) { c.pprime_limit = Conventions::PprimeLimit::A; }},
                                      {"b", [](Conventions& c) { c.pprime_limit = Conventions::PprimeLimit::B; }},
                                      {"c", [](Conventions& c) { c.pprime_limit = Conventions::PprimeLimit::C; }}}),
        enumerate(pp), opt));

    rep.switches.push_back(run_switch(
        "H3 odd-length Q' sequence", "drop-leading",
        formula_variants<CvSet>(
            opt, {{"drop-leading", [](Conventions& c) { c.odd_seq = Conventions::OddSeq::DropLeading; }},
                  {"pad-trailing", [](Conventions& c) { c.odd_seq = Conventions::OddSeq::PadTrailing; }}}),
        h_grid(Family::H3, 1, {2}, 0, 2), opt));

    rep.switches.push_back(run_switch(
        "H8 second subscript", "z",
        formula_variants<CvSet>(opt, {{"z", [](Conventions& c) { c.h8_sub = Conventions::H8Sub::Z; }},
                                      {"y", [](Conventions& c) { c.h8_sub = Conventions::H8Sub::Y; }}}),
        h_grid(Family::H8, 2, {2}, 1, 2), opt));

    rep.switches.push_back(run_switch(
        "H2/H4 P subscript", "y+2a-1",
        formula_variants<CvSet>(opt, {{"y+2a-1", [](Conventions& c) { c.h24_sub = Conventions::H24Sub::Shifted; }},
                                      {"y+2a", [](Conventions& c) { c.h24_sub = Conventions::H24Sub::Printed; }}}),
        join(h_grid(Family::H2, 1, {2}, 1, 2), h_grid(Family::H4, 1, {2}, 1, 2)), opt));

    rep.switches.push_back(run_switch(
        "2k-hole T group index", "s(2i-3)",
        formula_variants<CvSet>(opt, {{"s(2i-3)", [](Conventions& c) { c.g_index = Conventions::GIndex::Shifted; }},
                                      {"s(2i-1)", [](Conventions& c) { c.g_index = Conventions::GIndex::Printed; }}}),
        h_grid(Family::H1, 1, {4}, 0, 1), opt));

    rep.switches.push_back(run_switch(
        "H3 2k-hole factors", "parallel",
        formula_variants<CvSet>(opt, {{"parallel", [](Conventions& c) { c.h3_multi = Conventions::H3Multi::Parallel; }},
                                      {"printed", [](Conventions& c) { c.h3_multi = Conventions::H3Multi::Printed; }}}),
        h_grid(Family::H3, 1, {4}, 0, 1), opt));

    const auto h1 = h_grid(Family::H1, 1, {2}, 0, 2);
    rep.switches.push_back(run_switch("hole line offset", "0",
                                      geo_variants({{"-1", [](GeometryConventions& g) { g.hole_level = -1; }},
                                                    {"0", [](GeometryConventions& g) { g.hole_level = 0; }},
                                                    {"+1", [](GeometryConventions& g) { g.hole_level = 1; }}}),
                                      h1, opt));
    rep.switches.push_back(run_switch("hole column offset", "0",
                                      geo_variants({{"-2", [](GeometryConventions& g) { g.hole_column = -2; }},
                                                    {"0", [](GeometryConventions& g) { g.hole_column = 0; }},
                                                    {"+2", [](GeometryConventions& g) { g.hole_column = 2; }}}),
                                      h1, opt));

    rep.switches.push_back(run_switch(
        "H5 west boundary below the holes", "remove",
        geo_variants({{"keep", [](GeometryConventions& g) { g.h[4].lower = WestMode::Keep; }},
                      {"keep-weighted", [](GeometryConventions& g) { g.h[4].lower = WestMode::KeepWeighted; }},
                      {"remove", [](GeometryConventions& g) { g.h[4].lower = WestMode::Remove; }},
                      {"remove-weighted", [](GeometryConventions& g) { g.h[4].lower = WestMode::RemoveWeighted; }}}),
        h_grid(Family::H5, 1, {2}, 0, 2), opt));

    GridSpec sg;
    sg.family = Family::S;
    sg.max_param = 1;
    sg.lengths = {1, 2};
    sg.max_entry = 2;
    rep.switches.push_back(run_switch(
        "S northern side", "x+4E",
        geo_variants({{"x+4E", [](GeometryConventions& g) { g.s_north = GeometryConventions::SNorth::FourE; }},
                      {"x+2E", [](GeometryConventions& g) { g.s_north = GeometryConventions::SNorth::TwoE; }}}),
        enumerate(sg), opt));
    return rep;
}

} // namespace rhombil
