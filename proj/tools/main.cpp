#include "rhombil/errors.hpp"
#include "rhombil/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace rhombil;
using json = nlohmann::ordered_json;

namespace {

// Bad input from the command line; always names the flag.
struct UsageError {
    std::string flag;
    std::string message;
};

struct Args {
    std::string family;
    std::optional<int> a, b, c, x, y, z;
    std::optional<std::string> holes;
    std::string from_json;
    std::string format = "human";
    std::string suite = "all";
    int max = 2;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool timings = false;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json rational_json(const Rational& q)
{
    return json{{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}};
}

HoleSeq parse_holes(const std::string& text)
{
    HoleSeq out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError{"--holes", "'" + item + "' is not an integer"};
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw UsageError{"--holes", "'" + item + "' is not an integer"};
        if (v < 0) throw UsageError{"--holes", "entries must be non-negative"};
        out.push_back(v);
    }
    return out;
}

int need(const std::optional<int>& v, const char* flag, const std::string& fam)
{
    if (!v) throw UsageError{flag, "required for family " + fam};
    if (*v < 0) throw UsageError{flag, "must be non-negative"};
    return *v;
}

const char* flags_of(Family f)
{
    switch (f) {
    case Family::P: case Family::Pp: return "--a/--b/--c";
    case Family::Q: case Family::Qp: case Family::K: case Family::Kp: return "--holes";
    default: return "--x/--y/--z/--holes";
    }
}

RegionSpec spec_from(const Args& g)
{
    if (g.family.empty()) throw UsageError{"--family", "required (or use --from-json)"};
    const auto f = parse_family(g.family);
    if (!f) throw UsageError{"--family", "unknown family '" + g.family + "'"};
    RegionSpec s;
    s.family = *f;
    switch (*f) {
    case Family::P: case Family::Pp:
        s.a = need(g.a, "--a", g.family);
        s.b = need(g.b, "--b", g.family);
        s.c = need(g.c, "--c", g.family);
        if (s.a > s.b) throw UsageError{"--a", "must not exceed --b"};
        break;
    case Family::Q: case Family::Qp: case Family::K: case Family::Kp:
        if (!g.holes) throw UsageError{"--holes", "required for family " + g.family};
        s.seq = parse_holes(*g.holes);
        if (s.seq.size() % 2) throw UsageError{"--holes", "family " + g.family + " needs an even number of entries"};
        break;
    default:
        s.x = need(g.x, "--x", g.family);
        s.y = need(g.y, "--y", g.family);
        s.z = need(g.z, "--z", g.family);
        if (g.holes) s.seq = parse_holes(*g.holes);
        if (*f == Family::S && s.seq.empty()) throw UsageError{"--holes", "family S needs at least one entry"};
        break;
    }
    return s;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError{"--from-json", "cannot open '" + path + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Region region_from(const Args& g)
{
    if (!g.from_json.empty()) {
        try {
            return region_from_json(read_file(g.from_json));
        } catch (const ParseError& e) {
            throw UsageError{"--from-json", e.what()};
        }
    }
    const RegionSpec s = spec_from(g);
    try {
        return build(s);
    } catch (const ResourceLimit&) {
        throw;
    } catch (const Error& e) {
        throw UsageError{flags_of(s.family), e.what()};
    }
}

json report_head(const std::optional<RegionSpec>& s)
{
    json j;
    j["family"] = s ? std::string(family_name(s->family)) : std::string("custom");
    j["params"] = s ? json::parse(spec_params_json(*s)) : json::object();
    return j;
}

int cmd_count(const Args& g)
{
    const Region reg = region_from(g);
    const auto t0 = Clock::now();
    const Rational v = count_tilings(reg);
    const double ms = ms_since(t0);
    if (g.format == "json") {
        json j = report_head(reg.spec);
        j["value"] = rational_json(v);
        j["cells"] = reg.cells.size();
        if (g.timings) j["elapsed_ms"] = ms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(v) << "\n";
        if (g.timings) std::cerr << "elapsed_ms " << ms << "\n";
    }
    return 0;
}

int cmd_formula(const Args& g)
{
    RegionSpec s;
    if (!g.from_json.empty()) {
        const Region reg = region_from(g);
        if (!reg.spec) throw UsageError{"--from-json", "region carries no family parameters"};
        s = *reg.spec;
    } else {
        s = spec_from(g);
    }
    const auto t0 = Clock::now();
    Rational v;
    try {
        v = evaluate(s).value;
    } catch (const FormulaSingular& e) {
        throw UsageError{flags_of(s.family), e.what()};
    } catch (const Error& e) {
        throw UsageError{flags_of(s.family), e.what()};
    }
    const double ms = ms_since(t0);
    if (g.format == "json") {
        json j = report_head(s);
        j["value"] = rational_json(v);
        if (g.timings) j["elapsed_ms"] = ms;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(v) << "\n";
        if (g.timings) std::cerr << "elapsed_ms " << ms << "\n";
    }
    return 0;
}

int cmd_render(const Args& g)
{
    const Region reg = region_from(g);
    if (g.format == "json") std::cout << region_to_json(reg) << "\n";
    else if (g.format == "svg") std::cout << render_region(reg, RenderFormat::SVG);
    else std::cout << render_region(reg, RenderFormat::ASCII);
    return 0;
}

void append(std::vector<VerdictRecord>& to, std::vector<VerdictRecord> more)
{
    to.insert(to.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<VerdictRecord> suite_family(int n, const VerifyOptions& opt)
{
    std::vector<VerdictRecord> out;
    for (Family f : {Family::P, Family::Pp}) {
        GridSpec gs;
        gs.family = f;
        gs.max_param = n;
        append(out, verify_family(gs, opt));
    }
    for (Family f : {Family::Q, Family::Qp, Family::K, Family::Kp}) {
        GridSpec gs;
        gs.family = f;
        gs.lengths = {2, 4};
        gs.max_entry = n;
        append(out, verify_family(gs, opt));
    }
    for (int m = 1; m <= 8; ++m) {
        GridSpec two;
        two.family = h_family(m);
        two.max_param = n;
        two.max_entry = n;
        append(out, verify_family(two, opt));
        GridSpec four = two;
        four.max_param = std::min(n, 1);
        four.lengths = {4};
        four.max_entry = 1;
        append(out, verify_family(four, opt));
    }
    return out;
}

std::vector<VerdictRecord> suite_kuo(int n, const VerifyOptions& opt)
{
    std::vector<VerdictRecord> out;
    for (int m : {1, 5}) {
        KuoGrid k;
        k.family = m;
        k.max_param = n + 1;
        k.engine_max = n;
        k.seqs = sequences({2}, 0, n);
        append(out, verify_kuo(k, opt));
    }
    return out;
}

std::vector<VerdictRecord> suite_ciucu(int n, const VerifyOptions& opt)
{
    GridSpec gs;
    gs.family = Family::S;
    gs.max_param = n;
    gs.lengths = {1, 2};
    gs.min_entry = 1;
    gs.max_entry = n;
    return verify_ciucu(gs, opt);
}

int cmd_verify(const Args& g)
{
    VerifyOptions opt;
    opt.jobs = g.jobs;
    const int n = g.max;
    const auto t0 = Clock::now();
    std::vector<VerdictRecord> recs;
    const bool all = g.suite == "all";
    if (all || g.suite == "family") append(recs, suite_family(n, opt));
    if (all || g.suite == "kuo") append(recs, suite_kuo(n, opt));
    if (all || g.suite == "ciucu") append(recs, suite_ciucu(n, opt));
    if (all || g.suite == "claims") append(recs, verify_claims(50, g.seed));
    if (all) {
        for (int m = 1; m <= 8; ++m) append(recs, verify_padding(m, n, n, std::min(n, 1), opt));
        append(recs, verify_base_cases(n, sequences({2}, 0, n), opt));
    }
    const Summary sum = summarize(recs);
    if (g.format == "json") {
        for (const auto& r : recs) std::cout << to_json_line(r) << "\n";
    } else {
        for (const auto& r : recs)
            if (!r.pass && !r.skipped) std::cout << "FAIL " << to_json_line(r) << "\n";
    }
    std::cout << summary_table(recs);
    if (g.timings) std::cerr << "elapsed_ms " << ms_since(t0) << "\n";
    return sum.failed == 0 ? 0 : 1;
}

int cmd_sweep(const Args& g)
{
    if (g.family.empty()) throw UsageError{"--family", "required"};
    const auto f = parse_family(g.family);
    if (!f) throw UsageError{"--family", "unknown family '" + g.family + "'"};
    GridSpec gs;
    gs.family = *f;
    gs.max_param = g.max;
    gs.max_entry = g.max;
    gs.lengths = {2};
    if (*f == Family::S) gs.lengths = {1, 2};
    std::vector<RegionSpec> pts = enumerate(gs);
    if (g.holes && *f != Family::P && *f != Family::Pp) {
        // A fixed hole sequence replaces the enumerated ones.
        const HoleSeq fixed = parse_holes(*g.holes);
        gs.lengths = {static_cast<int>(fixed.size())};
        gs.min_entry = gs.max_entry = 0;
        std::vector<RegionSpec> keep;
        for (RegionSpec s : enumerate(gs)) {
            s.seq = fixed;
            if (s.family == Family::S) {
                try {
                    build(s);
                } catch (const Error&) {
                    continue;
                }
            }
            keep.push_back(s);
        }
        pts = keep;
    }

    struct Row {
        std::optional<Rational> formula;
        std::optional<Rational> engine;
        std::size_t cells = 0;
        std::string note;
        double ms = 0;
    };
    std::vector<Row> rows(pts.size());
    const auto t0 = Clock::now();
    parallel_for(pts.size(), g.jobs, [&](std::size_t i) {
        Row& r = rows[i];
        try {
            r.formula = evaluate(pts[i]).value;
        } catch (const Error& e) {
            r.note = e.what();
        }
        try {
            const Region reg = build(pts[i]);
            r.cells = reg.cells.size();
            const auto t1 = Clock::now();
            r.engine = count_tilings(reg);
            r.ms = ms_since(t1);
        } catch (const Error& e) {
            r.note = e.what();
        }
    });
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Row& r = rows[i];
        const bool agree = r.formula && r.engine && *r.formula == *r.engine;
        if (r.formula && r.engine && !agree) ok = false;
        if (g.format == "json") {
            json j = report_head(pts[i]);
            j["formula"] = r.formula ? rational_json(*r.formula) : json(nullptr);
            j["value"] = r.engine ? rational_json(*r.engine) : json(nullptr);
            j["agree"] = agree;
            j["cells"] = r.cells;
            if (!r.note.empty()) j["note"] = r.note;
            if (g.timings) j["elapsed_ms"] = r.ms;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << describe(pts[i]) << "  formula " << (r.formula ? to_string(*r.formula) : "-") << "  engine "
                      << (r.engine ? to_string(*r.engine) : "-") << "  "
                      << (agree ? "ok" : r.formula && r.engine ? "MISMATCH" : "skipped") << "\n";
        }
    }
    if (g.timings) std::cerr << "elapsed_ms " << ms_since(t0) << "\n";
    return ok ? 0 : 1;
}

int cmd_calibrate(const Args& g)
{
    VerifyOptions opt;
    opt.jobs = g.jobs;
    const auto t0 = Clock::now();
    const CalibrationReport rep = calibrate_geometry(opt);
    bool ok = true;
    for (const auto& s : rep.switches) {
        const bool good = s.resolved() && s.chosen() == s.frozen;
        ok = ok && good;
        if (g.format == "json") {
            json j;
            j["switch"] = s.name;
            j["frozen"] = s.frozen;
            j["chosen"] = s.chosen();
            json vs = json::array();
            for (std::size_t i = 0; i < s.variants.size(); ++i) {
                json v{{"variant", s.variants[i]}, {"pass", static_cast<bool>(s.passed[i])}};
                if (!s.first_mismatch[i].empty()) v["mismatch"] = s.first_mismatch[i];
                vs.push_back(v);
            }
            j["variants"] = vs;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (good ? "ok   " : "FAIL ") << s.name << ": " << (s.resolved() ? s.chosen() : "unresolved")
                      << " (frozen " << s.frozen << ")\n";
            for (std::size_t i = 0; i < s.variants.size(); ++i)
                std::cout << "       " << (s.passed[i] ? "pass " : "fail ") << s.variants[i]
                          << (s.first_mismatch[i].empty() ? "" : "  " + s.first_mismatch[i]) << "\n";
        }
    }
    if (g.timings) std::cerr << "elapsed_ms " << ms_since(t0) << "\n";
    return ok ? 0 : 1;
}

void add_spec_flags(CLI::App* sub, Args& g)
{
    sub->add_option("--family", g.family, "P, Pp, Q, Qp, K, Kp, H1..H8 or S");
    sub->add_option("--a", g.a);
    sub->add_option("--b", g.b);
    sub->add_option("--c", g.c);
    sub->add_option("--x", g.x);
    sub->add_option("--y", g.y);
    sub->add_option("--z", g.z);
    sub->add_option("--holes", g.holes, "comma-separated hole sequence; \"\" for none");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lozenge tiling counts for halved hexagons with triangular holes"};
    app.require_subcommand(1);
    Args g;
    const std::vector<std::string> value_formats = {"human", "json"};

    auto* count = app.add_subcommand("count", "count tilings with the transfer engine");
    add_spec_flags(count, g);
    count->add_option("--from-json", g.from_json, "region JSON file");
    count->add_option("--format", g.format)->check(CLI::IsMember(value_formats));
    count->add_flag("--timings", g.timings);

    auto* formula = app.add_subcommand("formula", "evaluate the closed-form product");
    add_spec_flags(formula, g);
    formula->add_option("--from-json", g.from_json, "region JSON file");
    formula->add_option("--format", g.format)->check(CLI::IsMember(value_formats));
    formula->add_flag("--timings", g.timings);

    auto* verify = app.add_subcommand("verify", "check formulas and identities against the engine");
    verify->add_option("--suite", g.suite)->check(CLI::IsMember({"family", "kuo", "ciucu", "claims", "all"}));
    verify->add_option("--max", g.max, "largest side parameter and hole entry")->check(CLI::Range(0, 6));
    verify->add_option("--seed", g.seed);
    verify->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--format", g.format)->check(CLI::IsMember(value_formats));
    verify->add_flag("--timings", g.timings);

    auto* sweep = app.add_subcommand("sweep", "formula and engine over a parameter grid");
    add_spec_flags(sweep, g);
    sweep->add_option("--max", g.max)->check(CLI::Range(0, 6));
    sweep->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);
    sweep->add_option("--format", g.format)->check(CLI::IsMember(value_formats));
    sweep->add_flag("--timings", g.timings);

    auto* render = app.add_subcommand("render", "draw a region");
    add_spec_flags(render, g);
    render->add_option("--from-json", g.from_json, "region JSON file");
    render->add_option("--format", g.format)->check(CLI::IsMember({"human", "ascii", "svg", "json"}));

    auto* calibrate = app.add_subcommand("calibrate", "resolve every convention switch against the engine");
    calibrate->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);
    calibrate->add_option("--format", g.format)->check(CLI::IsMember(value_formats));
    calibrate->add_flag("--timings", g.timings);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(g);
        if (formula->parsed()) return cmd_formula(g);
        if (verify->parsed()) return cmd_verify(g);
        if (sweep->parsed()) return cmd_sweep(g);
        if (render->parsed()) return cmd_render(g);
        if (calibrate->parsed()) return cmd_calibrate(g);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.flag << ": " << e.message << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << " (raise RHOMBIL_STATE_CAP)\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
