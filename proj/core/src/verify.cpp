#include "rhombil/verify.hpp"

#include "rhombil/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace rhombil {

using json = nlohmann::ordered_json;

std::string to_json_line(const VerdictRecord& r)
{
    json j;
    j["identity"] = r.identity;
    j["point"] = r.point;
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
    j["pass"] = r.pass;
    j["skipped"] = r.skipped;
    j["delta"] = to_string(r.delta());
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn)
{
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<HoleSeq> sequences(const std::vector<int>& lengths, int min_entry, int max_entry)
{
    std::vector<HoleSeq> out;
    for (int len : lengths) {
        HoleSeq s(len, min_entry);
        while (true) {
            out.push_back(s);
            int i = len - 1;
            while (i >= 0 && s[i] == max_entry) s[i--] = min_entry;
            if (i < 0) break;
            ++s[i];
        }
    }
    return out;
}

std::vector<RegionSpec> enumerate(const GridSpec& g)
{
    std::vector<RegionSpec> pts;
    RegionSpec s;
    s.family = g.family;
    switch (g.family) {
    case Family::P: case Family::Pp:
        for (int a = g.min_param; a <= g.max_param; ++a)
            for (int b = a; b <= g.max_param; ++b)
                for (int c = g.min_param; c <= g.max_param; ++c) {
                    s.a = a, s.b = b, s.c = c;
                    pts.push_back(s);
                }
        break;
    case Family::Q: case Family::Qp: case Family::K: case Family::Kp:
        for (const HoleSeq& t : sequences(g.lengths, g.min_entry, g.max_entry)) {
            s.seq = t;
            pts.push_back(s);
        }
        break;
    case Family::S:
        for (const HoleSeq& a : sequences(g.lengths, std::max(g.min_entry, 1), g.max_entry))
            for (int x = g.min_param; x <= g.max_param; ++x)
                for (int y = g.min_param; y <= g.max_param; ++y)
                    for (int z = x % 2; z <= 2 * y + 2 * static_cast<int>(seq_E(a)) + 3; z += 2) {
                        s.x = x, s.y = y, s.z = z, s.seq = a;
                        try {
                            build_S(x, y, z, a);
                        } catch (const BadParameters&) {
                            continue;  // holes would stick out of the hexagon
                        }
                        pts.push_back(s);
                    }
        break;
    default:
        for (const HoleSeq& a : sequences(g.lengths, g.min_entry, g.max_entry))
            for (int x = g.min_param; x <= g.max_param; ++x)
                for (int y = g.min_param; y <= g.max_param; ++y)
                    for (int z = g.min_param; z <= g.max_param; ++z) {
                        s.x = x, s.y = y, s.z = z, s.seq = a;
                        pts.push_back(s);
                    }
        break;
    }
    return pts;
}

namespace {

VerdictRecord compare(std::string identity, std::string point, const Rational& lhs, const Rational& rhs)
{
    VerdictRecord r;
    r.identity = std::move(identity);
    r.point = std::move(point);
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = lhs == rhs;
    return r;
}

VerdictRecord skipped(std::string identity, std::string point, std::string why)
{
    VerdictRecord r;
    r.identity = std::move(identity);
    r.point = std::move(point);
    r.skipped = true;
    r.note = std::move(why);
    return r;
}

std::string seq_str(const HoleSeq& s)
{
    std::string r = "(";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + ")";
}

std::string xyz_str(int m, int x, int y, int z, const HoleSeq& a)
{
    return "H" + std::to_string(m) + "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ";" +
           seq_str(a).substr(1);
}

HoleSeq cat(std::initializer_list<HoleSeq> parts)
{
    HoleSeq r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

Rational engine_count(const Region& r, const VerifyOptions& opt)
{
    return count_tilings(r, opt.engine);
}

// One grid point: formula, engine, reference counter, value type.
std::vector<VerdictRecord> check_point(const RegionSpec& s, const VerifyOptions& opt)
{
    std::vector<VerdictRecord> out;
    const std::string pt = describe(s);
    Rational f;
    try {
        f = evaluate(s, opt.conventions).value;
    } catch (const FormulaSingular& e) {
        out.push_back(skipped("formula=engine", pt, e.what()));
        return out;
    }
    Region reg;
    try {
        reg = build(s, opt.geometry);
    } catch (const Error& e) {
        out.push_back(skipped("formula=engine", pt, std::string("no region: ") + e.what()));
        return out;
    }
    Rational c;
    try {
        c = engine_count(reg, opt);
    } catch (const ResourceLimit& e) {
        out.push_back(skipped("formula=engine", pt, e.what()));
        return out;
    }
    VerdictRecord v = compare("formula=engine", pt, f, c);
    const bool weighted = is_weighted(s.family);
    const bool typed = weighted ? is_dyadic(f) && f >= 0 : f.get_den() == 1 && f >= 0;
    if (!typed) {
        v.pass = false;
        v.note = weighted ? "value is not a non-negative dyadic rational" : "value is not a non-negative integer";
    }
    out.push_back(std::move(v));
    if (reg.cells.size() <= kReferenceCap)
        out.push_back(compare("engine=reference", pt, c, count_tilings_reference(reg)));
    return out;
}

} // namespace

std::vector<VerdictRecord> verify_points(const std::vector<RegionSpec>& pts, const VerifyOptions& opt)
{
    std::vector<std::vector<VerdictRecord>> per(pts.size());
    parallel_for(pts.size(), opt.jobs, [&](std::size_t i) { per[i] = check_point(pts[i], opt); });
    std::vector<VerdictRecord> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<VerdictRecord> verify_family(const GridSpec& g, const VerifyOptions& opt)
{
    if (g.family == Family::S) return verify_ciucu(g, opt);
    return verify_points(enumerate(g), opt);
}

std::vector<VerdictRecord> verify_kuo(const KuoGrid& g, const VerifyOptions& opt)
{
    const int m = g.family;
    const std::string rec_name = m == 5 ? "recur2" : m == 1 ? "recur1" : "recurrence";
    struct Job {
        int x, y, z;
        const HoleSeq* a;
        bool engine;
    };
    std::vector<Job> jobs;
    std::size_t engine_points = 0;
    for (const HoleSeq& a : g.seqs)
        for (int x = 1; x <= g.max_param; ++x)
            for (int y = 1; y <= g.max_param; ++y)
                for (int z = 1; z <= g.max_param; ++z) {
                    bool eng = x <= g.engine_max && y <= g.engine_max && z <= g.engine_max;
                    if (eng && g.engine_limit && engine_points >= g.engine_limit) eng = false;
                    engine_points += eng;
                    jobs.push_back({x, y, z, &a, eng});
                }

    std::vector<std::vector<VerdictRecord>> per(jobs.size());
    parallel_for(jobs.size(), opt.jobs, [&](std::size_t i) {
        const auto [x, y, z, ap, eng] = jobs[i];
        const HoleSeq& a = *ap;
        const std::string pt = xyz_str(m, x, y, z, a);
        auto F = [&](int X, int Y, int Z) { return formula_H(m, X, Y, Z, a, opt.conventions); };
        auto& out = per[i];

        bool formula_ok = true;
        try {
            Rational lhs = F(x, y, z) * F(x, y - 1, z - 1);
            Rational rhs = F(x, y - 1, z) * F(x, y, z - 1) + F(x + 1, y - 1, z - 1) * F(x - 1, y, z);
            out.push_back(compare(rec_name, pt, lhs, rhs));
            formula_ok = out.back().pass;
        } catch (const FormulaSingular& e) {
            out.push_back(skipped(rec_name, pt, e.what()));
        }
        if (!eng) return;

        const Region G = build_H(m, x, y, z, a, opt.geometry);
        const KuoQuad q = corner_quad(G);
        auto M = [&](KuoTerm t) {
            Reduction red = reduce_forced(kuo_corner_delete(G, q, t));
            return red.factor == 0 ? Rational(0) : red.factor * engine_count(red.region, opt);
        };
        const Rational mg = engine_count(G, opt), uv = M(KuoTerm::UV), ws = M(KuoTerm::WS), us = M(KuoTerm::US),
                       vw = M(KuoTerm::VW), uvws = M(KuoTerm::UVWS);
        VerdictRecord k = compare("kuo-engine", pt, mg * uvws, uv * ws + us * vw);
        if (k.pass && !formula_ok) k.note = "engine identity holds; recurrence failure lies in the formulas";
        out.push_back(k);

        // Each deleted graph is the family region at shifted parameters.
        const struct {
            KuoTerm t;
            const char* name;
            int X, Y, Z;
            const Rational* value;
        } terms[] = {{KuoTerm::UV, "uv", x, y - 1, z, &uv},
                     {KuoTerm::WS, "ws", x, y, z - 1, &ws},
                     {KuoTerm::US, "us", x + 1, y - 1, z - 1, &us},
                     {KuoTerm::VW, "vw", x - 1, y, z, &vw},
                     {KuoTerm::UVWS, "uvws", x, y - 1, z - 1, &uvws}};
        for (const auto& t : terms) {
            const std::string id = std::string("kuo-term-") + t.name;
            try {
                out.push_back(compare(id, pt, formula_H(m, t.X, t.Y, t.Z, a, opt.conventions), *t.value));
            } catch (const FormulaSingular& e) {
                out.push_back(skipped(id, pt, e.what()));
            }
        }
    });
    std::vector<VerdictRecord> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<VerdictRecord> verify_ciucu(const GridSpec& g, const VerifyOptions& opt)
{
    GridSpec gs = g;
    gs.family = Family::S;
    const std::vector<RegionSpec> pts = enumerate(gs);
    std::vector<std::vector<VerdictRecord>> per(pts.size());
    parallel_for(pts.size(), opt.jobs, [&](std::size_t i) {
        const RegionSpec& s = pts[i];
        auto& out = per[i];
        const SFactorization fz = s_factorization(s.x, s.y, s.z, s.seq);
        const std::string pt = describe(s) + " case " + std::to_string(fz.parity_case);
        const Region S = build_S(s.x, s.y, s.z, s.seq, opt.geometry);
        const Rational ms = engine_count(S, opt);
        try {
            out.push_back(compare("formula=engine", pt, formula_S(s.x, s.y, s.z, s.seq, opt.conventions), ms));
        } catch (const FormulaSingular& e) {
            out.push_back(skipped("formula=engine", pt, e.what()));
        }
        if (fz.degenerate) {
            out.back().note = "outside the tileable range";
            return;
        }
        const CiucuSplit sp = ciucu_split(S);
        const Rational mp = engine_count(sp.plus, opt), mm = engine_count(sp.minus, opt);
        Rational two_k = 1;
        mpz_mul_2exp(two_k.get_num_mpz_t(), two_k.get_num_mpz_t(), static_cast<unsigned long>(sp.k));
        out.push_back(compare("ciucu-split", pt, two_k * mp * mm, ms));
        out.push_back(compare("ciucu-k", pt, Rational(fz.prefactor), two_k));
        auto factor = [&](const char* id, const RegionSpec& h, const Rational& count) {
            try {
                out.push_back(compare(id, pt + " " + describe(h), evaluate(h, opt.conventions).value, count));
            } catch (const FormulaSingular& e) {
                out.push_back(skipped(id, pt + " " + describe(h), e.what()));
            }
        };
        // H2 sits west of the axis in cases 1 and 2. H5 sits east in cases 3
        // and 4, unless the hole array has eaten the top axis cell.
        const bool top_axis = S.contains(Cell{s.x % 2, 0});
        const bool first_west = fz.parity_case <= 2 || !top_axis;
        factor("ciucu-west", first_west ? fz.first : fz.second, mp);
        factor("ciucu-east", first_west ? fz.second : fz.first, mm);
    });
    std::vector<VerdictRecord> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<VerdictRecord> verify_padding(int m, int max_param, int max_entry, int engine_max, const VerifyOptions& opt)
{
    struct Job {
        int x, y, z;
        HoleSeq a;
    };
    std::vector<Job> jobs;
    for (const HoleSeq& a : sequences({3}, 0, max_entry))
        for (int x = 0; x <= max_param; ++x)
            for (int y = 0; y <= max_param; ++y)
                for (int z = 0; z <= max_param; ++z) jobs.push_back({x, y, z, a});
    std::vector<std::vector<VerdictRecord>> per(jobs.size());
    parallel_for(jobs.size(), opt.jobs, [&](std::size_t i) {
        const auto& [x, y, z, a] = jobs[i];
        const HoleSeq padded = cat({a, {0}});
        const std::string pt = xyz_str(m, x, y, z, a);
        try {
            const Rational four = formula_H(m, x, y, z, padded, opt.conventions);
            per[i].push_back(compare("padding-formula", pt, formula_H(m, x, y, z, a, opt.conventions), four));
            if (x <= engine_max && y <= engine_max && z <= engine_max)
                per[i].push_back(compare("padding-engine", pt, four, engine_count(build_H(m, x, y, z, a, opt.geometry), opt)));
        } catch (const FormulaSingular& e) {
            per[i].push_back(skipped("padding-formula", pt, e.what()));
        }
    });
    std::vector<VerdictRecord> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<VerdictRecord> verify_base_cases(int max_param, const std::vector<HoleSeq>& seqs, const VerifyOptions& opt)
{
    struct Job {
        int m;
        char which;
        int u, v;
        HoleSeq a;
    };
    std::vector<Job> jobs;
    for (int m : {1, 5})
        for (char which : {'x', 'y', 'z'})
            for (const HoleSeq& a : seqs)
                for (int u = 0; u <= max_param; ++u)
                    for (int v = 0; v <= max_param; ++v) jobs.push_back({m, which, u, v, a});

    const Conventions& cv = opt.conventions;
    std::vector<std::vector<VerdictRecord>> per(jobs.size());
    parallel_for(jobs.size(), opt.jobs, [&](std::size_t i) {
        const auto& [m, which, u, v, a0] = jobs[i];
        HoleSeq a = a0;
        if (a.size() % 2) a.push_back(0);
        const int a1 = a.front();
        const HoleSeq body(a.begin(), a.end() - 1);  // a without its last entry
        const int last = a.back();
        int x = u, y = v, z = 0;
        Rational product;
        // West factor: Q for H1, K' with a leading (0, a1+1) for H5.
        auto west = [&](const HoleSeq& rest) -> Rational {
            if (m == 1) return formula_Q(cat({{0}, rest}), cv);
            Rational p = 1;
            mpz_mul_2exp(p.get_num_mpz_t(), p.get_num_mpz_t(), static_cast<unsigned long>(a1));
            return p * formula_Kprime(cat({{0, a1 + 1}, HoleSeq(rest.begin() + 1, rest.end())}), cv);
        };
        if (which == 'x') {
            x = 0, y = u, z = v;
            product = west(cat({a, {u}})) * formula_Q(cat({body, {last + v}}), cv);
        } else if (which == 'y') {
            x = u, y = 0, z = v;
            product = west(body) * formula_Q(cat({a, {u, v}}), cv);
        } else {
            x = u, y = v, z = 0;
            product = west(cat({body, {last + u, v}})) * formula_Q(a, cv);
        }
        const std::string id = std::string("base-") + which + "0-H" + std::to_string(m);
        const std::string pt = xyz_str(m, x, y, z, a0);
        try {
            per[i].push_back(compare(id, pt, formula_H(m, x, y, z, a0, cv), product));
        } catch (const FormulaSingular& e) {
            per[i].push_back(skipped(id, pt, e.what()));
            return;
        }
        const Region reg = build_H(m, x, y, z, a0, opt.geometry);
        per[i].push_back(compare(id + "-engine", pt, product, engine_count(reg, opt)));
        if (m == 1 && which == 'x' && a.size() == 2) {
            // Two halved hexagons: below the hole line and above it.
            const Rational halves = formula_P(a[1] + z, a[1] + z, a[0]) * formula_P(y, y + 2 * a[0], a[1]);
            per[i].push_back(compare("base-x0-H1-halved", pt, halves, engine_count(reg, opt)));
        }
    });
    std::vector<VerdictRecord> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<VerdictRecord> verify_claims(int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    // Rational x with small denominator keeps Pochhammer factors non-zero.
    auto rat = [&](long lo, long hi) {
        const long q = uni(1, 4);
        Rational r(uni(lo * q, hi * q), q);
        r.canonicalize();
        return r;
    };
    auto fact = [](long n) { return Rational(factorial(n)); };
    std::vector<VerdictRecord> out;

    auto run = [&](const std::string& name, const std::function<VerdictRecord()>& draw) {
        int done = 0, attempts = 0;
        while (done < samples && attempts < samples * 20) {
            ++attempts;
            try {
                VerdictRecord r = draw();
                r.identity = name;
                out.push_back(std::move(r));
                ++done;
            } catch (const ZeroDenominator&) {
                // singular draw; resample
            }
        }
    };

    run("ratio-P-diagonal", [&] {
        const long x = uni(1, 8), a = uni(0, 8);
        Rational lhs = formula_P(x, x, a) / formula_P(x - 1, x - 1, a);
        Rational rhs = Rational(a + x, x) * fact(2 * a + 2 * x - 1) / fact(2 * a + x) * fact(x) / fact(2 * x - 1);
        rhs.canonicalize();
        return compare("", "x=" + std::to_string(x) + " a=" + std::to_string(a), lhs, rhs);
    });
    run("ratio-T-shift-x", [&] {
        const Rational x = rat(2, 10);
        const long m = uni(0, 4), n = uni(0, 2 * m + 4);
        Rational lhs = trapezoid_T(x, n, m) / trapezoid_T(x - 1, n, m);
        Rational rhs = pochhammer(x + n - m, m) / pochhammer(x - 1, m);
        return compare("", "x=" + to_string(x) + " n=" + std::to_string(n) + " m=" + std::to_string(m), lhs, rhs);
    });
    run("ratio-Q-last-entry", [&] {
        const long l = uni(1, 3);
        HoleSeq t(2 * l);
        for (int& v : t) v = static_cast<int>(uni(0, 3));
        HoleSeq t1 = t;
        ++t1.back();
        Rational lhs = formula_Q(t1) / formula_Q(t);
        const long s2l = seq_s(t, 2 * l), E = seq_E(t);
        Rational rhs = Rational(s2l + 1) * fact(2 * s2l + 1) / fact(2 * E + 1);
        for (long i = 1; i <= l; ++i) rhs *= fact(s2l - seq_s(t, 2 * i - 1)) / fact(s2l + seq_s(t, 2 * i - 1) + 1);
        for (long i = 1; i <= l - 1; ++i) rhs *= fact(s2l + seq_s(t, 2 * i) + 1) / fact(s2l - seq_s(t, 2 * i));
        return compare("", "t=" + seq_str(t), lhs, rhs);
    });
    run("ratio-Q-third-entry", [&] {
        HoleSeq t = {static_cast<int>(uni(0, 3)), static_cast<int>(uni(0, 3)), static_cast<int>(uni(1, 3)),
                     static_cast<int>(uni(0, 3))};
        HoleSeq d = t;
        --d[2];
        Rational lhs = formula_Q(t) / formula_Q(d);
        const long s1 = seq_s(t, 1), s2 = seq_s(t, 2), s3 = seq_s(t, 3), s4 = seq_s(t, 4);
        Rational rhs = Rational(s4, s3) * fact(2 * s4 - 1) * fact(2 * s3);
        rhs.canonicalize();
        rhs *= fact(s4 - s1 - 1) * fact(s3 - s2 - 1) * fact(s4 + s2) * fact(s3 + s1);
        rhs /= fact(s4 - s2 - 1) * fact(s3 - s1 - 1) * fact(s4 + s1) * fact(s3 + s2) * fact(s4 + s3 - 1) * fact(s4 + s3);
        return compare("", "t=" + seq_str(t), lhs, rhs);
    });
    run("ratio-V-shift-n", [&] {
        const Rational x = rat(1, 10);
        const long m = uni(0, 4), n = uni(0, 2 * m + 4);
        Rational lhs = trapezoid_V(x, n, m) / trapezoid_V(x, n - 1, m);
        Rational rhs = skip_pochhammer(x + 2 * n - 2 * m, m);
        return compare("", "x=" + to_string(x) + " n=" + std::to_string(n) + " m=" + std::to_string(m), lhs, rhs);
    });
    run("ratio-V-shift-x", [&] {
        const Rational x = rat(3, 12);
        const long m = uni(0, 4), n = uni(0, 2 * m + 4);
        Rational lhs = trapezoid_V(x, n, m) / trapezoid_V(x - 2, n, m);
        Rational rhs = skip_pochhammer(x + 2 * n - 2 * m, m) / skip_pochhammer(x - 2, m);
        return compare("", "x=" + to_string(x) + " n=" + std::to_string(n) + " m=" + std::to_string(m), lhs, rhs);
    });
    run("ratio-T-shift-n", [&] {
        const Rational x = rat(1, 10);
        const long m = uni(0, 4), n = uni(0, 2 * m + 4);
        Rational lhs = trapezoid_T(x, n, m) / trapezoid_T(x, n - 1, m);
        Rational rhs = pochhammer(x + n - m, m);
        return compare("", "x=" + to_string(x) + " n=" + std::to_string(n) + " m=" + std::to_string(m), lhs, rhs);
    });
    return out;
}

Summary summarize(const std::vector<VerdictRecord>& recs)
{
    Summary s;
    for (const auto& r : recs) {
        ++s.total;
        if (r.skipped) ++s.skipped;
        else if (r.pass) ++s.passed;
        else ++s.failed;
    }
    return s;
}

std::string summary_table(const std::vector<VerdictRecord>& recs)
{
    std::map<std::string, Summary> by;
    for (const auto& r : recs) {
        Summary& s = by[r.identity];
        ++s.total;
        if (r.skipped) ++s.skipped;
        else if (r.pass) ++s.passed;
        else ++s.failed;
    }
    std::ostringstream os;
    os << std::left << std::setw(26) << "identity" << std::right << std::setw(8) << "total" << std::setw(8) << "pass"
       << std::setw(8) << "fail" << std::setw(8) << "skip" << "\n";
    const Summary all = summarize(recs);
    for (const auto& [name, s] : by)
        os << std::left << std::setw(26) << name << std::right << std::setw(8) << s.total << std::setw(8) << s.passed
           << std::setw(8) << s.failed << std::setw(8) << s.skipped << "\n";
    os << std::left << std::setw(26) << "TOTAL" << std::right << std::setw(8) << all.total << std::setw(8) << all.passed
       << std::setw(8) << all.failed << std::setw(8) << all.skipped << "\n";
    return os.str();
}

} // namespace rhombil
