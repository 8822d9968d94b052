#pragma once

#include "rhombil/engine.hpp"
#include "rhombil/formulas.hpp"
#include "rhombil/lattice.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rhombil {

struct VerdictRecord {
    std::string identity;  // what was compared, e.g. "formula=engine", "recur1"
    std::string point;     // grid point, e.g. "H1(0,1,1;1,1)"
    Rational lhs = 0;      // formula side
    Rational rhs = 0;      // oracle side
    bool pass = false;
    bool skipped = false;  // singular point or resource limit; never a pass
    std::string note;

    Rational delta() const { return lhs - rhs; }
};

std::string to_json_line(const VerdictRecord& r);

struct VerifyOptions {
    int jobs = 1;
    EngineOptions engine = EngineOptions::from_env();
    Conventions conventions;
    GeometryConventions geometry;
};

// P uses a<=b<=max_param, c<=max_param. Q/K use sequences only. H uses
// x,y,z in [min_param, max_param]. S uses x,y <= max_param, entries from
// max(min_entry,1), and every z of matching parity up to 2y+2E(a)+3.
struct GridSpec {
    Family family = Family::P;
    int min_param = 0;
    int max_param = 2;
    std::vector<int> lengths = {2};
    int min_entry = 0;
    int max_entry = 2;
};

std::vector<RegionSpec> enumerate(const GridSpec& g);
std::vector<HoleSeq> sequences(const std::vector<int>& lengths, int min_entry, int max_entry);

// formula vs count_tilings per point, plus the reference counter on small
// regions and the integer/dyadic check.
std::vector<VerdictRecord> verify_family(const GridSpec& g, const VerifyOptions& opt = {});
std::vector<VerdictRecord> verify_points(const std::vector<RegionSpec>& pts, const VerifyOptions& opt = {});

struct KuoGrid {
    int family = 1;          // 1 or 5 for the printed recurrences; any H for the engine check
    int max_param = 3;       // formula recurrence over 1..max_param
    int engine_max = 2;      // engine identity over 1..engine_max
    std::vector<HoleSeq> seqs;
    std::size_t engine_limit = 0;  // 0 = every engine point
};

std::vector<VerdictRecord> verify_kuo(const KuoGrid& g, const VerifyOptions& opt = {});

std::vector<VerdictRecord> verify_ciucu(const GridSpec& g, const VerifyOptions& opt = {});

std::vector<VerdictRecord> verify_claims(int samples, std::uint64_t seed);

// H(x,y,z,(a1,a2,a3)) = H(x,y,z,(a1,a2,a3,0)) by formula, and by engine for
// points whose regions fit `engine_max`.
std::vector<VerdictRecord> verify_padding(int family, int max_param, int max_entry, int engine_max,
                                          const VerifyOptions& opt = {});

// The x=0, y=0, z=0 splittings of H1 and H5 into trapezoid factors, both at
// formula level and against engine counts.
std::vector<VerdictRecord> verify_base_cases(int max_param, const std::vector<HoleSeq>& seqs,
                                             const VerifyOptions& opt = {});

struct SwitchOutcome {
    std::string name;
    std::vector<std::string> variants;
    std::vector<bool> passed;
    std::vector<std::string> first_mismatch;
    std::string frozen;  // variant the library ships with

    int passing() const;
    std::string chosen() const;  // the single passing variant, or ""
    bool resolved() const { return passing() == 1; }
};

struct CalibrationReport {
    std::vector<SwitchOutcome> switches;
    bool all_resolved() const;
};

CalibrationReport calibrate_geometry(const VerifyOptions& opt = {});
// Throws NoVariantPasses or AmbiguousCalibration.
void require_resolved(const CalibrationReport& rep);

struct Summary {
    std::size_t total = 0, passed = 0, failed = 0, skipped = 0;
};
Summary summarize(const std::vector<VerdictRecord>& recs);
std::string summary_table(const std::vector<VerdictRecord>& recs);

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace rhombil
