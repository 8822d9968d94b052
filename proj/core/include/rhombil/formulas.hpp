#pragma once

#include "rhombil/combinat.hpp"
#include "rhombil/region_spec.hpp"

namespace rhombil {

// Every reading of the printed formulas that the oracle had to settle.
// Defaults are the frozen choices; calibrate_geometry flips one at a time.
struct Conventions {
    H2Reading h2 = H2Reading::Skip;

    // Upper limit of the leading product in the weighted P formula.
    enum class PprimeLimit { A, B, C } pprime_limit = PprimeLimit::A;

    // Five-entry sequence in the two-hole H3 formula.
    enum class OddSeq { DropLeading, PadTrailing } odd_seq = OddSeq::DropLeading;

    // Second P' subscript in H8.
    enum class H8Sub { Z, Y } h8_sub = H8Sub::Z;

    // P_{y, y+2a-1, b} in H2/H4 (Shifted) versus P_{y, y+2a, b} (Printed).
    enum class H24Sub { Shifted, Printed } h24_sub = H24Sub::Shifted;

    // s_{2i-3} (Shifted) versus s_{2i-1} (Printed) in the 2k-hole T groups.
    enum class GIndex { Shifted, Printed } g_index = GIndex::Shifted;

    // H3 with 2k holes: Q'(0,a,y)Q'(a..+z) (Parallel) versus the printed pair.
    enum class H3Multi { Parallel, Printed } h3_multi = H3Multi::Parallel;

    // Trapezoid sequences must have even length; optionally pad a trailing 0.
    bool pad_odd_q = false;
};

Rational formula_P(int a, int b, int c);
Rational formula_Pprime(int a, int b, int c, const Conventions& cv = {});

Rational formula_Q(const HoleSeq& t, const Conventions& cv = {});
Rational formula_Qprime(const HoleSeq& t, const Conventions& cv = {});
Rational formula_K(const HoleSeq& t, const Conventions& cv = {});
Rational formula_Kprime(const HoleSeq& t, const Conventions& cv = {});

// m = 1..8. Odd-length a gets a trailing 0; empty a is (0,0).
// Throws FormulaSingular outside the family's domain.
Rational formula_H(int m, int x, int y, int z, const HoleSeq& a, const Conventions& cv = {});
bool h_in_domain(int m, int x, int y, int z, const HoleSeq& a);

// Symmetric hexagon. Zero outside 2E(a)-1 <= z <= 2y+2E(a)+1.
Rational formula_S(int x, int y, int z, const HoleSeq& a, const Conventions& cv = {});

// The two H factors of the symmetric hexagon for one parity case.
struct SFactorization {
    int parity_case = 0;  // 1..4
    Integer prefactor;    // 2^{y+a2+...+an}
    RegionSpec first;     // H2 (cases 1,2) or H5 (cases 3,4)
    RegionSpec second;    // H3 (cases 1,2) or H8 (cases 3,4)
    bool degenerate = false;  // some parameter negative: no tilings
};
SFactorization s_factorization(int x, int y, int z, const HoleSeq& a);

struct FormulaResult {
    RegionSpec spec;
    Rational value;
};
FormulaResult evaluate(const RegionSpec& spec, const Conventions& cv = {});

} // namespace rhombil
