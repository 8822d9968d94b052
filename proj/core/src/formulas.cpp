#include "rhombil/formulas.hpp"

#include "rhombil/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rhombil {

namespace {

Rational frac(const Integer& n, const Integer& d)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational quot(const Rational& num, const Rational& den, const char* what)
{
    if (den == 0) throw ZeroDenominator(std::string("zero divisor in ") + what);
    return num / den;
}

Rational pow2(long e)
{
    Rational r = 1;
    if (e >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    return r;
}

Rational Tr(long x, long n, long m) { return trapezoid_T(Rational(x), n, m); }
Rational Vr(long x, long n, long m) { return trapezoid_V(Rational(x), n, m); }

HoleSeq cat(std::initializer_list<HoleSeq> parts)
{
    HoleSeq r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

HoleSeq tail(const HoleSeq& a) { return HoleSeq(a.begin() + 1, a.end()); }

// Pair product shared by all four trapezoid formulas: i<j over 1..2l, odd gap
// divides by H(s_j+s_i+shift_odd), even gap multiplies by H(s_j+s_i+shift_even).
Rational pair_product(const HoleSeq& t, long shift_odd, long shift_even)
{
    const long n = static_cast<long>(t.size());
    std::vector<long> s(n + 1, 0);
    for (long k = 1; k <= n; ++k) s[k] = s[k - 1] + t[k - 1];
    Rational r = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) {
            if ((j - i) % 2)
                r *= frac(hyperfactorial(s[j] - s[i]), hyperfactorial(s[j] + s[i] + shift_odd));
            else
                r *= frac(hyperfactorial(s[j] + s[i] + shift_even), hyperfactorial(s[j] - s[i]));
        }
    return r;
}

HoleSeq even_length(const HoleSeq& t, const Conventions& cv, const char* who)
{
    check_entries(t);
    if (t.size() % 2 == 0) return t;
    if (!cv.pad_odd_q) throw OddLength(std::string(who) + ": sequence of odd length " + std::to_string(t.size()));
    HoleSeq r = t;
    r.push_back(0);
    return r;
}

Rational odd_seq_Qprime(const HoleSeq& t, const Conventions& cv)
{
    if (t.size() % 2 == 0) return formula_Qprime(t, cv);
    if (cv.odd_seq == Conventions::OddSeq::DropLeading) return formula_Qprime(tail(t), cv);
    return formula_Qprime(cat({t, {0}}), cv);
}

Rational G_product(int x, int y, int z, const HoleSeq& a, long off, const Conventions& cv)
{
    const long k = static_cast<long>(a.size()) / 2;
    const long s2k = seq_s(a, 2 * k);
    const long back = cv.g_index == Conventions::GIndex::Shifted ? 2 : 0;
    Rational r = 1;
    for (long i = 2; i <= k; ++i) {
        const long m = seq_o(a, i);
        const long n = a[2 * i - 3] + m - 1;
        const long ei = seq_e(a, i);
        const long si = seq_s(a, 2 * i - 1 - back) + s2k + off;
        r *= quot(Tr(x + z + ei + 1, n, m), Tr(x + y + ei + 1, n, m), "G");
        r *= quot(Tr(y + ei + 1, n, m), Tr(z + ei + 1, n, m), "G");
        r *= quot(Tr(x + y + si, n, m), Tr(x + z + si, n, m), "G");
        r *= quot(Tr(z + si, n, m), Tr(y + si, n, m), "G");
    }
    return r;
}

Rational T_block(long x, long y, long z, long a, long b, long c1, long c2)
{
    Rational num = Tr(x + b + 1, y + a - 1, a) * Tr(x + z + a + b + c1, y + a - 1, a)
                 * Tr(2 * a + b + c2, y + b - 1, b) * Tr(z + 1, y + b - 1, b);
    Rational den = Tr(b + 1, y + a - 1, a) * Tr(z + a + b + c1, y + a - 1, a)
                 * Tr(x + 2 * a + b + c2, y + b - 1, b) * Tr(x + z + 1, y + b - 1, b);
    return quot(num, den, "T block");
}

// H5..H8 share this shape with different V/T shifts.
Rational VT_block(long x, long y, long z, long a, long b, long v0, long vn, long tn, long c2)
{
    Rational num = Vr(v0, vn, y) * Tr(x + b + 1, tn, y) * Tr(2 * a + b + c2, y + b - 1, b) * Tr(z + 1, y + b - 1, b);
    Rational den = Vr(2 * x + v0, vn, y) * Tr(b + 1, tn, y) * Tr(x + 2 * a + b + c2, y + b - 1, b) * Tr(x + z + 1, y + b - 1, b);
    return quot(num, den, "V/T block");
}

long h24_p(const Conventions& cv) { return cv.h24_sub == Conventions::H24Sub::Shifted ? 1 : 0; }

Rational Pp_h8(long z, long y, long b, long a, const Conventions& cv)
{
    long second = (cv.h8_sub == Conventions::H8Sub::Z ? z : y) + b - 1;
    return formula_Pprime(z + b - 1, second, a, cv);
}

Rational two_hole(int m, long x, long y, long z, long a, long b, const Conventions& cv)
{
    auto P = [](long p, long q, long r) { return formula_P(p, q, r); };
    auto Pp = [&](long p, long q, long r) { return formula_Pprime(p, q, r, cv); };
    auto Q = [&](const HoleSeq& t) { return formula_Q(t, cv); };
    auto Qp = [&](const HoleSeq& t) { return formula_Qprime(t, cv); };
    auto K = [&](const HoleSeq& t) { return formula_K(t, cv); };
    auto Kp = [&](const HoleSeq& t) { return formula_Kprime(t, cv); };
    const HoleSeq t4 = {int(a), int(b), int(x), int(y + z)};

    switch (m) {
    case 1:
        return P(y, y + 2 * a, b) * P(z + b, z + b, a) * Q(t4) / P(y + z + b, y + z + b, a)
             * T_block(x, y, z, a, b, 2, 2);
    case 2:
        return P(y, y + 2 * a - h24_p(cv), b) * P(z + b - 1, z + b - 1, a) * K(t4)
             / P(y + z + b - 1, y + z + b - 1, a) * T_block(x, y, z, a, b, 1, 1);
    case 3:
        return Pp(y, y + 2 * a, b) * Pp(z + b, z + b, a) * odd_seq_Qprime({0, int(a), int(b), int(x), int(y + z)}, cv)
             / Pp(y + z + b, y + z + b, a) * T_block(x, y, z, a, b, 1, 1);
    case 4:
        return Pp(y, y + 2 * a - h24_p(cv), b) * Pp(z + b - 1, z + b - 1, a) * Kp(t4)
             / Pp(y + z + b - 1, y + z + b - 1, a) * T_block(x, y, z, a, b, 0, 0);
    case 5:
        return Pp(y, y + 2 * a + 1, b) * P(z + b, z + b, a) * Q(t4) / P(y + z + b, y + z + b, a)
             * VT_block(x, y, z, a, b, 2 * a + 2 * b + 3, y + z - 1, y + z + 2 * a, 2);
    case 6:
        return Pp(y, y + 2 * a, b) * P(z + b - 1, z + b - 1, a) * K(t4) / P(y + z + b - 1, y + z + b - 1, a)
             * VT_block(x, y, z, a, b, 2 * a + 2 * b + 3, y + z - 2, y + z + 2 * a - 1, 1);
    case 7:
        return P(y, y + 2 * a - 1, b) * Pp(z + b, z + b, a) * Qp(t4) / Pp(y + z + b, y + z + b, a)
             * VT_block(x, y, z, a, b, 2 * a + 2 * b + 1, y + z, y + z + 2 * a - 1, 1);
    case 8:
        return P(y, y + 2 * a - 2, b) * Pp_h8(z, y, b, a, cv) * Kp(t4) / Pp(y + z + b - 1, y + z + b - 1, a)
             * VT_block(x, y, z, a, b, 2 * a + 2 * b + 1, y + z - 1, y + z + 2 * a - 2, 0);
    }
    throw BadParameters("H family index " + std::to_string(m));
}

Rational multi_hole(int m, int x, int y, int z, const HoleSeq& a, const Conventions& cv)
{
    auto P = [](long p, long q, long r) { return formula_P(p, q, r); };
    auto Pp = [&](long p, long q, long r) { return formula_Pprime(p, q, r, cv); };
    auto Q = [&](const HoleSeq& t) { return formula_Q(t, cv); };
    auto Qp = [&](const HoleSeq& t) { return formula_Qprime(t, cv); };
    auto K = [&](const HoleSeq& t) { return formula_K(t, cv); };
    auto Kp = [&](const HoleSeq& t) { return formula_Kprime(t, cv); };

    const long O = seq_O(a), E = seq_E(a);
    const Rational base = two_hole(m, x, y, z, O, E, cv);
    HoleSeq last = a;
    last.back() += z;
    const HoleSeq west = cat({{0}, a, {y}});

    switch (m) {
    case 1:
        return base * Q(west) * Q(last) / (P(y, y + 2 * O, E) * P(z + E, z + E, O)) * G_product(x, y, z, a, 2, cv);
    case 2:
        return base * K(west) * K(last) / (P(y, y + 2 * O - h24_p(cv), E) * P(z + E - 1, z + E - 1, O))
             * G_product(x, y, z, a, 1, cv);
    case 3: {
        Rational q = cv.h3_multi == Conventions::H3Multi::Parallel
            ? Qp(west) * Qp(last)
            : odd_seq_Qprime(cat({a, {z}}), cv) * odd_seq_Qprime(cat({{0}, last}), cv);
        return pow2(a[0]) * base * q / (Pp(y, y + 2 * O, E) * Pp(z + E, z + E, O)) * G_product(x, y, z, a, 1, cv);
    }
    case 4:
        return pow2(a[0] - 1) * base * Kp(west) * Kp(last)
             / (Pp(y, y + 2 * O - h24_p(cv), E) * Pp(z + E - 1, z + E - 1, O)) * G_product(x, y, z, a, 0, cv);
    case 5:
        return pow2(a[0]) * base * Kp(cat({{0, a[0] + 1}, tail(a), {y}})) * Q(last)
             / (Pp(y, y + 2 * O + 1, E) * P(z + E, z + E, O)) * G_product(x, y, z, a, 2, cv);
    case 6:
        return pow2(a[0]) * base * Qp(west) * K(last) / (Pp(y, y + 2 * O, E) * P(z + E - 1, z + E - 1, O))
             * G_product(x, y, z, a, 1, cv);
    case 7:
        return base * K(west) * Qp(last) / (P(y, y + 2 * O - 1, E) * Pp(z + E, z + E, O)) * G_product(x, y, z, a, 1, cv);
    case 8:
        return base * Q(cat({{0, a[0] - 1}, tail(a), {y}})) * Kp(last)
             / (P(y, y + 2 * O - 2, E) * Pp_h8(z, y, E, O, cv)) * G_product(x, y, z, a, 0, cv);
    }
    throw BadParameters("H family index " + std::to_string(m));
}

HoleSeq normalise_h(const HoleSeq& a)
{
    HoleSeq r = a;
    if (r.size() % 2) r.push_back(0);
    if (r.empty()) r = {0, 0};
    return r;
}

} // namespace

Rational formula_P(int a, int b, int c)
{
    if (a > b) throw ParameterOrder("P: a=" + std::to_string(a) + " > b=" + std::to_string(b));
    if (a < 0 || c < 0) throw NegativeArgument("P: negative parameter");
    Integer num = 1, den = 1;
    for (long i = 1; i <= a; ++i) {
        for (long j = 1; j <= b - a + 1; ++j) {
            num *= c + i + j - 1;
            den *= i + j - 1;
        }
        for (long j = b - a + 2; j <= b - a + i; ++j) {
            num *= 2 * c + i + j - 1;
            den *= i + j - 1;
        }
    }
    return frac(num, den);
}

Rational formula_Pprime(int a, int b, int c, const Conventions& cv)
{
    Rational p = formula_P(a, b, c);
    long upper = a;
    if (cv.pprime_limit == Conventions::PprimeLimit::B) upper = b;
    if (cv.pprime_limit == Conventions::PprimeLimit::C) upper = c;
    Integer num = 1, den = 1;
    for (long i = 1; i <= upper; ++i) {
        num *= 2 * c + b - a + i;
        den *= c + b - a + i;
    }
    return pow2(-a) * frac(num, den) * p;
}

Rational formula_Q(const HoleSeq& t0, const Conventions& cv)
{
    const HoleSeq t = even_length(t0, cv, "Q");
    const long l = static_cast<long>(t.size()) / 2;
    Rational r = frac(1, hyperfactorial2(2 * seq_E(t) + 1, cv.h2));
    for (long i = 1; i <= l; ++i) {
        const long se = seq_s(t, 2 * i), so = seq_s(t, 2 * i - 1);
        r *= frac(factorial(se), factorial(so));
        r *= frac(hyperfactorial2(2 * se + 1, cv.h2) * hyperfactorial(2 * so + 2),
                      hyperfactorial2(2 * so + 3, cv.h2));
    }
    return r * pair_product(t, 1, 1);
}

Rational formula_Qprime(const HoleSeq& t0, const Conventions& cv)
{
    const HoleSeq t = even_length(t0, cv, "Q'");
    const long l = static_cast<long>(t.size()) / 2;
    Rational r = pow2(-seq_E(t)) * frac(1, hyperfactorial2(2 * seq_E(t) + 1, cv.h2));
    for (long i = 1; i <= l; ++i) {
        const long se = seq_s(t, 2 * i), so = seq_s(t, 2 * i - 1);
        r *= frac(hyperfactorial2(2 * se + 1, cv.h2) * hyperfactorial(2 * so),
                      hyperfactorial2(2 * so + 1, cv.h2));
    }
    return r * pair_product(t, 0, 0);
}

Rational formula_K(const HoleSeq& t0, const Conventions& cv)
{
    const HoleSeq t = even_length(t0, cv, "K");
    if (seq_E(t) < 1) throw FormulaSingular("K: E(t) = 0 has no region");
    const long l = static_cast<long>(t.size()) / 2;
    Rational r = frac(1, hyperfactorial2(2 * seq_E(t), cv.h2));
    for (long i = 1; i <= l; ++i) {
        const long se = seq_s(t, 2 * i), so = seq_s(t, 2 * i - 1);
        r *= frac(hyperfactorial2(2 * se, cv.h2) * hyperfactorial(2 * so + 1),
                      hyperfactorial2(2 * so + 2, cv.h2));
    }
    return r * pair_product(t, 0, 0);
}

Rational formula_Kprime(const HoleSeq& t0, const Conventions& cv)
{
    HoleSeq t = even_length(t0, cv, "K'");
    if (seq_E(t) < 1) throw FormulaSingular("K': E(t) = 0 has no region");
    // A leading (0,0) pair leaves the region unchanged but makes H2(-1) appear.
    while (t.size() > 2 && t[0] == 0 && t[1] == 0) t.erase(t.begin(), t.begin() + 2);
    const long l = static_cast<long>(t.size()) / 2;
    Rational r = frac(1, hyperfactorial2(2 * seq_E(t), cv.h2));
    for (long i = 1; i <= l; ++i) {
        const long se = seq_s(t, 2 * i), so = seq_s(t, 2 * i - 1);
        r *= frac(hyperfactorial2(2 * se - 1, cv.h2) * hyperfactorial(2 * so),
                      hyperfactorial2(2 * so + 1, cv.h2));
    }
    return r * pair_product(t, -1, -1);
}

// z = E(a) = 0: the part below the hole line is empty and only the western
// trapezoid of the z = 0 splitting is left.
static Rational flat_bottom(int m, int x, int y, const HoleSeq& a, const Conventions& cv)
{
    HoleSeq body(a.begin(), a.end() - 1);
    const HoleSeq east = {a.back() + x, y};
    if (m == 2) return formula_K(cat({{0}, body, east}), cv);
    body[0] -= 1;
    return formula_Q(cat({{0}, body, east}), cv);
}

bool h_in_domain(int m, int x, int y, int z, const HoleSeq& a0)
{
    if (m < 1 || m > 8 || x < 0 || y < 0 || z < 0) return false;
    if (std::any_of(a0.begin(), a0.end(), [](int v) { return v < 0; })) return false;
    const HoleSeq a = normalise_h(a0);
    if ((m == 4 || m == 6) && z + seq_E(a) < 1) return false;
    if ((m == 2 || m == 4 || m == 7 || m == 8) && a[0] < 1) return false;
    return true;
}

Rational formula_H(int m, int x, int y, int z, const HoleSeq& a0, const Conventions& cv)
{
    if (m < 1 || m > 8) throw BadParameters("H family index " + std::to_string(m));
    const std::string who = "H" + std::to_string(m);
    if (!h_in_domain(m, x, y, z, a0)) throw FormulaSingular(who + ": parameters outside the formula's domain");
    const HoleSeq a = normalise_h(a0);
    try {
        if ((m == 2 || m == 8) && z + seq_E(a) == 0) return flat_bottom(m, x, y, a, cv);
        if (a.size() == 2) return two_hole(m, x, y, z, a[0], a[1], cv);
        return multi_hole(m, x, y, z, a, cv);
    } catch (const FormulaSingular&) {
        throw;
    } catch (const Error& e) {
        throw FormulaSingular(who + ": " + e.what());
    }
}

SFactorization s_factorization(int x, int y, int z, const HoleSeq& a)
{
    if (a.empty() || std::any_of(a.begin(), a.end(), [](int v) { return v < 1; }))
        throw BadParameters("S: hole entries must be positive");
    if (x < 0 || y < 0 || z < 0) throw BadParameters("S: negative side");
    if ((x - z) % 2) throw ParityMismatch("S: x and z must have the same parity");

    const int E = static_cast<int>(seq_E(a));
    const long rest = std::accumulate(a.begin() + 1, a.end(), 0L);
    const int a1 = a[0];
    SFactorization f;
    f.prefactor = 1;
    mpz_mul_2exp(f.prefactor.get_mpz_t(), f.prefactor.get_mpz_t(), static_cast<unsigned long>(y + rest));

    auto spec = [](Family fam, int X, int Y, int Z, int first, const HoleSeq& a) {
        RegionSpec s;
        s.family = fam;
        s.x = X, s.y = Y, s.z = Z;
        s.seq = a;
        s.seq[0] = first;
        return s;
    };
    const bool x_even = x % 2 == 0, a1_even = a1 % 2 == 0;
    if (x_even && a1_even) {
        f.parity_case = 1;
        f.first = spec(Family::H2, x / 2 + E, y - z / 2 + E, z / 2 - E, a1 / 2, a);
        f.second = spec(Family::H3, x / 2 + E, y - z / 2 + E, z / 2 - E, a1 / 2, a);
    } else if (!x_even && a1_even) {
        f.parity_case = 2;
        f.first = spec(Family::H2, (x - 1) / 2 + E, y - (z - 1) / 2 + E, (z - 1) / 2 - E + 1, a1 / 2, a);
        f.second = spec(Family::H3, (x + 1) / 2 + E, y - (z - 1) / 2 + E - 1, (z - 1) / 2 - E, a1 / 2, a);
    } else if (x_even) {
        f.parity_case = 3;
        f.first = spec(Family::H5, x / 2 + E, y - z / 2 + E, z / 2 - E, (a1 - 1) / 2, a);
        f.second = spec(Family::H8, x / 2 + E, y - z / 2 + E, z / 2 - E, (a1 + 1) / 2, a);
    } else {
        f.parity_case = 4;
        f.first = spec(Family::H5, (x + 1) / 2 + E, y - (z - 1) / 2 + E - 1, (z - 1) / 2 - E, (a1 - 1) / 2, a);
        f.second = spec(Family::H8, (x - 1) / 2 + E, y - (z - 1) / 2 + E, (z - 1) / 2 - E + 1, (a1 + 1) / 2, a);
    }
    auto negative = [](const RegionSpec& s) { return s.x < 0 || s.y < 0 || s.z < 0; };
    f.degenerate = z < 2 * E - 1 || z > 2 * y + 2 * E + 1 || negative(f.first) || negative(f.second);
    return f;
}

Rational formula_S(int x, int y, int z, const HoleSeq& a, const Conventions& cv)
{
    const SFactorization f = s_factorization(x, y, z, a);
    if (f.degenerate) return 0;
    auto h = [&](const RegionSpec& s) { return formula_H(h_index(s.family), s.x, s.y, s.z, s.seq, cv); };
    return Rational(f.prefactor) * h(f.first) * h(f.second);
}

FormulaResult evaluate(const RegionSpec& s, const Conventions& cv)
{
    FormulaResult r{s, 0};
    switch (s.family) {
    case Family::P: r.value = formula_P(s.a, s.b, s.c); break;
    case Family::Pp: r.value = formula_Pprime(s.a, s.b, s.c, cv); break;
    case Family::Q: r.value = formula_Q(s.seq, cv); break;
    case Family::Qp: r.value = formula_Qprime(s.seq, cv); break;
    case Family::K: r.value = formula_K(s.seq, cv); break;
    case Family::Kp: r.value = formula_Kprime(s.seq, cv); break;
    case Family::S: r.value = formula_S(s.x, s.y, s.z, s.seq, cv); break;
    default: r.value = formula_H(h_index(s.family), s.x, s.y, s.z, s.seq, cv); break;
    }
    return r;
}

} // namespace rhombil
