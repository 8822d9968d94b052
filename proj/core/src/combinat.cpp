#include "rhombil/combinat.hpp"

#include "rhombil/errors.hpp"

namespace rhombil {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_dyadic(const Rational& q)
{
    const Integer& d = q.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1;
}

void check_entries(const HoleSeq& a)
{
    for (int v : a)
        if (v < 0) throw NegativeArgument("hole sequence entry " + std::to_string(v) + " < 0");
}

Rational pochhammer(const Rational& x, long n)
{
    Rational r = 1;
    if (n > 0) {
        for (long i = 0; i < n; ++i) r *= x + i;
    } else if (n < 0) {
        Rational d = 1;
        for (long i = 1; i <= -n; ++i) d *= x - i;
        if (d == 0)
            throw ZeroDenominator("pochhammer(" + to_string(x) + ", " + std::to_string(n) + ")");
        r = 1 / d;
    }
    return r;
}

Rational skip_pochhammer(const Rational& x, long n)
{
    Rational r = 1;
    if (n > 0) {
        for (long i = 0; i < n; ++i) r *= x + 2 * i;
    } else if (n < 0) {
        Rational d = 1;
        for (long i = 1; i <= -n; ++i) d *= x - 2 * i;
        if (d == 0)
            throw ZeroDenominator("skip_pochhammer(" + to_string(x) + ", " + std::to_string(n) + ")");
        r = 1 / d;
    }
    return r;
}

Rational trapezoid_T(const Rational& x, long n, long m)
{
    if (m < 0) throw NegativeArgument("trapezoid_T: m < 0");
    Rational r = 1;
    for (long i = 0; i < m; ++i) r *= pochhammer(x + i, n - 2 * i);
    return r;
}

Rational trapezoid_V(const Rational& x, long n, long m)
{
    if (m < 0) throw NegativeArgument("trapezoid_V: m < 0");
    Rational r = 1;
    for (long i = 0; i < m; ++i) r *= skip_pochhammer(x + 2 * i, n - 2 * i);
    return r;
}

Integer factorial(long n)
{
    if (n < 0) throw NegativeArgument("factorial(" + std::to_string(n) + ")");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer hyperfactorial(long n)
{
    if (n < 0) throw NegativeArgument("hyperfactorial(" + std::to_string(n) + ")");
    Integer r = 1, f = 1;
    for (long i = 1; i < n; ++i) {
        f *= i;
        r *= f;
    }
    return r;
}

Integer hyperfactorial2(long n, H2Reading reading)
{
    if (n < 0) throw NegativeArgument("hyperfactorial2(" + std::to_string(n) + ")");
    Integer r = 1;
    if (n % 2 == 0) {
        for (long i = 0; i <= n - 2; i += 2) r *= factorial(i);
    } else {
        long step = reading == H2Reading::Skip ? 2 : 1;
        for (long i = 1; i <= n - 2; i += step) r *= factorial(i);
    }
    return r;
}

long seq_O(const HoleSeq& a)
{
    long r = 0;
    for (std::size_t i = 0; i < a.size(); i += 2) r += a[i];
    return r;
}

long seq_E(const HoleSeq& a)
{
    long r = 0;
    for (std::size_t i = 1; i < a.size(); i += 2) r += a[i];
    return r;
}

long seq_s(const HoleSeq& a, long k)
{
    if (k < 0 || k > static_cast<long>(a.size()))
        throw IndexOutOfRange("seq_s: k=" + std::to_string(k) + " length=" + std::to_string(a.size()));
    long r = 0;
    for (long i = 0; i < k; ++i) r += a[i];
    return r;
}

long seq_o(const HoleSeq& a, long k)
{
    if (k < 1) throw IndexOutOfRange("seq_o: k < 1");
    long r = 0;
    for (std::size_t i = 2 * k - 2; i < a.size(); i += 2) r += a[i];
    return r;
}

long seq_e(const HoleSeq& a, long k)
{
    if (k < 1) throw IndexOutOfRange("seq_e: k < 1");
    long r = 0;
    for (std::size_t i = 2 * k - 1; i < a.size(); i += 2) r += a[i];
    return r;
}

} // namespace rhombil
