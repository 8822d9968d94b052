#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rhombil {

using Rational = mpq_class;
using Integer = mpz_class;

// Non-negative hole sizes, 0-based storage, 1-based accessors below.
using HoleSeq = std::vector<int>;

std::string to_string(const Rational& q);  // "num/den", or "num" when den = 1
bool is_dyadic(const Rational& q);
void check_entries(const HoleSeq& a);      // throws NegativeArgument

Rational pochhammer(const Rational& x, long n);
Rational skip_pochhammer(const Rational& x, long n);
Rational trapezoid_T(const Rational& x, long n, long m);
Rational trapezoid_V(const Rational& x, long n, long m);

Integer factorial(long n);
Integer hyperfactorial(long n);

// Odd n is ambiguous in print: strict skipping 1!·3!·…·(n−2)! versus the
// literal 1!·2!·…·(n−2)!. The oracle picks Skip.
enum class H2Reading { Skip, Printed };
Integer hyperfactorial2(long n, H2Reading reading = H2Reading::Skip);

long seq_O(const HoleSeq& a);
long seq_E(const HoleSeq& a);
long seq_s(const HoleSeq& a, long k);  // k in [0, len]; s_0 = 0
long seq_o(const HoleSeq& a, long k);
long seq_e(const HoleSeq& a, long k);

} // namespace rhombil
