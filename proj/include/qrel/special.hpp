#pragma once

#include "qrel/piscalar.hpp"
#include "qrel/rational.hpp"

namespace qrel {

/// x(x-1)...(x-m+1)/m!
Rational gen_binom(const Rational& x, long m);
/// a(a+1)...(a+n-1)
Rational pochhammer(const Rational& a, long n);
/// (x)(x-1)...(x-m+1)
Rational falling_factorial(const Rational& x, long m);

BigInt factorial(long n);
BigInt binomial(long n, long k);
/// n! / (a! b! (n-a-b)!)
BigInt multinomial(long n, long a, long b);

/// Gamma(h) for h > 0; throws std::domain_error otherwise.
PiScalar gamma_half(HalfInt h);
/// Gamma(h) for any half-integer off the poles 0, -1, -2, ...
PiScalar gamma_value(HalfInt h);

}  // namespace qrel
