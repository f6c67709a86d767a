#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pfl {

// All arithmetic in this library is exact.  Integers are GMP big integers
// and rationals are GMP rationals kept in lowest terms with positive
// denominator (mpq_class maintains that through canonicalize()).
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Throws ParseError-free Error on zero denominator.
Rational rat_of(const Int& num, const Int& den);

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization.  Returns
// nullopt on malformed input (including "1/0").
std::optional<Rational> try_parse_rational(const std::string& tok);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string rat_str(const Rational& q);

bool is_integer(const Rational& q);

int sgn(const Rational& q);
int sgn(const Int& n);

// n >= 0; if a perfect square and root != nullptr, stores the square root.
bool is_perfect_square(const Int& n, Int* root = nullptr);

// Prime factorization of a positive integer by trial division (the inputs
// here are products of small primes: slopes of group elements).  Throws if a
// composite factor survives the trial bound.
std::vector<std::pair<Int, long>> factor_positive(const Int& n);

Rational rat_abs(const Rational& q);
Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);

} // namespace pfl
