// Exact integer and rational arithmetic used by every other module.
// Integers and rationals are GMP (mpz_class / mpq_class); everything on
// top of them (factorization, divisor enumeration, Bezout witnesses) is
// implemented here.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bottjoin {

using Integer = mpz_class;
using Rational = mpq_class;

// A computed value violated a library invariant (not a caller error).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// gcd(a, 0) = |a|, gcd(0, 0) = 0; result is never negative.
Integer gcd(const Integer& a, const Integer& b);

// lcm(a, b) * gcd(a, b) == |a * b|; lcm(a, 0) = 0.
Integer lcm(const Integer& a, const Integer& b);

struct Bezout {
    Integer g;  // gcd(a, b) >= 0
    Integer x;
    Integer y;  // g == a*x + b*y
};
Bezout gcd_bezout(const Integer& a, const Integer& b);

// Strong pseudoprime test (GMP's Miller-Rabin + BPSW rounds).
bool is_probable_prime(const Integer& n);

Integer pow_int(const Integer& base, unsigned long exp);
Rational pow_rat(const Rational& base, unsigned long exp);

// floor(sqrt(n)); n must be nonnegative
Integer isqrt(const Integer& n);

// exact square root when n is a perfect square
std::optional<Integer> perfect_square_root(const Integer& n);

// A (possibly partial) prime factorization.  The reconstruction
// invariant  prod(p^e) * cofactor == original value  always holds; the
// sign of the original value lives in the cofactor.
struct FactoredInteger {
    std::map<Integer, unsigned> primes;
    Integer cofactor = 1;
    bool fully_factored = true;

    Integer value() const;
    // product of the known primes (each once); cofactor excluded
    Integer radical() const;
    FactoredInteger& mul(const FactoredInteger& other);
    std::string to_string() const;  // e.g. "2^4*3^2*17"
};

struct FactorEffort {
    uint64_t trial_bound = 1'000'000;  // trial-divide primes up to here
    unsigned rho_rounds = 48;          // Pollard-Brent attempts per residue
};

// n must be nonzero.  Never fails: whatever resists the effort bound is
// left in the cofactor with fully_factored cleared.
FactoredInteger factorize(const Integer& n, const FactorEffort& effort = {});

// all positive divisors, ascending; requires fully_factored
std::vector<Integer> divisors(const FactoredInteger& f);

// smallest prime factor of n (n > 1); falls back to the unfactored
// cofactor if the effort bound is exhausted first
Integer smallest_prime_factor(const Integer& n, const FactorEffort& effort = {});

}  // namespace bottjoin
