#include "bottjoin/exact.hpp"

#include <algorithm>
#include <numeric>

namespace bottjoin {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Bezout gcd_bezout(const Integer& a, const Integer& b) {
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Integer pow_int(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rat(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    return r;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Integer> perfect_square_root(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    return isqrt(n);
}

Integer FactoredInteger::value() const {
    Integer v = cofactor;
    for (const auto& [p, e] : primes) v *= pow_int(p, e);
    return v;
}

Integer FactoredInteger::radical() const {
    Integer r = 1;
    for (const auto& [p, e] : primes) r *= p;
    return r;
}

FactoredInteger& FactoredInteger::mul(const FactoredInteger& other) {
    for (const auto& [p, e] : other.primes) primes[p] += e;
    cofactor *= other.cofactor;
    fully_factored = fully_factored && other.fully_factored;
    return *this;
}

std::string FactoredInteger::to_string() const {
    std::string s;
    for (const auto& [p, e] : primes) {
        if (!s.empty()) s += "*";
        s += p.get_str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    if (cofactor != 1 || s.empty()) {
        if (!s.empty()) s += "*";
        s += cofactor.get_str();
    }
    return s;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// deterministic Miller-Rabin for 64-bit input
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 pollard_brent_u64(u64 n, u64 seed) {
    if ((n & 1) == 0) return 2;
    u64 y = seed % (n - 2) + 1, c = (seed >> 17) % (n - 2) + 1;
    u64 x = 0, ys = 0, q = 1, g = 1;
    const unsigned m = 128;
    u64 r = 1;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min<u64>(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        }
        r *= 2;
        if (r > (1ull << 28)) return n;
    }
    if (g == n) {
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_u64(u64 n, u64 trial_bound, std::map<Integer, unsigned>& out) {
    for (u64 p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            out[Integer(static_cast<unsigned long>(p))] += 1;
            n /= p;
        }
    }
    // Brent + Miller-Rabin settle everything past a short trial sweep
    trial_bound = std::min<u64>(trial_bound, 8192);
    u64 p = 7;
    unsigned step = 4;
    while (p <= trial_bound && p * p <= n) {
        while (n % p == 0) {
            out[Integer(static_cast<unsigned long>(p))] += 1;
            n /= p;
        }
        p += step;
        step = 6 - step;
    }
    if (n == 1) return;
    if (p * p > n || is_prime_u64(n)) {
        out[Integer(static_cast<unsigned long>(n))] += 1;
        return;
    }
    u64 seed = 0x9e3779b97f4a7c15ull;
    u64 d = n;
    while (d == n) {
        d = pollard_brent_u64(n, seed);
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    }
    factor_u64(d, trial_bound, out);
    factor_u64(n / d, trial_bound, out);
}

// Pollard-Brent cycle finding; returns a nontrivial factor or n on failure.
Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    Integer y = rng.get_z_range(n - 2) + 1;
    Integer c = rng.get_z_range(n - 2) + 1;
    Integer x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, static_cast<unsigned long>(r - k));
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        if (r > (1ul << 24)) return n;  // give up on this seed
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void factor_recursive(const Integer& n, const FactorEffort& effort, unsigned depth,
                      FactoredInteger& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes[n] += 1;
        return;
    }
    if (depth >= effort.rho_rounds) {
        out.cofactor *= n;
        out.fully_factored = false;
        return;
    }
    Integer d = pollard_brent(n, 0x9e3779b9u + depth);
    if (d == n || d == 1) {
        factor_recursive(n, effort, depth + 1, out);
        return;
    }
    factor_recursive(d, effort, depth + 1, out);
    factor_recursive(n / d, effort, depth + 1, out);
}

}  // namespace

FactoredInteger factorize(const Integer& n, const FactorEffort& effort) {
    if (n == 0) throw std::invalid_argument("factorize: zero argument");
    FactoredInteger out;
    Integer rest = abs(n);
    if (n < 0) out.cofactor = -1;

    if (mpz_fits_ulong_p(rest.get_mpz_t())) {
        factor_u64(mpz_get_ui(rest.get_mpz_t()), effort.trial_bound, out.primes);
        return out;
    }

    // wide input: machine-word wheel against the mpz residue
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_fdiv_ui(rest.get_mpz_t(), p) == 0) {
            out.primes[Integer(p)] += 1;
            rest /= p;
        }
    }
    unsigned long p = 7, step = 4;
    while (p <= effort.trial_bound) {
        if (mpz_fits_ulong_p(rest.get_mpz_t())) {
            factor_u64(mpz_get_ui(rest.get_mpz_t()), effort.trial_bound, out.primes);
            return out;
        }
        while (mpz_fdiv_ui(rest.get_mpz_t(), p) == 0) {
            out.primes[Integer(p)] += 1;
            rest /= p;
        }
        p += step;
        step = 6 - step;
    }
    if (rest == 1) return out;
    if (mpz_fits_ulong_p(rest.get_mpz_t())) {
        factor_u64(mpz_get_ui(rest.get_mpz_t()), effort.trial_bound, out.primes);
        return out;
    }
    factor_recursive(rest, effort, 0, out);
    return out;
}

std::vector<Integer> divisors(const FactoredInteger& f) {
    if (!f.fully_factored) throw std::invalid_argument("divisors: incomplete factorization");
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : f.primes) {
        const size_t base = ds.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Integer smallest_prime_factor(const Integer& n, const FactorEffort& effort) {
    if (n <= 1) throw std::invalid_argument("smallest_prime_factor: argument must exceed 1");
    FactoredInteger f = factorize(n, effort);
    if (!f.primes.empty()) return f.primes.begin()->first;
    return f.cofactor;
}

}  // namespace bottjoin
