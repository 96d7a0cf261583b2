#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bottjoin/exact.hpp"
#include "bottjoin/polynomial.hpp"

using namespace bottjoin;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// Mahler separation bound squared for a squarefree integer polynomial:
// sep^2 > 3 |disc| / (d^{d+2} * (sum a_i^2)^{d-1})
Rational separation_squared(const Polynomial& q) {
    auto [ic, scale] = q.integer_form();
    (void)scale;
    const int d = q.degree();
    Integer s2 = 0;
    for (const auto& c : ic) s2 += c * c;
    Rational disc = abs(discriminant(Polynomial(
        [&] {
            std::vector<Rational> v;
            for (const auto& c : ic) v.emplace_back(c);
            return v;
        }())));
    Rational denom = Rational(pow_int(Integer(d), static_cast<unsigned long>(d + 2))) *
                     Rational(pow_int(s2, static_cast<unsigned long>(d - 1)));
    return 3 * disc / denom;
}

// Bisection-based sign-change oracle: distinct real roots of p in (lo, hi].
int bisection_root_count(const Polynomial& p, Rational lo, Rational hi) {
    Polynomial q = squarefree_part(p);
    if (q.degree() <= 0) return 0;
    if (q.degree() == 1) {
        Rational r = -q.coeff(0) / q.coeff(1);
        return (r > lo && r <= hi) ? 1 : 0;
    }
    Rational sep2 = separation_squared(q);
    Rational sep(1, 2);
    while (sep * sep > sep2) sep /= 2;

    int count = 0;
    // move off exact roots at the window ends; no other root sits within sep
    if (q.evaluate(hi) == 0) {
        ++count;  // hi belongs to (lo, hi]
        Rational shift = sep / 2;
        while (q.evaluate(hi - shift) == 0) shift /= 2;
        hi -= shift;
        if (hi <= lo) return count;
    }
    if (q.evaluate(lo) == 0) {
        Rational shift = sep / 2;
        while (q.evaluate(lo + shift) == 0) shift /= 2;
        lo += shift;
        if (hi <= lo) return count;
    }

    struct Seg {
        Rational a, b;
        int sa, sb;
    };
    std::vector<Seg> work{{lo, hi, sgn(q.evaluate(lo)), sgn(q.evaluate(hi))}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.b - s.a < sep) {
            if (s.sa * s.sb < 0) ++count;
            continue;
        }
        Rational m = (s.a + s.b) / 2;
        while (q.evaluate(m) == 0) m += (s.b - m) / 64;  // avoid landing on a root
        int sm = sgn(q.evaluate(m));
        work.push_back({s.a, m, s.sa, sm});
        work.push_back({m, s.b, sm, s.sb});
    }
    return count;
}

}  // namespace

TEST_CASE("gcd and lcm conventions") {
    CHECK(gcd(Integer(62), Integer(637)) == 1);
    CHECK(gcd(Integer(0), Integer(0)) == 0);
    CHECK(gcd(Integer(26726154), Integer(150)) == 6);
    CHECK(gcd(Integer(-12), Integer(0)) == 12);
    CHECK(lcm(Integer(4), Integer(6)) == 12);
    CHECK(lcm(Integer(0), Integer(5)) == 0);
}

TEST_CASE("gcd properties and Bezout witness on random input") {
    std::mt19937_64 rng(20210501);
    std::uniform_int_distribution<long> dist(-1'000'000'000L, 1'000'000'000L);
    for (int i = 0; i < 2000; ++i) {
        Integer a(dist(rng)), b(dist(rng));
        Integer g = gcd(a, b);
        CHECK(g >= 0);
        if (g != 0) {
            CHECK(a % g == 0);
            CHECK(b % g == 0);
        }
        CHECK(lcm(a, b) * g == abs(a * b));
        Bezout bz = gcd_bezout(a, b);
        CHECK(bz.g == g);
        CHECK(a * bz.x + b * bz.y == g);
    }
}

TEST_CASE("factorize on the family constants") {
    FactoredInteger f = factorize(Integer(4454359));
    REQUIRE(f.fully_factored);
    CHECK(f.primes == std::map<Integer, unsigned>{{7, 1}, {13, 1}, {31, 1}, {1579, 1}});

    FactoredInteger one = factorize(Integer(1));
    CHECK(one.primes.empty());
    CHECK(one.cofactor == 1);
    CHECK(one.fully_factored);

    FactoredInteger f2 = factorize(Integer(8281));
    CHECK(f2.primes == std::map<Integer, unsigned>{{7, 2}, {13, 2}});

    CHECK_THROWS_AS(factorize(Integer(0)), std::invalid_argument);
}

TEST_CASE("factorize reconstruction identity on random 64-bit input") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 10000; ++i) {
        unsigned long long raw = rng();
        if (raw == 0) raw = 1;
        Integer n;
        mpz_import(n.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
        if (i % 2 == 0) n = -n;
        FactoredInteger f = factorize(n);
        CHECK(f.value() == n);
        for (const auto& [p, e] : f.primes) {
            CHECK(e >= 1);
            CHECK(is_probable_prime(p));
        }
    }
}

TEST_CASE("factorize of eight-digit prime products stays exact") {
    Integer p("86028121"), q("32452843");
    FactoredInteger f = factorize(p * q);
    REQUIRE(f.fully_factored);
    CHECK(f.primes == std::map<Integer, unsigned>{{q, 1}, {p, 1}});
}

TEST_CASE("divisors") {
    FactoredInteger f = factorize(Integer(12));
    CHECK(divisors(f) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("sturm_count on the stated examples") {
    // b^3 - b has roots -1, 0, 1
    CHECK(sturm_count(poly({0, -1, 0, 1}), Rational(-2), Rational(2)) == 3);
    // (b-1)^2: multiplicity collapses
    CHECK(sturm_count(poly({1, -2, 1}), Rational(0), Rational(2)) == 1);
    // g(b) for (l0, linf, w0, winf) = (1, 100, 2, 1)
    Polynomial g = poly({1, -96, 196, -4});
    CHECK(sturm_count(g, Rational(0), std::nullopt) == 3);
    CHECK_THROWS_AS(sturm_count(Polynomial(), Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("sturm_count half-open interval semantics") {
    Polynomial p = poly({0, -1, 0, 1});  // roots -1, 0, 1
    CHECK(sturm_count(p, Rational(-1), Rational(1)) == 2);   // 0 and 1; -1 excluded
    CHECK(sturm_count(p, Rational(0), Rational(1)) == 1);    // just 1
    CHECK(sturm_count(p, std::nullopt, Rational(-1)) == 1);  // -1 included
    CHECK(sturm_count(p, std::nullopt, std::nullopt) == 3);
}

TEST_CASE("sturm_count agrees with the bisection oracle on random cubics") {
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<int> window(-25, 25);
    for (int i = 0; i < 1000; ++i) {
        std::vector<Rational> c(4);
        for (auto& v : c) v = coeff(rng);
        if (c[3] == 0) c[3] = 1;
        Polynomial p(c);
        int a = window(rng), b = window(rng);
        if (a == b) b = a + 1;
        if (a > b) std::swap(a, b);
        int expected = bisection_root_count(p, Rational(a), Rational(b));
        CHECK(sturm_count(p, Rational(a), Rational(b)) == expected);
    }
}

TEST_CASE("rational_roots") {
    auto roots = rational_roots(poly({1, -3, 2}));  // 2b^2 - 3b + 1
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].root == Rational(1, 2));
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].root == Rational(1));
    CHECK(roots[1].multiplicity == 1);

    // (b - 1)^2 (b + 3) b
    Polynomial p = poly({0, 1}) * poly({-1, 1}) * poly({-1, 1}) * poly({3, 1});
    auto r2 = rational_roots(p);
    REQUIRE(r2.size() == 3);
    CHECK(r2[0].root == Rational(-3));
    CHECK(r2[1].root == Rational(0));
    CHECK(r2[2].root == Rational(1));
    CHECK(r2[2].multiplicity == 2);
}

TEST_CASE("discriminant basics") {
    CHECK(discriminant(poly({-2, 0, 1})) == Rational(8));
    // ax^2 + bx + c -> b^2 - 4ac
    CHECK(discriminant(poly({5, 3, 2})) == Rational(9 - 40));
    CHECK_THROWS_AS(discriminant(Polynomial::constant(3)), std::invalid_argument);
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int i = 0; i < 400; ++i) {
        int d = deg(rng);
        std::vector<Rational> c(d + 1);
        for (auto& v : c) v = coeff(rng);
        if (c[d] == 0) c[d] = 1;
        Polynomial p(c);
        bool has_repeat = poly_gcd(p, p.derivative()).degree() > 0;
        CHECK((discriminant(p) == 0) == has_repeat);
    }
    // forced repeated root
    Polynomial sq = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    CHECK(discriminant(sq) == 0);
}

TEST_CASE("exact_divide fails loudly on nonzero remainder") {
    Polynomial num = poly({1, 0, 1});
    Polynomial den = poly({1, 1});
    CHECK_THROWS_AS(exact_divide(num, den), internal_error);
    Polynomial prod = num * den;
    CHECK(exact_divide(prod, den) == num);
}

TEST_CASE("polynomial arithmetic round trips") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coeff(-12, 12);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> a(5), b(4);
        for (auto& v : a) v = Rational(coeff(rng), 1 + std::abs(coeff(rng)));
        for (auto& v : b) v = Rational(coeff(rng), 1 + std::abs(coeff(rng)));
        Polynomial pa(a), pb(b);
        if (pb.is_zero()) continue;
        auto [q, r] = divmod(pa, pb);
        CHECK(q * pb + r == pa);
        CHECK((r.is_zero() || r.degree() < pb.degree()));
        // evaluation is a ring homomorphism
        Rational x(3, 7);
        CHECK((pa * pb).evaluate(x) == pa.evaluate(x) * pb.evaluate(x));
    }
}

TEST_CASE("isolate_real_roots brackets each distinct root once") {
    Polynomial p = poly({0, -1, 0, 1});  // roots -1, 0, 1
    auto ivs = isolate_real_roots(p, Rational(-5), Rational(5), Rational(1, 64));
    REQUIRE(ivs.size() == 3);
    std::vector<Rational> roots{-1, 0, 1};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(ivs[i].lo < roots[i]);
        CHECK(roots[i] <= ivs[i].hi);
        CHECK(ivs[i].width() <= Rational(1, 64));
    }
}
