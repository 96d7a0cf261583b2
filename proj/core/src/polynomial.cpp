#include "bottjoin/polynomial.hpp"

#include <algorithm>

namespace bottjoin {

namespace {
const Rational kZero = Rational(0);

int sgn_rat(const Rational& x) { return sgn(x); }
}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(size_t i) const {
    if (i >= coeffs_.size()) return kZero;
    return coeffs_[i];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading: zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.normalize();
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& c : coeffs_) {
        den_lcm = lcm(den_lcm, c.get_den());
        num_gcd = gcd(num_gcd, c.get_num());
    }
    Rational scale(den_lcm, num_gcd);  // positive: num_gcd > 0
    scale.canonicalize();
    return *this * scale;
}

std::pair<std::vector<Integer>, Rational> Polynomial::integer_form() const {
    Polynomial prim = primitive();
    std::vector<Integer> out;
    out.reserve(prim.coeffs_.size());
    for (const auto& c : prim.coeffs_) out.push_back(c.get_num());
    Rational scale = 1;
    if (!is_zero()) {
        // this = scale * prim, recover from leading coefficients
        scale = leading() / prim.leading();
    }
    return {std::move(out), scale};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        Rational a = abs(c);
        if (a != 1 || i == 0) s += a.get_str();
        if (i > 0) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (num.degree() < den.degree()) return {{}, num};
    std::vector<Rational> rem(num.coefficients());
    std::vector<Rational> quo(num.degree() - den.degree() + 1, Rational(0));
    const auto& d = den.coefficients();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        Rational q = rem[k + den.degree()] / den.leading();
        quo[k] = q;
        if (q == 0) continue;
        for (size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw internal_error("exact_divide: nonzero remainder");
    return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial f = a.primitive(), g = b.primitive();
    while (!g.is_zero()) {
        Polynomial r = divmod(f, g).second;
        f = g;
        g = r.primitive();  // content stripping bounds coefficient growth
    }
    if (f.is_zero()) return f;
    if (f.leading() < 0) f = -f;
    return f;
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(1);
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    return exact_divide(p.primitive(), g).primitive();
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    if (p.degree() == 0) return pow_rat(p.leading(), static_cast<unsigned long>(q.degree()));
    if (q.degree() == 0) return pow_rat(q.leading(), static_cast<unsigned long>(p.degree()));
    Polynomial r = divmod(p, q).second;
    if (r.is_zero()) return 0;
    Rational sign = (p.degree() * q.degree()) % 2 == 0 ? 1 : -1;
    Rational scale = pow_rat(q.leading(), static_cast<unsigned long>(p.degree() - r.degree()));
    return sign * scale * resultant(q, r);
}

Rational discriminant(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be at least 1");
    if (n == 1) return 1;
    Rational res = resultant(p, p.derivative());
    Rational sign = (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    return sign * res / p.leading();
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(squarefree_part(p));
    if (chain[0].degree() == 0) return chain;
    chain.push_back(chain[0].derivative().primitive());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Polynomial r = -divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(r.primitive());
    }
    return chain;
}

int sign_at(const Polynomial& p, const std::optional<Rational>& x, bool at_minus_inf) {
    if (p.is_zero()) return 0;
    if (x.has_value()) return sgn_rat(p.evaluate(*x));
    int s = sgn_rat(p.leading());
    if (at_minus_inf && p.degree() % 2 == 1) s = -s;
    return s;
}

int sign_variations(const std::vector<Polynomial>& chain, const std::optional<Rational>& x,
                    bool at_minus_inf) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, x, at_minus_inf);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int sturm_count(const Polynomial& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (lo.has_value() && hi.has_value() && *lo >= *hi) return 0;
    auto chain = sturm_chain(p);
    if (chain[0].degree() == 0) return 0;
    return sign_variations(chain, lo, true) - sign_variations(chain, hi, false);
}

std::vector<RationalRoot> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<RationalRoot> out;
    Polynomial work = p.primitive();

    // strip the root at zero first
    int zero_mult = 0;
    while (!work.is_zero() && work.coeff(0) == 0) {
        work = exact_divide(work, Polynomial::monomial(1, 1));
        ++zero_mult;
    }
    if (zero_mult > 0) out.push_back({Rational(0), zero_mult});
    if (work.degree() < 1) return out;

    auto [ic, scale] = work.integer_form();
    (void)scale;
    std::vector<Integer> lead_divs = divisors(factorize(ic.back()));
    std::vector<Integer> tail_divs = divisors(factorize(ic.front()));
    for (const Integer& u : tail_divs) {
        for (const Integer& v : lead_divs) {
            if (gcd(u, v) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand(s * u, v);
                cand.canonicalize();
                if (work.evaluate(cand) != 0) continue;
                int mult = 0;
                Polynomial lin({-cand, Rational(1)});
                while (work.evaluate(cand) == 0) {
                    work = exact_divide(work, lin);
                    ++mult;
                }
                out.push_back({cand, mult});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    return out;
}

Rational root_bound(const Polynomial& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(i));
        if (a > m) m = a;
    }
    Rational lead = abs(p.leading());
    return Rational(1) + m / lead;
}

std::vector<Interval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                         const Rational& hi, const Rational& max_width) {
    if (max_width <= 0) throw std::invalid_argument("isolate_real_roots: width must be positive");
    std::vector<Interval> done;
    std::vector<Interval> work{{lo, hi}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        int c = sturm_count(p, iv.lo, iv.hi);
        if (c == 0) continue;
        if (c == 1 && iv.width() <= max_width) {
            done.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(done.begin(), done.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return done;
}

}  // namespace bottjoin
