#include "bottjoin/search.hpp"

#include <algorithm>
#include <thread>

namespace bottjoin {

Integer FamilyFactor::value_at(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Integer FamilyFactor::mod_value_at(const Integer& t, const Integer& p) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * t + *it) % p;
    return ((acc % p) + p) % p;
}

namespace {

// extract the coefficient gcd (and sign of the leading coefficient)
// from a factor; returns the extracted constant
Integer normalize_factor(std::vector<Integer>& coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) throw std::invalid_argument("FamilyFactor: empty coefficient list");
    Integer content = 0;
    for (const auto& c : coeffs) content = gcd(content, c);
    if (content == 0) throw std::invalid_argument("FamilyFactor: zero factor");
    if (coeffs.back() < 0) content = -content;
    for (auto& c : coeffs) c /= content;
    return content;
}

}  // namespace

FamilyPolynomial FamilyPolynomial::from_parts(const Integer& constant,
                                              std::vector<std::vector<Integer>> factor_coeffs) {
    if (constant == 0) throw std::invalid_argument("FamilyPolynomial: zero constant");
    FamilyPolynomial fam;
    Integer c = constant;
    for (auto& fc : factor_coeffs) {
        c *= normalize_factor(fc);
        if (fc.size() == 1) continue;  // absorbed into the constant
        fam.factors.push_back(FamilyFactor{std::move(fc)});
    }
    fam.constant = factorize(c);
    return fam;
}

Integer FamilyPolynomial::value_at(const Integer& t) const {
    Integer v = constant.value();
    for (const auto& f : factors) v *= f.value_at(t);
    return v;
}

FamilyPolynomial FamilyPolynomial::times_constant(const Integer& c) const {
    if (c == 0) throw std::invalid_argument("FamilyPolynomial: zero constant");
    FamilyPolynomial fam = *this;
    fam.constant.mul(factorize(c));
    return fam;
}

FamilyPolynomial FamilyPolynomial::substituted(const Integer& c) const {
    if (c == 0) throw std::invalid_argument("FamilyPolynomial: zero substitution");
    FamilyPolynomial fam;
    fam.constant = constant;
    for (const auto& f : factors) {
        std::vector<Integer> coeffs = f.coeffs;
        Integer ck = 1;
        for (size_t i = 1; i < coeffs.size(); ++i) {
            ck *= c;
            coeffs[i] *= ck;
        }
        Integer extracted = normalize_factor(coeffs);
        if (extracted != 1) fam.constant.mul(factorize(extracted));
        if (coeffs.size() == 1) continue;
        fam.factors.push_back(FamilyFactor{std::move(coeffs)});
    }
    return fam;
}

SeedStructure::SeedStructure(int dim, Integer index, FamilyPolynomial ups, std::string n,
                             bool prim)
    : dimension(dim), fano_index(std::move(index)), upsilon(std::move(ups)), note(std::move(n)),
      primitive(prim) {
    if (fano_index < 1) throw std::invalid_argument("SeedStructure: Fano index must be positive");
    if (!primitive)
        throw std::invalid_argument(
            "SeedStructure: the extension step assumes a primitive transverse Kahler class");
}

namespace {

Integer mod_inverse(const Integer& a, const Integer& p) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw internal_error("mod_inverse: not invertible");
    return inv;
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& p) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return r;
}

// square root mod an odd prime, or nullopt for a non-residue
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p) {
    Integer n = ((a % p) + p) % p;
    if (n == 0) return Integer(0);
    if (mod_pow(n, (p - 1) / 2, p) != 1) return std::nullopt;  // Euler criterion
    if (p % 4 == 3) return mod_pow(n, (p + 1) / 4, p);

    // Tonelli-Shanks
    Integer q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    Integer m(static_cast<unsigned long>(s));
    Integer c = mod_pow(z, q, p);
    Integer t = mod_pow(n, q, p);
    Integer r = mod_pow(n, (q + 1) / 2, p);
    while (t != 1) {
        Integer i = 0;
        Integer t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            i += 1;
            if (i == m) throw internal_error("sqrt_mod: lost the residue");
        }
        Integer b = c;
        Integer reps = m - i - 1;
        while (reps > 0) {
            b = b * b % p;
            reps -= 1;
        }
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace

std::optional<std::vector<Integer>> roots_mod_prime(const std::vector<Integer>& coeffs,
                                                    const Integer& p) {
    std::vector<Integer> red;
    red.reserve(coeffs.size());
    for (const auto& c : coeffs) red.push_back(((c % p) + p) % p);
    while (!red.empty() && red.back() == 0) red.pop_back();
    if (red.empty()) return std::nullopt;  // identically zero mod p
    if (red.size() == 1) return std::vector<Integer>{};

    std::vector<Integer> roots;
    if (p < 65536) {
        FamilyFactor f{red};
        for (Integer t = 0; t < p; ++t)
            if (f.mod_value_at(t, p) == 0) roots.push_back(t);
        return roots;
    }
    if (red.size() == 2) {
        roots.push_back((p - red[0]) * mod_inverse(red[1], p) % p);
        return roots;
    }
    if (red.size() == 3) {
        Integer a = red[2], b = red[1], c = red[0];
        Integer disc = ((b * b - 4 * a * c) % p + p) % p;
        auto root = sqrt_mod(disc, p);
        if (!root) return roots;
        Integer inv2a = mod_inverse(2 * a, p);
        Integer r1 = ((p - b + *root) % p) * inv2a % p;
        Integer r2 = ((p - b + (p - *root)) % p) * inv2a % p;
        roots.push_back(r1);
        if (r2 != r1) roots.push_back(r2);
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    throw std::invalid_argument("roots_mod_prime: degree above 2 needs a small prime");
}

bool CongruenceCertificate::is_admissible(const Integer& t) const {
    if (identically_blocked) return false;
    Integer tt = ((t % modulus_radical) + modulus_radical) % modulus_radical;
    for (const auto& [p, ex] : excluded) {
        Integer r = tt % p;
        if (std::binary_search(ex.begin(), ex.end(), r)) return false;
    }
    return true;
}

std::vector<Integer> CongruenceCertificate::enumerate(const Integer& cap) const {
    if (admissible_count > cap)
        throw std::invalid_argument("CongruenceCertificate: admissible set exceeds the cap");
    std::vector<Integer> acc{0};
    Integer mod = 1;
    for (const auto& [p, ex] : excluded) {
        std::vector<Integer> allowed;
        for (Integer r = 0; r < p; ++r)
            if (!std::binary_search(ex.begin(), ex.end(), r)) allowed.push_back(r);
        std::vector<Integer> next;
        next.reserve(acc.size() * allowed.size());
        Integer minv = mod_inverse(mod % p, p);
        for (const auto& r : acc)
            for (const auto& a : allowed) {
                Integer k = ((a - r) % p + p) % p * minv % p;
                next.push_back(r + mod * k);
            }
        acc = std::move(next);
        mod *= p;
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

CongruenceCertificate congruence_certify(const FamilyPolynomial& family,
                                         const FactoredInteger& m) {
    if (!m.fully_factored)
        throw std::invalid_argument("congruence_certify: fully factored modulus required");
    CongruenceCertificate cert;
    cert.modulus_radical = m.radical();
    cert.admissible_count = 1;
    Integer fam_const = family.constant.value();
    for (const auto& [p, e] : m.primes) {
        (void)e;
        if (fam_const % p == 0) {
            cert.identically_blocked = true;
            cert.admissible_count = 0;
        }
        std::vector<Integer> ex;
        for (const auto& f : family.factors) {
            auto roots = roots_mod_prime(f.coeffs, p);
            if (!roots) {
                cert.identically_blocked = true;
                cert.admissible_count = 0;
                continue;
            }
            ex.insert(ex.end(), roots->begin(), roots->end());
        }
        std::sort(ex.begin(), ex.end());
        ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
        if (!cert.identically_blocked) {
            if (static_cast<Integer>(ex.size()) == p) {
                cert.identically_blocked = true;
                cert.admissible_count = 0;
            } else {
                cert.admissible_count *= p - Integer(static_cast<unsigned long>(ex.size()));
            }
        }
        cert.excluded.emplace_back(p, std::move(ex));
    }
    return cert;
}

Candidate se_extend(const SeedStructure& seed, const WeightPair& w, const WeightPair& v) {
    WeightPair l = gorenstein_l(seed.fano_index, w);
    StageInvariants si = stage_invariants(l, w, v);

    Integer rhs = l.a0 * w.a0 * w.ainf;
    FactoredInteger modulus = factorize(rhs);
    FamilyPolynomial lhs = seed.upsilon.times_constant(l.ainf);
    Integer const_gcd = gcd(lhs.constant.value(), rhs);
    CongruenceCertificate cert = congruence_certify(lhs, modulus);

    Candidate cand{w,
                   v,
                   l,
                   si,
                   seed.upsilon.times_constant(si.m * v.a0 * v.ainf),
                   std::move(modulus),
                   const_gcd,
                   std::move(cert),
                   false,
                   {}};
    if (si.product) {
        cand.reject_reason = "product structure (v parallel to w)";
    } else if (cand.residues.identically_blocked) {
        cand.reject_reason = "family shares a fixed prime with l^0 w^0 w^inf";
    } else if (cand.residues.admissible_count == 0) {
        cand.reject_reason = "no admissible residue class";
    } else {
        cand.smooth_family = true;
    }
    return cand;
}

std::vector<YpqSolution> ypq_csc_search(const Integer& max_p) {
    if (max_p < 1) throw std::invalid_argument("ypq_csc_search: positive bound required");
    std::vector<YpqSolution> out;
    for (Integer p = 2; p <= max_p; ++p) {
        for (Integer q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            auto n = perfect_square_root(4 * p * p - 3 * q * q);
            if (n) out.push_back({p, q, *n});
        }
    }
    return out;
}

namespace {

std::vector<WeightPair> coprime_pairs_up_to(const Integer& bound) {
    std::vector<WeightPair> out;
    for (Integer a = 1; a <= bound; ++a)
        for (Integer b = 1; b <= bound; ++b)
            if (gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

}  // namespace

std::vector<Candidate> grid_search(const SeedStructure& seed, const GridOptions& opt) {
    std::vector<WeightPair> ws =
        opt.w_list.has_value() ? *opt.w_list : coprime_pairs_up_to(opt.w_max);
    std::vector<WeightPair> vs =
        opt.v_list.has_value() ? *opt.v_list : coprime_pairs_up_to(opt.v_max);

    struct Job {
        const WeightPair* w;
        const WeightPair* v;
    };
    std::vector<Job> jobs;
    jobs.reserve(ws.size() * vs.size());
    for (const auto& w : ws)
        for (const auto& v : vs) jobs.push_back({&w, &v});

    std::vector<std::optional<Candidate>> slots(jobs.size());
    const unsigned threads = std::max(1u, opt.threads);
    auto worker = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            Candidate c = se_extend(seed, *jobs[i].w, *jobs[i].v);
            if (opt.require_nontrivial && c.stage.product) continue;
            if (!c.smooth_family && !opt.include_rejected) continue;
            slots[i] = std::move(c);
        }
    };
    if (threads == 1) {
        worker(0, jobs.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (jobs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(jobs.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Candidate> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace bottjoin
