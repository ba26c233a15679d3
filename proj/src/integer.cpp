#include "hassesieve/integer.hpp"

#include <array>
#include <random>

namespace hassesieve {

Integer iroot(const Integer& n, unsigned long k, bool* exact) {
    Integer r;
    Integer a = abs(n);
    int ex = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    if (exact) *exact = (ex != 0);
    return r;
}

bool is_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::vector<uint32_t> primes_below(uint32_t bound) {
    std::vector<bool> comp(bound, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < bound; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = uint64_t(i) * i; j < bound; j += i) comp[j] = true;
    }
    return out;
}

namespace {

// Strong probable prime test to base a; n odd > 2, n-1 = 2^s * d.
bool miller_rabin_round(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
    Integer x = powmod(a, d, n);
    Integer nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == nm1) return true;
    }
    return false;
}

// Strong Lucas probable prime test with Selfridge's parameter choice.
bool strong_lucas(const Integer& n) {
    // find D = 5, -7, 9, -11, ... with jacobi(D, n) = -1
    Integer D = 5;
    while (true) {
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == 0) return abs(D) == n;  // proper divisor found otherwise
        if (j == -1) break;
        if (D > 0) D = -(D + 2);
        else D = -(D - 2);
    }
    Integer P = 1, Q = (1 - D) / 4;

    Integer d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    // Lucas sequence U_d, V_d by binary ladder
    Integer U = 1, V = P, Qk = Q;
    unsigned long bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    Integer inv2 = mod_inverse(2, n);
    for (long i = long(bits) - 2; i >= 0; --i) {
        Integer U2 = (U * V) % n;
        Integer V2 = (V * V - 2 * Qk) % n;
        Integer Q2 = (Qk * Qk) % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            Integer Un = ((U2 * P + V2) * inv2) % n;
            Integer Vn = ((V2 * P + U2 * D) * inv2) % n;
            U = Un; V = Vn; Qk = (Q2 * Q) % n;
        } else {
            U = U2; V = V2; Qk = Q2;
        }
    }
    U = mod_floor(U, n);
    V = mod_floor(V, n);
    if (U == 0 || V == 0) return true;
    for (unsigned long i = 1; i < s; ++i) {
        V = mod_floor(V * V - 2 * Qk, n);
        if (V == 0) return true;
        Qk = (Qk * Qk) % n;
    }
    return false;
}

// Verified bound for the witness set {2,...,41} (first 13 primes):
// below this every strong pseudoprime is prime.
const Integer kDeterministicBound("3317044064679887385961981");
const std::array<int, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

} // namespace

PrimalityResult test_prime(const Integer& n) {
    PrimalityResult res;
    if (n < 2) return res;
    static const std::vector<uint32_t> small = primes_below(1000);
    for (uint32_t p : small) {
        if (n == p) { res.prime = true; return res; }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return res;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    if (n < kDeterministicBound) {
        for (int a : kWitnesses) {
            if (!miller_rabin_round(n, a, d, s)) return res;
        }
        res.prime = true;
        return res;
    }

    res.regime = PrimalityRegime::probabilistic;
    // Fixed seed: identical runs give identical transcripts.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eedu);
    for (int round = 0; round < 128; ++round) {
        Integer a = 2 + rng.get_z_range(n - 3);
        if (!miller_rabin_round(n, a, d, s)) return res;
    }
    if (!strong_lucas(n)) return res;
    res.prime = true;
    return res;
}

unsigned long valuation(const Integer& n, const Integer& l) {
    if (n == 0) throw domain_error("valuation: v_l(0) is infinite");
    if (l < 2) throw domain_error("valuation: modulus must be prime > 1");
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), l.get_mpz_t());
}

namespace {

Integer pollard_rho(const Integer& n, unsigned long seed) {
    // Brent's cycle-finding variant.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    while (true) {
        Integer y = 1 + rng.get_z_range(n - 1);
        Integer c = 1 + rng.get_z_range(n - 1);
        Integer m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer lim = std::min(Integer(m), Integer(r - k));
                for (Integer i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle degenerated; retry with fresh parameters
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned long>& out, unsigned long seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Integer d = pollard_rho(n, seed);
    factor_rec(d, out, seed + 1);
    factor_rec(n / d, out, seed + 1);
}

} // namespace

std::map<Integer, unsigned long> factorize(const Integer& n) {
    if (n == 0) throw domain_error("factorize: zero has no factorization");
    std::map<Integer, unsigned long> out;
    Integer rest = abs(n);
    static const std::vector<uint32_t> table = primes_below(100000);
    for (uint32_t p : table) {
        if (rest == 1) break;
        if (Integer(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            Integer pz(p);
            unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
            out[pz] = e;
        }
    }
    if (rest > 1) {
        if (is_prime(rest)) out[rest]++;
        else factor_rec(rest, out, 0x9e3779b9u);
    }
    return out;
}

Integer radical(const Integer& L) {
    if (L == 0) throw domain_error("radical: undefined for 0");
    Integer r = 1;
    for (const auto& [p, e] : factorize(L)) r *= p;
    return r;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n))
        if (e >= 2) return false;
    return true;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m < 2) throw domain_error("mod_inverse: modulus must be >= 2");
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("mod_inverse: not invertible (gcd != 1)");
    return r;
}

CubeClass cube_class(const Integer& a, const Integer& q) {
    Integer r = mod_floor(a, q);
    if (r == 0) return CubeClass::zero;
    if (q == 3 || mod_floor(q, 3) == 2) return CubeClass::cube;  // cubing bijective
    Integer e = (q - 1) / 3;
    return powmod(r, e, q) == 1 ? CubeClass::cube : CubeClass::non_cube;
}

bool nth_power_class(const Integer& a, unsigned long n, const Integer& q) {
    if (gcd(a, q) != 1) throw domain_error("nth_power_class: a not coprime to q");
    if (q == 2) return true;
    Integer e = (q - 1) / gcd(Integer(n), q - 1);
    return powmod(a, e, q) == 1;
}

bool is_quadratic_residue(const Integer& a, const Integer& q) {
    Integer r = mod_floor(a, q);
    if (r == 0) return true;
    return powmod(r, (q - 1) / 2, q) == 1;
}

Integer crt2(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
    if (gcd(m1, m2) != 1) throw domain_error("crt2: moduli not coprime");
    Integer t = mod_floor((r2 - r1) * mod_inverse(m1, m2), m2);
    return mod_floor(r1 + t * m1, m1 * m2);
}

} // namespace hassesieve
