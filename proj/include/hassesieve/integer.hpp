#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hassesieve/errors.hpp"

namespace hassesieve {

/// Exact arbitrary-precision integer. No floating point touches any value
/// that ends up in a certificate.
using Integer = mpz_class;

inline Integer ipow(Integer base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// a mod m normalized to [0, m).
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Truncated integer k-th root; exact = true iff r^k == |n|.
Integer iroot(const Integer& n, unsigned long k, bool* exact = nullptr);

/// true iff n is a perfect square (n >= 0).
bool is_square(const Integer& n);

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

enum class PrimalityRegime {
    deterministic,  // proven witness set (n below the verified bound)
    probabilistic,  // 128 Miller-Rabin rounds + strong Lucas; error < 2^-128
};

struct PrimalityResult {
    bool prime = false;
    PrimalityRegime regime = PrimalityRegime::deterministic;
};

/// Primality test. Deterministic below the verified Miller-Rabin witness
/// bound (far above 3e18), randomized Miller-Rabin + strong Lucas beyond,
/// with the regime reported.
PrimalityResult test_prime(const Integer& n);

inline bool is_prime(const Integer& n) { return test_prime(n).prime; }

/// Primes below `bound` by sieve of Eratosthenes.
std::vector<uint32_t> primes_below(uint32_t bound);

// ---------------------------------------------------------------------------
// Valuations, factorization
// ---------------------------------------------------------------------------

/// Largest e with l^e | n.  n == 0 signals infinite valuation.
unsigned long valuation(const Integer& n, const Integer& l);

/// Factor |n| completely: trial division by a prime table, then Pollard rho
/// (Brent variant) on the cofactors. Returns prime -> exponent, ascending.
std::map<Integer, unsigned long> factorize(const Integer& n);

/// Product of the distinct primes dividing |L|. L != 0.
Integer radical(const Integer& L);

bool is_squarefree(const Integer& n);

/// b in [0, m) with a*b == 1 mod m. Throws domain_error when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

// ---------------------------------------------------------------------------
// Power residues
// ---------------------------------------------------------------------------

enum class CubeClass { zero, cube, non_cube };

/// Cubic-residue class of a mod q (q prime). When q = 2 mod 3 cubing is a
/// bijection on F_q, so every nonzero class is a cube.
CubeClass cube_class(const Integer& a, const Integer& q);

/// true iff a is an n-th power in F_q^x, via a^((q-1)/gcd(n,q-1)) == 1.
/// Requires q prime and gcd(a, q) = 1.
bool nth_power_class(const Integer& a, unsigned long n, const Integer& q);

/// Legendre-style quadratic residue test for odd prime q.
bool is_quadratic_residue(const Integer& a, const Integer& q);

/// CRT for two coprime moduli: x == r1 mod m1, x == r2 mod m2, x in [0, m1*m2).
Integer crt2(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2);

} // namespace hassesieve
