#pragma once

#include <string>
#include <vector>

#include "hassesieve/integer.hpp"

namespace hassesieve {

/// The pure cubic field K = Q(P^{1/3}) with P squarefree and P != +-1 mod 9,
/// so that O_K = Z[pi]. Immutable after construction.
class PureCubicField {
public:
    /// P = p*u with u squarefree prime to p. Validates squarefreeness and the
    /// mod-9 constraint; rejects anything the construction theorems exclude.
    PureCubicField(const Integer& p, const Integer& u);

    /// Convenience: splits off p = 2 for even P, else the smallest prime factor.
    static PureCubicField from_radicand(const Integer& P);

    const Integer& P() const { return P_; }
    const Integer& p() const { return p_; }
    const Integer& u() const { return u_; }
    Integer discriminant() const { return -27 * P_ * P_; }

    bool operator==(const PureCubicField& o) const { return P_ == o.P_; }

private:
    Integer P_, p_, u_;
};

/// a + b*pi + c*pi^2 with exact integer coordinates.
struct CubicElement {
    Integer a, b, c;
    Integer P;  // radicand of the ambient field (pi^3 = P)

    CubicElement() : a(0), b(0), c(0), P(0) {}
    CubicElement(Integer a_, Integer b_, Integer c_, Integer P_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), P(std::move(P_)) {}

    bool is_one() const { return a == 1 && b == 0 && c == 0; }
    bool operator==(const CubicElement& o) const = default;
};

/// N(a + b pi + c pi^2) = a^3 + P b^3 + P^2 c^3 - 3 P a b c.
Integer norm(const CubicElement& e);

/// Product in the basis 1, pi, pi^2 using pi^3 = P. Throws on field mismatch.
CubicElement multiply(const CubicElement& e1, const CubicElement& e2);

/// Sign of the real embedding of a nonzero element. Since the complex pair of
/// conjugates multiplies to a positive real, this equals the sign of the norm.
int real_sign(const CubicElement& e);

struct FundamentalUnit {
    CubicElement element;       // coordinates (alpha, beta, gamma)
    double regulator_estimate;  // log of the real embedding; reporting only
    /// Chain of relative minima 1 = theta_0 < theta_1 < ... < theta_g = eps
    /// walked by the Voronoi algorithm, kept for independent audit.
    std::vector<CubicElement> minima_chain;

    const Integer& alpha() const { return element.a; }
    const Integer& beta() const { return element.b; }
    const Integer& gamma() const { return element.c; }
};

struct VoronoiBudget {
    unsigned long max_steps = 200000;   // chain steps before giving up
    unsigned long max_box = 1u << 22;   // enumeration window growth cap
};

/// Fundamental unit > 1 of O_K = Z[pi], by walking the Voronoi chain of
/// relative minima with exact rational comparisons. Never returns a wrong
/// unit: search-bound exhaustion raises undecided_error.
FundamentalUnit fundamental_unit(const PureCubicField& F, const VoronoiBudget& budget = {});

enum class SplitKind {
    split_three,   // q = 1 mod 3, P a cube mod q: three degree-1 primes
    one_one_two,   // q = 2 mod 3, gcd(q,P) = 1: degrees 1 and 2
    ramified,      // q | 3P
    inert,         // q = 1 mod 3, P not a cube mod q
};

struct SplittingType {
    Integer q;
    SplitKind kind;
    std::vector<std::pair<int, int>> factors;  // (e_i, f_i), sum e_i f_i = 3
};

SplittingType splitting_type(const PureCubicField& F, const Integer& q);

std::string to_string(SplitKind k);

/// Multiplicative order of e in (Z[pi]/modulus)^x.
/// Requires gcd(norm(e), modulus) = 1.
unsigned long unit_order_mod(const CubicElement& e, const Integer& modulus);

/// Class number of F, by enumerating the degree-1 primes below the Minkowski
/// bound and closing their classes under multiplication; class identity is
/// decided by Voronoi-cycle principality tests. Raises undecided_error when a
/// reduction walk exceeds its budget.
unsigned long class_number(const PureCubicField& F, const FundamentalUnit& unit);

// ---------------------------------------------------------------------------
// Unit indivisibility scan (Ankeny-Artin-Chowla-Mordell analogue)
// ---------------------------------------------------------------------------

enum class AacmStatus {
    holds,         // beta != 0 mod p
    fails,         // beta == 0 mod p
    inapplicable,  // P fails squarefree / mod-9 constraints
    special,       // p = 2: reported as data only
};

struct AacmResult {
    Integer p;
    Integer P;
    AacmStatus status = AacmStatus::inapplicable;
    Integer alpha_mod_p, beta_mod_p, gamma_mod_p;
    std::string note;
};

enum class AacmVariant { p, two_p };

/// Checks beta != 0 mod p for the fundamental unit of Q(P^{1/3}), P = p or 2p.
AacmResult aacm_scan(const Integer& p, AacmVariant variant);

} // namespace hassesieve
