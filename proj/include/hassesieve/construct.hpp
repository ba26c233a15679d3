#pragma once

#include "hassesieve/certificate.hpp"
#include "hassesieve/cubic_field.hpp"
#include "hassesieve/primegen.hpp"

namespace hassesieve {

/// 1 if beta != 0 mod p or beta = gamma = 0 mod p; 2 if beta = 0 and
/// gamma != 0 mod p. p odd prime.
int compute_iota(const FundamentalUnit& unit, const Integer& p);

struct B0C0Solution {
    Integer b0, c0;
    int sign = 1;
    unsigned k = 0;
};

enum class B0C0Constraint { none, c0_square, b0_square };

struct SolveBudget {
    unsigned max_k = 40;
    Integer max_abs_b0 = 1000000;
};

/// Smallest solution, ordered by (|b0|, k, sign with + first), of
///   P^iota * b0 - l * c0 = sign * 3^k
/// with b0 = -1 mod 3Q (even variant) or +1 mod 3Q (deg4), gcd(l, c0) = 1.
/// When P != +-2, +-4 mod 9 the exponent k is forced to 0.
B0C0Solution solve_b0_c0(const Integer& P, int iota, const Integer& l, const Integer& Q,
                         Variant variant, B0C0Constraint constraint, const SolveBudget& = {});

struct ConstructOptions {
    /// Pin the square shape used by the paper's quotient-point demonstrations:
    /// c0 a perfect square (even) or b0 a perfect square (deg4).
    bool square_constraint = true;
    /// Record an undecided class number as assumed instead of failing.
    bool allow_assumed_class_number = false;
    GenerateBudget gen_budget;
    SolveBudget solve_budget;
    VoronoiBudget voronoi_budget;
};

Certificate construct_even(const Integer& u, unsigned n, unsigned m,
                           const ConstructOptions& opts = {});
Certificate construct_odd(const Integer& p, unsigned n, const ConstructOptions& opts = {});
Certificate construct_deg4(const Integer& u, unsigned n, const ConstructOptions& opts = {});

/// Factored plane curve of a certificate; the expanded coefficients are
/// re-checked against the factored product.
PlaneCurve expand_curve(const Certificate& cert);

} // namespace hassesieve
