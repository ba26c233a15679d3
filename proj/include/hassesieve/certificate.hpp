#pragma once

#include <string>
#include <vector>

#include "hassesieve/binary_form.hpp"
#include "hassesieve/integer.hpp"

namespace hassesieve {

enum class Variant { even, odd, deg4 };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

enum class LedgerStatus { verified, assumed, failed };

struct LedgerEntry {
    std::string id;
    LedgerStatus status;
    std::string detail;
};

struct PairRecord {
    Integer b, c;  // quadratic factor b^2 X^2 + bc XY + c^2 Y^2
    Integer q;     // the prime P^iota b^3 + c^3
    std::string family;
    Integer B, C;  // raw family inputs
};

/// Which global-unsolubility argument backs an odd-variant certificate.
enum class OddBranch {
    fermat_unify,  // beta = 0, gamma != 0 mod p: iota = 2, m = p-1
    both_zero,     // beta = gamma = 0 mod p: iota = 1
    hs_outline,    // beta != 0 mod p: iota = 1, even m with a non-residue witness
};

std::string to_string(OddBranch b);
OddBranch odd_branch_from_string(const std::string& s);

/// Full parameter set of one counterexample curve plus the provenance of
/// every condition check. A certificate with any failed entry is rejected
/// at construction.
struct Certificate {
    int schema = 1;

    Variant variant = Variant::even;
    unsigned n = 0;  // curve degree
    unsigned m = 0;  // v_l(L)
    Integer u, p, P;
    int iota = 0, nu = 0;

    Integer l;  // the Fermat prime
    Integer L;  // l^m
    Integer Q;  // product of primes q | P with q = 2 mod 3

    std::vector<PairRecord> pairs;

    bool has_b0 = false;  // even/deg4 only
    Integer b0, c0;
    int sign = 1;    // P^iota b0 - l c0 = sign * 3^k
    unsigned k = 0;

    Integer na, nb, nc;  // l = N(na + nb pi + nc pi^2)

    Integer alpha, beta, gamma;  // fundamental unit coordinates
    unsigned long h = 0;         // class number
    bool h_assumed = false;

    OddBranch branch = OddBranch::fermat_unify;  // odd variant only
    unsigned qr_m = 0;    // hs_outline: the chosen even exponent
    Integer qr_value;     // hs_outline: the verified non-residue mod p

    std::vector<LedgerEntry> ledger;

    bool ledger_all_verified() const;
    bool ledger_has_assumed() const;
};

/// Degree-n ternary curve G(X, Y) = L * Z^n in factored and expanded form.
struct PlaneCurve {
    unsigned n = 0;
    Integer L;
    std::vector<BinaryForm> factors;
    BinaryForm G;  // expanded product of the factors

    /// G(X,Y) - L Z^n as a dense ternary form.
    TernaryForm form() const { return TernaryForm::curve_shape(G, L); }
    /// Re-expansion check: G equals the product of the recorded factors.
    bool expansion_consistent() const;
};

} // namespace hassesieve
