#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hassesieve/integer.hpp"

namespace hassesieve {

/// Binary cubic prime-generating pattern
///   value(B, C) = K1 * (s1*B + t1)^3 + K2 * (s2*C + t2)^3,
/// with the derived pair (b, c) = (s1*B + t1, s2*C + t2). Both substitution
/// steps are divisible by 3, so the derived residues mod 3 are fixed and
/// recorded; they are re-checked on every output rather than re-derived.
struct FormFamily {
    std::string name;
    Integer K1, s1, t1;
    Integer K2, s2, t2;
    Integer b_mod3, c_mod3;
    /// true when every value of the family is = 2 mod 3.
    bool forces_2_mod_3 = false;

    Integer value(const Integer& B, const Integer& C) const;
    std::pair<Integer, Integer> derived(const Integer& B, const Integer& C) const;
    std::string describe() const;
};

// Pair families (quadratic-factor primes q_j = P^iota b^3 + c^3):
FormFamily family_even_f(const Integer& P);                  // P^2(3X+1)^3 + (3Y+1)^3
FormFamily family_even_g(const Integer& P, bool u_div3);     // P^2(3X-1)^3 + (3Y)^3, or +(3Y+1)^3
FormFamily family_odd_f(const Integer& P);                   // P^2(3PX+1)^3 + (3PY+1)^3
FormFamily family_odd_g(const Integer& P);                   // P^2(3PX-1)^3 + (3PY+3)^3
FormFamily family_deg4_f(const Integer& P, int u_mod3);      // P(3X -+ 1)^3 + (3Y+1)^3
FormFamily family_deg4_g(const Integer& P, int u_mod3);      // P(3X +- 1)^3 + (3Y)^3
FormFamily family_hs_pair_f(const Integer& P);               // P(3PX+s)^3 + (3PY+1)^3, s = P mod 3 sign
FormFamily family_hs_pair_g(const Integer& P);               // P(3PX-s)^3 + (3PY+3)^3
FormFamily family_p3_pair_f(const Integer& P);               // P(PX+1)^3 + (PY-1)^3
FormFamily family_p3_pair_g(const Integer& P);               // P(PX-1)^3 + (PY-1)^3

// Norm families (Fermat primes l, the second coefficient being the pi- or
// pi^2-coordinate of the norm representation of l):
FormFamily family_h_general(const Integer& P, const Integer& p);  // (3pA-1)^3 + P(3pB+3)^3
FormFamily family_h_p3(const Integer& P);                         // (3A-1)^3 + P(3B+1)^3
FormFamily family_h_small_coeff(const Integer& P);                // (6A+1)^3 + P(6B-1)^3
FormFamily family_h_outline(const Integer& P);                    // (3PA+1)^3 + P^2(3PC+1)^3

struct GeneratedPrime {
    Integer q;
    FormFamily family;
    Integer B, C;  // raw inputs
    Integer b, c;  // derived pair
};

/// Content certificate: true iff the gcd of family values over the
/// [-radius, radius]^2 box is 1. A gcd > 1 over the box only means
/// "not certified", never a proof of failure.
bool content_check(const FormFamily& family, long sample_radius);

struct GenerateBudget {
    long max_shell = 100000;      // square shells max(|B|,|C|) <= r (pair mode)
    long max_norm_coord = 20000;  // second-coordinate cap (norm mode)
    unsigned long max_norm_value_bits = 128;
};

/// `count` distinct primes from a pair family, coprime to `coprime_to` and
/// not in `exclude`. Order: square shells max(|B|,|C|) = 0, 1, 2, ...,
/// within a shell ascending by (C, B). Deterministic.
std::vector<GeneratedPrime> generate(const FormFamily& family, size_t count,
                                     const Integer& coprime_to,
                                     const std::set<Integer>& exclude = {},
                                     const GenerateBudget& budget = {});

/// `count` distinct primes from a norm family, ascending by prime value with
/// the norm coordinate positive. The near-cancellation a^3 = -K2*c^3 puts
/// small primes at large coordinates, which is why shells are the wrong
/// order for these families.
std::vector<GeneratedPrime> generate_norm_primes(const FormFamily& family, size_t count,
                                                 const Integer& coprime_to,
                                                 const std::set<Integer>& exclude = {},
                                                 const GenerateBudget& budget = {});

/// Deterministic merged stream over several pair families: shell by shell,
/// families in the given order within a shell, (C, B) order within a family.
class FamilyStream {
public:
    FamilyStream(std::vector<FormFamily> families, Integer coprime_to,
                 GenerateBudget budget = {});
    GeneratedPrime next(const std::set<Integer>& extra_exclude = {});

private:
    std::vector<FormFamily> families_;
    Integer coprime_to_;
    GenerateBudget budget_;
    long shell_ = 0;
    size_t fam_idx_ = 0;
    size_t point_idx_ = 0;
    std::set<Integer> emitted_;
};

} // namespace hassesieve
