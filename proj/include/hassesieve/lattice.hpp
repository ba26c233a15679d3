#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hassesieve/cubic_field.hpp"
#include "hassesieve/integer.hpp"

namespace hassesieve {

/// Integer coordinate triple (x, y, z) for x + y*pi + z*pi^2.
using Vec3 = std::array<Integer, 3>;

/// N(x + y pi + z pi^2) on raw coordinates.
Integer norm3(const Integer& P, const Vec3& v);

/// Sign of the real embedding of a coordinate triple (0 only for the zero
/// triple): equals sign of the norm, because the complex conjugate pair
/// multiplies to a positive real.
int sign_real3(const Integer& P, const Vec3& v);

Vec3 mul3(const Integer& P, const Vec3& a, const Vec3& b);

/// Full-rank lattice (1/den) * span_Z{rows} inside K = Q(pi), pi^3 = P.
/// Rows are kept in canonical Hermite normal form:
///   v0 = (a, 0, 0), v1 = (b, c, 0), v2 = (d, e, f)
/// with a, c, f > 0, 0 <= b, d < a, 0 <= e < c, and gcd(den, content) = 1.
struct CubicLattice {
    Integer P;
    Integer den;
    std::array<Vec3, 3> basis;

    static CubicLattice identity(const Integer& P);
    /// Canonical lattice spanned by `gens` scaled by 1/den.
    static CubicLattice from_generators(const Integer& P, std::vector<Vec3> gens,
                                        const Integer& den);

    bool is_identity() const;
    bool operator==(const CubicLattice& o) const;
    bool operator<(const CubicLattice& o) const;  // lexicographic, for cycle reps
    std::string key() const;

    /// Index [Z[pi] : L] for integral L (den == 1): product of HNF pivots.
    Integer index_in_order() const;
};

/// Z-module product A*B (span of pairwise products). For fractional ideals
/// this is the ideal product.
CubicLattice lattice_mul(const CubicLattice& A, const CubicLattice& B);

/// mu^{-1} * L for mu = mu_num / L.den an element of L.
CubicLattice divide_by(const CubicLattice& L, const Vec3& mu_num);

/// The element mu of L with mu' > 1 minimal subject to |mu''| < 1, i.e. the
/// relative minimum adjacent to 1 in the increasing direction. All
/// comparisons are exact; floating point only seeds the enumeration boxes.
/// Returns the numerator triple (denominator is L.den).
Vec3 adjacent_minimum(const CubicLattice& L, const VoronoiBudget& budget = {});

struct ReducedCycle {
    CubicLattice rep;          // lexicographic minimum of the cycle: class invariant
    bool contains_identity;    // true iff the lattice is a principal ideal
    unsigned long walk_steps;
};

/// Walks the Voronoi chain L, mu^{-1}L, ... until the lattice sequence
/// repeats, and returns the canonical representative of the resulting cycle.
/// Two lattices are similar (equal up to a K^x factor) iff their cycles
/// coincide, which makes `rep` usable as an equality key for ideal classes.
ReducedCycle reduce_to_cycle(const CubicLattice& L, const VoronoiBudget& budget = {});

struct UnitChainResult {
    Vec3 unit;                       // coordinates of the fundamental unit
    std::vector<Vec3> minima_chain;  // theta_0 = 1, ..., theta_g = unit
};

/// Walks the chain of relative minima of Z[pi] from 1 until the lattice
/// returns to Z[pi]; the accumulated product is the fundamental unit > 1.
UnitChainResult voronoi_unit_chain(const Integer& P, const VoronoiBudget& budget = {});

} // namespace hassesieve
