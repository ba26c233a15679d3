#include "hassesieve/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace hassesieve {

Integer norm3(const Integer& P, const Vec3& v) {
    const Integer &x = v[0], &y = v[1], &z = v[2];
    return x * x * x + P * y * y * y + P * P * z * z * z - 3 * P * x * y * z;
}

int sign_real3(const Integer& P, const Vec3& v) {
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) return 0;
    return sgn(norm3(P, v));
}

Vec3 mul3(const Integer& P, const Vec3& a, const Vec3& b) {
    return Vec3{a[0] * b[0] + P * (a[1] * b[2] + a[2] * b[1]),
                a[0] * b[1] + a[1] * b[0] + P * a[2] * b[2],
                a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

namespace {

// adj(mu) with mu * adj(mu) = N(mu): the product of the two conjugates.
Vec3 adjugate3(const Integer& P, const Vec3& v) {
    const Integer &x = v[0], &y = v[1], &z = v[2];
    return Vec3{x * x - P * y * z, P * z * z - x * y, y * y - x * z};
}

Integer content(const std::array<Vec3, 3>& rows, const Integer& den) {
    Integer g = den;
    for (const auto& r : rows)
        for (const auto& e : r) g = gcd(g, e);
    return g;
}

} // namespace

CubicLattice CubicLattice::identity(const Integer& P) {
    CubicLattice L;
    L.P = P;
    L.den = 1;
    L.basis = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    return L;
}

CubicLattice CubicLattice::from_generators(const Integer& P, std::vector<Vec3> gens,
                                           const Integer& den) {
    // Hermite normal form by coordinate-wise Euclid, pivot order z, y, x.
    auto reduce_axis = [&](int axis, std::vector<Vec3>& vs) -> std::optional<Vec3> {
        while (true) {
            int best = -1;
            for (size_t i = 0; i < vs.size(); ++i) {
                if (vs[i][axis] == 0) continue;
                if (best < 0 || abs(vs[i][axis]) < abs(vs[best][axis])) best = int(i);
            }
            if (best < 0) return std::nullopt;
            bool others = false;
            for (size_t i = 0; i < vs.size(); ++i) {
                if (int(i) == best || vs[i][axis] == 0) continue;
                others = true;
                Integer qq = vs[i][axis] / vs[best][axis];  // truncated division
                for (int k = 0; k < 3; ++k) vs[i][k] -= qq * vs[best][k];
            }
            if (!others) {
                Vec3 pivot = vs[best];
                vs.erase(vs.begin() + best);
                if (pivot[axis] < 0)
                    for (auto& e : pivot) e = -e;
                return pivot;
            }
        }
    };

    std::vector<Vec3> work = std::move(gens);
    std::optional<Vec3> v2 = reduce_axis(2, work);
    std::optional<Vec3> v1 = reduce_axis(1, work);
    std::optional<Vec3> v0 = reduce_axis(0, work);
    if (!v0 || !v1 || !v2) throw error("from_generators: lattice not of full rank");

    // reduce off-pivot entries into canonical ranges
    Vec3 a = *v0, b = *v1, c = *v2;
    {
        Integer q = mod_floor(b[0], a[0]);
        Integer t = (b[0] - q) / a[0];
        b[0] -= t * a[0];
    }
    {
        Integer q = mod_floor(c[1], b[1]);
        Integer t = (c[1] - q) / b[1];
        for (int k = 0; k < 3; ++k) c[k] -= t * b[k];
        Integer q2 = mod_floor(c[0], a[0]);
        Integer t2 = (c[0] - q2) / a[0];
        c[0] -= t2 * a[0];
    }

    CubicLattice L;
    L.P = P;
    L.den = den;
    L.basis = {a, b, c};
    Integer g = content(L.basis, L.den);
    if (g > 1) {
        L.den /= g;
        for (auto& r : L.basis)
            for (auto& e : r) e /= g;
    }
    return L;
}

bool CubicLattice::is_identity() const {
    return den == 1 && basis[0] == Vec3{1, 0, 0} && basis[1] == Vec3{0, 1, 0} &&
           basis[2] == Vec3{0, 0, 1};
}

bool CubicLattice::operator==(const CubicLattice& o) const {
    return den == o.den && basis == o.basis;
}

bool CubicLattice::operator<(const CubicLattice& o) const {
    if (den != o.den) return den < o.den;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            if (basis[i][k] != o.basis[i][k]) return basis[i][k] < o.basis[i][k];
    return false;
}

std::string CubicLattice::key() const {
    std::ostringstream os;
    os << den;
    for (const auto& r : basis)
        for (const auto& e : r) os << ',' << e;
    return os.str();
}

Integer CubicLattice::index_in_order() const {
    if (den != 1) throw error("index_in_order: lattice not integral");
    return basis[0][0] * basis[1][1] * basis[2][2];
}

CubicLattice lattice_mul(const CubicLattice& A, const CubicLattice& B) {
    if (A.P != B.P) throw error("lattice_mul: field mismatch");
    std::vector<Vec3> gens;
    gens.reserve(9);
    for (const auto& u : A.basis)
        for (const auto& v : B.basis) gens.push_back(mul3(A.P, u, v));
    return CubicLattice::from_generators(A.P, std::move(gens), A.den * B.den);
}

CubicLattice divide_by(const CubicLattice& L, const Vec3& mu_num) {
    Integer n = norm3(L.P, mu_num);
    if (n == 0) throw error("divide_by: zero element");
    Vec3 adj = adjugate3(L.P, mu_num);
    std::vector<Vec3> gens;
    gens.reserve(3);
    for (const auto& v : L.basis) gens.push_back(mul3(L.P, v, adj));
    Integer den = n;
    if (den < 0) {
        den = -den;
        for (auto& g : gens)
            for (auto& e : g) e = -e;
    }
    return CubicLattice::from_generators(L.P, std::move(gens), den);
}

namespace {

// Exact predicates on candidates mu = num/den.

// mu' > 1
bool real_gt_one(const Integer& P, const Vec3& num, const Integer& den) {
    return sign_real3(P, Vec3{num[0] - den, num[1], num[2]}) > 0;
}

// mu' < nu' (same denominator)
bool real_less(const Integer& P, const Vec3& a, const Vec3& b) {
    return sign_real3(P, Vec3{b[0] - a[0], b[1] - a[1], b[2] - a[2]}) > 0;
}

// |mu''| < 1, i.e. N(mu) < mu' given mu' > 0: sign of (mu - N(mu))' > 0.
bool complex_lt_one(const Integer& P, const Vec3& num, const Integer& den) {
    Integer n = norm3(P, num);  // N(mu) = n / den^3
    Integer d2 = den * den;
    return sign_real3(P, Vec3{num[0] * d2 - n, num[1] * d2, num[2] * d2}) > 0;
}

} // namespace

Vec3 adjacent_minimum(const CubicLattice& L, const VoronoiBudget& budget) {
    const Integer& P = L.P;
    double pi1 = std::cbrt(mpz_get_d(P.get_mpz_t()));
    double pi2 = pi1 * pi1;
    double den = mpz_get_d(L.den.get_mpz_t());

    const Vec3 &v0 = L.basis[0], &v1 = L.basis[1], &v2 = L.basis[2];
    double a0 = mpz_get_d(v0[0].get_mpz_t());
    double b0 = mpz_get_d(v1[0].get_mpz_t()), b1 = mpz_get_d(v1[1].get_mpz_t());
    double c0 = mpz_get_d(v2[0].get_mpz_t()), c1 = mpz_get_d(v2[1].get_mpz_t()),
           c2 = mpz_get_d(v2[2].get_mpz_t());

    // Region { 1 < mu' <= T, |mu''| <= 1 } in coordinates (x, y, z):
    //   x       = (mu' + 2 Re mu'') / 3            in (-1/3, (T+2)/3]
    //   y*pi1   = (mu' - Re mu'')/3 + Im mu''/sqrt3 in (-1/sqrt3, (T+1)/3 + 1/sqrt3]
    //   z*pi2   = (mu' - Re mu'')/3 - Im mu''/sqrt3 same range
    // with the correlations |y*pi1 - z*pi2| <= 2/sqrt3 (from Im) and
    // |x - (y*pi1 + z*pi2)/2| <= 1 (from Re), which cut the box to a slab.
    constexpr double kInvSqrt3 = 0.5773502691896258;
    for (double T = 2.0; T <= double(budget.max_box); T *= 2) {
        const double slack = 1e-6 * (T + 3.0);
        const double m = 1e-9 * (T + 3.0) + 1e-12;

        std::optional<Vec3> best;
        double best_val = 0;
        double zlo = (-kInvSqrt3 - m) / pi2 * den, zhi = ((T + 1.0) / 3.0 + kInvSqrt3 + m) / pi2 * den;
        long k2lo = long(std::ceil(zlo / c2)) - 1, k2hi = long(std::floor(zhi / c2)) + 1;
        for (long k2 = k2lo; k2 <= k2hi; ++k2) {
            double z2 = (double(k2) * c2 / den) * pi2;  // z * pi2
            // Im band: y*pi1 in [z*pi2 - 2/sqrt3, z*pi2 + 2/sqrt3], Box: as above
            double ylo1 = std::max(z2 - 2.0 * kInvSqrt3, -kInvSqrt3) - m;
            double yhi1 = std::min(z2 + 2.0 * kInvSqrt3, (T + 1.0) / 3.0 + kInvSqrt3) + m;
            if (ylo1 > yhi1) continue;
            double yoff = double(k2) * c1;
            long k1lo = long(std::ceil((ylo1 / pi1 * den - yoff) / b1)) - 1;
            long k1hi = long(std::floor((yhi1 / pi1 * den - yoff) / b1)) + 1;
            for (long k1 = k1lo; k1 <= k1hi; ++k1) {
                double y1 = ((double(k1) * b1 + yoff) / den) * pi1;  // y * pi1
                // Re band: x in [(y1+z2)/2 - 1, (y1+z2)/2 + 1], box: (-1/3, (T+2)/3]
                double mid = 0.5 * (y1 + z2);
                double xlo = std::max(mid - 1.0, -1.0 / 3.0) - m;
                double xhi = std::min(mid + 1.0, (T + 2.0) / 3.0) + m;
                if (xlo > xhi) continue;
                double xoff = double(k1) * b0 + double(k2) * c0;
                long k0lo = long(std::ceil((xlo * den - xoff) / a0)) - 1;
                long k0hi = long(std::floor((xhi * den - xoff) / a0)) + 1;
                for (long k0 = k0lo; k0 <= k0hi; ++k0) {
                    // cheap float screen; survivors get exact checks
                    double xd = (double(k0) * a0 + xoff) / den;
                    double re = xd + y1 + z2;
                    if (re <= 1.0 - slack || re > T + slack) continue;
                    if (best && re >= best_val + slack) continue;
                    double cre = xd - 0.5 * (y1 + z2);
                    double cim = 0.8660254037844386 * (y1 - z2);
                    if (cre * cre + cim * cim >= 1.0 + slack) continue;
                    Vec3 cand{k0 * v0[0] + k1 * v1[0] + k2 * v2[0],
                              k1 * v1[1] + k2 * v2[1], k2 * v2[2]};
                    if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
                    if (!real_gt_one(P, cand, L.den)) continue;
                    if (!complex_lt_one(P, cand, L.den)) continue;
                    if (!best || real_less(P, cand, *best)) {
                        best = cand;
                        best_val = re;
                    }
                }
            }
        }
        if (best) return *best;
    }
    throw undecided_error("adjacent_minimum: enumeration window exhausted");
}

ReducedCycle reduce_to_cycle(const CubicLattice& start, const VoronoiBudget& budget) {
    std::map<std::string, unsigned long> seen;
    std::vector<CubicLattice> chain;
    CubicLattice cur = start;
    for (unsigned long step = 0; step < budget.max_steps; ++step) {
        auto it = seen.find(cur.key());
        if (it != seen.end()) {
            ReducedCycle out;
            out.walk_steps = step;
            out.contains_identity = false;
            const CubicLattice* best = nullptr;
            for (unsigned long i = it->second; i < chain.size(); ++i) {
                if (chain[i].is_identity()) out.contains_identity = true;
                if (!best || chain[i] < *best) best = &chain[i];
            }
            out.rep = *best;
            return out;
        }
        seen.emplace(cur.key(), chain.size());
        chain.push_back(cur);
        Vec3 mu = adjacent_minimum(cur, budget);
        cur = divide_by(cur, mu);
    }
    throw undecided_error("reduce_to_cycle: walk budget exhausted");
}

UnitChainResult voronoi_unit_chain(const Integer& P, const VoronoiBudget& budget) {
    CubicLattice L = CubicLattice::identity(P);
    Vec3 theta{1, 0, 0};
    UnitChainResult out;
    out.minima_chain.push_back(theta);
    for (unsigned long step = 0; step < budget.max_steps; ++step) {
        Vec3 mu = adjacent_minimum(L, budget);
        // theta_{g+1} = theta_g * (mu / den): exact because theta_g * mu / den
        // lies back in Z[pi] whenever the walk stays on theta^{-1} Z[pi].
        Vec3 prod = mul3(P, theta, mu);
        for (auto& e : prod) {
            if (!mpz_divisible_p(e.get_mpz_t(), L.den.get_mpz_t()))
                throw error("voronoi_unit_chain: chain left Z[pi]");
            e /= L.den;
        }
        theta = prod;
        L = divide_by(L, mu);
        out.minima_chain.push_back(theta);
        if (L.is_identity()) {
            out.unit = theta;
            return out;
        }
    }
    throw undecided_error("voronoi_unit_chain: step budget exhausted");
}

} // namespace hassesieve
