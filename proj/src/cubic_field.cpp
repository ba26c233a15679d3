#include "hassesieve/cubic_field.hpp"

#include <cmath>

#include "hassesieve/lattice.hpp"

namespace hassesieve {

PureCubicField::PureCubicField(const Integer& p, const Integer& u) : p_(p), u_(u) {
    if (!is_prime(p)) throw domain_error("PureCubicField: p must be prime");
    if (u < 1 || !is_squarefree(u)) throw domain_error("PureCubicField: u must be squarefree >= 1");
    if (gcd(p, u) != 1) throw domain_error("PureCubicField: u must be prime to p");
    P_ = p * u;
    if (P_ < 2) throw domain_error("PureCubicField: P must be >= 2");
    Integer r = mod_floor(P_, 9);
    if (r == 1 || r == 8)
        throw domain_error("PureCubicField: P = +-1 mod 9 is outside the monogenic case");
}

PureCubicField PureCubicField::from_radicand(const Integer& P) {
    if (P < 2) throw domain_error("PureCubicField: P must be >= 2");
    if (mpz_even_p(P.get_mpz_t())) return PureCubicField(2, P / 2);
    auto f = factorize(P);
    Integer p = f.begin()->first;
    return PureCubicField(p, P / p);
}

Integer norm(const CubicElement& e) {
    return norm3(e.P, Vec3{e.a, e.b, e.c});
}

CubicElement multiply(const CubicElement& e1, const CubicElement& e2) {
    if (e1.P != e2.P) throw domain_error("multiply: elements of different fields");
    Vec3 r = mul3(e1.P, Vec3{e1.a, e1.b, e1.c}, Vec3{e2.a, e2.b, e2.c});
    return CubicElement(r[0], r[1], r[2], e1.P);
}

int real_sign(const CubicElement& e) {
    return sign_real3(e.P, Vec3{e.a, e.b, e.c});
}

namespace {

// log of the real embedding, robust for coordinates far beyond double range
double log_real_embedding(const CubicElement& e) {
    double pi1 = std::cbrt(mpz_get_d(e.P.get_mpz_t()));
    long ea, eb, ec;
    double da = mpz_get_d_2exp(&ea, e.a.get_mpz_t());
    double db = mpz_get_d_2exp(&eb, e.b.get_mpz_t());
    double dc = mpz_get_d_2exp(&ec, e.c.get_mpz_t());
    long E = std::max({ea, eb, ec});
    double s = da * std::ldexp(1.0, int(ea - E)) + db * std::ldexp(1.0, int(eb - E)) * pi1 +
               dc * std::ldexp(1.0, int(ec - E)) * pi1 * pi1;
    return std::log(s) + double(E) * std::log(2.0);
}

} // namespace

FundamentalUnit fundamental_unit(const PureCubicField& F, const VoronoiBudget& budget) {
    UnitChainResult chain = voronoi_unit_chain(F.P(), budget);
    FundamentalUnit out;
    out.element = CubicElement(chain.unit[0], chain.unit[1], chain.unit[2], F.P());
    out.minima_chain.reserve(chain.minima_chain.size());
    for (const auto& v : chain.minima_chain)
        out.minima_chain.emplace_back(v[0], v[1], v[2], F.P());
    if (norm(out.element) != 1)
        throw error("fundamental_unit: chain did not end at a norm-1 unit");
    out.regulator_estimate = log_real_embedding(out.element);
    return out;
}

SplittingType splitting_type(const PureCubicField& F, const Integer& q) {
    if (!is_prime(q)) throw domain_error("splitting_type: q must be prime");
    SplittingType st;
    st.q = q;
    if (mod_floor(3 * F.P(), q) == 0) {
        st.kind = SplitKind::ramified;
        st.factors = {{3, 1}};
        return st;
    }
    if (mod_floor(q, 3) == 2) {
        st.kind = SplitKind::one_one_two;
        st.factors = {{1, 1}, {1, 2}};
        return st;
    }
    if (cube_class(F.P(), q) == CubeClass::cube) {
        st.kind = SplitKind::split_three;
        st.factors = {{1, 1}, {1, 1}, {1, 1}};
    } else {
        st.kind = SplitKind::inert;
        st.factors = {{1, 3}};
    }
    return st;
}

std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::split_three: return "split-three";
        case SplitKind::one_one_two: return "one-one-two";
        case SplitKind::ramified: return "ramified";
        case SplitKind::inert: return "inert";
    }
    return "?";
}

unsigned long unit_order_mod(const CubicElement& e, const Integer& modulus) {
    if (modulus < 2) throw domain_error("unit_order_mod: modulus must be >= 2");
    if (gcd(norm(e), modulus) != 1)
        throw domain_error("unit_order_mod: element not invertible mod modulus");
    auto red = [&](const CubicElement& x) {
        return CubicElement(mod_floor(x.a, modulus), mod_floor(x.b, modulus),
                            mod_floor(x.c, modulus), x.P);
    };
    CubicElement base = red(e);
    CubicElement acc = base;
    Integer cap = modulus * modulus * modulus;  // |(Z[pi]/m)^x| divides m^3
    unsigned long k = 1;
    while (!acc.is_one()) {
        acc = red(multiply(acc, base));
        ++k;
        if (Integer(k) > cap) throw error("unit_order_mod: order exceeds group bound");
    }
    return k;
}

AacmResult aacm_scan(const Integer& p, AacmVariant variant) {
    if (!is_prime(p)) throw domain_error("aacm_scan: p must be prime");
    if (p == 3) throw domain_error("aacm_scan: p = 3 is excluded from the conjecture");
    AacmResult res;
    res.p = p;
    res.P = (variant == AacmVariant::p) ? p : 2 * p;
    if (p == 2 && variant == AacmVariant::two_p) {
        res.status = AacmStatus::inapplicable;
        res.note = "P = 4 is not squarefree";
        return res;
    }
    Integer r = mod_floor(res.P, 9);
    if (r == 1 || r == 8) {
        res.status = AacmStatus::inapplicable;
        res.note = "P = +-1 mod 9";
        return res;
    }
    PureCubicField F = (variant == AacmVariant::p) ? PureCubicField(p, 1) : PureCubicField(p, 2);
    FundamentalUnit eps = fundamental_unit(F);
    res.alpha_mod_p = mod_floor(eps.alpha(), p);
    res.beta_mod_p = mod_floor(eps.beta(), p);
    res.gamma_mod_p = mod_floor(eps.gamma(), p);
    if (p == 2) {
        res.status = AacmStatus::special;
        res.note = "p = 2 reported as data only";
        return res;
    }
    res.status = (res.beta_mod_p != 0) ? AacmStatus::holds : AacmStatus::fails;
    return res;
}

} // namespace hassesieve
