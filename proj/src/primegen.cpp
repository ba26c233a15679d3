#include "hassesieve/primegen.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace hassesieve {

Integer FormFamily::value(const Integer& B, const Integer& C) const {
    Integer b = s1 * B + t1, c = s2 * C + t2;
    return K1 * b * b * b + K2 * c * c * c;
}

std::pair<Integer, Integer> FormFamily::derived(const Integer& B, const Integer& C) const {
    return {s1 * B + t1, s2 * C + t2};
}

std::string FormFamily::describe() const {
    std::ostringstream os;
    os << K1 << "*(" << s1 << "X" << (t1 >= 0 ? "+" : "") << t1 << ")^3 + " << K2 << "*(" << s2
       << "Y" << (t2 >= 0 ? "+" : "") << t2 << ")^3";
    return os.str();
}

namespace {

FormFamily make(std::string name, Integer K1, Integer s1, Integer t1, Integer K2, Integer s2,
                Integer t2, bool forces2) {
    FormFamily f;
    f.name = std::move(name);
    f.K1 = std::move(K1);
    f.s1 = std::move(s1);
    f.t1 = std::move(t1);
    f.K2 = std::move(K2);
    f.s2 = std::move(s2);
    f.t2 = std::move(t2);
    if (mod_floor(f.s1, 3) != 0 || mod_floor(f.s2, 3) != 0)
        throw error("FormFamily: substitution steps must be divisible by 3");
    f.b_mod3 = mod_floor(f.t1, 3);
    f.c_mod3 = mod_floor(f.t2, 3);
    f.forces_2_mod_3 = forces2;
    return f;
}

} // namespace

FormFamily family_even_f(const Integer& P) {
    return make("even-f", P * P, 3, 1, 1, 3, 1, mod_floor(P, 3) != 0);
}

FormFamily family_even_g(const Integer& P, bool u_div3) {
    if (u_div3) return make("even-g3", P * P, 3, -1, 1, 3, 1, false);
    return make("even-g", P * P, 3, -1, 1, 3, 0, mod_floor(P, 3) != 0);
}

FormFamily family_odd_f(const Integer& P) {
    return make("odd-f", P * P, 3 * P, 1, 1, 3 * P, 1, mod_floor(P, 3) != 0);
}

FormFamily family_odd_g(const Integer& P) {
    return make("odd-g", P * P, 3 * P, -1, 1, 3 * P, 3, mod_floor(P, 3) != 0);
}

FormFamily family_deg4_f(const Integer& P, int u_mod3) {
    Integer t1 = (u_mod3 == 1) ? -1 : 1;
    return make("deg4-f", P, 3, t1, 1, 3, 1, true);
}

FormFamily family_deg4_g(const Integer& P, int u_mod3) {
    Integer t1 = (u_mod3 == 1) ? 1 : -1;
    return make("deg4-g", P, 3, t1, 1, 3, 0, true);
}

FormFamily family_hs_pair_f(const Integer& P) {
    Integer s = (mod_floor(P, 3) == 1) ? 1 : -1;
    return make("hs-f", P, 3 * P, s, 1, 3 * P, 1, true);
}

FormFamily family_hs_pair_g(const Integer& P) {
    Integer s = (mod_floor(P, 3) == 1) ? 1 : -1;
    return make("hs-g", P, 3 * P, -s, 1, 3 * P, 3, true);
}

FormFamily family_p3_pair_f(const Integer& P) {
    return make("p3-f", P, P, 1, 1, P, -1, true);
}

FormFamily family_p3_pair_g(const Integer& P) {
    return make("p3-g", P, P, -1, 1, P, -1, true);
}

FormFamily family_h_general(const Integer& P, const Integer& p) {
    return make("h-general", 1, 3 * p, -1, P, 3 * p, 3, true);
}

FormFamily family_h_p3(const Integer& P) {
    return make("h-p3", 1, 3, -1, P, 3, 1, true);
}

FormFamily family_h_small_coeff(const Integer& P) {
    return make("h-small", 1, 6, 1, P, 6, -1, mod_floor(P, 3) == 2);
}

FormFamily family_h_outline(const Integer& P) {
    return make("h-outline", 1, 3 * P, 1, P * P, 3 * P, 1, mod_floor(P, 3) != 0);
}

bool content_check(const FormFamily& family, long sample_radius) {
    Integer g = 0;
    for (long B = -sample_radius; B <= sample_radius; ++B)
        for (long C = -sample_radius; C <= sample_radius; ++C) {
            g = gcd(g, family.value(B, C));
            if (g == 1) return true;
        }
    return false;
}

namespace {

bool acceptable(const FormFamily& fam, const Integer& q, const Integer& b, const Integer& c,
                const Integer& coprime_to, const std::set<Integer>& exclude) {
    if (q < 2) return false;
    if (mod_floor(b, 3) != fam.b_mod3 || mod_floor(c, 3) != fam.c_mod3)
        throw error("generate: derived pair escaped its residue class");
    if (coprime_to != 0 && gcd(q, coprime_to) != 1) return false;
    if (exclude.count(q)) return false;
    if (!is_prime(q)) return false;
    if (fam.forces_2_mod_3 && mod_floor(q, 3) != 2)
        throw error("generate: family promised q = 2 mod 3 but produced " + q.get_str());
    if (mod_floor(q, 3) != 2) return false;  // the recipes only consume q = 2 mod 3
    return true;
}

// Shell max(|B|,|C|) = r, ordered by (C, B) ascending.
std::vector<std::pair<long, long>> shell_points(long r) {
    if (r == 0) return {{0, 0}};
    std::vector<std::pair<long, long>> pts;
    for (long B = -r; B <= r; ++B) {
        if (B == -r || B == r)
            for (long C = -r; C <= r; ++C) pts.emplace_back(B, C);
        else {
            pts.emplace_back(B, -r);
            pts.emplace_back(B, r);
        }
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    return pts;
}

} // namespace

std::vector<GeneratedPrime> generate(const FormFamily& family, size_t count,
                                     const Integer& coprime_to, const std::set<Integer>& exclude,
                                     const GenerateBudget& budget) {
    std::vector<GeneratedPrime> out;
    std::set<Integer> seen = exclude;
    for (long r = 0; r <= budget.max_shell && out.size() < count; ++r) {
        for (const auto& [B, C] : shell_points(r)) {
            Integer q = family.value(B, C);
            auto [b, c] = family.derived(B, C);
            if (!acceptable(family, q, b, c, coprime_to, seen)) continue;
            seen.insert(q);
            out.push_back(GeneratedPrime{q, family, B, C, b, c});
            if (out.size() == count) break;
        }
    }
    if (out.size() < count) {
        std::ostringstream os;
        os << "generate: shell budget exhausted for " << family.name << " (found " << out.size()
           << " of " << count << ")";
        throw budget_error(os.str());
    }
    return out;
}

std::vector<GeneratedPrime> generate_norm_primes(const FormFamily& family, size_t count,
                                                 const Integer& coprime_to,
                                                 const std::set<Integer>& exclude,
                                                 const GenerateBudget& budget) {
    if (family.K1 != 1) throw error("generate_norm_primes: expected a monic norm family");
    std::vector<GeneratedPrime> out;
    std::set<Integer> seen = exclude;
    Integer Vlo = 1;
    Integer Vcap = Integer(1) << budget.max_norm_value_bits;
    for (Integer V = 4096; out.size() < count; Vlo = V, V *= 2) {
        if (V > Vcap)
            throw budget_error("generate_norm_primes: value budget exhausted for " + family.name);
        std::vector<GeneratedPrime> window;
        for (long Ci = -budget.max_norm_coord; Ci <= budget.max_norm_coord; ++Ci) {
            Integer C(Ci);
            Integer c = family.s2 * C + family.t2;
            if (c <= 0) continue;  // norm coordinate normalized positive
            Integer base = family.K2 * c * c * c;
            // integer a with Vlo < a^3 + base <= V
            Integer lo = Vlo - base, hi = V - base;
            Integer alo = iroot(abs(lo), 3) * sgn(lo);
            Integer ahi = iroot(abs(hi), 3) * sgn(hi);
            for (Integer a = alo - 2; a <= ahi + 2; ++a) {
                if (mod_floor(a - family.t1, family.s1) != 0) continue;
                Integer q = a * a * a + base;
                if (q <= Vlo || q > V) continue;
                Integer A = (a - family.t1) / family.s1;
                auto [bd, cd] = family.derived(A, C);
                if (!acceptable(family, q, bd, cd, coprime_to, seen)) continue;
                window.push_back(GeneratedPrime{q, family, A, C, bd, cd});
            }
        }
        std::sort(window.begin(), window.end(),
                  [](const GeneratedPrime& x, const GeneratedPrime& y) {
                      return std::tie(x.q, x.C, x.B) < std::tie(y.q, y.C, y.B);
                  });
        for (auto& gp : window) {
            if (!seen.insert(gp.q).second) continue;
            out.push_back(std::move(gp));
            if (out.size() == count) break;
        }
    }
    return out;
}

FamilyStream::FamilyStream(std::vector<FormFamily> families, Integer coprime_to,
                           GenerateBudget budget)
    : families_(std::move(families)), coprime_to_(std::move(coprime_to)), budget_(budget) {}

GeneratedPrime FamilyStream::next(const std::set<Integer>& extra_exclude) {
    for (; shell_ <= budget_.max_shell;) {
        auto pts = shell_points(shell_);
        for (; fam_idx_ < families_.size(); ++fam_idx_, point_idx_ = 0) {
            const FormFamily& fam = families_[fam_idx_];
            for (; point_idx_ < pts.size(); ++point_idx_) {
                auto [B, C] = pts[point_idx_];
                Integer q = fam.value(B, C);
                auto [b, c] = fam.derived(B, C);
                if (extra_exclude.count(q)) continue;
                if (!acceptable(fam, q, b, c, coprime_to_, emitted_)) continue;
                emitted_.insert(q);
                ++point_idx_;
                return GeneratedPrime{q, fam, B, C, b, c};
            }
        }
        fam_idx_ = 0;
        point_idx_ = 0;
        ++shell_;
    }
    throw budget_error("FamilyStream: shell budget exhausted");
}

} // namespace hassesieve
