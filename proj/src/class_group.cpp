#include <cmath>
#include <map>
#include <vector>

#include "hassesieve/cubic_field.hpp"
#include "hassesieve/lattice.hpp"

namespace hassesieve {

namespace {

// Integral ideal (q, pi - r) as an HNF lattice.
CubicLattice degree_one_prime(const Integer& P, const Integer& q, const Integer& r) {
    std::vector<Vec3> gens = {
        {q, 0, 0}, {0, q, 0}, {0, 0, q},
        {-r, 1, 0},          // pi - r
        {0, -r, 1},          // pi (pi - r)
        {P, 0, -r},          // pi^2 (pi - r)
    };
    return CubicLattice::from_generators(P, std::move(gens), 1);
}

std::vector<Integer> cube_roots_mod(const Integer& P, const Integer& q) {
    std::vector<Integer> roots;
    Integer target = mod_floor(P, q);
    for (Integer x = 0; x < q; ++x)
        if (mod_floor(x * x * x, q) == target) roots.push_back(x);
    return roots;
}

} // namespace

unsigned long class_number(const PureCubicField& F, const FundamentalUnit& unit) {
    if (abs(norm(unit.element)) != 1 || real_sign(unit.element) <= 0)
        throw domain_error("class_number: supplied unit is not a unit > 1");

    const Integer& P = F.P();
    // Minkowski bound (4/pi) (3!/3^3) sqrt(27 P^2) = (8 sqrt27 / 9 pi) P,
    // rounded up; scanning a little past it is harmless.
    double mb = 8.0 * std::sqrt(27.0) / (9.0 * M_PI) * mpz_get_d(P.get_mpz_t());
    uint32_t bound = uint32_t(std::ceil(mb)) + 1;

    VoronoiBudget budget;
    // Every lattice visited by any reduction walk belongs to exactly one
    // class; remembering them lets later walks stop at first contact with a
    // previously walked tail instead of re-tracing the whole cycle.
    std::map<std::string, std::string> lattice_class;
    std::map<std::string, CubicLattice> class_rep;
    auto class_of = [&](const CubicLattice& start) {
        std::map<std::string, unsigned long> seen;
        std::vector<CubicLattice> chain;
        CubicLattice cur = start;
        std::string cls;
        for (unsigned long step = 0;; ++step) {
            if (step >= budget.max_steps)
                throw undecided_error("class_number: reduction walk budget exhausted");
            std::string k = cur.key();
            if (auto hit = lattice_class.find(k); hit != lattice_class.end()) {
                cls = hit->second;
                break;
            }
            if (auto it = seen.find(k); it != seen.end()) {
                const CubicLattice* best = nullptr;
                for (unsigned long i = it->second; i < chain.size(); ++i)
                    if (!best || chain[i] < *best) best = &chain[i];
                cls = best->key();
                class_rep.emplace(cls, *best);
                break;
            }
            seen.emplace(k, chain.size());
            chain.push_back(cur);
            cur = divide_by(cur, adjacent_minimum(cur, budget));
        }
        for (const auto& l : chain) lattice_class.emplace(l.key(), cls);
        return class_rep.at(cls);
    };

    // Degree-1 primes of norm q <= bound generate the class group;
    // dedupe them by class before taking the closure.
    std::map<std::string, CubicLattice> gen_classes;
    for (uint32_t q : primes_below(bound + 1)) {
        for (const Integer& r : cube_roots_mod(P, q)) {
            CubicLattice ideal = degree_one_prime(P, q, r);
            if (ideal.index_in_order() != q) continue;  // ramified triple root: one prime only
            CubicLattice rep = class_of(ideal);
            gen_classes.emplace(rep.key(), rep);
        }
    }

    std::map<std::string, CubicLattice> reps;  // class key -> reduced representative
    CubicLattice id_rep = class_of(CubicLattice::identity(P));
    reps.emplace(id_rep.key(), id_rep);
    std::vector<CubicLattice> frontier = {id_rep};
    const size_t kGroupCap = 4096;
    while (!frontier.empty()) {
        std::vector<CubicLattice> next;
        for (const auto& A : frontier) {
            for (const auto& [gkey, g] : gen_classes) {
                CubicLattice B = class_of(lattice_mul(A, g));
                if (reps.emplace(B.key(), B).second) next.push_back(B);
            }
        }
        if (reps.size() > kGroupCap)
            throw undecided_error("class_number: class group closure exceeded cap");
        frontier = std::move(next);
    }
    return reps.size();
}

} // namespace hassesieve
