#include "fqg/cyclo.hpp"

#include <algorithm>
#include <numeric>

#include "fqg/util.hpp"

namespace fqg {

std::vector<CyclotomicCoset> cyclotomic_cosets(int64_t n, int64_t q) {
    if (n < 1) throw InvalidParameters("modulus must be positive");
    if (n == 1) return {CyclotomicCoset{1, {0}, 0}};
    if (std::gcd(n, q) != 1) throw NotCoprime("cyclotomic cosets need gcd(n, q) = 1");
    int64_t qr = q % n;
    std::vector<uint8_t> used(n, 0);
    std::vector<CyclotomicCoset> out;
    for (int64_t c = 1; c < n; ++c) {
        if (used[c] || std::gcd(c, n) != 1) continue;
        CyclotomicCoset C;
        C.n = n;
        C.label = c;
        int64_t x = c;
        do {
            used[x] = 1;
            C.members.push_back(x);
            x = x * qr % n;
        } while (x != c);
        std::sort(C.members.begin(), C.members.end());
        out.push_back(std::move(C));
    }
    return out;
}

int64_t conj_exponent(GroupRef G, const ShodaPair& pair, Idx g) {
    if (!pair.normalizer_D.contains(g)) throw NotInNormalizer("element must normalize D");
    if (pair.n == 1) return 0;
    Idx y = G->mult(G->mult(g, pair.gen_rep), G->inv(g));
    int64_t m = pair.dlog_of(y);
    if (std::gcd(m, pair.n) != 1) throw Error("conjugation exponent not a unit (internal)");
    return m;
}

OrbitData orbits_and_stabilizer(GroupRef G, const ShodaPair& pair, int64_t q) {
    OrbitData od;
    od.n = pair.n;
    const SubgroupHandle& Nr = pair.normalizer_D;
    if (pair.n == 1) {
        od.o = 1;
        od.cosets = cyclotomic_cosets(1, q);
        od.orbits = {{0}};
        od.orbit_reps = {0};
        od.stabilizer = Nr;
        return od;
    }
    if (std::gcd(pair.n, q) != 1) throw NotCoprime("orbit data needs gcd(n, q) = 1");
    od.cosets = cyclotomic_cosets(pair.n, q);
    od.o = static_cast<int64_t>(od.cosets[0].members.size());

    std::vector<int> coset_of(pair.n, -1);
    for (size_t i = 0; i < od.cosets.size(); ++i)
        for (int64_t m : od.cosets[i].members) coset_of[m] = static_cast<int>(i);

    // the action factors through cosets of A in N_G(D)
    std::vector<Idx> reps;
    std::vector<int64_t> rep_exp;
    {
        std::vector<uint8_t> visited(G->order(), 0);
        for (Idx m : Nr.members) {
            if (visited[m]) continue;
            for (Idx a : pair.A.members) visited[G->mult(m, a)] = 1;
            reps.push_back(m);
            rep_exp.push_back(conj_exponent(G, pair, m));
        }
    }

    // orbits of cosets under multiplication by the rep exponents
    std::vector<int> orbit_of(od.cosets.size(), -1);
    for (size_t c = 0; c < od.cosets.size(); ++c) {
        if (orbit_of[c] >= 0) continue;
        int id = static_cast<int>(od.orbits.size());
        std::vector<int> orb{static_cast<int>(c)};
        orbit_of[c] = id;
        for (size_t head = 0; head < orb.size(); ++head) {
            for (int64_t m : rep_exp) {
                int to = coset_of[od.cosets[orb[head]].label * m % pair.n];
                if (orbit_of[to] < 0) {
                    orbit_of[to] = id;
                    orb.push_back(to);
                }
            }
        }
        std::sort(orb.begin(), orb.end());
        od.orbits.push_back(std::move(orb));
        od.orbit_reps.push_back(od.orbits.back().front());
    }

    // stabilizer of the label-1 coset; the same subgroup must stabilize every coset
    int c1 = coset_of[1];
    std::vector<size_t> passing;
    for (size_t i = 0; i < reps.size(); ++i)
        if (coset_of[od.cosets[c1].label * rep_exp[i] % pair.n] == c1) passing.push_back(i);
    for (int rep_coset : od.orbit_reps) {
        std::vector<size_t> pass2;
        for (size_t i = 0; i < reps.size(); ++i)
            if (coset_of[od.cosets[rep_coset].label * rep_exp[i] % pair.n] == rep_coset)
                pass2.push_back(i);
        if (pass2 != passing)
            throw StabilizerMismatch("coset stabilizers differ within the coset family");
    }

    SubgroupHandle E;
    E.parent = G;
    for (size_t i : passing)
        for (Idx a : pair.A.members) E.members.push_back(G->mult(reps[i], a));
    std::sort(E.members.begin(), E.members.end());
    E.gens = pair.A.gens;
    for (size_t i : passing)
        if (reps[i] != 0) E.gens.push_back(reps[i]);
    od.stabilizer = std::move(E);

    // |R| = phi(n) |E| / (|N_G(D)| o)
    if (static_cast<int64_t>(od.orbits.size()) * Nr.order() * od.o !=
        euler_phi(pair.n) * od.stabilizer.order())
        throw StabilizerMismatch("orbit counting identity failed");
    return od;
}

}  // namespace fqg
