#include <algorithm>
#include <random>

#include "fqg/gf.hpp"
#include "fqg/util.hpp"

namespace fqg {

Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        FF x = i < a.c.size() ? a.c[i] : 0;
        FF y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.add(x, y);
    }
    r.trim();
    return r;
}

Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        FF x = i < a.c.size() ? a.c[i] : 0;
        FF y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.sub(x, y);
    }
    r.trim();
    return r;
}

Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (!b.c[j]) continue;
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    r.trim();
    return r;
}

Poly poly_scale(const FiniteField& F, const Poly& a, FF s) {
    if (!s) return {};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

void poly_divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly div = b;  // alias-safe: outputs may overlap inputs
    Poly r = a;
    Poly q;
    if (a.deg() >= div.deg()) {
        q.c.assign(a.deg() - div.deg() + 1, 0);
        FF linv = F.inv(div.lead());
        for (int64_t i = a.deg(); i >= div.deg(); --i) {
            if (static_cast<int64_t>(r.c.size()) <= i || !r.c[i]) continue;
            FF f = F.mul(r.c[i], linv);
            q.c[i - div.deg()] = f;
            for (int64_t j = 0; j <= div.deg(); ++j)
                r.c[i - div.deg() + j] = F.sub(r.c[i - div.deg() + j], F.mul(f, div.c[j]));
        }
        q.trim();
        r.trim();
    }
    quo = std::move(q);
    rem = std::move(r);
}

Poly poly_mod(const FiniteField& F, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(F, a, b, q, r);
    return r;
}

Poly poly_monic(const FiniteField& F, const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Poly poly_gcd(const FiniteField& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = b;
        b = r;
    }
    return poly_monic(F, a);
}

Poly poly_powmod(const FiniteField& F, const Poly& base, int64_t e, const Poly& mod) {
    Poly r{{1}};
    Poly b = poly_mod(F, base, mod);
    while (e > 0) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, b), mod);
        b = poly_mod(F, poly_mul(F, b, b), mod);
        e >>= 1;
    }
    return r;
}

Poly poly_powmod(const FiniteField& F, Poly base, const BigUint& e, const Poly& mod) {
    Poly r{{1}};
    base = poly_mod(F, base, mod);
    size_t bits = e.bit_length();
    for (size_t i = 0; i < bits; ++i) {
        if (e.bit(i)) r = poly_mod(F, poly_mul(F, r, base), mod);
        if (i + 1 < bits) base = poly_mod(F, poly_mul(F, base, base), mod);
    }
    return r;
}

Poly poly_derivative(const FiniteField& F, const Poly& a) {
    Poly r;
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F.mul(a.c[i], F.from_int(static_cast<int64_t>(i)));
    r.trim();
    return r;
}

FF poly_eval(const FiniteField& F, const Poly& a, FF x) {
    FF r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

bool poly_irreducible(const FiniteField& F, const Poly& f) {
    int64_t d = f.deg();
    if (d < 1) return false;
    if (d == 1) return true;
    Poly x = Poly::x();
    // x^(q^(d/l)) != x factors test, then x^(q^d) == x
    Poly h = x;
    std::vector<Poly> qpowers(d + 1);  // x^(q^i) mod f
    qpowers[0] = poly_mod(F, x, f);
    for (int64_t i = 1; i <= d; ++i) qpowers[i] = poly_powmod(F, qpowers[i - 1], F.q(), f);
    for (int64_t l : prime_factors(d)) {
        Poly diff = poly_sub(F, qpowers[d / l], qpowers[0]);
        if (diff.is_zero()) return false;
        if (poly_gcd(F, diff, f).deg() != 0) return false;
    }
    return poly_sub(F, qpowers[d], qpowers[0]).is_zero();
}

Poly least_irreducible(const FiniteField& F, int64_t degree) {
    if (degree < 1) throw InvalidParameters("degree must be positive");
    for (uint64_t idx = 0;; ++idx) {
        Poly m;
        m.c.assign(degree + 1, 0);
        m.c[degree] = 1;
        uint64_t v = idx;
        for (int64_t i = 0; i < degree && v; ++i) {
            m.c[i] = static_cast<FF>(v % F.q());
            v /= F.q();
        }
        if (v) throw Error("no irreducible polynomial found (internal)");
        if (poly_irreducible(F, m)) return m;
    }
}

namespace {

Poly pth_root(const FiniteField& F, const Poly& f) {
    // f(x) = g(x^p); coefficient roots via c -> c^(p^(k-1))
    int64_t p = F.p();
    int64_t e = 1;
    for (int64_t i = 1; i < F.k(); ++i) e *= p;
    Poly g;
    g.c.assign(f.deg() / p + 1, 0);
    for (size_t i = 0; i < f.c.size(); i += p) g.c[i / p] = F.pow(f.c[i], e);
    g.trim();
    return g;
}

void squarefree_rec(const FiniteField& F, Poly f, int64_t scale,
                    std::vector<std::pair<Poly, int64_t>>& out) {
    if (f.deg() < 1) return;
    Poly fp = poly_derivative(F, f);
    if (fp.is_zero()) {
        squarefree_rec(F, pth_root(F, f), scale * F.p(), out);
        return;
    }
    Poly c = poly_gcd(F, f, fp);
    Poly w, dummy;
    poly_divmod(F, f, c, w, dummy);
    int64_t i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly fac, r;
        poly_divmod(F, w, y, fac, r);
        if (fac.deg() > 0) out.emplace_back(poly_monic(F, fac), i * scale);
        w = y;
        poly_divmod(F, c, y, c, r);
        ++i;
    }
    if (c.deg() > 0) squarefree_rec(F, pth_root(F, c), scale * F.p(), out);
}

void edf(const FiniteField& F, const Poly& f, int64_t d, std::mt19937_64& rng,
         std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    std::uniform_int_distribution<int64_t> dist(0, F.q() - 1);
    for (;;) {
        Poly h;
        h.c.resize(f.deg());
        for (auto& x : h.c) x = static_cast<FF>(dist(rng));
        h.trim();
        if (h.deg() < 1) continue;
        Poly g;
        if (F.p() == 2) {
            // trace map over F_2: sum of h^(2^i), i < k*d
            Poly t = poly_mod(F, h, f);
            Poly acc = t;
            int64_t steps = F.k() * d;
            for (int64_t i = 1; i < steps; ++i) {
                t = poly_powmod(F, t, 2, f);
                acc = poly_add(F, acc, t);
            }
            g = poly_gcd(F, acc, f);
        } else {
            BigUint e = BigUint::pow_minus_one(static_cast<uint64_t>(F.q()), static_cast<uint64_t>(d));
            e.div_small(2);
            Poly w = poly_powmod(F, h, e, f);
            g = poly_gcd(F, poly_sub(F, w, Poly{{1}}), f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            Poly rest, r;
            poly_divmod(F, f, g, rest, r);
            edf(F, poly_monic(F, g), d, rng, out);
            edf(F, poly_monic(F, rest), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Poly, int64_t>> factor_polynomial(const FiniteField& F, const Poly& f) {
    if (f.deg() < 1) throw InvalidParameters("cannot factor a constant polynomial");
    if (f.lead() != 1) throw InvalidParameters("factor_polynomial expects a monic polynomial");

    std::vector<std::pair<Poly, int64_t>> sqf;
    squarefree_rec(F, f, 1, sqf);

    std::vector<std::pair<Poly, int64_t>> result;
    for (auto& [g0, mult] : sqf) {
        Poly g = g0;
        std::mt19937_64 rng(0x5EEDF00DULL ^ hash_range(g.c) ^ static_cast<uint64_t>(F.q()));
        Poly h = poly_mod(F, Poly::x(), g);
        int64_t d = 0;
        while (g.deg() > 0 && 2 * (d + 1) <= g.deg()) {
            ++d;
            h = poly_powmod(F, h, F.q(), g);
            Poly gd = poly_gcd(F, poly_sub(F, h, poly_mod(F, Poly::x(), g)), g);
            if (gd.deg() > 0) {
                std::vector<Poly> irr;
                edf(F, gd, d, rng, irr);
                for (auto& m : irr) result.emplace_back(m, mult);
                Poly r;
                poly_divmod(F, g, gd, g, r);
                h = poly_mod(F, h, g);
            }
        }
        if (g.deg() > 0) result.emplace_back(g, mult);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    return result;
}

}  // namespace fqg
