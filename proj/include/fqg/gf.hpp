#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fqg/bigint.hpp"
#include "fqg/errors.hpp"

namespace fqg {

using FF = uint32_t;  // field element code: base-p digits of the coefficient tuple

/// F_q with q = p^k. Elements are coded 0..q-1; the code's base-p digits are the
/// coefficients of the residue polynomial, constant term least significant.
/// Multiplication goes through exp/log tables of a fixed generator.
class FiniteField {
public:
    explicit FiniteField(int64_t q);

    int64_t p() const { return p_; }
    int64_t k() const { return k_; }
    int64_t q() const { return q_; }

    FF zero() const { return 0; }
    FF one() const { return 1; }

    FF add(FF a, FF b) const {
        if (k_ == 1) {
            int64_t s = static_cast<int64_t>(a) + b;
            return static_cast<FF>(s >= p_ ? s - p_ : s);
        }
        if (!add_table_.empty()) return add_table_[(static_cast<size_t>(a) << add_shift_) | b];
        return add_slow(a, b);
    }
    FF neg(FF a) const { return neg_table_[a]; }
    FF sub(FF a, FF b) const { return add(a, neg(b)); }
    FF mul(FF a, FF b) const {
        if (a == 0 || b == 0) return 0;
        int64_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    FF inv(FF a) const;
    FF pow(FF a, int64_t e) const;
    FF from_int(int64_t v) const {  // embeds the prime field
        v %= p_;
        if (v < 0) v += p_;
        return static_cast<FF>(v);
    }
    FF generator() const { return gen_; }
    // Frobenius x -> x^p
    FF frob(FF a) const { return pow(a, p_); }

    const std::vector<uint16_t>& modulus() const { return modulus_; }  // empty when k == 1

    // digits of the coefficient tuple over F_p, ascending
    std::vector<int64_t> digits(FF a) const;

private:
    FF add_slow(FF a, FF b) const;

    int64_t p_ = 0, k_ = 0, q_ = 0;
    std::vector<uint16_t> modulus_;
    std::vector<FF> exp_, log_, neg_table_, add_table_;
    unsigned add_shift_ = 0;
    FF gen_ = 0;
};

using FieldRef = std::shared_ptr<const FiniteField>;
FieldRef get_field(int64_t q);  // cached

/// Dense univariate polynomial over a FiniteField, coefficients ascending,
/// normalized (no trailing zeros; zero polynomial = empty).
struct Poly {
    std::vector<FF> c;

    int64_t deg() const { return static_cast<int64_t>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    FF lead() const { return c.back(); }
    static Poly x() { return Poly{{0, 1}}; }
    static Poly constant(FF a) { return a ? Poly{{a}} : Poly{}; }
    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator<(const Poly& o) const {  // by degree, then coefficient tuple
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

Poly poly_add(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_mul(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_scale(const FiniteField& F, const Poly& a, FF s);
void poly_divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly poly_mod(const FiniteField& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FiniteField& F, Poly a, Poly b);  // monic
Poly poly_powmod(const FiniteField& F, Poly base, const BigUint& e, const Poly& mod);
Poly poly_powmod(const FiniteField& F, const Poly& base, int64_t e, const Poly& mod);
Poly poly_derivative(const FiniteField& F, const Poly& a);
FF poly_eval(const FiniteField& F, const Poly& a, FF x);
Poly poly_monic(const FiniteField& F, const Poly& a);

bool poly_irreducible(const FiniteField& F, const Poly& f);
// lexicographically least monic irreducible of the given degree: candidates
// x^d + sum c_i x^i ordered by the integer sum c_i q^i
Poly least_irreducible(const FiniteField& F, int64_t degree);

// full factorization: squarefree split, distinct-degree, then equal-degree
// splitting with a deterministic seed; factors sorted canonically
std::vector<std::pair<Poly, int64_t>> factor_polynomial(const FiniteField& F, const Poly& f);

/// F_{q^o} as F_q[T]/(modulus), elements as coefficient vectors over the base.
class ExtensionField {
public:
    using Elt = std::vector<FF>;  // length degree(), ascending

    ExtensionField(FieldRef base, int64_t degree);          // least irreducible modulus
    ExtensionField(FieldRef base, Poly modulus);            // explicit modulus

    const FiniteField& base() const { return *base_; }
    FieldRef base_ref() const { return base_; }
    int64_t degree() const { return degree_; }
    const Poly& modulus() const { return modulus_; }

    Elt zero() const { return Elt(degree_, 0); }
    Elt one() const;
    Elt from_base(FF a) const;
    Elt element_by_index(const BigUint& idx) const;  // digits base q
    Elt element_by_index(uint64_t idx) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, int64_t e) const;
    Elt pow(const Elt& a, const BigUint& e) const;
    Elt inv(const Elt& a) const;
    bool is_zero(const Elt& a) const;
    bool is_one(const Elt& a) const;
    bool in_base(const Elt& a) const;

    // x -> x^q (q = base order)
    Elt frobenius(const Elt& a) const;

private:
    FieldRef base_;
    int64_t degree_;
    Poly modulus_;
};

// o_n(q): least o >= 1 with q^o = 1 (mod n); o_1(q) = 1. Throws NotCoprime.
int64_t mult_order(int64_t n, int64_t q);

ExtensionField make_extension(FieldRef base, int64_t degree);

// element of multiplicative order exactly n; deterministic. Throws NoSuchRoot
// when n does not divide q^o - 1.
ExtensionField::Elt root_of_unity(const ExtensionField& E, int64_t n);

// tr_{E/base}(x) = sum of Frobenius conjugates; asserts the result is in the base.
FF trace(const ExtensionField& E, const ExtensionField::Elt& x);

/// Everything epsilon_C needs about F_q(zeta_n): the extension, zeta, and the
/// table tr(zeta^j) for j mod n.
struct CyclotomicData {
    int64_t n = 1;
    int64_t o = 1;
    std::shared_ptr<ExtensionField> ext;
    ExtensionField::Elt zeta;
    std::vector<FF> trace_of_power;  // index j -> tr(zeta^j)
};

CyclotomicData cyclotomic_data(FieldRef base, int64_t n);

}  // namespace fqg
