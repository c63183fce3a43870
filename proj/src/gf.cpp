#include "fqg/gf.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

#include "fqg/util.hpp"

namespace fqg {

namespace {

constexpr int64_t kMaxBaseField = 1 << 20;

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FiniteField::FiniteField(int64_t q) {
    if (q < 2) throw InvalidParameters("field order must be at least 2");
    if (q > kMaxBaseField) throw InvalidParameters("base field order too large: " + std::to_string(q));
    int64_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    if (!is_prime(p)) throw InvalidParameters("field order is not a prime power");
    int64_t k = 0, t = q;
    while (t > 1) {
        if (t % p != 0) throw InvalidParameters(std::to_string(q) + " is not a prime power");
        t /= p;
        ++k;
    }
    p_ = p;
    k_ = k;
    q_ = q;

    neg_table_.resize(q_);
    if (k_ > 1) {
        FiniteField Fp(p_);
        Poly m = least_irreducible(Fp, k_);
        modulus_.assign(m.c.begin(), m.c.end());
    }

    // digit-wise negation
    for (int64_t a = 0; a < q_; ++a) {
        int64_t code = 0, pw = 1, x = a;
        for (int64_t i = 0; i < k_; ++i) {
            int64_t d = x % p_;
            x /= p_;
            code += ((p_ - d) % p_) * pw;
            pw *= p_;
        }
        neg_table_[a] = static_cast<FF>(code);
    }

    // raw product of two codes (poly mult mod modulus over F_p)
    auto mul_raw = [&](FF a, FF b) -> FF {
        if (k_ == 1) return static_cast<FF>(static_cast<int64_t>(a) * b % p_);
        std::vector<int64_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
        int64_t x = a;
        for (int64_t i = 0; i < k_; ++i) {
            da[i] = x % p_;
            x /= p_;
        }
        x = b;
        for (int64_t i = 0; i < k_; ++i) {
            db[i] = x % p_;
            x /= p_;
        }
        for (int64_t i = 0; i < k_; ++i) {
            if (!da[i]) continue;
            for (int64_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (int64_t i = 2 * k_ - 2; i >= k_; --i) {
            int64_t c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            for (int64_t j = 0; j < k_; ++j)
                prod[i - k_ + j] = ((prod[i - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
        }
        int64_t code = 0;
        for (int64_t i = k_ - 1; i >= 0; --i) code = code * p_ + prod[i];
        return static_cast<FF>(code);
    };

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
        exp_[0] = 1;
        log_[1] = 0;
        gen_ = 1;
    } else {
        for (FF cand = 2; cand < static_cast<FF>(q_); ++cand) {
            exp_[0] = 1;
            FF x = cand;
            int64_t i = 1;
            while (x != 1 && i < q_ - 1) {
                exp_[i++] = x;
                x = mul_raw(x, cand);
            }
            if (i == q_ - 1 && x == 1) {
                gen_ = cand;
                break;
            }
            gen_ = 0;
        }
        if (gen_ == 0) throw Error("no multiplicative generator found (internal)");
        for (int64_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = static_cast<FF>(i);
    }

    if (k_ > 1 && q_ <= 256) {
        unsigned shift = 1;
        while ((1 << shift) < q_) ++shift;
        add_shift_ = shift;
        add_table_.assign(static_cast<size_t>(q_) << shift, 0);
        for (FF a = 0; a < static_cast<FF>(q_); ++a)
            for (FF b = 0; b < static_cast<FF>(q_); ++b)
                add_table_[(static_cast<size_t>(a) << shift) | b] = add_slow(a, b);
    }
}

FF FiniteField::add_slow(FF a, FF b) const {
    int64_t code = 0, pw = 1, x = a, y = b;
    for (int64_t i = 0; i < k_; ++i) {
        code += ((x % p_) + (y % p_)) % p_ * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return static_cast<FF>(code);
}

FF FiniteField::inv(FF a) const {
    if (a == 0) throw Error("division by zero in finite field");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FF FiniteField::pow(FF a, int64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    int64_t em = e % (q_ - 1);
    if (em < 0) em += q_ - 1;
    return exp_[log_[a] * em % (q_ - 1)];
}

std::vector<int64_t> FiniteField::digits(FF a) const {
    std::vector<int64_t> d(k_);
    int64_t x = a;
    for (int64_t i = 0; i < k_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

FieldRef get_field(int64_t q) {
    static std::map<int64_t, FieldRef> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<FiniteField>(q);
    cache[q] = f;
    return f;
}

// ---------------------------------------------------------------------------
// extension fields

ExtensionField::ExtensionField(FieldRef base, int64_t degree)
    : base_(std::move(base)), degree_(degree) {
    if (degree < 1) throw InvalidParameters("extension degree must be positive");
    modulus_ = least_irreducible(*base_, degree_);
}

ExtensionField::ExtensionField(FieldRef base, Poly modulus)
    : base_(std::move(base)), degree_(modulus.deg()), modulus_(std::move(modulus)) {
    if (degree_ < 1 || modulus_.lead() != 1)
        throw InvalidParameters("extension modulus must be monic of positive degree");
    if (!poly_irreducible(*base_, modulus_)) throw InvalidParameters("extension modulus reducible");
}

ExtensionField::Elt ExtensionField::one() const {
    Elt e(degree_, 0);
    e[0] = 1;
    return e;
}

ExtensionField::Elt ExtensionField::from_base(FF a) const {
    Elt e(degree_, 0);
    e[0] = a;
    return e;
}

ExtensionField::Elt ExtensionField::element_by_index(uint64_t idx) const {
    Elt e(degree_, 0);
    for (int64_t i = 0; i < degree_ && idx; ++i) {
        e[i] = static_cast<FF>(idx % base_->q());
        idx /= base_->q();
    }
    return e;
}

ExtensionField::Elt ExtensionField::element_by_index(const BigUint& idx) const {
    BigUint v = idx;
    Elt e(degree_, 0);
    for (int64_t i = 0; i < degree_ && !v.is_zero(); ++i)
        e[i] = static_cast<FF>(v.div_small(base_->q()));
    return e;
}

ExtensionField::Elt ExtensionField::add(const Elt& a, const Elt& b) const {
    Elt r(degree_);
    for (int64_t i = 0; i < degree_; ++i) r[i] = base_->add(a[i], b[i]);
    return r;
}

ExtensionField::Elt ExtensionField::sub(const Elt& a, const Elt& b) const {
    Elt r(degree_);
    for (int64_t i = 0; i < degree_; ++i) r[i] = base_->sub(a[i], b[i]);
    return r;
}

ExtensionField::Elt ExtensionField::mul(const Elt& a, const Elt& b) const {
    const FiniteField& F = *base_;
    std::vector<FF> prod(2 * degree_ - 1, 0);
    for (int64_t i = 0; i < degree_; ++i) {
        if (!a[i]) continue;
        for (int64_t j = 0; j < degree_; ++j) {
            if (!b[j]) continue;
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
        }
    }
    for (int64_t i = 2 * degree_ - 2; i >= degree_; --i) {
        FF c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (int64_t j = 0; j < degree_; ++j)
            prod[i - degree_ + j] = F.sub(prod[i - degree_ + j], F.mul(c, modulus_.c[j]));
    }
    prod.resize(degree_);
    return prod;
}

ExtensionField::Elt ExtensionField::pow(Elt a, int64_t e) const {
    Elt r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ExtensionField::Elt ExtensionField::pow(const Elt& a, const BigUint& e) const {
    Elt r = one();
    Elt b = a;
    size_t bits = e.bit_length();
    for (size_t i = 0; i < bits; ++i) {
        if (e.bit(i)) r = mul(r, b);
        if (i + 1 < bits) b = mul(b, b);
    }
    return r;
}

ExtensionField::Elt ExtensionField::inv(const Elt& a) const {
    if (is_zero(a)) throw Error("division by zero in extension field");
    Poly pa;
    pa.c.assign(a.begin(), a.end());
    pa.trim();
    // extended euclid: s*pa + t*modulus = gcd
    Poly r0 = modulus_, r1 = pa;
    Poly s0, s1{{1}};
    const FiniteField& F = *base_;
    while (!r1.is_zero()) {
        Poly quo, rem;
        poly_divmod(F, r0, r1, quo, rem);
        Poly s2 = poly_sub(F, s0, poly_mul(F, quo, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 = unit gcd
    FF scale = F.inv(r0.lead());
    Poly res = poly_scale(F, s0, scale);
    Elt out(degree_, 0);
    for (size_t i = 0; i < res.c.size(); ++i) out[i] = res.c[i];
    return out;
}

bool ExtensionField::is_zero(const Elt& a) const {
    for (FF x : a)
        if (x) return false;
    return true;
}

bool ExtensionField::is_one(const Elt& a) const {
    if (a[0] != 1) return false;
    for (int64_t i = 1; i < degree_; ++i)
        if (a[i]) return false;
    return true;
}

bool ExtensionField::in_base(const Elt& a) const {
    for (int64_t i = 1; i < degree_; ++i)
        if (a[i]) return false;
    return true;
}

ExtensionField::Elt ExtensionField::frobenius(const Elt& a) const { return pow(a, base_->q()); }

// ---------------------------------------------------------------------------

int64_t mult_order(int64_t n, int64_t q) {
    if (n < 1) throw InvalidParameters("modulus must be positive");
    if (n == 1) return 1;
    if (std::gcd(n, q) != 1) throw NotCoprime("o_n(q) requires gcd(n, q) = 1");
    int64_t t = q % n, o = 1;
    while (t != 1) {
        t = t * q % n;
        ++o;
    }
    return o;
}

ExtensionField make_extension(FieldRef base, int64_t degree) { return {std::move(base), degree}; }

ExtensionField::Elt root_of_unity(const ExtensionField& E, int64_t n) {
    if (n < 1) throw InvalidParameters("root order must be positive");
    if (n == 1) return E.one();
    int64_t q = E.base().q(), o = E.degree();
    if (modpow(q % n, o, n) != 1 % n) throw NoSuchRoot("n does not divide q^o - 1");

    BigUint group_order = BigUint::pow_minus_one(static_cast<uint64_t>(q), static_cast<uint64_t>(o));
    BigUint M = group_order;
    uint64_t rem = M.div_small(static_cast<uint64_t>(n));
    if (rem != 0) throw NoSuchRoot("n does not divide q^o - 1");

    std::vector<int64_t> nprimes = prime_factors(n);

    auto order_exactly_n = [&](const ExtensionField::Elt& y) {
        if (E.is_zero(y)) return false;
        for (int64_t l : nprimes)
            if (E.is_one(E.pow(y, n / l))) return false;
        return true;
    };

    if (group_order.fits_u64() && group_order.as_u64() <= (1ULL << 44)) {
        // least multiplicative generator, then g^((q^o-1)/n)
        uint64_t Q1 = group_order.as_u64();
        std::vector<int64_t> qprimes = prime_factors(static_cast<int64_t>(Q1));
        for (uint64_t idx = 2;; ++idx) {
            ExtensionField::Elt g = E.element_by_index(idx);
            bool gen = true;
            for (int64_t l : qprimes) {
                if (E.is_one(E.pow(g, static_cast<int64_t>(Q1 / l)))) {
                    gen = false;
                    break;
                }
            }
            if (gen) {
                ExtensionField::Elt z = E.pow(g, static_cast<int64_t>(Q1 / n));
                if (!order_exactly_n(z)) throw Error("root of unity construction failed (internal)");
                return z;
            }
        }
    }

    // large field: first element whose ((q^o-1)/n)-th power has order exactly n
    for (uint64_t idx = 2;; ++idx) {
        ExtensionField::Elt h = E.element_by_index(idx);
        ExtensionField::Elt y = E.pow(h, M);
        if (order_exactly_n(y)) return y;
    }
}

FF trace(const ExtensionField& E, const ExtensionField::Elt& x) {
    ExtensionField::Elt acc = x, y = x;
    for (int64_t i = 1; i < E.degree(); ++i) {
        y = E.frobenius(y);
        acc = E.add(acc, y);
    }
    if (!E.in_base(acc)) throw Error("trace did not land in base field (internal)");
    return acc[0];
}

CyclotomicData cyclotomic_data(FieldRef base, int64_t n) {
    CyclotomicData cd;
    cd.n = n;
    cd.o = mult_order(n, base->q());
    cd.ext = std::make_shared<ExtensionField>(base, cd.o);
    cd.zeta = root_of_unity(*cd.ext, n);
    cd.trace_of_power.resize(n);
    ExtensionField::Elt zj = cd.ext->one();
    for (int64_t j = 0; j < n; ++j) {
        cd.trace_of_power[j] = trace(*cd.ext, zj);
        zj = cd.ext->mul(zj, cd.zeta);
    }
    return cd;
}

}  // namespace fqg
