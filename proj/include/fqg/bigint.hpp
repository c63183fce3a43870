#pragma once

#include <cstdint>
#include <vector>

namespace fqg {

// Unsigned big integer, little-endian 32-bit limbs. Just enough for exponents
// of the form (q^o - 1)/n, which exceed 64 bits once o gets large.
struct BigUint {
    std::vector<uint32_t> limbs;  // no trailing zero limbs

    BigUint() = default;
    explicit BigUint(uint64_t v) {
        if (v) limbs.push_back(static_cast<uint32_t>(v));
        if (v >> 32) limbs.push_back(static_cast<uint32_t>(v >> 32));
    }

    bool is_zero() const { return limbs.empty(); }

    void trim() {
        while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    }

    void mul_small(uint64_t m) {
        uint64_t carry = 0;
        for (auto& w : limbs) {
            uint64_t t = static_cast<uint64_t>(w) * m + carry;
            w = static_cast<uint32_t>(t);
            carry = t >> 32;
        }
        while (carry) {
            limbs.push_back(static_cast<uint32_t>(carry));
            carry >>= 32;
        }
    }

    void sub_small(uint64_t m) {
        for (size_t i = 0; i < limbs.size() && m; ++i) {
            uint64_t cur = limbs[i];
            uint64_t take = m & 0xffffffffULL;
            if (cur >= take) {
                limbs[i] = static_cast<uint32_t>(cur - take);
                m >>= 32;
            } else {
                limbs[i] = static_cast<uint32_t>(cur + 0x100000000ULL - take);
                m = (m >> 32) + 1;
            }
        }
        trim();
    }

    // divides in place, returns remainder
    uint64_t div_small(uint64_t d) {
        uint64_t rem = 0;
        for (size_t i = limbs.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | limbs[i];
            limbs[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return rem;
    }

    size_t bit_length() const {
        if (limbs.empty()) return 0;
        uint32_t top = limbs.back();
        size_t b = (limbs.size() - 1) * 32;
        while (top) {
            ++b;
            top >>= 1;
        }
        return b;
    }

    bool bit(size_t i) const {
        size_t limb = i / 32;
        if (limb >= limbs.size()) return false;
        return (limbs[limb] >> (i % 32)) & 1;
    }

    bool fits_u64() const { return limbs.size() <= 2; }
    uint64_t as_u64() const {
        uint64_t v = 0;
        if (!limbs.empty()) v = limbs[0];
        if (limbs.size() > 1) v |= static_cast<uint64_t>(limbs[1]) << 32;
        return v;
    }

    // q^o - 1
    static BigUint pow_minus_one(uint64_t q, uint64_t o) {
        BigUint r(1);
        for (uint64_t i = 0; i < o; ++i) r.mul_small(q);
        r.sub_small(1);
        return r;
    }
};

}  // namespace fqg
