#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace fqg {

inline void hash_combine(uint64_t& seed, uint64_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 12) + (seed >> 4);
}

template <typename T>
uint64_t hash_range(const std::vector<T>& v) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (const T& x : v) hash_combine(h, static_cast<uint64_t>(x));
    return h;
}

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
inline int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

// a^e mod m, safe for m up to 2^31
inline int64_t modpow(int64_t a, int64_t e, int64_t m) {
    a %= m;
    if (a < 0) a += m;
    int64_t r = 1 % m;
    while (e > 0) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

inline int64_t modinv(int64_t a, int64_t m) {
    int64_t t = 0, nt = 1, r = m, nr = a % m;
    if (nr < 0) nr += m;
    while (nr != 0) {
        int64_t c = r / nr;
        std::swap(t -= c * nt, nt);
        std::swap(r -= c * nr, nr);
    }
    return t < 0 ? t + m : t;
}

inline int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r -= r / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

inline std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> ds;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Writes results[i] = fn(i) for i in [0, n). Runs on `threads` threads; slot-indexed
// results make the outcome independent of scheduling.
void parallel_for(int64_t n, int threads, const std::function<void(int64_t)>& fn);

// FQG_THREADS env var, overridden by an explicit request (>0).
int resolve_thread_count(int requested);

}  // namespace fqg
