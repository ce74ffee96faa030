#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library, so agreement is an independent check.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline int64_t mod(int64_t v, int64_t m) { return ((v % m) + m) % m; }

inline std::vector<int64_t> units(int64_t m) {
    std::vector<int64_t> out;
    for (int64_t v = 1; v < m; ++v)
        if (std::gcd(v, m) == 1) out.push_back(v);
    return out;
}

inline int64_t inverse(int64_t v, int64_t m) {
    for (int64_t s = 1; s < m; ++s)
        if (mod(v * s, m) == 1) return s;
    return -1;
}

inline std::set<int64_t> squares(int64_t m) {
    std::set<int64_t> out;
    for (int64_t n : units(m)) out.insert(mod(n * n, m));
    return out;
}

inline bool prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d < n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest positive odd integer congruent to v mod p, found by scanning.
inline int64_t first_odd_lift(int64_t v, int64_t p) {
    for (int64_t x = 1;; x += 2)
        if (mod(x, p) == mod(v, p)) return x;
}

// (a - 1)(b - 1)/4 mod p from scanned odd lifts.
inline int64_t framing(int64_t p, int64_t q) {
    const int64_t a = first_odd_lift(q, p);
    const int64_t b = first_odd_lift(inverse(mod(q, p), p), p);
    return mod((a - 1) * (b - 1) / 4, p);
}

}  // namespace oracle
