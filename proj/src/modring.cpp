#include "lensfr/modring.hpp"

#include <ostream>
#include <string>

namespace lensfr {

namespace {

int64_t reduce(int64_t v, int64_t m) noexcept {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

int64_t mulmod(int64_t a, int64_t b, int64_t m) noexcept {
    return static_cast<int64_t>((static_cast<__int128>(a) * b) % m);
}

void require_same(Modulus a, Modulus b) {
    if (a != b) {
        throw Error(ErrorKind::ModulusMismatch,
                    "residues with moduli " + std::to_string(a.value()) + " and " +
                        std::to_string(b.value()));
    }
}

}  // namespace

Modulus::Modulus(int64_t m) : m_(m) {
    if (m < 2) {
        throw Error(ErrorKind::InvalidModulus, "modulus must be >= 2, got " + std::to_string(m));
    }
}

Residue::Residue(int64_t v, Modulus m) : v_(reduce(v, m.value())), m_(m) {}

Residue Residue::operator+(Residue rhs) const {
    require_same(m_, rhs.m_);
    int64_t s = v_ + rhs.v_;
    return Residue(s >= m_.value() ? s - m_.value() : s, m_);
}

Residue Residue::operator-(Residue rhs) const {
    require_same(m_, rhs.m_);
    return Residue(v_ - rhs.v_, m_);
}

Residue Residue::operator*(Residue rhs) const {
    require_same(m_, rhs.m_);
    return Residue(mulmod(v_, rhs.v_, m_.value()), m_);
}

Residue Residue::operator-() const { return Residue(-v_, m_); }

Residue Residue::pow(uint64_t exp) const {
    Residue result(1, m_);
    Residue base = *this;
    while (exp > 0) {
        if (exp & 1U) result = result * base;
        base = base * base;
        exp >>= 1U;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, Modulus m) { return os << m.value(); }

std::ostream& operator<<(std::ostream& os, Residue r) {
    return os << r.value() << " (mod " << r.modulus().value() << ")";
}

Residue normalize(int64_t v, Modulus m) { return Residue(v, m); }
Residue normalize(int64_t v, int64_t m) { return Residue(v, Modulus(m)); }

int64_t gcd(int64_t a, int64_t b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_unit(Residue r) noexcept { return gcd(r.value(), r.modulus().value()) == 1; }

Residue mod_inverse(Residue r) {
    const int64_t m = r.modulus().value();
    int64_t old_r = r.value(), cur_r = m;
    int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        int64_t quot = old_r / cur_r;
        int64_t t = old_r - quot * cur_r;
        old_r = cur_r;
        cur_r = t;
        t = old_s - quot * cur_s;
        old_s = cur_s;
        cur_s = t;
    }
    if (old_r != 1) {
        throw Error(ErrorKind::NotAUnit, std::to_string(r.value()) + " is not a unit mod " +
                                             std::to_string(m));
    }
    return Residue(old_s, r.modulus());
}

int64_t odd_representative(Residue r) {
    if (!r.modulus().is_odd()) {
        throw Error(ErrorKind::OddModulusRequired,
                    "odd representative needs an odd modulus, got " +
                        std::to_string(r.modulus().value()));
    }
    return (r.value() & 1) != 0 ? r.value() : r.value() + r.modulus().value();
}

bool is_square_unit(Residue r) {
    if (!is_unit(r)) {
        throw Error(ErrorKind::NotAUnit, std::to_string(r.value()) + " is not a unit mod " +
                                             std::to_string(r.modulus().value()));
    }
    const int64_t m = r.modulus().value();
    for (int64_t n = 1; n < m; ++n) {
        if (gcd(n, m) == 1 && mulmod(n, n, m) == r.value()) return true;
    }
    return false;
}

bool euler_criterion(Residue r) {
    const auto half = static_cast<uint64_t>((r.modulus().value() - 1) / 2);
    return r.pow(half).value() == 1;
}

bool is_prime(int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    // 6k +- 1 wheel; d <= n / d avoids overflow of d * d near 2^63.
    for (int64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<int64_t> units(Modulus m) {
    std::vector<int64_t> out;
    for (int64_t v = 1; v < m.value(); ++v) {
        if (gcd(v, m.value()) == 1) out.push_back(v);
    }
    return out;
}

}  // namespace lensfr
