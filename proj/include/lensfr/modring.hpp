#pragma once

/**
 * @file modring.hpp
 * @brief Exact arithmetic in Z/m for desk-scale moduli.
 *
 * Values are stored as int64_t in [0, m). Products go through __int128 so
 * any modulus below 2^63 is safe, although everything else in the project
 * works with moduli in the thousands.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lensfr/error.hpp"

namespace lensfr {

class Modulus {
public:
    /// Throws ErrorKind::InvalidModulus when m < 2.
    explicit Modulus(int64_t m);

    constexpr int64_t value() const noexcept { return m_; }
    constexpr bool is_odd() const noexcept { return (m_ & 1) != 0; }

    friend constexpr bool operator==(Modulus, Modulus) = default;
    friend constexpr auto operator<=>(Modulus, Modulus) = default;

private:
    int64_t m_;
};

class Residue {
public:
    Residue(int64_t v, Modulus m);

    int64_t value() const noexcept { return v_; }
    Modulus modulus() const noexcept { return m_; }

    Residue operator+(Residue rhs) const;
    Residue operator-(Residue rhs) const;
    Residue operator*(Residue rhs) const;
    Residue operator-() const;
    Residue pow(uint64_t exp) const;

    friend bool operator==(Residue, Residue) = default;

private:
    int64_t v_;
    Modulus m_;
};

std::ostream& operator<<(std::ostream& os, Modulus m);
std::ostream& operator<<(std::ostream& os, Residue r);

/// Unique representative of v in [0, m).
Residue normalize(int64_t v, Modulus m);
Residue normalize(int64_t v, int64_t m);

int64_t gcd(int64_t a, int64_t b) noexcept;
bool is_unit(Residue r) noexcept;

/// Extended Euclid. Throws NotAUnit when gcd(r, m) != 1.
Residue mod_inverse(Residue r);

/// The odd member of {r, r + m}; requires odd m.
int64_t odd_representative(Residue r);

/// True iff r = n^2 for some unit n. Exhaustive scan over the units of Z/m.
bool is_square_unit(Residue r);

/// Euler's criterion r^((m-1)/2) == 1; only meaningful for odd prime m.
bool euler_criterion(Residue r);

/// Trial division; exact for every n < 2^63.
bool is_prime(int64_t n) noexcept;

/// Units of Z/m in increasing order.
std::vector<int64_t> units(Modulus m);

}  // namespace lensfr
