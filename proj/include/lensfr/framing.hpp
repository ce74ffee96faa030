#pragma once

/**
 * @file framing.hpp
 * @brief Equivariant framing invariant of spherical space forms.
 *
 * Homotopy classes of framings of S^3 are identified with Z by declaring
 * the left-invariant framing of the unit quaternions to be 0. Pulling a
 * framing of M = S^3/G back to S^3 gives an integer that is well defined
 * modulo <G>, where <G> = |G| if H_1(M; Z/2) = 0 and |G|/2 otherwise.
 *
 * For odd-order lens spaces the class is (a - 1)(b - 1)/4 mod p, where a
 * and b are odd lifts of q and q^-1.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "lensfr/modring.hpp"

namespace lensfr {

/// Oriented lens space L(p, q); q is stored in [1, p - 1].
class LensSpace {
public:
    /// Accepts any integer q and reduces it mod p. Throws NotALensSpace
    /// when gcd(p, q) != 1 and InvalidModulus when p < 2.
    LensSpace(int64_t p, int64_t q);

    int64_t p() const noexcept { return p_; }
    int64_t q() const noexcept { return q_; }
    Modulus order() const { return Modulus(p_); }
    Residue q_residue() const { return Residue(q_, Modulus(p_)); }
    Residue q_inverse() const { return mod_inverse(q_residue()); }

    /// -L(p, q) = L(p, -q).
    LensSpace reversed() const { return LensSpace(p_, p_ - q_); }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
    friend auto operator<=>(const LensSpace&, const LensSpace&) = default;

private:
    int64_t p_;
    int64_t q_;
};

std::ostream& operator<<(std::ostream& os, const LensSpace& lens);

/// An element of Z/<G> holding a framing invariant.
class FramingClass {
public:
    FramingClass(int64_t value, Modulus modulus) : residue_(value, modulus) {}
    explicit FramingClass(Residue r) : residue_(r) {}

    int64_t value() const noexcept { return residue_.value(); }
    Modulus modulus() const noexcept { return residue_.modulus(); }
    Residue residue() const noexcept { return residue_; }

    friend bool operator==(const FramingClass&, const FramingClass&) = default;

private:
    Residue residue_;
};

std::ostream& operator<<(std::ostream& os, const FramingClass& c);

/// Data of a quotient S^3/G needed by the contact obstruction.
class QuotientData {
public:
    /// Validates the pairing of group order, H_1(M; Z/2) flag and the class
    /// modulus. `pullback_class` is reduced mod the framing modulus.
    QuotientData(int64_t group_order, bool h1_z2_trivial, int64_t pullback_class);

    int64_t group_order() const noexcept { return group_order_; }
    bool h1_z2_trivial() const noexcept { return h1_z2_trivial_; }
    const FramingClass& pullback_class() const noexcept { return pullback_; }

private:
    int64_t group_order_;
    bool h1_z2_trivial_;
    FramingClass pullback_;
};

/// Odd lifts of q and q^-1 used by the integer evaluation path.
struct OddLifts {
    int64_t q;
    int64_t q_inv;
};

OddLifts canonical_odd_lifts(const LensSpace& lens);

/// (a - 1)(b - 1)/4 over the integers for odd a, b. The division is exact.
int64_t framing_degree_from_lifts(int64_t a, int64_t b);

/// The invariant of L(p, q) for odd p, in Z/p. Throws UnsupportedEvenOrder
/// for even p.
FramingClass framing_invariant(const LensSpace& lens);

/// Same class via (2 - q - q^-1) * 4^-1 computed in Z/p.
FramingClass framing_invariant_residue_path(const LensSpace& lens);

/// Invariant with the left-invariant framing placed at -1/2, i.e. shifted
/// by -2^-1 in Z/p. Satisfies F(L(p,-q)) = -F(L(p,q)).
FramingClass normalized_framing_invariant(const LensSpace& lens);

/// Degree of the comparison map S^3 -> S^3 after blowing a degree-k bubble
/// in each of the p translates of the fundamental domain.
int64_t equivariant_map_degree(const LensSpace& lens, int64_t k);

/// <G>: |G| when H_1(M; Z/2) = 0, |G|/2 otherwise.
Modulus framing_modulus(int64_t group_order, bool h1_z2_trivial);

/// True when the pullback class differs from the left-invariant class, so
/// that no universally tight positive contact structure can exist.
bool universally_tight_obstructed(const QuotientData& data) noexcept;

}  // namespace lensfr
