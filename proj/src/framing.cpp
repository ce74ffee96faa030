#include "lensfr/framing.hpp"

#include <ostream>
#include <string>

namespace lensfr {

namespace {

void require_odd_order(const LensSpace& lens) {
    if (lens.p() % 2 == 0) {
        throw Error(ErrorKind::UnsupportedEvenOrder,
                    "framing invariant is only computed for odd p, got p = " +
                        std::to_string(lens.p()));
    }
}

}  // namespace

LensSpace::LensSpace(int64_t p, int64_t q) : p_(p), q_(0) {
    const Residue r(q, Modulus(p));
    if (!is_unit(r)) {
        throw Error(ErrorKind::NotALensSpace, "L(" + std::to_string(p) + "," + std::to_string(q) +
                                                  ") needs gcd(p, q) = 1");
    }
    q_ = r.value();
}

std::ostream& operator<<(std::ostream& os, const LensSpace& lens) {
    return os << "L(" << lens.p() << ',' << lens.q() << ')';
}

std::ostream& operator<<(std::ostream& os, const FramingClass& c) { return os << c.residue(); }

QuotientData::QuotientData(int64_t group_order, bool h1_z2_trivial, int64_t pullback_class)
    : group_order_(group_order),
      h1_z2_trivial_(h1_z2_trivial),
      pullback_(pullback_class, framing_modulus(group_order, h1_z2_trivial)) {}

OddLifts canonical_odd_lifts(const LensSpace& lens) {
    require_odd_order(lens);
    return {odd_representative(lens.q_residue()), odd_representative(lens.q_inverse())};
}

int64_t framing_degree_from_lifts(int64_t a, int64_t b) {
    const __int128 prod = static_cast<__int128>(a - 1) * (b - 1);
    return static_cast<int64_t>(prod / 4);
}

FramingClass framing_invariant(const LensSpace& lens) {
    const OddLifts lifts = canonical_odd_lifts(lens);
    return FramingClass(framing_degree_from_lifts(lifts.q, lifts.q_inv), lens.order());
}

FramingClass framing_invariant_residue_path(const LensSpace& lens) {
    require_odd_order(lens);
    const Modulus p = lens.order();
    const Residue quarter = mod_inverse(Residue(4, p));
    return FramingClass((Residue(2, p) - lens.q_residue() - lens.q_inverse()) * quarter);
}

FramingClass normalized_framing_invariant(const LensSpace& lens) {
    const FramingClass raw = framing_invariant(lens);
    const Residue half = mod_inverse(Residue(2, raw.modulus()));
    return FramingClass(raw.residue() - half);
}

int64_t equivariant_map_degree(const LensSpace& lens, int64_t k) {
    const OddLifts lifts = canonical_odd_lifts(lens);
    return framing_degree_from_lifts(lifts.q, lifts.q_inv) + k * lens.p();
}

Modulus framing_modulus(int64_t group_order, bool h1_z2_trivial) {
    if (group_order < 2) {
        throw Error(ErrorKind::InvalidModulus,
                    "group order must be >= 2, got " + std::to_string(group_order));
    }
    if (h1_z2_trivial) return Modulus(group_order);
    if (group_order % 2 != 0) {
        throw Error(ErrorKind::InconsistentInput,
                    "odd group order " + std::to_string(group_order) +
                        " forces H_1(M; Z/2) = 0");
    }
    if (group_order / 2 < 2) {
        throw Error(ErrorKind::DegenerateModulus, "|G|/2 = 1 leaves no framing information");
    }
    return Modulus(group_order / 2);
}

bool universally_tight_obstructed(const QuotientData& data) noexcept {
    return data.pullback_class().value() != 0;
}

}  // namespace lensfr
