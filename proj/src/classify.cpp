#include "lensfr/classify.hpp"

#include <string>

namespace lensfr {

namespace {

void require_unit(Residue r) {
    if (!is_unit(r)) {
        throw Error(ErrorKind::NotAUnit, std::to_string(r.value()) + " is not a unit mod " +
                                             std::to_string(r.modulus().value()));
    }
}

void require_odd(Modulus p) {
    if (!p.is_odd()) {
        throw Error(ErrorKind::UnsupportedEvenOrder,
                    "odd p required, got " + std::to_string(p.value()));
    }
}

void require_odd_prime(Modulus p) {
    if (!p.is_odd() || !is_prime(p.value())) {
        throw Error(ErrorKind::PrimeRequired,
                    "odd prime required, got " + std::to_string(p.value()));
    }
}

}  // namespace

std::string_view to_string(RelationKind kind) noexcept {
    switch (kind) {
        case RelationKind::OrientedHomeo: return "oriented-homeo";
        case RelationKind::Homeo: return "homeo";
        case RelationKind::OrientedHomotopy: return "oriented-homotopy";
        case RelationKind::Homotopy: return "homotopy";
        case RelationKind::FramingEqual: return "framing-equal";
    }
    return "unknown";
}

bool related(RelationKind kind, Modulus p, Residue q, Residue q2) {
    if (q.modulus() != p || q2.modulus() != p) {
        throw Error(ErrorKind::ModulusMismatch, "residues must live in Z/" +
                                                    std::to_string(p.value()));
    }
    require_unit(q);
    require_unit(q2);
    const Residue q_inv = mod_inverse(q);
    switch (kind) {
        case RelationKind::OrientedHomeo:
            return q2 == q || q2 == q_inv;
        case RelationKind::Homeo:
            return q2 == q || q2 == q_inv || q2 == -q || q2 == -q_inv;
        case RelationKind::OrientedHomotopy:
            return is_square_unit(q2 * q_inv);
        case RelationKind::Homotopy:
            return is_square_unit(q2 * q_inv) || is_square_unit(-(q2 * q_inv));
        case RelationKind::FramingEqual:
            return framing_invariant(LensSpace(p.value(), q.value())) ==
                   framing_invariant(LensSpace(p.value(), q2.value()));
    }
    return false;
}

UnitGroup::UnitGroup(Modulus p)
    : p_(p),
      units_(lensfr::units(p)),
      inverse_(static_cast<size_t>(p.value()), 0),
      square_(static_cast<size_t>(p.value()), 0),
      framing_(static_cast<size_t>(p.value()), -1) {
    require_odd(p);
    const int64_t m = p.value();
    for (int64_t u : units_) {
        const Residue r(u, p);
        inverse_[static_cast<size_t>(u)] = mod_inverse(r).value();
        square_[static_cast<size_t>((r * r).value())] = 1;
        framing_[static_cast<size_t>(u)] = framing_invariant(LensSpace(m, u)).value();
    }
}

bool UnitGroup::related(RelationKind kind, int64_t q, int64_t q2) const {
    if (q <= 0 || q2 <= 0 || q >= p_.value() || q2 >= p_.value() || !is_unit(q) ||
        !is_unit(q2)) {
        throw Error(ErrorKind::NotAUnit, "relation arguments must be units mod " +
                                             std::to_string(p_.value()));
    }
    const int64_t m = p_.value();
    const int64_t qi = inverse(q);
    switch (kind) {
        case RelationKind::OrientedHomeo:
            return q2 == q || q2 == qi;
        case RelationKind::Homeo:
            return q2 == q || q2 == qi || q2 == m - q || q2 == m - qi;
        case RelationKind::OrientedHomotopy:
            return is_square((Residue(q2, p_) * Residue(qi, p_)).value());
        case RelationKind::Homotopy: {
            const int64_t ratio = (Residue(q2, p_) * Residue(qi, p_)).value();
            return is_square(ratio) || is_square(m - ratio);
        }
        case RelationKind::FramingEqual:
            return framing(q) == framing(q2);
    }
    return false;
}

std::vector<int64_t> quadratic_roots(Modulus p, int64_t c) {
    require_odd_prime(p);
    const Residue target(c, p);
    const Residue quarter = mod_inverse(Residue(4, p));
    const Residue two(2, p);
    std::vector<int64_t> roots;
    for (int64_t v = 1; v < p.value(); ++v) {
        const Residue r(v, p);
        if ((two - r - mod_inverse(r)) * quarter == target) roots.push_back(v);
    }
    return roots;
}

FiberPartition invariant_fibers(Modulus p) {
    require_odd(p);
    FiberPartition out{p, {}};
    for (int64_t u : units(p)) {
        out.fibers[framing_invariant(LensSpace(p.value(), u)).value()].push_back(u);
    }
    return out;
}

bool verify_prime_classification(Modulus p) {
    require_odd_prime(p);
    const UnitGroup group(p);
    for (int64_t q : group.units()) {
        for (int64_t q2 : group.units()) {
            if (group.related(RelationKind::FramingEqual, q, q2) !=
                group.related(RelationKind::OrientedHomeo, q, q2)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<int64_t, int64_t>> collision_scan(Modulus p) {
    require_odd(p);
    if (is_prime(p.value())) {
        throw Error(ErrorKind::CompositeRequired,
                    std::to_string(p.value()) + " is prime; use verify_prime_classification");
    }
    const UnitGroup group(p);
    std::vector<std::pair<int64_t, int64_t>> out;
    const auto& us = group.units();
    for (size_t i = 0; i < us.size(); ++i) {
        for (size_t j = i + 1; j < us.size(); ++j) {
            if (group.related(RelationKind::FramingEqual, us[i], us[j]) &&
                !group.related(RelationKind::OrientedHomeo, us[i], us[j])) {
                out.emplace_back(us[i], us[j]);
            }
        }
    }
    return out;
}

}  // namespace lensfr
