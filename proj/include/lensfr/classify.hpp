#pragma once

/**
 * @file classify.hpp
 * @brief Equivalence relations on lens spaces of a fixed order.
 *
 * OrientedHomeo   q2 in {q, q^-1}
 * Homeo           q2 in {+-q, +-q^-1}        (orientation reversal is q -> -q)
 * OrientedHomotopy q2 * q^-1 is a square unit
 * Homotopy        +-q2 * q^-1 is a square unit
 * FramingEqual    equal framing invariant (odd p only)
 */

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "lensfr/framing.hpp"
#include "lensfr/modring.hpp"

namespace lensfr {

enum class RelationKind { OrientedHomeo, Homeo, OrientedHomotopy, Homotopy, FramingEqual };

inline constexpr RelationKind kAllRelationKinds[] = {
    RelationKind::OrientedHomeo, RelationKind::Homeo, RelationKind::OrientedHomotopy,
    RelationKind::Homotopy, RelationKind::FramingEqual};

std::string_view to_string(RelationKind kind) noexcept;

/// Decides the relation directly from the definitions: inverses by
/// extended Euclid, squares by a full scan of the unit group.
bool related(RelationKind kind, Modulus p, Residue q, Residue q2);

/// Precomputed inverse table, square bitmap and framing values for one odd
/// modulus. Answers the same questions as related() in O(1) per query and
/// is what the exhaustive sweeps use.
class UnitGroup {
public:
    explicit UnitGroup(Modulus p);

    Modulus modulus() const noexcept { return p_; }
    const std::vector<int64_t>& units() const noexcept { return units_; }
    bool is_unit(int64_t v) const { return inverse_[static_cast<size_t>(v)] != 0; }
    int64_t inverse(int64_t v) const { return inverse_[static_cast<size_t>(v)]; }
    bool is_square(int64_t v) const { return square_[static_cast<size_t>(v)] != 0; }
    int64_t framing(int64_t v) const { return framing_[static_cast<size_t>(v)]; }

    bool related(RelationKind kind, int64_t q, int64_t q2) const;

private:
    Modulus p_;
    std::vector<int64_t> units_;
    std::vector<int64_t> inverse_;  // 0 marks a non-unit
    std::vector<char> square_;
    std::vector<int64_t> framing_;
};

/// Units of Z/p grouped by framing invariant, keyed by the invariant value.
struct FiberPartition {
    Modulus p;
    std::map<int64_t, std::vector<int64_t>> fibers;
};

/// All unit q' with (2 - q' - q'^-1) * 4^-1 = c in Z/p, found by scanning
/// the units. Requires p to be an odd prime.
std::vector<int64_t> quadratic_roots(Modulus p, int64_t c);

FiberPartition invariant_fibers(Modulus p);

/// Exhaustively checks FramingEqual <=> OrientedHomeo on all unit pairs.
bool verify_prime_classification(Modulus p);

/// Unordered pairs q < q2 with equal invariant that are not q^{+-1}
/// related. Requires p odd and composite.
std::vector<std::pair<int64_t, int64_t>> collision_scan(Modulus p);

}  // namespace lensfr
