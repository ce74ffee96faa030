#pragma once

/**
 * @file connectsum.hpp
 * @brief Connected sums of odd-order lens spaces as multisets of summands.
 *
 * Prime decomposition is unique, so two sums are homeomorphic exactly when
 * their summands can be matched up to homeomorphism. For the homotopy
 * relations a matching is only a certificate of homotopy equivalence; the
 * absence of a matching is reported as such and nothing stronger.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lensfr/classify.hpp"
#include "lensfr/framing.hpp"

namespace lensfr {

/// Orbit representative of L(p, q) under one of the geometric relations.
struct CanonicalKey {
    int64_t p;
    int64_t residue;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Finite multiset of lens spaces; empty means S^3.
class SumOfLens {
public:
    SumOfLens() = default;
    SumOfLens(std::initializer_list<LensSpace> summands) : summands_(summands) {}
    explicit SumOfLens(std::vector<LensSpace> summands) : summands_(std::move(summands)) {}

    const std::vector<LensSpace>& summands() const noexcept { return summands_; }
    size_t size() const noexcept { return summands_.size(); }
    bool empty() const noexcept { return summands_.empty(); }

    friend bool operator==(const SumOfLens&, const SumOfLens&) = default;

private:
    std::vector<LensSpace> summands_;
};

/// "L(5,1)#L(5,4)"; the empty sum is "S^3".
std::string to_string(const SumOfLens& sum);
std::ostream& operator<<(std::ostream& os, const SumOfLens& sum);

/// (p, least element of the orbit of q). FramingEqual is rejected with
/// UnsupportedKind; even p with UnsupportedEvenOrder.
CanonicalKey canonical_key(const LensSpace& lens, RelationKind kind);

/// Sorted canonical keys of all summands.
std::vector<CanonicalKey> canonical_keys(const SumOfLens& sum, RelationKind kind);

bool sums_equivalent(const SumOfLens& a, const SumOfLens& b, RelationKind kind);

struct ExoticPair {
    SumOfLens first;
    SumOfLens second;
};

/// Pairs of sums of `num_summands` lens spaces of odd prime order <= max_p
/// that match under OrientedHomotopy but not under OrientedHomeo. Each sum
/// is written with OrientedHomeo-canonical summands in sorted order; pairs
/// are ordered (first < second) and listed lexicographically.
std::vector<ExoticPair> find_exotic_pairs(int64_t max_p, int num_summands);

}  // namespace lensfr
