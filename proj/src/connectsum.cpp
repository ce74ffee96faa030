#include "lensfr/connectsum.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace lensfr {

std::string to_string(const SumOfLens& sum) {
    if (sum.empty()) return "S^3";
    std::ostringstream os;
    for (size_t i = 0; i < sum.size(); ++i) {
        if (i > 0) os << '#';
        os << sum.summands()[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SumOfLens& sum) { return os << to_string(sum); }

CanonicalKey canonical_key(const LensSpace& lens, RelationKind kind) {
    if (kind == RelationKind::FramingEqual) {
        throw Error(ErrorKind::UnsupportedKind,
                    "framing equality is not a relation on connected sums");
    }
    if (lens.p() % 2 == 0) {
        throw Error(ErrorKind::UnsupportedEvenOrder,
                    "summands must have odd order, got p = " + std::to_string(lens.p()));
    }
    const Modulus p = lens.order();
    const Residue q = lens.q_residue();
    const Residue qi = mod_inverse(q);
    int64_t best = std::min(q.value(), qi.value());
    switch (kind) {
        case RelationKind::OrientedHomeo:
            break;
        case RelationKind::Homeo:
            best = std::min({best, (-q).value(), (-qi).value()});
            break;
        case RelationKind::OrientedHomotopy:
        case RelationKind::Homotopy:
            // Orbit is q times the subgroup of (signed) squares.
            for (int64_t n = 1; n < p.value(); ++n) {
                if (gcd(n, p.value()) != 1) continue;
                const Residue twisted = q * Residue(n, p) * Residue(n, p);
                best = std::min(best, twisted.value());
                if (kind == RelationKind::Homotopy) best = std::min(best, (-twisted).value());
            }
            break;
        case RelationKind::FramingEqual:
            break;
    }
    return {lens.p(), best};
}

std::vector<CanonicalKey> canonical_keys(const SumOfLens& sum, RelationKind kind) {
    std::vector<CanonicalKey> keys;
    keys.reserve(sum.size());
    for (const auto& lens : sum.summands()) keys.push_back(canonical_key(lens, kind));
    std::sort(keys.begin(), keys.end());
    return keys;
}

bool sums_equivalent(const SumOfLens& a, const SumOfLens& b, RelationKind kind) {
    return canonical_keys(a, kind) == canonical_keys(b, kind);
}

std::vector<ExoticPair> find_exotic_pairs(int64_t max_p, int num_summands) {
    if (num_summands != 1 && num_summands != 2) {
        throw Error(ErrorKind::UnsupportedSize,
                    "num_summands must be 1 or 2, got " + std::to_string(num_summands));
    }
    if (max_p < 3) {
        throw Error(ErrorKind::InvalidModulus, "max_p must be >= 3, got " + std::to_string(max_p));
    }

    // One representative per oriented homeomorphism class.
    std::vector<LensSpace> classes;
    for (int64_t p = 3; p <= max_p; p += 2) {
        if (!is_prime(p)) continue;
        for (int64_t q : units(Modulus(p))) {
            const LensSpace lens(p, q);
            if (canonical_key(lens, RelationKind::OrientedHomeo).residue == q) {
                classes.push_back(lens);
            }
        }
    }

    std::vector<SumOfLens> sums;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (num_summands == 1) {
            sums.push_back(SumOfLens{classes[i]});
            continue;
        }
        for (size_t j = i; j < classes.size(); ++j) sums.push_back(SumOfLens{classes[i], classes[j]});
    }

    // Sums in the same bucket match under OrientedHomotopy; distinct sums
    // are never homeomorphic since their summands are distinct canonical
    // class representatives.
    std::map<std::vector<CanonicalKey>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < sums.size(); ++i) {
        buckets[canonical_keys(sums[i], RelationKind::OrientedHomotopy)].push_back(i);
    }

    std::vector<ExoticPair> out;
    for (const auto& [key, members] : buckets) {
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                out.push_back({sums[members[i]], sums[members[j]]});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ExoticPair& x, const ExoticPair& y) {
        if (x.first.summands() != y.first.summands()) return x.first.summands() < y.first.summands();
        return x.second.summands() < y.second.summands();
    });
    return out;
}

}  // namespace lensfr
