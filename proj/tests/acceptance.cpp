// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lensfr/classify.hpp"
#include "lensfr/cli.hpp"
#include "lensfr/connectsum.hpp"
#include "lensfr/framing.hpp"
#include "lensfr/render.hpp"
#include "lensfr/sweep.hpp"

using namespace lensfr;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

struct Criterion {
    int id;
    const char* name;
    double limit_ms;  // 0 = no time bound
    std::function<Outcome()> body;
};

std::vector<int64_t> odd_range(int64_t lo, int64_t hi) {
    std::vector<int64_t> out;
    for (int64_t p = lo; p <= hi; p += 2) out.push_back(p);
    return out;
}

std::string at(int64_t p, int64_t q) {
    return "p=" + std::to_string(p) + " q=" + std::to_string(q);
}

Outcome anchors() {
    Outcome o;
    for (int64_t p : odd_range(3, 1001)) {
        if (framing_invariant(LensSpace(p, 1)).value() != 0) o.fail("F(L(p,1)) != 0 at " + at(p, 1));
        if (framing_invariant(LensSpace(p, p - 1)).value() != 1)
            o.fail("F(L(p,-1)) != 1 at " + at(p, p - 1));
    }
    return o;
}

Outcome representative_independence() {
    Outcome o;
    for (int64_t p : odd_range(3, 499)) {
        const Modulus m(p);
        for (int64_t q : units(m)) {
            const LensSpace lens(p, q);
            const int64_t canonical = framing_invariant(lens).value();
            const OddLifts lifts = canonical_odd_lifts(lens);
            for (int64_t j = 0; j <= 5; ++j)
                for (int64_t k = 0; k <= 5; ++k) {
                    const int64_t d =
                        framing_degree_from_lifts(lifts.q + 2 * j * p, lifts.q_inv + 2 * k * p);
                    if (Residue(d, m).value() != canonical) o.fail("lift mismatch at " + at(p, q));
                }
        }
    }
    return o;
}

Outcome antisymmetry() {
    Outcome o;
    for (int64_t p : odd_range(3, 499)) {
        const Modulus m(p);
        for (int64_t q : units(m)) {
            const LensSpace lens(p, q);
            const Residue n = normalized_framing_invariant(lens).residue();
            if (normalized_framing_invariant(lens.reversed()).residue() != -n)
                o.fail("normalized antisymmetry at " + at(p, q));
            const Residue raw_sum =
                framing_invariant(lens).residue() + framing_invariant(lens.reversed()).residue();
            if (raw_sum.value() != 1) o.fail("raw sum != 1 at " + at(p, q));
        }
    }
    return o;
}

Outcome prime_classification() {
    Outcome o;
    for (int64_t p : odd_range(3, 997)) {
        if (!is_prime(p)) continue;
        const Modulus m(p);
        for (const auto& [value, fiber] : invariant_fibers(m).fibers) {
            const int64_t q = fiber.front();
            std::vector<int64_t> expected{q, mod_inverse(Residue(q, m)).value()};
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            if (fiber != expected) o.fail("fiber of " + std::to_string(value) + " at p=" + std::to_string(p));
        }
        if (!verify_prime_classification(m)) o.fail("FramingEqual != OrientedHomeo at p=" + std::to_string(p));
    }
    return o;
}

Outcome quadratic_oracle() {
    Outcome o;
    for (int64_t p : odd_range(3, 499)) {
        if (!is_prime(p)) continue;
        const Modulus m(p);
        for (int64_t q : units(m)) {
            std::vector<int64_t> expected{q, mod_inverse(Residue(q, m)).value()};
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            const int64_t c = framing_invariant(LensSpace(p, q)).value();
            if (quadratic_roots(m, c) != expected) o.fail("roots mismatch at " + at(p, q));
        }
    }
    return o;
}

Outcome homotopic_not_homeomorphic_sums() {
    Outcome o;
    const SumOfLens a{LensSpace(5, 1), LensSpace(5, 1)};
    const SumOfLens b{LensSpace(5, 1), LensSpace(5, 4)};
    if (!sums_equivalent(a, b, RelationKind::OrientedHomotopy)) o.fail("not homotopy matched");
    if (sums_equivalent(a, b, RelationKind::OrientedHomeo)) o.fail("unexpectedly homeomorphic");
    return o;
}

Outcome contact_obstruction() {
    Outcome o;
    if (!universally_tight_obstructed(QuotientData(120, true, 1))) o.fail("class 1 not obstructed");
    if (universally_tight_obstructed(QuotientData(120, true, 0))) o.fail("class 0 obstructed");
    return o;
}

Outcome algebraic_cross_check() {
    Outcome o;
    for (int64_t p : odd_range(3, 499)) {
        for (int64_t q : units(Modulus(p))) {
            const LensSpace lens(p, q);
            if (framing_invariant(lens) != framing_invariant_residue_path(lens))
                o.fail("paths disagree at " + at(p, q));
        }
    }
    return o;
}

Outcome relation_properties() {
    Outcome o;
    for (int64_t p : odd_range(3, 200)) {
        const UnitGroup g{Modulus(p)};
        const auto& us = g.units();
        const size_t n = us.size();
        std::vector<std::vector<std::vector<char>>> rel(5, std::vector<std::vector<char>>(n, std::vector<char>(n)));
        for (size_t k = 0; k < 5; ++k)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) rel[k][i][j] = g.related(kAllRelationKinds[k], us[i], us[j]);

        for (size_t k = 0; k < 5; ++k) {
            const auto& r = rel[k];
            const std::string kind(to_string(kAllRelationKinds[k]));
            for (size_t i = 0; i < n; ++i) {
                if (!r[i][i]) o.fail(kind + " not reflexive at " + at(p, us[i]));
                for (size_t j = 0; j < n; ++j) {
                    if (r[i][j] != r[j][i]) o.fail(kind + " not symmetric at " + at(p, us[i]));
                    // x ~ y implies class(x) == class(y): transitivity given symmetry.
                    if (r[i][j] && r[i] != r[j]) o.fail(kind + " not transitive at " + at(p, us[i]));
                }
            }
        }
        const auto& ohomeo = rel[0];
        const auto& homeo = rel[1];
        const auto& ohtpy = rel[2];
        const auto& htpy = rel[3];
        const auto& frame = rel[4];
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (ohomeo[i][j] && !(homeo[i][j] && ohtpy[i][j] && frame[i][j]))
                    o.fail("OrientedHomeo implication broken at " + at(p, us[i]));
                if (ohtpy[i][j] && !htpy[i][j])
                    o.fail("OrientedHomotopy => Homotopy broken at " + at(p, us[i]));
            }
    }
    return o;
}

Outcome csv_round_trip() {
    Outcome o;
    std::ostringstream out, err;
    if (cli::run({"--format", "csv", "table", "3", "199"}, out, err) != 0) {
        o.fail("table command failed: " + err.str());
        return o;
    }
    const std::string original = out.str();
    std::vector<TableRow> regenerated;
    for (const auto& row : parse_table_csv(original)) regenerated.push_back(table_row(row.p, row.q));
    if (render_table(regenerated, OutputFormat::Csv) != original) o.fail("regenerated table differs");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "anchors F(L(p,1))=0, F(L(p,-1))=1, odd p in [3,1001]", 1'000, anchors},
        {2, "representative independence, odd p <= 499, 0 <= j,k <= 5", 30'000, representative_independence},
        {3, "normalized antisymmetry, odd p <= 499", 5'000, antisymmetry},
        {4, "fibers are {q, q^-1} / FramingEqual <=> OrientedHomeo, primes <= 997", 60'000, prime_classification},
        {5, "quadratic roots of F(L(p,q)) are {q, q^-1}, primes <= 499", 30'000, quadratic_oracle},
        {6, "L(5,1)#L(5,1) ~h L(5,1)#L(5,4), not homeomorphic", 0, homotopic_not_homeomorphic_sums},
        {7, "contact obstruction for |G|=120: class 1 obstructed, class 0 not", 0, contact_obstruction},
        {8, "integer and residue evaluation paths agree, odd p <= 499", 0, algebraic_cross_check},
        {9, "relations are equivalences with the implication lattice, odd p <= 200", 0, relation_properties},
        {10, "CSV table round-trip, p <= 199", 0, csv_round_trip},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_ms > 0 && ms >= c.limit_ms) {
            outcome.fail("took " + std::to_string(ms) + " ms, limit " + std::to_string(c.limit_ms) + " ms");
        }
        std::printf("[%s] AC%-2d %s (%.1f ms)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name, ms,
                    outcome.ok ? "" : ": ", outcome.detail.c_str());
        if (!outcome.ok) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
