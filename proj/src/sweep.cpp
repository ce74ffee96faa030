#include "lensfr/sweep.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lensfr/classify.hpp"
#include "lensfr/framing.hpp"

namespace lensfr {

namespace {

constexpr int64_t kMaxLiftShift = 5;

std::vector<int64_t> odd_orders(int64_t lo, int64_t hi) {
    std::vector<int64_t> out;
    if (lo < 3) lo = 3;
    for (int64_t p = lo | 1; p <= hi; p += 2) out.push_back(p);
    return out;
}

// Runs kernel(p) for each p and concatenates per-p results in p order.
template <typename Result, typename Kernel>
std::vector<Result> map_orders(const std::vector<int64_t>& orders, Execution exec, Kernel kernel) {
    std::vector<Result> slots(orders.size());
    const auto n = static_cast<int64_t>(orders.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int64_t i = 0; i < n; ++i) slots[static_cast<size_t>(i)] = kernel(orders[static_cast<size_t>(i)]);
    } else {
        for (int64_t i = 0; i < n; ++i) slots[static_cast<size_t>(i)] = kernel(orders[static_cast<size_t>(i)]);
    }
    return slots;
}

void fail(VerificationReport& report, const char* check, int64_t p, int64_t q,
          std::optional<int64_t> q2, int64_t expected, int64_t actual) {
    report.failures.push_back({check, p, q, q2, expected, actual});
}

}  // namespace

int parallel_workers() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

TableRow table_row(int64_t p, int64_t q) {
    const LensSpace lens(p, q);
    const OddLifts lifts = canonical_odd_lifts(lens);
    return {p,
            lens.q(),
            lens.q_inverse().value(),
            lifts.q,
            lifts.q_inv,
            framing_invariant(lens).value(),
            normalized_framing_invariant(lens).value()};
}

std::vector<TableRow> framing_table(int64_t p_min, int64_t p_max, Execution exec) {
    const auto per_p = map_orders<std::vector<TableRow>>(
        odd_orders(p_min, p_max), exec, [](int64_t p) {
            std::vector<TableRow> rows;
            for (int64_t q : units(Modulus(p))) rows.push_back(table_row(p, q));
            return rows;
        });
    std::vector<TableRow> out;
    for (const auto& rows : per_p) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

VerificationReport verify_order(int64_t p) {
    VerificationReport report;
    const Modulus mod(p);
    const UnitGroup group(mod);

    for (int64_t q : group.units()) {
        const LensSpace lens(p, q);
        const int64_t expected = group.framing(q);
        const OddLifts lifts = canonical_odd_lifts(lens);

        for (int64_t j = 0; j <= kMaxLiftShift; ++j) {
            for (int64_t k = 0; k <= kMaxLiftShift; ++k) {
                const int64_t degree =
                    framing_degree_from_lifts(lifts.q + 2 * j * p, lifts.q_inv + 2 * k * p);
                const int64_t actual = Residue(degree, mod).value();
                ++report.checks_run;
                if (actual != expected) {
                    fail(report, "representative_independence", p, q, j * (kMaxLiftShift + 1) + k,
                         expected, actual);
                }
            }
        }

        const int64_t qi = group.inverse(q);
        ++report.checks_run;
        if (group.framing(qi) != expected) {
            fail(report, "inverse_symmetry", p, q, qi, expected, group.framing(qi));
        }

        const int64_t norm = normalized_framing_invariant(lens).value();
        const int64_t norm_reversed = normalized_framing_invariant(lens.reversed()).value();
        const int64_t negated = Residue(-norm, mod).value();
        ++report.checks_run;
        if (norm_reversed != negated) {
            fail(report, "antisymmetry", p, q, p - q, negated, norm_reversed);
        }

        const int64_t via_residues = framing_invariant_residue_path(lens).value();
        ++report.checks_run;
        if (via_residues != expected) {
            fail(report, "residue_path", p, q, std::nullopt, expected, via_residues);
        }
    }

    if (is_prime(p)) {
        for (int64_t q : group.units()) {
            for (int64_t q2 : group.units()) {
                const bool homeo = group.related(RelationKind::OrientedHomeo, q, q2);
                const bool equal = group.related(RelationKind::FramingEqual, q, q2);
                ++report.checks_run;
                if (homeo != equal) fail(report, "prime_classification", p, q, q2, homeo, equal);
            }
        }
    } else {
        auto pairs = collision_scan(mod);
        if (!pairs.empty()) report.collisions.push_back({p, std::move(pairs)});
    }
    return report;
}

VerificationReport verify_range(int64_t max_p, Execution exec) {
    const auto start = std::chrono::steady_clock::now();
    const auto per_p = map_orders<VerificationReport>(odd_orders(3, max_p), exec, verify_order);

    VerificationReport merged;
    for (const auto& r : per_p) {
        merged.checks_run += r.checks_run;
        merged.failures.insert(merged.failures.end(), r.failures.begin(), r.failures.end());
        merged.collisions.insert(merged.collisions.end(), r.collisions.begin(), r.collisions.end());
    }
    merged.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return merged;
}

}  // namespace lensfr
