#pragma once

/**
 * @file sweep.hpp
 * @brief Bulk evaluation and verification over ranges of odd p.
 *
 * Work is independent per p. Execution::Parallel distributes the p values
 * over OpenMP threads; Execution::Serial runs the same per-p kernel in a
 * plain loop and is the reference the parallel path is tested against.
 * Results are merged in increasing p either way.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lensfr {

enum class Execution { Serial, Parallel };

struct TableRow {
    int64_t p;
    int64_t q;
    int64_t q_inv;
    int64_t odd_rep_q;
    int64_t odd_rep_q_inv;
    int64_t framing;
    int64_t framing_normalized;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows for every odd p in [p_min, p_max] and every unit q, sorted by (p, q).
TableRow table_row(int64_t p, int64_t q);
std::vector<TableRow> framing_table(int64_t p_min, int64_t p_max,
                                    Execution exec = Execution::Parallel);

struct CheckFailure {
    std::string check;
    int64_t p;
    int64_t q;
    /// Second unit for pairwise checks; lift index 6j + k for
    /// representative_independence; empty otherwise.
    std::optional<int64_t> q2;
    int64_t expected;
    int64_t actual;

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct CollisionFinding {
    int64_t p;
    std::vector<std::pair<int64_t, int64_t>> pairs;

    friend bool operator==(const CollisionFinding&, const CollisionFinding&) = default;
};

struct VerificationReport {
    uint64_t checks_run = 0;
    std::vector<CheckFailure> failures;
    /// Composite p only; informational, never a failure.
    std::vector<CollisionFinding> collisions;
    double elapsed_ms = 0.0;

    bool passed() const noexcept { return failures.empty(); }
};

/// Per-p checks for odd p in [3, max_p]:
///   representative independence (lifts a + 2jp, b + 2kp, 0 <= j,k <= 5),
///   inverse symmetry, normalized antisymmetry, residue-path agreement;
///   for prime p, FramingEqual <=> OrientedHomeo on every unit pair;
///   for composite p, the collision scan.
VerificationReport verify_range(int64_t max_p, Execution exec = Execution::Parallel);

/// Checks for a single odd p; what verify_range runs per p.
VerificationReport verify_order(int64_t p);

/// Number of worker threads Execution::Parallel will use.
int parallel_workers() noexcept;

}  // namespace lensfr
