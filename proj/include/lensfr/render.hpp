#pragma once

// Text renderings shared by the CLI and the tests. All residues are printed
// as their representative in [0, m); row order is whatever the caller gives,
// which for the sweeps is (p, q) ascending.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lensfr/connectsum.hpp"
#include "lensfr/framing.hpp"
#include "lensfr/sweep.hpp"

namespace lensfr {

enum class OutputFormat { Plain, Csv, Json };

inline constexpr std::string_view kTableCsvHeader = "p,q,q_inv,odd_rep_q,odd_rep_qinv,F,F_norm";

std::string render_invariant(const LensSpace& lens, bool normalized, OutputFormat fmt);
std::string render_table(const std::vector<TableRow>& rows, OutputFormat fmt);
std::string render_verification(const VerificationReport& report, int64_t max_p, OutputFormat fmt);
std::string render_search(const std::vector<ExoticPair>& pairs, int64_t max_p, int summands,
                          OutputFormat fmt);
std::string render_obstruction(const QuotientData& data, OutputFormat fmt);

/// Inverse of render_table(rows, OutputFormat::Csv). Throws
/// std::runtime_error on a wrong header or malformed row.
std::vector<TableRow> parse_table_csv(std::string_view text);

}  // namespace lensfr
