#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tracecodes/linalg.hpp"
#include "tracecodes/verify.hpp"

namespace tracecodes {

/// Report as JSON. Timings are left out so identical inputs give identical
/// documents regardless of worker count.
nlohmann::json to_json(const VerificationReport& report);

/// Predicted and empirical distributions side by side, plus the bound,
/// dual-distance and minimality verdicts.
void write_text(std::ostream& os, const VerificationReport& report);

std::string sweep_csv_header();
/// One sweep row: p, m, variant, regime, N, K, d, match, optimal, dual, runtime_ms.
std::string sweep_csv_row(const VerificationReport& report);

/// Generator matrix as CSV: decimal residues, comma-separated, one row per line.
void write_matrix_csv(std::ostream& os, const Matrix& g);

/// gmatrix_p{p}_m{m}_{variant}.csv
std::string matrix_file_name(std::uint32_t p, std::uint32_t m, Variant variant);

}  // namespace tracecodes
