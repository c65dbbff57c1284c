#pragma once

// Fixed-schema JSON and TSV rendering for the CLI. Floats carry 17
// significant digits (round-trip safe), exact integers become decimal
// strings, field order is fixed, so identical inputs render to identical
// bytes.

#include <string>
#include <vector>

#include "coprime/counting.hpp"
#include "coprime/density.hpp"
#include "coprime/polynomial.hpp"
#include "coprime/verify.hpp"

namespace coprime {

std::string format_double17(double v);

std::string render_poly_json(const GraphPolynomial& p);
std::string render_density_json(const DensityEstimate& est);
std::string render_count_json(const CountResult& result);
// Method "both": the two counters were run and compared.
std::string render_count_both_json(const CountResult& result, bool methods_agree);
// path is "enumerate", "multiplicative" or "both"; agree applies to "both".
std::string render_f_json(int128 value, const std::string& path, bool agree);
std::string render_table_tsv(const std::vector<ErrorDiagnostic>& rows);
std::string render_table_json(const std::vector<ErrorDiagnostic>& rows);
std::string render_verify_json(const std::vector<SuiteResult>& suites);

} // namespace coprime
