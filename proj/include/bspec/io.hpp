#pragma once

// Text and JSON formats.
//
//   Spectrum JSON:  {"n": int, "coefficients": [{"subset": [1-based ints], "value": float}]}
//   Truth table:    header line "n=<int>", then 2^n whitespace-separated
//                   floats in row-index order.
//   Report JSON:    {"name","lhs","rhs","ratio","pass","tol","witness","params"}

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "bspec/cube.hpp"
#include "bspec/report.hpp"

namespace bspec::io {

/// Fixed 17-significant-digit rendering used by all text outputs.
std::string format_double(double v);

nlohmann::json spectrum_to_json(const FourierSpectrum& s);
FourierSpectrum spectrum_from_json(const nlohmann::json& j);

std::vector<int> mask_to_subset(Mask mask);
Mask subset_to_mask(std::span<const int> subset, int n);

void write_truth_table(std::ostream& out, const BooleanFunction& f);
BooleanFunction read_truth_table(std::istream& in);

nlohmann::json report_to_json(const InequalityReport& r);
InequalityReport report_from_json(const nlohmann::json& j);

/// CSV with params inlined as columns (union of keys, sorted).
void write_reports_csv(std::ostream& out, std::span<const InequalityReport> reports);

}  // namespace bspec::io
