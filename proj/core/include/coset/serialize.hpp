#pragma once

// JSON and CSV renderings. Rationals are always written as "num/den" (or
// "num" when integral), never as decimals; output is deterministic.

#include <string>
#include <vector>

#include "coset/affine_chars.hpp"
#include "coset/coset_verify.hpp"
#include "coset/ext_fusion.hpp"
#include "coset/minimal_model.hpp"
#include "coset/series.hpp"

namespace coset {

/// {"denominator", "lowest", "coeffs": ["p/q", ...], "order": n|null}.
/// Round-trips exactly through series_from_json.
std::string series_to_json(const FracSeries& s);
FracSeries series_from_json(const std::string& text);
/// "exponent,coefficient" lines for every stored term.
std::string series_to_csv(const FracSeries& s);

std::string kac_table_json(const MinimalModel& m);
std::string kac_table_csv(const MinimalModel& m);

/// Sorted [{"r","s","mult"}].
std::string module_sum_json(const ModuleSum& sum);
std::string module_sum_json(const ExtModuleSum& sum);

std::string branch_terms_json(int level, int r, const std::vector<BranchTerm>& terms);
std::string lowest_spaces_json(int level);

std::string report_json(const VerificationReport& report);
std::string reports_json(const std::vector<VerificationReport>& reports);

std::string table2_json(const Table2& table);
std::string table2_csv(const Table2& table);

std::string ladder_json(const std::vector<LadderEntry>& ladder);

std::string census_json(const ExtCensus& census, const std::vector<ExtIrreducible>& listed);

/// [{"a": [r,s], "b": [r,s], "result": [...]}] over the 27 x 27 listed labels.
std::string ext_fusion_table_json();
/// The same for the canonical labels of a minimal model.
std::string vir_fusion_table_json(const MinimalModel& m);

}  // namespace coset
