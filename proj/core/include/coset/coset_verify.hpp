#pragma once

// Coefficient-level verification of the decomposition
//   L_{osp(1|2)}(1,0)^{(x)2} = L(2,0) (x) (V_{1,1} + V_{6,1})
//                            + M_3 (x) (V_{3,1} + V_{4,1})
//                            + M_5 (x) (V_{2,1} + V_{5,1})
// with V_{r,s} modules of the (10,7) minimal model, its even/odd
// refinement, and the singular-vector weight bookkeeping.
//
// Columns are indexed by k, the coefficient of q^{-1/30 + k}.

#include <optional>
#include <string>
#include <vector>

#include "coset/affine_chars.hpp"
#include "coset/minimal_model.hpp"
#include "coset/series.hpp"

namespace coset {

/// Coset Virasoro model of the decomposition, c = 8/35.
MinimalModel coset_model();
/// -1/30, the leading exponent shared by all rows.
Rational decomposition_lead();

struct ReportRow {
  std::string label;
  std::vector<Rational> coeffs;
};

struct CoefficientCheck {
  std::string what;
  Rational exponent;
  Rational lhs;
  Rational rhs;
  bool match = false;
};

struct VerificationReport {
  std::string check;
  int order = 0;
  std::vector<ReportRow> rows;
  std::vector<CoefficientCheck> comparisons;
  std::vector<std::string> notes;
  bool pass = false;

  const CoefficientCheck* first_mismatch() const;
};

/// One summand of the decomposition: affine module times coset module.
struct Summand {
  OspLabel affine;
  KacLabel coset;
  std::string label() const;
};

/// The six summands in table order.
const std::vector<Summand>& decomposition_summands();

/// Adds `delta` to one summand's coefficient at a column before comparing.
struct Perturbation {
  std::size_t summand = 0;
  int column = 0;
  long delta = 1;
};

VerificationReport verify_central_charge();
VerificationReport verify_decomposition(int order,
                                        std::optional<Perturbation> perturb = std::nullopt);

/// Six summand rows, the target row ch[L(1,0)]^2, then the column sums of
/// the summands; columns 0..order.
struct Table2 {
  int order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Integer>> rows;

  static constexpr std::size_t target_row = 6;
  static constexpr std::size_t sum_row = 7;
};

Table2 table2_report(int order);

/// Expansions of the even/odd parts to q^10; order must be <= 10.
VerificationReport verify_even_refinement(int order);

struct LadderEntry {
  std::string name;
  KacLabel label;
  OspLabel partner;
  std::pair<Rational, Rational> candidates;
  Rational level;    // first candidate minus h^{r,s}
  int column = 0;    // total weight of partner (x) first candidate
  bool in_range = false;
  Integer row_coeff;
  Integer target_coeff;
  Integer column_sum;
  int extra_if_reducible = 0;  // lowest-space dimension of the partner
  bool consistent = false;
};

/// Y^1..Y^5 for labels (2,1),(3,1),(4,1),(5,1),(6,1), then the vacuum.
std::vector<LadderEntry> singular_ladder(int order = 20);
VerificationReport singular_ladder_report(int order = 20);

}  // namespace coset
