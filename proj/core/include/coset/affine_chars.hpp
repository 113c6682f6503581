#pragma once

// Specialized (z = 0) characters of L_{osp(1|2)}(l,0)-modules M_r and
// affine sl2 modules L(l,i), the parity branching
//   M_r^{even/odd} = (+)_{i even/odd} L(l,i) (x) V_{i+1,r}
// over the minimal model (2l+3, l+2), and the Virasoro weight helpers used
// for the singular-vector ladder.

#include <utility>
#include <vector>

#include "coset/minimal_model.hpp"
#include "coset/series.hpp"

namespace coset {

/// Module M_r of L_{osp(1|2)}(level, 0); r odd, 1 <= r <= 2 level + 1.
struct OspLabel {
  int level = 1;
  int r = 1;
  friend auto operator<=>(const OspLabel&, const OspLabel&) = default;
};

/// Module L(level, i) of affine sl2; 0 <= i <= level.
struct Sl2Label {
  int level = 1;
  int i = 0;
  friend auto operator<=>(const Sl2Label&, const Sl2Label&) = default;
};

enum class Parity { even, odd, both };

struct BranchTerm {
  Sl2Label sl2;
  KacLabel vir;  // in branching_model(level)
  Parity parity = Parity::even;
  Rational weight;
};

struct LowestSpace {
  Rational weight;
  int dimension = 0;
};

void validate(OspLabel label);
void validate(Sl2Label label);

/// The coset Virasoro model (2l+3, l+2) appearing in the branching.
MinimalModel branching_model(int level);

Rational osp_central_charge(int level);
Rational sl2_central_charge(int level);
/// i(i+2) / (4(l+2)).
Rational sl2_weight(Sl2Label label);

std::vector<OspLabel> osp_modules(int level);

/// Characters "to order N" are exact below leading + N + 1.
FracSeries osp_character(OspLabel label, int order);
FracSeries sl2_character(Sl2Label label, int order);

/// Sum over i of the requested parity of ch L(l,i) * ch V_{i+1,r}. Exact
/// below the leading exponent of the full module M_r plus order + 1.
FracSeries branch_character(int level, int r, Parity parity, int order);
std::vector<BranchTerm> branch_terms(int level, int r, Parity parity);

/// Conformal weight of L(l,i) (x) V_{i+1,r}.
Rational branch_weight(int level, int i, int r);
LowestSpace lowest_space(int level, int r);

/// h_{alpha,beta}(t) = (alpha^2-1) t/4 - (alpha beta - 1)/2 + (beta^2-1)/(4t).
Rational h_alpha_beta(int alpha, int beta, const Rational& t);

/// Weights of the two singular vectors generating the maximal submodule of
/// the Verma module with weight h^{r,s}, evaluated at t = p/q.
std::pair<Rational, Rational> singular_weights(const MinimalModel& m, KacLabel label);

}  // namespace coset
