#include <gtest/gtest.h>

#include "coset/affine_chars.hpp"
#include "oracles/oracles.hpp"

using namespace coset;

namespace {

// q^{lead} * theta(x) / prod (1 - q^n), with theta given as brute-force
// exponent -> coefficient terms; returns coefficients at lead + theta_min + n.
std::vector<oracle::Integer> over_eta(const std::map<Rational, oracle::Integer>& theta, const Rational& base,
                                      int n) {
  const auto p = oracle::partitions(n);
  std::vector<oracle::Integer> out(n + 1);
  for (const auto& [e, c] : theta) {
    const Rational shift = e - base;
    if (shift.get_den() != 1) continue;
    const long s = shift.get_num().get_si();
    for (long k = 0; s + k <= n; ++k) out[s + k] += c * p[k];
  }
  return out;
}

}  // namespace

TEST(AffineChars, CentralCharges) {
  EXPECT_EQ(osp_central_charge(1), frac(2, 5));
  EXPECT_EQ(osp_central_charge(2), frac(4, 7));
  EXPECT_EQ(sl2_central_charge(1), Rational(1));
  EXPECT_EQ(sl2_central_charge(2), frac(3, 2));
  EXPECT_THROW(osp_central_charge(0), std::invalid_argument);
}

TEST(AffineChars, LabelValidation) {
  EXPECT_THROW(validate(OspLabel{2, 2}), std::out_of_range);
  EXPECT_THROW(validate(OspLabel{2, 7}), std::out_of_range);
  EXPECT_THROW(validate(Sl2Label{2, 3}), std::out_of_range);
  EXPECT_THROW(validate(OspLabel{0, 1}), std::invalid_argument);
  EXPECT_EQ(osp_modules(2).size(), 3u);
  EXPECT_EQ(branching_model(2), MinimalModel(7, 4));
}

TEST(AffineChars, OspLeadingTerms) {
  const FracSeries m3 = osp_character({2, 3}, 5);
  EXPECT_EQ(*m3.leading_exponent(), frac(5, 42));
  EXPECT_EQ(m3.leading_coefficient(), 3);
  const FracSeries m5 = osp_character({2, 5}, 5);
  EXPECT_EQ(*m5.leading_exponent(), frac(17, 42));
  EXPECT_EQ(m5.leading_coefficient(), 5);
  const FracSeries l1 = osp_character({1, 1}, 5);
  EXPECT_EQ(*l1.leading_exponent(), frac(-1, 60));
  EXPECT_EQ(l1.leading_coefficient(), 1);
  EXPECT_EQ(*l1.bound(), frac(-1, 60) + 6);
}

TEST(AffineChars, Sl2LevelOneIsLatticeOverEta) {
  // L(1,i) = sum_m q^{(m + i/2)^2} / eta.
  const int order = 25;
  for (int i : {0, 1}) {
    const FracSeries chi = sl2_character({1, i}, order);
    const Rational base = frac(i * i, 4);
    const auto theta = oracle::theta(2, i, Rational(1), base + order + 1, false);
    const auto want = over_eta(theta, base, order);
    const Rational lead = base - frac(1, 24);
    EXPECT_EQ(*chi.leading_exponent(), lead);
    for (int n = 0; n <= order; ++n) EXPECT_EQ(chi.coeff(lead + n), Rational(want[n])) << "i=" << i << " n=" << n;
  }
}

TEST(AffineChars, Sl2LeadingTermIsRepresentationDimension) {
  for (int level = 1; level <= 4; ++level) {
    for (int i = 0; i <= level; ++i) {
      const FracSeries chi = sl2_character({level, i}, 3);
      EXPECT_EQ(*chi.leading_exponent(), sl2_weight({level, i}) - sl2_central_charge(level) / 24);
      EXPECT_EQ(chi.leading_coefficient(), i + 1);
    }
  }
}

TEST(AffineChars, LowestSpaces) {
  EXPECT_EQ(lowest_space(2, 1).weight, 0);
  EXPECT_EQ(lowest_space(2, 1).dimension, 1);
  EXPECT_EQ(lowest_space(2, 3).weight, frac(1, 7));
  EXPECT_EQ(lowest_space(2, 3).dimension, 3);
  EXPECT_EQ(lowest_space(2, 5).weight, frac(3, 7));
  EXPECT_EQ(lowest_space(2, 5).dimension, 5);
}

TEST(AffineChars, BranchTermsCarryTheirWeights) {
  for (int level = 1; level <= 3; ++level) {
    const MinimalModel vir = branching_model(level);
    for (const OspLabel m : osp_modules(level)) {
      const auto all = branch_terms(level, m.r, Parity::both);
      EXPECT_EQ(all.size(), static_cast<std::size_t>(level + 1));
      EXPECT_EQ(branch_terms(level, m.r, Parity::even).size() + branch_terms(level, m.r, Parity::odd).size(),
                all.size());
      for (const BranchTerm& t : all) {
        EXPECT_EQ(t.weight, sl2_weight(t.sl2) + conformal_weight(vir, t.vir));
        EXPECT_EQ(t.parity, t.sl2.i % 2 == 0 ? Parity::even : Parity::odd);
      }
    }
  }
}

TEST(AffineChars, BranchingCompleteness) {
  const int order = 20;
  for (int level = 1; level <= 3; ++level) {
    for (const OspLabel m : osp_modules(level)) {
      const FracSeries total = osp_character(m, order);
      const FracSeries both = branch_character(level, m.r, Parity::both, order);
      const FracSeries split = branch_character(level, m.r, Parity::even, order) +
                               branch_character(level, m.r, Parity::odd, order);
      EXPECT_EQ(*total.bound(), *both.bound());
      EXPECT_TRUE(total == both) << "level " << level << " r " << m.r;
      EXPECT_TRUE(total == split) << "level " << level << " r " << m.r;
    }
  }
}

TEST(AffineChars, HAlphaBetaReproducesKacWeights) {
  for (auto [p, q] : {std::pair{10, 7}, {4, 3}, {9, 4}}) {
    const MinimalModel m(p, q);
    for (int r = 1; r < q; ++r) {
      for (int s = 1; s < p; ++s) {
        EXPECT_EQ(h_alpha_beta(r, s, frac(p, q)), conformal_weight(m, {r, s}));
      }
    }
  }
  EXPECT_THROW(h_alpha_beta(1, 1, Rational(0)), std::invalid_argument);
}

TEST(AffineChars, SingularWeightsSitAtKacLevels) {
  const MinimalModel m(10, 7);
  for (int r = 1; r < 7; ++r) {
    for (int s = 1; s < 10; ++s) {
      const Rational h = conformal_weight(m, {r, s});
      const auto [a, b] = singular_weights(m, {r, s});
      EXPECT_EQ(a, h + r * s);
      EXPECT_EQ(b, h + (7 - r) * (10 - s));
    }
  }
}
