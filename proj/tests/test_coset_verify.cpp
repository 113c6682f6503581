#include <gtest/gtest.h>

#include "coset/coset_verify.hpp"
#include "reference_data.hpp"

using namespace coset;

TEST(CosetVerify, CentralCharge) {
  const VerificationReport r = verify_central_charge();
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.comparisons.at(0).lhs, frac(4, 5));
  EXPECT_EQ(r.comparisons.at(0).rhs, frac(4, 5));
  EXPECT_EQ(central_charge(coset_model()), frac(8, 35));
}

TEST(CosetVerify, CoefficientTableRowsMatchReference) {
  const Table2 t = table2_report(19);
  ASSERT_EQ(t.rows.size(), 8u);
  for (std::size_t i = 0; i < refdata::table2.size(); ++i) {
    ASSERT_EQ(t.rows[i].size(), 20u);
    for (std::size_t k = 0; k < 20; ++k) EXPECT_EQ(t.rows[i][k], refdata::table2[i][k]) << t.labels[i] << " k=" << k;
  }
  EXPECT_EQ(t.rows[Table2::target_row], t.rows[Table2::sum_row]);
}

TEST(CosetVerify, DecompositionHoldsAtOrder30) {
  const VerificationReport r = verify_decomposition(30);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.comparisons.size(), 31u);
  EXPECT_EQ(r.first_mismatch(), nullptr);
  EXPECT_EQ(r.rows.at(0).coeffs.at(19), 6083848);
}

TEST(CosetVerify, PerturbationIsCaughtAtTheRightColumn) {
  for (std::size_t summand = 0; summand < 6; ++summand) {
    for (int column : {0, 7, 15}) {
      const VerificationReport r = verify_decomposition(15, Perturbation{summand, column, 1});
      ASSERT_FALSE(r.pass);
      const CoefficientCheck* bad = r.first_mismatch();
      ASSERT_NE(bad, nullptr);
      EXPECT_EQ(bad->exponent, decomposition_lead() + column);
      EXPECT_EQ(bad->rhs - bad->lhs, 1);
    }
  }
  EXPECT_THROW(verify_decomposition(5, Perturbation{6, 0, 1}), std::out_of_range);
  EXPECT_THROW(verify_decomposition(-1), std::invalid_argument);
}

TEST(CosetVerify, EvenRefinement) {
  const VerificationReport r = verify_even_refinement(10);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.rows.size(), 14u);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t k = 0; k <= 10; ++k) {
      EXPECT_EQ(r.rows[i].coeffs[k], refdata::even_rows[i][k]) << r.rows[i].label;
      EXPECT_EQ(r.rows[7 + i].coeffs[k], refdata::odd_rows[i][k]) << r.rows[7 + i].label;
    }
  }
  EXPECT_THROW(verify_even_refinement(11), std::invalid_argument);
}

TEST(CosetVerify, SingularLadder) {
  const auto ladder = singular_ladder(20);
  ASSERT_EQ(ladder.size(), 6u);
  const std::vector<int> columns = {3, 5, 8, 12, 16, 54};
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    EXPECT_EQ(ladder[i].column, columns[i]) << ladder[i].name;
    EXPECT_EQ(ladder[i].in_range, columns[i] <= 20);
    if (ladder[i].in_range) EXPECT_TRUE(ladder[i].consistent) << ladder[i].name;
  }
  EXPECT_EQ(ladder[0].candidates.first, frac(18, 7));
  EXPECT_EQ(ladder[4].candidates, std::make_pair(Rational(16), Rational(19)));
  EXPECT_EQ(ladder[5].candidates.second, 54);
  EXPECT_EQ(ladder[1].level, 3);  // 34/7 - 13/7
  EXPECT_TRUE(singular_ladder_report(20).pass);
}

TEST(CosetVerify, SummandOrder) {
  const auto& s = decomposition_summands();
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[0].label(), "ch[L(2,0)] ch[V(1,1)]");
  EXPECT_EQ(s[5].label(), "ch[M_5] ch[V(5,1)]");
}
