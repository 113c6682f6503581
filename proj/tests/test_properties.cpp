#include <gtest/gtest.h>

#include <random>

#include "coset/ext_fusion.hpp"
#include "coset/minimal_model.hpp"
#include "coset/series.hpp"
#include "oracles/oracles.hpp"

using namespace coset;

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() {
    if (uniform(0, 3) == 0) return 0;
    return frac(uniform(-9, 9), uniform(1, 6));
  }

  // Random series over a small denominator; about a quarter are exact.
  FracSeries series() {
    static constexpr std::int64_t dens[] = {1, 2, 3, 4, 6, 12};
    const std::int64_t den = dens[uniform(0, 5)];
    const std::int64_t lowest = uniform(-12, 12);
    std::vector<Rational> coeffs(static_cast<std::size_t>(uniform(0, 8)));
    for (auto& c : coeffs) c = rational();
    std::optional<std::int64_t> order;
    if (uniform(0, 3) != 0) order = lowest + static_cast<std::int64_t>(coeffs.size()) + uniform(0, 10);
    return FracSeries(den, lowest, std::move(coeffs), order);
  }

 private:
  std::mt19937_64 rng_;
};

constexpr int kCases = 300;

}  // namespace

TEST(Properties, MultiplicationCommutes) {
  Gen g(1);
  for (int i = 0; i < kCases; ++i) {
    const FracSeries a = g.series();
    const FracSeries b = g.series();
    const FracSeries ab = a * b;
    const FracSeries ba = b * a;
    EXPECT_TRUE(ab == ba);
    EXPECT_EQ(ab.order(), ba.order());
    EXPECT_EQ(ab.denominator(), ba.denominator());
  }
}

TEST(Properties, MultiplicationAssociates) {
  Gen g(2);
  for (int i = 0; i < kCases; ++i) {
    const FracSeries a = g.series();
    const FracSeries b = g.series();
    const FracSeries c = g.series();
    const FracSeries left = (a * b) * c;
    const FracSeries right = a * (b * c);
    EXPECT_TRUE(left == right);
  }
}

TEST(Properties, MultiplicationDistributes) {
  Gen g(3);
  for (int i = 0; i < kCases; ++i) {
    const FracSeries a = g.series();
    const FracSeries b = g.series();
    const FracSeries c = g.series();
    EXPECT_TRUE(a * (b + c) == a * b + a * c);
  }
}

TEST(Properties, ProductTermsAgreeWithSchoolbookSum) {
  Gen g(4);
  for (int i = 0; i < kCases; ++i) {
    const FracSeries a = g.series();
    const FracSeries b = g.series();
    const FracSeries ab = a * b;
    std::map<Rational, Rational> want;
    for (std::size_t x = 0; x < a.coeffs().size(); ++x) {
      for (std::size_t y = 0; y < b.coeffs().size(); ++y) {
        const Rational e = frac(a.lowest() + static_cast<long>(x), a.denominator()) +
                           frac(b.lowest() + static_cast<long>(y), b.denominator());
        want[e] += a.coeffs()[x] * b.coeffs()[y];
      }
    }
    for (const auto& [e, c] : want) {
      if (ab.bound() && e >= *ab.bound()) continue;
      EXPECT_EQ(ab.coeff(e), c);
    }
  }
}

TEST(Properties, RescaleRoundTrip) {
  Gen g(5);
  for (int i = 0; i < kCases; ++i) {
    const FracSeries a = g.series();
    const std::int64_t k = g.uniform(1, 5);
    const FracSeries b = a.rescaled(a.denominator() * k);
    EXPECT_TRUE(a == b);
    EXPECT_EQ(b.bound(), a.bound());
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
      const Rational e = frac(a.lowest() + static_cast<long>(j), a.denominator());
      EXPECT_EQ(b.coeff(e), a.coeffs()[j]);
    }
  }
}

TEST(Properties, AdditionIsInverseOfSubtraction) {
  Gen g(6);
  for (int i = 0; i < kCases; ++i) {
    const FracSeries a = g.series();
    const FracSeries b = g.series();
    EXPECT_TRUE((a + b) - b == a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Properties, ThetaWindowDoubling) {
  // Doubling the brute-force window never changes the terms below the bound.
  Gen g(7);
  for (int i = 0; i < 60; ++i) {
    const long a = g.uniform(1, 40);
    const long b = g.uniform(-100, 100);
    const Rational bound = Rational(g.uniform(1, 30));
    const FracSeries t = theta_null(a, b, bound);
    const auto small = oracle::theta(2 * a, b, Rational(a), bound, false, 200);
    const auto large = oracle::theta(2 * a, b, Rational(a), bound, false, 400);
    ASSERT_EQ(small, large);
    for (const auto& [e, c] : large) EXPECT_EQ(t.coeff(e), Rational(c));
    std::size_t nonzero = 0;
    for (const auto& c : t.coeffs()) nonzero += c != 0;
    EXPECT_EQ(nonzero, large.size());
  }
}

TEST(Properties, KacSymmetry) {
  Gen g(8);
  const std::vector<std::pair<int, int>> models = {{4, 3}, {5, 3}, {7, 4}, {10, 7}, {11, 6}, {13, 8}};
  for (int i = 0; i < kCases; ++i) {
    const auto [p, q] = models[static_cast<std::size_t>(g.uniform(0, 5))];
    const MinimalModel m(p, q);
    const KacLabel l{g.uniform(1, q - 1), g.uniform(1, p - 1)};
    EXPECT_EQ(conformal_weight(m, l), conformal_weight(m, m.partner(l)));
    EXPECT_EQ(m.canonical(l), m.canonical(m.partner(l)));
  }
}

TEST(Properties, FusionSymmetricAndAssociative) {
  Gen g(9);
  const std::vector<std::pair<int, int>> models = {{4, 3}, {5, 4}, {7, 4}, {10, 7}, {11, 6}};
  for (int i = 0; i < 120; ++i) {
    const auto [p, q] = models[static_cast<std::size_t>(g.uniform(0, 4))];
    const MinimalModel m(p, q);
    const auto labels = m.labels();
    auto pick = [&] { return labels[static_cast<std::size_t>(g.uniform(0, static_cast<int>(labels.size()) - 1))]; };
    const KacLabel a = pick();
    const KacLabel b = pick();
    const KacLabel c = pick();
    EXPECT_EQ(fuse(m, a, b), fuse(m, b, a));
    // N_{ab}^{c} is symmetric in all three slots (every module is self-dual).
    EXPECT_EQ(fusion_dim(m, a, b, c), fusion_dim(m, a, c, b));
    EXPECT_EQ(fusion_dim(m, a, b, c), fusion_dim(m, c, b, a));
    ModuleSum left;
    for (const auto& [x, n] : fuse(m, a, b)) {
      for (const auto& [y, k] : fuse(m, x, c)) left[y] += n * k;
    }
    ModuleSum right;
    for (const auto& [x, n] : fuse(m, b, c)) {
      for (const auto& [y, k] : fuse(m, a, x)) right[y] += n * k;
    }
    EXPECT_EQ(left, right);
  }
}

TEST(Properties, ExtFusionIndependentOfConstituents) {
  Gen g(10);
  for (int i = 0; i < kCases; ++i) {
    const ExtLabel a = ExtLabel::from(g.uniform(1, 6), g.uniform(1, 9));
    const ExtLabel b = ExtLabel::from(g.uniform(1, 6), g.uniform(1, 9));
    const auto i1 = static_cast<std::size_t>(g.uniform(0, 1));
    const auto i2 = static_cast<std::size_t>(g.uniform(0, 1));
    EXPECT_EQ(ext_fuse(a, b, i1, i2), ext_fuse(b, a));
  }
}

TEST(Properties, EulerProductsMultiplyExponentsAdd) {
  Gen g(11);
  for (int i = 0; i < 40; ++i) {
    const int e1 = g.uniform(-4, 4);
    const int e2 = g.uniform(-4, 4);
    const int n = g.uniform(1, 30);
    const Sign s = g.uniform(0, 1) ? Sign::plus : Sign::minus;
    EXPECT_TRUE(euler_product(s, e1, n) * euler_product(s, e2, n) == euler_product(s, e1 + e2, n));
  }
}
