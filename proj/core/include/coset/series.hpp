#pragma once

// Truncated formal series in q^{1/D} with exact rational coefficients.
//
// A FracSeries stores a dense run of coefficients starting at the scaled
// exponent `lowest` (the term at position k multiplies q^{(lowest + k)/D}).
// The truncation bound `order` is an absolute scaled exponent: every
// coefficient strictly below order/D is known exactly, nothing at or above it
// is. Stored positions past the end of `coeffs` but below `order` are zero.
// A series without a bound is exact (a Laurent polynomial in q^{1/D}).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coset {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a coefficient at or beyond the truncation bound is requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class Sign { plus, minus };

class FracSeries {
 public:
  /// The exact zero series.
  FracSeries() = default;

  /// Builds a series from raw parts. `order`, when present, is a scaled
  /// exponent and must satisfy lowest + coeffs.size() <= order.
  FracSeries(std::int64_t denominator, std::int64_t lowest,
             std::vector<Rational> coeffs,
             std::optional<std::int64_t> order);

  static FracSeries zero() { return {}; }
  static FracSeries one();

  std::int64_t denominator() const { return den_; }
  std::int64_t lowest() const { return lowest_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Scaled truncation bound; empty for exact series.
  std::optional<std::int64_t> order() const { return order_; }
  bool is_exact() const { return !order_.has_value(); }

  /// Truncation bound as an absolute exponent (empty when exact).
  std::optional<Rational> bound() const;

  /// True when every known coefficient is zero.
  bool is_zero() const { return coeffs_.empty(); }

  /// Exponent and coefficient of the first nonzero term.
  std::optional<Rational> leading_exponent() const;
  Rational leading_coefficient() const;

  /// Exact coefficient of q^e. Exponents that are not multiples of 1/D give
  /// zero; exponents at or past the truncation bound throw TruncationError.
  Rational coeff(const Rational& e) const;

  /// Coefficients of q^{start + k} for k = 0 .. count-1.
  std::vector<Rational> coefficients_from(const Rational& start,
                                          std::size_t count) const;

  /// Same series expressed over a denominator that is a multiple of D.
  FracSeries rescaled(std::int64_t new_denominator) const;

  /// Drops everything at or above the absolute exponent `bound`.
  FracSeries truncated(const Rational& bound) const;

  /// Exact multiplication by q^e.
  FracSeries shifted(const Rational& e) const;

  FracSeries operator-() const;
  FracSeries& operator+=(const FracSeries& rhs);
  FracSeries& operator-=(const FracSeries& rhs);
  FracSeries& operator*=(const FracSeries& rhs);
  FracSeries& operator*=(const Rational& c);

  /// Coefficientwise agreement below the common truncation bound, after
  /// rescaling both sides to lcm(D, D').
  friend bool operator==(const FracSeries& a, const FracSeries& b);

 private:
  void normalize();
  std::int64_t end() const {
    return lowest_ + static_cast<std::int64_t>(coeffs_.size());
  }

  std::int64_t den_ = 1;
  std::int64_t lowest_ = 0;
  std::vector<Rational> coeffs_;
  std::optional<std::int64_t> order_;
};

FracSeries operator+(FracSeries a, const FracSeries& b);
FracSeries operator-(FracSeries a, const FracSeries& b);
FracSeries operator*(const FracSeries& a, const FracSeries& b);
FracSeries operator*(FracSeries a, const Rational& c);
FracSeries operator*(const Rational& c, FracSeries a);

FracSeries add(const FracSeries& a, const FracSeries& b);
FracSeries mul(const FracSeries& a, const FracSeries& b);

/// c * q^{num/den}, known up to (num + order_terms)/den. A zero coefficient
/// yields the exact zero series.
FracSeries monomial(const Rational& c, std::int64_t num, std::int64_t den,
                    std::int64_t order_terms);

/// prod_{n=1}^{N} (1 + q^n)^e (Sign::plus) or (1 - q^n)^e (Sign::minus),
/// exact through q^N.
FracSeries euler_product(Sign sign, int exponent, int n_terms);

/// sum_{m in Z} q^{a (m + b/(2a))^2}, every term with exponent below `bound`.
FracSeries theta_null(std::int64_t a, std::int64_t b, const Rational& bound);

/// sum_{m in Z} (A m + b) q^{c (m + b/A)^2}, every term below `bound`.
FracSeries weighted_theta(std::int64_t A, std::int64_t b, const Rational& c,
                          const Rational& bound);

/// Coefficient of q^{num/den}.
Rational coeff_at(const FracSeries& s, std::int64_t num, std::int64_t den);

/// num/den in canonical form (GMP arithmetic requires canonical operands).
inline Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace coset
