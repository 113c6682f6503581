#include "coset/series.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace coset {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("exponent index overflows int64");
  return z.get_si();
}

Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

// Largest K >= 0 with K^2 < x, or -1 when x <= 0.
std::int64_t max_root_below(const Rational& x) {
  Integer c = ceil_of(x) - 1;  // K^2 < x  <=>  K^2 <= ceil(x) - 1
  if (c < 0) return -1;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
  return to_int64(root);
}

// Scaled bound for exponents strictly below `bound` at resolution `den`.
std::int64_t scaled_bound(const Rational& bound, std::int64_t den) {
  return to_int64(ceil_of(bound * Rational(den)));
}

struct Term {
  std::int64_t index;
  Integer value;
};

// Nonzero terms at resolution `scale * den`, with integer values obtained by
// clearing the common denominator (returned separately).
std::vector<Term> integer_terms(const FracSeries& s, std::int64_t scale,
                                Integer& common_den) {
  common_den = 1;
  for (const auto& c : s.coeffs()) {
    if (c != 0) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Term> terms;
  terms.reserve(s.coeffs().size());
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
    const auto& c = s.coeffs()[k];
    if (c == 0) continue;
    Integer v = c.get_num() * (common_den / c.get_den());
    terms.push_back({(s.lowest() + static_cast<std::int64_t>(k)) * scale, std::move(v)});
  }
  return terms;
}

// Builds a normalized series from sparse (index, value) pairs.
FracSeries from_terms(std::int64_t den, std::vector<std::pair<std::int64_t, Rational>> terms,
                      std::optional<std::int64_t> order) {
  if (terms.empty()) {
    return FracSeries(den, order.value_or(0), {}, order);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  const std::int64_t lo = terms.front().first;
  const std::int64_t hi = terms.back().first;
  std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (auto& [idx, v] : terms) coeffs[static_cast<std::size_t>(idx - lo)] += v;
  return FracSeries(den, lo, std::move(coeffs), order);
}

}  // namespace

FracSeries::FracSeries(std::int64_t denominator, std::int64_t lowest,
                       std::vector<Rational> coeffs,
                       std::optional<std::int64_t> order)
    : den_(denominator), lowest_(lowest), coeffs_(std::move(coeffs)), order_(order) {
  if (den_ < 1) throw std::invalid_argument("series denominator must be >= 1");
  if (order_ && end() > *order_) {
    throw std::invalid_argument("stored coefficients extend past the truncation bound");
  }
  normalize();
}

FracSeries FracSeries::one() { return FracSeries(1, 0, {Rational(1)}, std::nullopt); }

void FracSeries::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = order_.value_or(0);
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  lowest_ += static_cast<std::int64_t>(first);
}

std::optional<Rational> FracSeries::bound() const {
  if (!order_) return std::nullopt;
  Rational b(*order_, den_);
  b.canonicalize();
  return b;
}

std::optional<Rational> FracSeries::leading_exponent() const {
  if (coeffs_.empty()) return std::nullopt;
  Rational e(lowest_, den_);
  e.canonicalize();
  return e;
}

Rational FracSeries::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

Rational FracSeries::coeff(const Rational& e) const {
  if (order_ && e >= *bound()) {
    throw TruncationError("exponent " + to_string(e) + " is at or beyond the truncation bound " +
                          to_string(*bound()));
  }
  Rational scaled = e * Rational(den_);
  if (scaled.get_den() != 1) return 0;
  const std::int64_t n = to_int64(scaled.get_num());
  if (n < lowest_ || n >= end()) return 0;
  return coeffs_[static_cast<std::size_t>(n - lowest_)];
}

std::vector<Rational> FracSeries::coefficients_from(const Rational& start,
                                                    std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(coeff(start + Rational(static_cast<long>(k))));
  }
  return out;
}

FracSeries FracSeries::rescaled(std::int64_t new_denominator) const {
  if (new_denominator < 1 || new_denominator % den_ != 0) {
    throw std::invalid_argument("rescale target must be a positive multiple of the denominator");
  }
  const std::int64_t k = new_denominator / den_;
  if (k == 1) return *this;
  FracSeries out;
  out.den_ = new_denominator;
  out.lowest_ = lowest_ * k;
  out.order_ = order_ ? std::optional<std::int64_t>(*order_ * k) : std::nullopt;
  if (!coeffs_.empty()) {
    out.coeffs_.resize((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
    }
  }
  return out;
}

FracSeries FracSeries::truncated(const Rational& bound) const {
  const std::int64_t cut = scaled_bound(bound, den_);
  const std::int64_t new_order = order_ ? std::min(*order_, cut) : cut;
  std::vector<Rational> kept;
  for (std::int64_t n = lowest_; n < std::min(end(), new_order); ++n) {
    kept.push_back(coeffs_[static_cast<std::size_t>(n - lowest_)]);
  }
  const std::int64_t low = std::min(lowest_, new_order);
  return FracSeries(den_, low, std::move(kept), new_order);
}

FracSeries FracSeries::shifted(const Rational& e) const {
  const std::int64_t e_den = to_int64(e.get_den());
  const std::int64_t d = std::lcm(den_, e_den);
  FracSeries out = rescaled(d);
  const std::int64_t delta = to_int64(e.get_num()) * (d / e_den);
  out.lowest_ += delta;
  if (out.order_) *out.order_ += delta;
  return out;
}

FracSeries FracSeries::operator-() const {
  FracSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FracSeries& FracSeries::operator+=(const FracSeries& rhs) {
  if (rhs.is_exact() && rhs.is_zero()) return *this;
  if (is_exact() && is_zero()) return *this = rhs;
  const std::int64_t d = std::lcm(den_, rhs.den_);
  FracSeries a = rescaled(d);
  FracSeries b = rhs.rescaled(d);
  std::optional<std::int64_t> order;
  if (a.order_ && b.order_) {
    order = std::min(*a.order_, *b.order_);
  } else {
    order = a.order_ ? a.order_ : b.order_;
  }
  std::int64_t lo = std::min(a.coeffs_.empty() ? b.lowest_ : a.lowest_,
                             b.coeffs_.empty() ? a.lowest_ : b.lowest_);
  std::int64_t hi = std::max(a.end(), b.end());
  if (order) {
    hi = std::min(hi, *order);
    lo = std::min(lo, *order);
  }
  std::vector<Rational> sum(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)));
  for (const FracSeries* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->coeffs_.size(); ++i) {
      const std::int64_t n = s->lowest_ + static_cast<std::int64_t>(i);
      if (n >= hi) break;
      sum[static_cast<std::size_t>(n - lo)] += s->coeffs_[i];
    }
  }
  return *this = FracSeries(d, lo, std::move(sum), order);
}

FracSeries& FracSeries::operator-=(const FracSeries& rhs) { return *this += -rhs; }

FracSeries& FracSeries::operator*=(const FracSeries& rhs) { return *this = mul(*this, rhs); }

FracSeries& FracSeries::operator*=(const Rational& c) {
  if (c == 0) {
    if (is_exact()) return *this = FracSeries();
    coeffs_.clear();
    lowest_ = *order_;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const FracSeries& a, const FracSeries& b) {
  const std::int64_t d = std::lcm(a.den_, b.den_);
  const FracSeries x = a.rescaled(d);
  const FracSeries y = b.rescaled(d);
  std::optional<std::int64_t> limit;
  if (x.order_ && y.order_) {
    limit = std::min(*x.order_, *y.order_);
  } else {
    limit = x.order_ ? x.order_ : y.order_;
  }
  auto at = [](const FracSeries& s, std::int64_t n) -> Rational {
    if (n < s.lowest_ || n >= s.end()) return 0;
    return s.coeffs_[static_cast<std::size_t>(n - s.lowest_)];
  };
  std::int64_t lo = std::min(x.coeffs_.empty() ? y.lowest_ : x.lowest_,
                             y.coeffs_.empty() ? x.lowest_ : y.lowest_);
  std::int64_t hi = std::max(x.end(), y.end());
  if (limit) hi = std::min(hi, *limit);
  for (std::int64_t n = lo; n < hi; ++n) {
    if (at(x, n) != at(y, n)) return false;
  }
  return true;
}

FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
FracSeries operator*(const FracSeries& a, const FracSeries& b) { return mul(a, b); }
FracSeries operator*(FracSeries a, const Rational& c) { return a *= c; }
FracSeries operator*(const Rational& c, FracSeries a) { return a *= c; }

FracSeries add(const FracSeries& a, const FracSeries& b) { return a + b; }

FracSeries mul(const FracSeries& a, const FracSeries& b) {
  if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero())) return {};

  const std::int64_t d = std::lcm(a.denominator(), b.denominator());
  const std::int64_t ka = d / a.denominator();
  const std::int64_t kb = d / b.denominator();
  // Valuation lower bounds: first nonzero term, or the bound itself for an
  // O(q^order) remainder.
  const std::int64_t va = a.lowest() * ka;
  const std::int64_t vb = b.lowest() * kb;

  std::optional<std::int64_t> order;
  if (a.order() && b.order()) {
    order = std::min(va + *b.order() * kb, vb + *a.order() * ka);
  } else if (a.order()) {
    order = vb + *a.order() * ka;
  } else if (b.order()) {
    order = va + *b.order() * kb;
  }
  if (a.is_zero() || b.is_zero()) {
    return FracSeries(d, *order, {}, order);
  }

  Integer den_a;
  Integer den_b;
  const std::vector<Term> ta = integer_terms(a, ka, den_a);
  const std::vector<Term> tb = integer_terms(b, kb, den_b);

  // Only nonzero terms enter the double loop, so theta sums and series with
  // a coarse exponent stride cost nnz(a) * nnz(b) rather than dense length.
  const std::int64_t start = ta.front().index + tb.front().index;
  const std::int64_t stop = order ? *order : ta.back().index + tb.back().index + 1;
  if (stop <= start) return FracSeries(d, stop, {}, order);

  std::vector<Integer> acc(static_cast<std::size_t>(stop - start));
  for (const Term& x : ta) {
    if (x.index + tb.front().index >= stop) break;
    for (const Term& y : tb) {
      const std::int64_t n = x.index + y.index;
      if (n >= stop) break;
      mpz_addmul(acc[static_cast<std::size_t>(n - start)].get_mpz_t(), x.value.get_mpz_t(),
                 y.value.get_mpz_t());
    }
  }

  const Integer scale = den_a * den_b;
  std::vector<Rational> coeffs(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] == 0) continue;
    coeffs[i] = Rational(acc[i], scale);
  }
  return FracSeries(d, start, std::move(coeffs), order);
}

FracSeries monomial(const Rational& c, std::int64_t num, std::int64_t den,
                    std::int64_t order_terms) {
  if (den < 1) throw std::invalid_argument("monomial denominator must be >= 1");
  if (order_terms < 1) throw std::invalid_argument("monomial needs order_terms >= 1");
  if (c == 0) return {};
  return FracSeries(den, num, {c}, num + order_terms);
}

FracSeries euler_product(Sign sign, int exponent, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("euler_product needs n_terms >= 1");
  const auto n_max = static_cast<std::size_t>(n_terms);
  std::vector<Integer> a(n_max + 1);
  a[0] = 1;
  const int s = sign == Sign::plus ? 1 : -1;
  const int reps = exponent < 0 ? -exponent : exponent;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (int rep = 0; rep < reps; ++rep) {
      if (exponent > 0) {
        // multiply by (1 + s q^n)
        for (std::size_t k = n_max; k >= n; --k) {
          if (s > 0) a[k] += a[k - n]; else a[k] -= a[k - n];
        }
      } else {
        // divide by (1 + s q^n)
        for (std::size_t k = n; k <= n_max; ++k) {
          if (s > 0) a[k] -= a[k - n]; else a[k] += a[k - n];
        }
      }
    }
  }
  std::vector<Rational> coeffs(a.begin(), a.end());
  return FracSeries(1, 0, std::move(coeffs), n_terms + 1);
}

FracSeries theta_null(std::int64_t a, std::int64_t b, const Rational& bound) {
  if (a < 1) throw std::invalid_argument("theta_null needs a >= 1");
  // Terms are q^{k^2/(4a)} with k = 2am + b.
  const std::int64_t den = 4 * a;
  const std::int64_t order = scaled_bound(bound, den);
  const std::int64_t kmax = max_root_below(Rational(den) * bound);
  std::vector<std::pair<std::int64_t, Rational>> terms;
  if (kmax >= 0) {
    const std::int64_t step = 2 * a;
    for (std::int64_t m = ceil_div(-kmax - b, step); m <= floor_div(kmax - b, step); ++m) {
      const std::int64_t k = step * m + b;
      terms.emplace_back(k * k, Rational(1));
    }
  }
  return from_terms(den, std::move(terms), order);
}

FracSeries weighted_theta(std::int64_t A, std::int64_t b, const Rational& c,
                          const Rational& bound) {
  if (A < 1) throw std::invalid_argument("weighted_theta needs A >= 1");
  if (c <= 0) throw std::invalid_argument("weighted_theta needs c > 0");
  // Terms are k q^{c k^2 / A^2} with k = A m + b.
  const Integer full_den = c.get_den() * A * A;
  Integer g;
  mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), full_den.get_mpz_t());
  const std::int64_t den = to_int64(full_den / g);
  const Integer num_factor = c.get_num() / g;
  const std::int64_t order = scaled_bound(bound, den);
  const std::int64_t kmax = max_root_below(bound * Rational(A * A) / c);
  std::vector<std::pair<std::int64_t, Rational>> terms;
  if (kmax >= 0) {
    for (std::int64_t m = ceil_div(-kmax - b, A); m <= floor_div(kmax - b, A); ++m) {
      const std::int64_t k = A * m + b;
      if (k == 0) continue;
      terms.emplace_back(to_int64(num_factor * k * k), Rational(k));
    }
  }
  return from_terms(den, std::move(terms), order);
}

Rational coeff_at(const FracSeries& s, std::int64_t num, std::int64_t den) {
  if (den < 1) throw std::invalid_argument("exponent denominator must be >= 1");
  Rational e(num, den);
  e.canonicalize();
  return s.coeff(e);
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  try {
    r = Rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace coset
