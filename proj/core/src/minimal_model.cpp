#include "coset/minimal_model.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace coset {

MinimalModel::MinimalModel(int p, int q) : p_(p), q_(q) {
  if (p < 3 || q < 3) throw std::invalid_argument("minimal model needs p, q >= 3");
  if (p == q || std::gcd(p, q) != 1) {
    throw std::invalid_argument("minimal model needs coprime p != q, got (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

bool MinimalModel::in_range(KacLabel label) const {
  return label.r >= 1 && label.r <= q_ - 1 && label.s >= 1 && label.s <= p_ - 1;
}

void MinimalModel::require(KacLabel label) const {
  if (!in_range(label)) {
    throw std::out_of_range("Kac label (" + std::to_string(label.r) + "," +
                            std::to_string(label.s) + ") outside model (" + std::to_string(p_) +
                            "," + std::to_string(q_) + ")");
  }
}

KacLabel MinimalModel::partner(KacLabel label) const { return {q_ - label.r, p_ - label.s}; }

KacLabel MinimalModel::canonical(KacLabel label) const {
  require(label);
  return std::min(label, partner(label));
}

std::vector<KacLabel> MinimalModel::labels() const {
  std::vector<KacLabel> out;
  for (int r = 1; r < q_; ++r) {
    for (int s = 1; s < p_; ++s) {
      KacLabel l{r, s};
      if (canonical(l) == l) out.push_back(l);
    }
  }
  return out;
}

Rational central_charge(const MinimalModel& m) {
  const long d = m.p() - m.q();
  return Rational(1) - frac(6 * d * d, static_cast<long>(m.p()) * m.q());
}

Rational conformal_weight(const MinimalModel& m, KacLabel label) {
  m.require(label);
  const long x = static_cast<long>(label.s) * m.q() - static_cast<long>(label.r) * m.p();
  const long d = m.p() - m.q();
  return frac(x * x - d * d, 4L * m.p() * m.q());
}

std::vector<std::vector<Rational>> kac_table(const MinimalModel& m) {
  std::vector<std::vector<Rational>> rows;
  for (int r = 1; r < m.q(); ++r) {
    auto& row = rows.emplace_back();
    for (int s = 1; s < m.p(); ++s) row.push_back(conformal_weight(m, {r, s}));
  }
  return rows;
}

namespace {

bool strict_triangle(int a, int b, int c) { return a < b + c && b < a + c && c < a + b; }

}  // namespace

bool is_admissible(const MinimalModel& m, KacLabel a, KacLabel b, KacLabel c) {
  if (!m.in_range(a) || !m.in_range(b) || !m.in_range(c)) return false;
  const int rs = a.r + b.r + c.r;
  const int ss = a.s + b.s + c.s;
  return rs <= 2 * m.q() - 1 && ss <= 2 * m.p() - 1 && strict_triangle(a.r, b.r, c.r) &&
         strict_triangle(a.s, b.s, c.s) && rs % 2 == 1 && ss % 2 == 1;
}

int fusion_dim(const MinimalModel& m, KacLabel a, KacLabel b, KacLabel c) {
  m.require(a);
  m.require(b);
  m.require(c);
  for (KacLabel x : {a, m.partner(a)}) {
    for (KacLabel y : {b, m.partner(b)}) {
      for (KacLabel z : {c, m.partner(c)}) {
        if (is_admissible(m, x, y, z)) return 1;
      }
    }
  }
  return 0;
}

ModuleSum fuse(const MinimalModel& m, KacLabel a, KacLabel b) {
  ModuleSum out;
  for (KacLabel c : m.labels()) {
    if (int n = fusion_dim(m, a, b, c); n > 0) out[c] = n;
  }
  return out;
}

FracSeries vir_character(const MinimalModel& m, KacLabel label, int order) {
  m.require(label);
  if (order < 0) throw std::invalid_argument("character order must be >= 0");
  const long pq = static_cast<long>(m.p()) * m.q();
  const long b_minus = static_cast<long>(m.p()) * label.r - static_cast<long>(m.q()) * label.s;
  const long b_plus = static_cast<long>(m.p()) * label.r + static_cast<long>(m.q()) * label.s;

  // Theta difference over eta; the theta part starts at q^{lead + 1/24}.
  const Rational lead = conformal_weight(m, label) - central_charge(m) / 24;
  const Rational bound = lead + frac(1, 24) + order + 1;
  FracSeries numerator = theta_null(pq, b_minus, bound) - theta_null(pq, b_plus, bound);
  FracSeries chi = numerator * euler_product(Sign::minus, -1, order + 1);
  return chi.shifted(frac(-1, 24)).truncated(lead + order + 1);
}

}  // namespace coset
