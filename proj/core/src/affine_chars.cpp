#include "coset/affine_chars.hpp"

#include <stdexcept>
#include <string>

namespace coset {
namespace {

void require_level(int level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
}

bool matches(Parity parity, int i) {
  return parity == Parity::both || (parity == Parity::even) == (i % 2 == 0);
}

}  // namespace

void validate(OspLabel label) {
  require_level(label.level);
  if (label.r < 1 || label.r > 2 * label.level + 1 || label.r % 2 == 0) {
    throw std::out_of_range("osp(1|2) label r=" + std::to_string(label.r) +
                            " must be odd in [1, " + std::to_string(2 * label.level + 1) + "]");
  }
}

void validate(Sl2Label label) {
  require_level(label.level);
  if (label.i < 0 || label.i > label.level) {
    throw std::out_of_range("sl2 label i=" + std::to_string(label.i) + " must lie in [0, " +
                            std::to_string(label.level) + "]");
  }
}

MinimalModel branching_model(int level) {
  require_level(level);
  return MinimalModel(2 * level + 3, level + 2);
}

Rational osp_central_charge(int level) {
  require_level(level);
  return frac(2 * level, 2 * level + 3);
}

Rational sl2_central_charge(int level) {
  require_level(level);
  return frac(3 * level, level + 2);
}

Rational sl2_weight(Sl2Label label) {
  validate(label);
  return frac(label.i * (label.i + 2), 4 * (label.level + 2));
}

std::vector<OspLabel> osp_modules(int level) {
  require_level(level);
  std::vector<OspLabel> out;
  for (int r = 1; r <= 2 * level + 1; r += 2) out.push_back({level, r});
  return out;
}

FracSeries osp_character(OspLabel label, int order) {
  validate(label);
  if (order < 0) throw std::invalid_argument("character order must be >= 0");
  const long a = 2L * label.level + 3;
  // sum (2am + r) q^{(2am+r)^2/(8a)} * prod (1+q^n)^2 / (q^{1/24} prod (1-q^n)^3)
  const Rational theta_lead = frac(static_cast<long>(label.r) * label.r, 8 * a);
  const Rational bound = theta_lead + order + 1;
  FracSeries chi = weighted_theta(2 * a, label.r, frac(a, 2), bound);
  chi *= euler_product(Sign::plus, 2, order + 1);
  chi *= euler_product(Sign::minus, -3, order + 1);
  return chi.shifted(frac(-1, 24)).truncated(theta_lead - frac(1, 24) + order + 1);
}

FracSeries sl2_character(Sl2Label label, int order) {
  validate(label);
  if (order < 0) throw std::invalid_argument("character order must be >= 0");
  const long k = label.level + 2;
  const long j = label.i + 1;
  // sum (2km + j) q^{(2km+j)^2/(4k)} / eta^3
  const Rational theta_lead = frac(j * j, 4 * k);
  const Rational bound = theta_lead + order + 1;
  FracSeries chi = weighted_theta(2 * k, j, Rational(k), bound);
  chi *= euler_product(Sign::minus, -3, order + 1);
  return chi.shifted(frac(-1, 8)).truncated(theta_lead - frac(1, 8) + order + 1);
}

std::vector<BranchTerm> branch_terms(int level, int r, Parity parity) {
  validate(OspLabel{level, r});
  std::vector<BranchTerm> out;
  for (int i = 0; i <= level; ++i) {
    if (!matches(parity, i)) continue;
    out.push_back({Sl2Label{level, i}, KacLabel{i + 1, r},
                   i % 2 == 0 ? Parity::even : Parity::odd, branch_weight(level, i, r)});
  }
  return out;
}

FracSeries branch_character(int level, int r, Parity parity, int order) {
  validate(OspLabel{level, r});
  if (order < 0) throw std::invalid_argument("character order must be >= 0");
  const MinimalModel vir = branching_model(level);
  const Rational lead = lowest_space(level, r).weight - osp_central_charge(level) / 24;
  FracSeries sum;
  for (const BranchTerm& term : branch_terms(level, r, parity)) {
    sum += sl2_character(term.sl2, order) * vir_character(vir, term.vir, order);
  }
  return sum.truncated(lead + order + 1);
}

Rational branch_weight(int level, int i, int r) {
  validate(OspLabel{level, r});
  validate(Sl2Label{level, i});
  const long j = i + 1;
  Rational h = Rational(2 * j * j - 2 * j * r) +
               frac(static_cast<long>(level + 2) * (static_cast<long>(r) * r - 1), 2L * level + 3);
  h /= 4;
  h.canonicalize();
  return h;
}

LowestSpace lowest_space(int level, int r) {
  validate(OspLabel{level, r});
  LowestSpace best{branch_weight(level, 0, r), 1};
  for (int i = 1; i <= level; ++i) {
    const Rational h = branch_weight(level, i, r);
    if (h < best.weight) {
      best = {h, i + 1};
    } else if (h == best.weight) {
      best.dimension += i + 1;
    }
  }
  return best;
}

Rational h_alpha_beta(int alpha, int beta, const Rational& t) {
  if (t == 0) throw std::invalid_argument("h_alpha_beta needs t != 0");
  const long a = alpha;
  const long b = beta;
  Rational h = Rational(a * a - 1) * t / 4 - frac(a * b - 1, 2) + Rational(b * b - 1) / (4 * t);
  h.canonicalize();
  return h;
}

std::pair<Rational, Rational> singular_weights(const MinimalModel& m, KacLabel label) {
  m.require(label);
  const Rational t = frac(m.p(), m.q());
  return {h_alpha_beta(label.r, -label.s, t), h_alpha_beta(label.r - 2 * m.q(), -label.s, t)};
}

}  // namespace coset
