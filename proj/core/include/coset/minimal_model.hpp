#pragma once

// Rational Virasoro vertex operator algebras L(c_{p,q}, 0): Kac table,
// fusion rules and q-characters.

#include <compare>
#include <map>
#include <vector>

#include "coset/series.hpp"

namespace coset {

struct KacLabel {
  int r = 1;
  int s = 1;
  friend auto operator<=>(const KacLabel&, const KacLabel&) = default;
};

/// Canonical label -> multiplicity. Entries are always positive.
using ModuleSum = std::map<KacLabel, int>;

class MinimalModel {
 public:
  /// Throws std::invalid_argument unless p, q >= 3, p != q and gcd(p, q) = 1.
  MinimalModel(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }

  /// 1 <= r <= q-1 and 1 <= s <= p-1.
  bool in_range(KacLabel label) const;
  /// Throws std::out_of_range for labels outside the Kac table.
  void require(KacLabel label) const;

  /// (q - r, p - s).
  KacLabel partner(KacLabel label) const;
  /// Smaller of label and partner, ordered by r then s.
  KacLabel canonical(KacLabel label) const;

  /// All canonical labels, sorted. There are (p-1)(q-1)/2 of them.
  std::vector<KacLabel> labels() const;

  friend bool operator==(const MinimalModel&, const MinimalModel&) = default;

 private:
  int p_;
  int q_;
};

Rational central_charge(const MinimalModel& m);

/// h^{r,s} = ((s q - r p)^2 - (p - q)^2) / (4 p q).
Rational conformal_weight(const MinimalModel& m, KacLabel label);

/// (q-1) x (p-1) grid; row r-1, column s-1.
std::vector<std::vector<Rational>> kac_table(const MinimalModel& m);

/// The admissibility test on the given representatives (no Kac symmetry).
bool is_admissible(const MinimalModel& m, KacLabel a, KacLabel b, KacLabel c);

/// 1 when some choice of Kac representatives is admissible, else 0.
int fusion_dim(const MinimalModel& m, KacLabel a, KacLabel b, KacLabel c);

ModuleSum fuse(const MinimalModel& m, KacLabel a, KacLabel b);

/// Character exact for every exponent below h - c/24 + order + 1.
FracSeries vir_character(const MinimalModel& m, KacLabel label, int order);

}  // namespace coset
