#include "coset/ext_fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace coset {

ExtLabel ExtLabel::from(int r, int s) {
  if (r < 1 || r > 6 || s < 1 || s > 9) {
    throw std::out_of_range("extended label (" + std::to_string(r) + "," + std::to_string(s) +
                            ") outside 1<=r<=6, 1<=s<=9");
  }
  if (r > 3) r = 7 - r;
  if (s > 5) s = 10 - s;
  return {r, s};
}

std::vector<KacLabel> ExtLabel::constituents() const {
  if (fixed_point()) return {{r_, s_}};
  return {{r_, s_}, {r_, 10 - s_}};
}

std::string ExtLabel::to_string() const {
  return "(" + std::to_string(r_) + "," + std::to_string(s_) + ")";
}

const MinimalModel& ext_base_model() {
  static const MinimalModel model(10, 7);
  return model;
}

KacLabel simple_current_image(KacLabel label) {
  const MinimalModel& m = ext_base_model();
  m.require(label);
  return m.canonical({m.q() - label.r, label.s});
}

ExtCensus classify_ext_modules() {
  ExtCensus census;
  for (KacLabel l : ext_base_model().labels()) {
    const KacLabel image = simple_current_image(l);
    if (image == l) {
      census.fixed.push_back(l);
    } else if (l < image) {
      census.orbit_pairs.emplace_back(l, image);
      census.orbits.push_back(ExtLabel::from(l.r, l.s));
    }
  }
  return census;
}

std::vector<ExtIrreducible> ext_irreducibles() {
  std::vector<ExtIrreducible> out;
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 9; ++s) {
      const ExtLabel label = ExtLabel::from(r, s);
      out.push_back({r, s, label, label.fixed_point(), s != 5});
    }
  }
  return out;
}

ExtModuleSum lift(const ModuleSum& sum) {
  ExtModuleSum out;
  for (const auto& [label, mult] : sum) {
    if (mult > 0) out[ExtLabel::from(label.r, label.s)] += mult;
  }
  return out;
}

ExtModuleSum ext_fuse(ExtLabel a, ExtLabel b, std::size_t choice_a, std::size_t choice_b) {
  const auto ca = a.constituents();
  const auto cb = b.constituents();
  const KacLabel x = ca[std::min(choice_a, ca.size() - 1)];
  const KacLabel y = cb[std::min(choice_b, cb.size() - 1)];
  return lift(fuse(ext_base_model(), x, y));
}

long tensor_fusion_dim(long d1, long d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("fusion dimensions are nonnegative");
  return d1 * d2;
}

}  // namespace coset
