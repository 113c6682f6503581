#pragma once

// Simple-current extension V~ = L(c_{10,7},0) + L(c_{10,7},h^{6,1}) of the
// (10,7) minimal model. The simple current acts on Kac labels by
// (r,s) -> (7-r,s); an extended module V~_{r,s} restricts to
// V_{r,s} + V_{7-r,s}, which is V_{r,s} + V_{r,10-s} after Kac symmetry.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coset/minimal_model.hpp"

namespace coset {

/// Canonical label of an extended module: 1 <= r <= 3, 1 <= s <= 5.
class ExtLabel {
 public:
  /// Accepts any 1 <= r <= 6, 1 <= s <= 9 (so both the r in {1,2,3} and the
  /// r in {1,3,5} presentations) and normalizes. Throws std::out_of_range.
  static ExtLabel from(int r, int s);

  int r() const { return r_; }
  int s() const { return s_; }

  /// Canonical Virasoro constituents; one entry for a fixed point.
  std::vector<KacLabel> constituents() const;
  /// s = 5: the simple current fixes V_{r,5}.
  bool fixed_point() const { return s_ == 5; }
  std::string to_string() const;

  friend auto operator<=>(const ExtLabel&, const ExtLabel&) = default;

 private:
  ExtLabel(int r, int s) : r_(r), s_(s) {}
  int r_;
  int s_;
};

using ExtModuleSum = std::map<ExtLabel, int>;

/// The (10,7) model itself.
const MinimalModel& ext_base_model();

/// canon(7-r, s).
KacLabel simple_current_image(KacLabel label);

struct ExtCensus {
  std::vector<ExtLabel> orbits;  // one per free orbit
  std::vector<std::pair<KacLabel, KacLabel>> orbit_pairs;
  std::vector<KacLabel> fixed;
};

ExtCensus classify_ext_modules();

/// An entry of the listed irreducibles V~_{r,s}, 1 <= r <= 3, 1 <= s <= 9.
struct ExtIrreducible {
  int r = 1;
  int s = 1;
  ExtLabel label;
  bool fixed_point = false;
  /// Another listed (r, s') names the same module (s' = 10 - s).
  bool coincides = false;
};

std::vector<ExtIrreducible> ext_irreducibles();

/// Induces a Virasoro module sum to V~: each label C contributes its
/// multiplicity to the extended module containing C.
ExtModuleSum lift(const ModuleSum& sum);

/// Fuses the chosen constituents (index into constituents(), clamped for
/// fixed points) in the (10,7) model and lifts.
ExtModuleSum ext_fuse(ExtLabel a, ExtLabel b, std::size_t choice_a = 0, std::size_t choice_b = 0);

/// Fusion dimensions of a tensor product factorize. Throws on negatives.
long tensor_fusion_dim(long d1, long d2);

}  // namespace coset
