#pragma once

// Named example inputs: the worked two-dimensional cases "3.7/1".."3.7/9",
// the saturating family "saturate/k" and the synthetic staircases
// "patho/m" and "antichain/m".

#include "lexspec/verify.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexspec {

struct GalleryEntry {
  std::string name;
  std::string title;
  /// Absent for inputs that are given directly as a step resolution.
  std::optional<DiscreteObservable> observable;
  StepResolution resolution;
  /// Characteristic points as listed in the source text, when it lists any.
  std::vector<Point> listed_char_points;
  std::string note;
};

/// The fixed example names, in order.
const std::vector<std::string>& gallery_names();

/// Looks up `name`; `k` is the signature used by the patho/ and antichain/
/// families. Throws Error for unknown names.
GalleryEntry gallery_entry(std::string_view name, int k = 2);

}  // namespace lexspec
