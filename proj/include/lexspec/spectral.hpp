#pragma once

// Step-function spectral resolutions F: R^n -> M.
//
// Axis j is cut by sorted breakpoints b_0 < ... < b_{m-1} into the cells
// (-inf, b_0], (b_0, b_1], ..., (b_{m-1}, +inf), indexed 0..m. F is constant
// on every product cell. Left-open right-closed cells make F left-continuous
// by construction.

#include "lexspec/boxgeom.hpp"
#include "lexspec/lexalg.hpp"
#include "lexspec/observable.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lexspec {

using CellIndex = std::vector<std::size_t>;

class StepResolution {
 public:
  /// Values are listed row-major (last axis fastest). Monotony and the
  /// volume condition are not enforced here; see check_axioms.
  static StepResolution from_cells(Signature sig, std::size_t n, std::vector<std::vector<Rational>> breakpoints,
                                   std::vector<LexElement> values);
  /// F(s) = x(prod_j (-inf, s_j)).
  static StepResolution from_observable(const DiscreteObservable& x);

  const Signature& signature() const { return sig_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::vector<Rational>>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& breakpoints(std::size_t axis) const { return breakpoints_[axis]; }
  /// Number of cells along `axis` (breakpoints + 1).
  std::size_t extent(std::size_t axis) const { return breakpoints_[axis].size() + 1; }
  std::size_t cell_count() const { return values_.size(); }
  const std::vector<LexElement>& values() const { return values_; }

  std::size_t flat(const CellIndex& c) const;
  CellIndex unflat(std::size_t flat) const;
  const LexElement& value(const CellIndex& c) const { return values_[flat(c)]; }
  const LexElement& value(std::size_t flat) const { return values_[flat]; }
  int level(const CellIndex& c) const { return height_class(value(c)); }

  /// Cell index along `axis` of coordinate x: the number of breakpoints < x.
  std::size_t axis_cell(std::size_t axis, const Rational& x) const;
  CellIndex cell_of(const Point& s) const;
  Interval cell_interval(std::size_t axis, std::size_t c) const;
  Box cell_box(const CellIndex& c) const;
  /// A point strictly inside the cell.
  Point representative(const CellIndex& c) const;

  friend bool operator==(const StepResolution&, const StepResolution&) = default;

 private:
  StepResolution(Signature sig, std::size_t n, std::vector<std::vector<Rational>> bps, std::vector<LexElement> values);

  Signature sig_;
  std::size_t n_;
  std::vector<std::vector<Rational>> breakpoints_;
  std::vector<std::size_t> strides_;
  std::vector<LexElement> values_;
};

LexElement eval_F(const StepResolution& f, const Point& s);

/// V(F, prod_j [a_j, b_j)) as the alternating corner sum, computed in the
/// group (negative for F violating the volume condition).
LexElement volume(const StepResolution& f, const Point& a, const Point& b);

struct AxisBounds {
  std::size_t axis;
  Rational lo;
  Rational hi;
};

/// Delta_{i1}(a,b) ... Delta_{ik}(a,b) F evaluated at s; coordinates of s on
/// the listed axes are replaced by the bounds.
LexElement partial_delta(const StepResolution& f, const Point& s, std::span<const AxisBounds> axes);

/// x({p}) recovered from F as the volume of a box [p, p + delta) small
/// enough to contain no further breakpoint.
LexElement point_mass_via_deltas(const StepResolution& f, const Point& p);

struct AxiomResult {
  std::string name;     // "monotony", "top", "left_continuity", "bottom", "volume", "partial_volume"
  bool passed = true;
  bool structural = false;  // satisfied by the representation itself
  std::string witness;      // first violation, empty on success
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult& at(std::string_view name) const;
};

AxiomReport check_axioms(const StepResolution& f);

/// Additive extension x_F of V(F, .) to a finite disjoint family of
/// half-open boxes [a, b) with finite ends.
LexElement ring_measure(const StepResolution& f, const std::vector<Box>& disjoint_boxes);
/// x_F on a region whose canonical boxes are half-open [a, b) boxes.
LexElement ring_measure(const StepResolution& f, const Region& r);

}  // namespace lexspec
