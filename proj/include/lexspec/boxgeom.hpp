#pragma once

// Exact-rational axis-aligned geometry: intervals with per-endpoint closure,
// boxes, and finite unions of boxes kept in a canonical disjoint form.

#include "lexspec/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexspec {

/// A rational or one of the two infinities.
class Endpoint {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Endpoint(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT: implicit by intent
  Endpoint(int v) : Endpoint(Rational(v)) {}                           // NOLINT
  static Endpoint neg_inf() { return Endpoint(Kind::NegInf); }
  static Endpoint pos_inf() { return Endpoint(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  /// Only valid for finite endpoints.
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b);
  friend bool operator==(const Endpoint& a, const Endpoint& b) { return (a <=> b) == 0; }
  friend bool operator<(const Endpoint& a, const Rational& r) { return a < Endpoint(r); }

 private:
  explicit Endpoint(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

std::string to_string(const Endpoint& e);

class Interval {
 public:
  Interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed);

  static Interval all() { return {Endpoint::neg_inf(), false, Endpoint::pos_inf(), false}; }
  /// [a, b); requires a < b.
  static Interval closed_open(Rational a, Rational b) { return {std::move(a), true, std::move(b), false}; }
  /// (a, b]; either end may be infinite (then open).
  static Interval open_closed(Endpoint a, Endpoint b) { return {std::move(a), false, b, b.finite()}; }

  const Endpoint& lo() const { return lo_; }
  const Endpoint& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool contains(const Rational& x) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Endpoint lo_;
  bool lo_closed_;
  Endpoint hi_;
  bool hi_closed_;
};

std::string to_string(const Interval& iv);

class Box {
 public:
  explicit Box(std::vector<Interval> dims);

  std::size_t dim() const { return dims_.size(); }
  const std::vector<Interval>& dims() const { return dims_; }
  const Interval& operator[](std::size_t j) const { return dims_[j]; }

  bool contains(const Point& p) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> dims_;
};

std::string to_string(const Box& b);

/// Finite union of pairwise-disjoint boxes in R^n. Every Region is held in
/// canonical form, so two Regions describe the same point set iff their box
/// lists are identical.
class Region {
 public:
  static Region empty(std::size_t n);
  static Region full(std::size_t n);
  /// Union of arbitrary (possibly overlapping) boxes.
  static Region from_boxes(std::size_t n, const std::vector<Box>& boxes);

  std::size_t dim() const { return n_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool is_empty() const { return boxes_.empty(); }

  bool contains(const Point& p) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Region(std::size_t n, std::vector<Box> boxes) : n_(n), boxes_(std::move(boxes)) {}
  friend Region combine_regions(std::size_t n, const std::vector<const std::vector<Box>*>& inputs,
                                bool (*keep)(const std::vector<bool>& membership));

  std::size_t n_;
  std::vector<Box> boxes_;
};

/// Cell-wise boolean combination of box lists over their joint grid; the
/// result is canonical. `keep` receives one membership flag per input.
Region combine_regions(std::size_t n, const std::vector<const std::vector<Box>*>& inputs,
                       bool (*keep)(const std::vector<bool>& membership));

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);
/// R^n minus a.
Region region_complement(const Region& a);
bool region_equal(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);

/// prod_j (-inf, s_j).
Region lower_orthant(const Point& s);
/// prod_j (t_j, +inf).
Region open_upper_orthant(const Point& t);
/// prod_j [a_j, b_j); empty if some a_j = b_j. Requires a <= b.
Region halfopen_box(const Point& a, const Point& b);

/// "[a,b) x (c,+inf)" boxes joined by " u "; the empty region prints "empty".
std::string to_string(const Region& r);
Interval parse_interval(std::string_view text);
Box parse_box(std::string_view text);
Region parse_region(std::string_view text, std::size_t n);

}  // namespace lexspec
