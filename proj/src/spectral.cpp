#include "lexspec/spectral.hpp"

#include <algorithm>
#include <bit>

namespace lexspec {

StepResolution::StepResolution(Signature sig, std::size_t n, std::vector<std::vector<Rational>> bps,
                               std::vector<LexElement> values)
    : sig_(sig), n_(n), breakpoints_(std::move(bps)), strides_(n, 0), values_(std::move(values)) {
  std::size_t size = 1;
  for (std::size_t j = n_; j-- > 0;) {
    strides_[j] = size;
    size *= breakpoints_[j].size() + 1;
  }
}

StepResolution StepResolution::from_cells(Signature sig, std::size_t n, std::vector<std::vector<Rational>> breakpoints,
                                          std::vector<LexElement> values) {
  if (n == 0) throw Error("resolution dimension must be >= 1");
  if (breakpoints.size() != n)
    throw Error("expected breakpoints for " + std::to_string(n) + " axes, got " + std::to_string(breakpoints.size()));
  std::size_t size = 1;
  for (const auto& axis : breakpoints) {
    for (std::size_t i = 1; i < axis.size(); ++i)
      if (!(axis[i - 1] < axis[i])) throw Error("breakpoints must be strictly increasing");
    size *= axis.size() + 1;
  }
  if (values.size() != size)
    throw Error("expected " + std::to_string(size) + " cell values, got " + std::to_string(values.size()));
  for (const auto& v : values) {
    if (v.signature() != sig) throw Error("cell value has a foreign signature");
    if (!in_unit_interval(v)) throw Error("cell value " + to_string(v) + " is outside [0, u]");
  }
  return StepResolution(sig, n, std::move(breakpoints), std::move(values));
}

StepResolution StepResolution::from_observable(const DiscreteObservable& x) {
  std::size_t n = x.dim();
  std::vector<std::vector<Rational>> bps(n);
  for (const auto& a : x.atoms())
    for (std::size_t j = 0; j < n; ++j) bps[j].push_back(a.point[j]);
  for (auto& v : bps) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  // rank[a][j]: position of atom a's j-th coordinate among the breakpoints.
  // The atom counts toward cell c iff t_j < s_j on the whole cell, i.e.
  // rank < c_j on every axis.
  std::vector<std::vector<std::size_t>> rank;
  for (const auto& a : x.atoms()) {
    std::vector<std::size_t> r(n);
    for (std::size_t j = 0; j < n; ++j)
      r[j] = static_cast<std::size_t>(std::lower_bound(bps[j].begin(), bps[j].end(), a.point[j]) - bps[j].begin());
    rank.push_back(std::move(r));
  }
  StepResolution f(x.signature(), n, std::move(bps), {});
  std::size_t size = 1;
  for (std::size_t j = 0; j < n; ++j) size *= f.extent(j);
  f.values_.reserve(size);
  for (std::size_t flat = 0; flat < size; ++flat) {
    CellIndex c = f.unflat(flat);
    LexElement sum = LexElement::zero(x.signature());
    for (std::size_t a = 0; a < rank.size(); ++a) {
      bool inside = true;
      for (std::size_t j = 0; j < n && inside; ++j) inside = rank[a][j] < c[j];
      if (inside) sum = sum + x.atoms()[a].weight;
    }
    f.values_.push_back(std::move(sum));
  }
  return f;
}

std::size_t StepResolution::flat(const CellIndex& c) const {
  if (c.size() != n_) throw Error("cell index has wrong dimension");
  std::size_t out = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (c[j] >= extent(j)) throw Error("cell index out of range");
    out += c[j] * strides_[j];
  }
  return out;
}

CellIndex StepResolution::unflat(std::size_t flat) const {
  CellIndex c(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    c[j] = flat / strides_[j];
    flat %= strides_[j];
  }
  return c;
}

std::size_t StepResolution::axis_cell(std::size_t axis, const Rational& x) const {
  const auto& b = breakpoints_[axis];
  return static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), x) - b.begin());
}

CellIndex StepResolution::cell_of(const Point& s) const {
  if (s.size() != n_) throw Error("point dimension does not match the resolution");
  CellIndex c(n_);
  for (std::size_t j = 0; j < n_; ++j) c[j] = axis_cell(j, s[j]);
  return c;
}

Interval StepResolution::cell_interval(std::size_t axis, std::size_t c) const {
  const auto& b = breakpoints_[axis];
  Endpoint lo = c == 0 ? Endpoint::neg_inf() : Endpoint(b[c - 1]);
  Endpoint hi = c == b.size() ? Endpoint::pos_inf() : Endpoint(b[c]);
  return Interval::open_closed(std::move(lo), std::move(hi));
}

Box StepResolution::cell_box(const CellIndex& c) const {
  std::vector<Interval> dims;
  for (std::size_t j = 0; j < n_; ++j) dims.push_back(cell_interval(j, c[j]));
  return Box(std::move(dims));
}

Point StepResolution::representative(const CellIndex& c) const {
  Point p(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const auto& b = breakpoints_[j];
    if (b.empty())
      p[j] = 0;
    else if (c[j] == 0)
      p[j] = b.front() - 1;
    else if (c[j] == b.size())
      p[j] = b.back() + 1;
    else
      p[j] = (b[c[j] - 1] + b[c[j]]) / 2;
  }
  return p;
}

LexElement eval_F(const StepResolution& f, const Point& s) { return f.value(f.cell_of(s)); }

LexElement volume(const StepResolution& f, const Point& a, const Point& b) {
  std::size_t n = f.dim();
  if (a.size() != n || b.size() != n) throw Error("volume: corner dimension mismatch");
  for (std::size_t j = 0; j < n; ++j)
    if (b[j] < a[j]) throw Error("volume: a_j > b_j on axis " + std::to_string(j + 1));
  LexElement sum = LexElement::zero(f.signature());
  Point corner(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (std::size_t j = 0; j < n; ++j) corner[j] = (mask >> j) & 1u ? b[j] : a[j];
    bool positive = (n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0;
    const LexElement& v = eval_F(f, corner);
    sum = positive ? sum + v : sum - v;
  }
  return sum;
}

LexElement partial_delta(const StepResolution& f, const Point& s, std::span<const AxisBounds> axes) {
  std::size_t n = f.dim();
  if (s.size() != n) throw Error("partial_delta: point dimension mismatch");
  if (axes.empty()) throw Error("partial_delta needs at least one axis");
  std::vector<bool> seen(n, false);
  for (const auto& ab : axes) {
    if (ab.axis >= n) throw Error("partial_delta: axis out of range");
    if (seen[ab.axis]) throw Error("partial_delta: repeated axis");
    seen[ab.axis] = true;
    if (ab.hi < ab.lo) throw Error("partial_delta: lower bound above upper bound");
  }
  std::size_t k = axes.size();
  LexElement sum = LexElement::zero(f.signature());
  Point corner = s;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) corner[axes[i].axis] = (mask >> i) & 1u ? axes[i].hi : axes[i].lo;
    bool positive = (k - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0;
    const LexElement& v = eval_F(f, corner);
    sum = positive ? sum + v : sum - v;
  }
  return sum;
}

LexElement point_mass_via_deltas(const StepResolution& f, const Point& p) {
  std::size_t n = f.dim();
  if (p.size() != n) throw Error("point_mass_via_deltas: dimension mismatch");
  Point q(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = f.breakpoints(j);
    auto next = std::upper_bound(b.begin(), b.end(), p[j]);
    q[j] = next == b.end() ? p[j] + 1 : p[j] + (*next - p[j]) / 2;
  }
  return volume(f, p, q);
}

// ---------------------------------------------------------------------------
// Axiom checking
//
// Every grid-aligned corner value is the value of some cell, so boxes are
// enumerated directly in cell-index space: a box is a pair lo < hi of cell
// indices per axis, corner F values are cell values.

namespace {

std::string describe_index(const CellIndex& c) {
  std::string out = "[";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(c[j]);
  }
  return out + "]";
}

std::string describe_cell(const StepResolution& f, const CellIndex& c) {
  return "cell " + describe_index(c) + " = " + to_string(f.cell_box(c)) + " with F = " + to_string(f.value(c));
}

// Coordinate whose cell index along `axis` is c (used to print boxes).
Rational corner_coordinate(const StepResolution& f, std::size_t axis, std::size_t c) {
  const auto& b = f.breakpoints(axis);
  if (b.empty()) return 0;
  if (c == 0) return b.front() - 1;
  if (c == b.size()) return b.back() + 1;
  return b[c];
}

// Alternating sum over the corners of the index box [lo, hi] restricted to
// `axes`; other coordinates are taken from `base`.
LexElement index_corner_sum(const StepResolution& f, const std::vector<std::size_t>& axes, const CellIndex& lo,
                            const CellIndex& hi, const CellIndex& base) {
  std::size_t k = axes.size();
  LexElement sum = LexElement::zero(f.signature());
  CellIndex corner = base;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) corner[axes[i]] = (mask >> i) & 1u ? hi[axes[i]] : lo[axes[i]];
    bool positive = (k - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0;
    const LexElement& v = f.value(corner);
    sum = positive ? sum + v : sum - v;
  }
  return sum;
}

// Calls visit(lo, hi) for every index box with lo_j < hi_j on `axes`; the
// remaining coordinates of lo/hi equal `base`. Stops when visit returns false.
template <typename Visit>
bool for_each_index_box(const StepResolution& f, const std::vector<std::size_t>& axes, const CellIndex& base,
                        Visit&& visit) {
  std::size_t k = axes.size();
  CellIndex lo = base, hi = base;
  for (std::size_t i = 0; i < k; ++i) {
    if (f.extent(axes[i]) < 2) return true;
    lo[axes[i]] = 0;
    hi[axes[i]] = 1;
  }
  while (true) {
    if (!visit(lo, hi)) return false;
    std::size_t i = k;
    while (i-- > 0) {
      std::size_t ax = axes[i];
      if (++hi[ax] < f.extent(ax)) break;
      if (++lo[ax] + 1 < f.extent(ax)) {
        hi[ax] = lo[ax] + 1;
        break;
      }
      lo[ax] = 0;
      hi[ax] = 1;
    }
    if (i == static_cast<std::size_t>(-1)) return true;
  }
}

std::string describe_box(const StepResolution& f, const std::vector<std::size_t>& axes, const CellIndex& lo,
                         const CellIndex& hi, const CellIndex& base) {
  std::string out;
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (j) out += " x ";
    if (std::find(axes.begin(), axes.end(), j) != axes.end())
      out += "[" + to_string(corner_coordinate(f, j, lo[j])) + "," + to_string(corner_coordinate(f, j, hi[j])) + ")";
    else
      out += "(-inf," + to_string(corner_coordinate(f, j, base[j])) + ")";
  }
  return out;
}

}  // namespace

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::at(std::string_view name) const {
  for (const auto& r : results)
    if (r.name == name) return r;
  throw Error("no axiom named '" + std::string(name) + "'");
}

AxiomReport check_axioms(const StepResolution& f) {
  const std::size_t n = f.dim();
  const LexElement zero = LexElement::zero(f.signature());
  const LexElement one = LexElement::unit(f.signature());
  AxiomReport report;

  AxiomResult mono{"monotony", true, false, {}};
  for (std::size_t flat = 0; flat < f.cell_count() && mono.passed; ++flat) {
    CellIndex c = f.unflat(flat);
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] + 1 >= f.extent(j)) continue;
      CellIndex up = c;
      ++up[j];
      if (!lex_le(f.value(c), f.value(up))) {
        mono.passed = false;
        mono.witness = describe_cell(f, c) + " exceeds " + describe_cell(f, up);
        break;
      }
    }
  }
  report.results.push_back(std::move(mono));

  AxiomResult top{"top", true, false, {}};
  {
    CellIndex c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = f.extent(j) - 1;
    if (f.value(c) != one) {
      top.passed = false;
      top.witness = describe_cell(f, c) + " is not 1";
    }
  }
  report.results.push_back(std::move(top));

  report.results.push_back({"left_continuity", true, true, {}});

  AxiomResult bottom{"bottom", true, false, {}};
  for (std::size_t flat = 0; flat < f.cell_count(); ++flat) {
    CellIndex c = f.unflat(flat);
    bool on_floor = std::find(c.begin(), c.end(), std::size_t{0}) != c.end();
    if (on_floor && !f.value(flat).is_zero()) {
      bottom.passed = false;
      bottom.witness = describe_cell(f, c) + " touches -inf but is not 0";
      break;
    }
  }
  report.results.push_back(std::move(bottom));

  std::vector<std::size_t> all_axes(n);
  for (std::size_t j = 0; j < n; ++j) all_axes[j] = j;

  AxiomResult vol{"volume", true, false, {}};
  for_each_index_box(f, all_axes, CellIndex(n, 0), [&](const CellIndex& lo, const CellIndex& hi) {
    LexElement v = index_corner_sum(f, all_axes, lo, hi, lo);
    if (!lex_le(zero, v) || !lex_le(v, one)) {
      vol.passed = false;
      vol.witness = "V(F, " + describe_box(f, all_axes, lo, hi, lo) + ") = " + to_string(v);
      return false;
    }
    return true;
  });
  report.results.push_back(std::move(vol));

  AxiomResult partial{"partial_volume", true, false, {}};
  for (unsigned mask = 1; mask + 1 < (1u << n) && partial.passed; ++mask) {
    std::vector<std::size_t> axes, fixed;
    for (std::size_t j = 0; j < n; ++j) ((mask >> j) & 1u ? axes : fixed).push_back(j);
    // Enumerate the fixed coordinates.
    CellIndex base(n, 0);
    while (partial.passed) {
      for_each_index_box(f, axes, base, [&](const CellIndex& lo, const CellIndex& hi) {
        LexElement v = index_corner_sum(f, axes, lo, hi, base);
        if (!lex_le(zero, v)) {
          partial.passed = false;
          partial.witness = "Delta over " + describe_box(f, axes, lo, hi, base) + " = " + to_string(v);
          return false;
        }
        return true;
      });
      std::size_t i = fixed.size();
      while (i-- > 0) {
        if (++base[fixed[i]] < f.extent(fixed[i])) break;
        base[fixed[i]] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  report.results.push_back(std::move(partial));

  return report;
}

LexElement ring_measure(const StepResolution& f, const std::vector<Box>& boxes) {
  std::size_t n = f.dim();
  for (const auto& b : boxes) {
    if (b.dim() != n) throw Error("ring_measure: box dimension mismatch");
    for (std::size_t j = 0; j < n; ++j)
      if (!b[j].lo().finite() || !b[j].hi().finite() || !b[j].lo_closed() || b[j].hi_closed())
        throw Error("ring_measure: " + to_string(b) + " is not a half-open box [a,b)");
  }
  for (std::size_t p = 0; p < boxes.size(); ++p)
    for (std::size_t q = p + 1; q < boxes.size(); ++q) {
      bool overlap = true;
      for (std::size_t j = 0; j < n && overlap; ++j)
        overlap = boxes[p][j].lo() < boxes[q][j].hi() && boxes[q][j].lo() < boxes[p][j].hi();
      if (overlap) throw Error("ring_measure: boxes overlap");
    }
  LexElement sum = LexElement::zero(f.signature());
  for (const auto& b : boxes) {
    Point a(n), c(n);
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = b[j].lo().value();
      c[j] = b[j].hi().value();
    }
    sum = sum + volume(f, a, c);
  }
  return sum;
}

LexElement ring_measure(const StepResolution& f, const Region& r) {
  if (r.dim() != f.dim()) throw Error("ring_measure: region dimension mismatch");
  return ring_measure(f, r.boxes());
}

}  // namespace lexspec
