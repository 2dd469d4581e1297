#include "lexspec/boxgeom.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lexspec {

// ---------------------------------------------------------------------------
// Endpoint / Interval / Box

const Rational& Endpoint::value() const {
  if (kind_ != Kind::Finite) throw Error("value() of an infinite endpoint");
  return value_;
}

std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != Endpoint::Kind::Finite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Endpoint& e) {
  switch (e.kind()) {
    case Endpoint::Kind::NegInf: return "-inf";
    case Endpoint::Kind::PosInf: return "+inf";
    case Endpoint::Kind::Finite: break;
  }
  return to_string(e.value());
}

Interval::Interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed)
    : lo_(std::move(lo)), lo_closed_(lo_closed), hi_(std::move(hi)), hi_closed_(hi_closed) {
  if (lo_.kind() == Endpoint::Kind::PosInf || hi_.kind() == Endpoint::Kind::NegInf)
    throw Error("interval endpoints out of order");
  if ((!lo_.finite() && lo_closed_) || (!hi_.finite() && hi_closed_))
    throw Error("infinite interval ends must be open");
  auto c = lo_ <=> hi_;
  if (c > 0 || (c == 0 && !(lo_closed_ && hi_closed_)))
    throw Error("empty interval " + to_string(*this));
}

bool Interval::contains(const Rational& x) const {
  Endpoint e(x);
  auto clo = lo_ <=> e;
  if (clo > 0 || (clo == 0 && !lo_closed_)) return false;
  auto chi = e <=> hi_;
  if (chi > 0 || (chi == 0 && !hi_closed_)) return false;
  return true;
}

std::string to_string(const Interval& iv) {
  if (iv.lo_closed() && iv.hi_closed() && iv.lo() == iv.hi()) return "[" + to_string(iv.lo()) + "]";
  return std::string(iv.lo_closed() ? "[" : "(") + to_string(iv.lo()) + "," + to_string(iv.hi()) +
         (iv.hi_closed() ? "]" : ")");
}

Box::Box(std::vector<Interval> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error("a box needs at least one dimension");
}

bool Box::contains(const Point& p) const {
  if (p.size() != dims_.size()) throw Error("dimension mismatch in Box::contains");
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!dims_[j].contains(p[j])) return false;
  return true;
}

std::string to_string(const Box& b) {
  std::string out;
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (j) out += " x ";
    out += to_string(b[j]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form
//
// Each axis is cut by the finite endpoint values v_0 < ... < v_{m-1} into
// 2m+1 atomic pieces: piece 2i+1 is {v_i}, piece 2i is the open gap below
// v_i, piece 2m the open ray above v_{m-1}. A cell is a product of pieces;
// every input box is a union of cells.

namespace {

struct Grid {
  std::vector<std::vector<Rational>> vals;
  std::vector<std::size_t> pieces;   // 2 m_j + 1
  std::vector<std::size_t> strides;  // row-major, last axis fastest
  std::size_t size = 1;

  void reshape() {
    std::size_t n = vals.size();
    pieces.assign(n, 0);
    strides.assign(n, 0);
    size = 1;
    for (std::size_t j = n; j-- > 0;) {
      pieces[j] = 2 * vals[j].size() + 1;
      strides[j] = size;
      size *= pieces[j];
    }
  }
};

std::size_t value_index(const std::vector<Rational>& vals, const Rational& v) {
  return static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
}

std::pair<std::size_t, std::size_t> piece_range(const Interval& iv, const std::vector<Rational>& vals) {
  std::size_t lo = 0, hi = 2 * vals.size();
  if (iv.lo().finite()) {
    std::size_t i = value_index(vals, iv.lo().value());
    lo = iv.lo_closed() ? 2 * i + 1 : 2 * i + 2;
  }
  if (iv.hi().finite()) {
    std::size_t i = value_index(vals, iv.hi().value());
    hi = iv.hi_closed() ? 2 * i + 1 : 2 * i;
  }
  return {lo, hi};
}

// Marks every cell of `box` in `occ`.
void mark_box(const Grid& g, const Box& box, std::vector<char>& occ) {
  std::size_t n = g.vals.size();
  std::vector<std::size_t> lo(n), hi(n), idx(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto [a, b] = piece_range(box[j], g.vals[j]);
    if (a > b) return;
    lo[j] = a;
    hi[j] = b;
  }
  idx = lo;
  while (true) {
    std::size_t flat = 0;
    for (std::size_t j = 0; j < n; ++j) flat += idx[j] * g.strides[j];
    occ[flat] = 1;
    std::size_t j = n;
    while (j-- > 0) {
      if (++idx[j] <= hi[j]) break;
      idx[j] = lo[j];
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
}

bool slices_equal(const Grid& g, const std::vector<char>& occ, std::size_t axis, std::size_t p, std::size_t q) {
  std::size_t stride = g.strides[axis];
  std::size_t block = stride * g.pieces[axis];
  for (std::size_t outer = 0; outer < g.size; outer += block)
    for (std::size_t inner = 0; inner < stride; ++inner)
      if (occ[outer + p * stride + inner] != occ[outer + q * stride + inner]) return false;
  return true;
}

// Removes cut value i on `axis`, folding pieces 2i+1 and 2i+2 into 2i.
void drop_value(Grid& g, std::vector<char>& occ, std::size_t axis, std::size_t i) {
  Grid ng = g;
  ng.vals[axis].erase(ng.vals[axis].begin() + static_cast<std::ptrdiff_t>(i));
  ng.reshape();
  std::vector<char> nocc(ng.size, 0);
  std::size_t n = g.vals.size();
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < ng.size; ++flat) {
    std::size_t rem = flat, old = 0;
    for (std::size_t j = 0; j < n; ++j) {
      idx[j] = rem / ng.strides[j];
      rem %= ng.strides[j];
      std::size_t oi = idx[j];
      if (j == axis && oi > 2 * i) oi += 2;
      old += oi * g.strides[j];
    }
    nocc[flat] = occ[old];
  }
  g = std::move(ng);
  occ = std::move(nocc);
}

void prune(Grid& g, std::vector<char>& occ) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t axis = 0; axis < g.vals.size(); ++axis) {
      for (std::size_t i = 0; i < g.vals[axis].size(); ++i) {
        if (slices_equal(g, occ, axis, 2 * i, 2 * i + 1) && slices_equal(g, occ, axis, 2 * i, 2 * i + 2)) {
          drop_value(g, occ, axis, i);
          changed = true;
          break;
        }
      }
    }
  }
}

using Ranges = std::vector<std::pair<std::size_t, std::size_t>>;

void merge_along(std::vector<Ranges>& boxes, std::size_t axis) {
  auto key_less = [axis](const Ranges& a, const Ranges& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == axis) continue;
      if (a[j] != b[j]) return a[j] < b[j];
    }
    return a[axis] < b[axis];
  };
  std::sort(boxes.begin(), boxes.end(), key_less);
  std::vector<Ranges> out;
  for (auto& b : boxes) {
    if (!out.empty()) {
      Ranges& last = out.back();
      bool same = true;
      for (std::size_t j = 0; j < b.size() && same; ++j)
        if (j != axis && last[j] != b[j]) same = false;
      if (same && last[axis].second + 1 == b[axis].first) {
        last[axis].second = b[axis].second;
        continue;
      }
    }
    out.push_back(std::move(b));
  }
  boxes = std::move(out);
}

Interval piece_interval(const std::vector<Rational>& vals, std::size_t lo, std::size_t hi) {
  Endpoint a = Endpoint::neg_inf();
  bool a_closed = false;
  if (lo % 2 == 1) {
    a = vals[(lo - 1) / 2];
    a_closed = true;
  } else if (lo > 0) {
    a = vals[lo / 2 - 1];
  }
  Endpoint b = Endpoint::pos_inf();
  bool b_closed = false;
  if (hi % 2 == 1) {
    b = vals[(hi - 1) / 2];
    b_closed = true;
  } else if (hi < 2 * vals.size()) {
    b = vals[hi / 2];
  }
  return Interval(std::move(a), a_closed, std::move(b), b_closed);
}

}  // namespace

Region combine_regions(std::size_t n, const std::vector<const std::vector<Box>*>& inputs,
                       bool (*keep)(const std::vector<bool>& membership)) {
  if (n == 0) throw Error("regions need dimension >= 1");
  Grid g;
  g.vals.resize(n);
  for (const auto* boxes : inputs)
    for (const auto& b : *boxes) {
      if (b.dim() != n) throw Error("dimension mismatch in region operation");
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].lo().finite()) g.vals[j].push_back(b[j].lo().value());
        if (b[j].hi().finite()) g.vals[j].push_back(b[j].hi().value());
      }
    }
  for (auto& v : g.vals) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  g.reshape();

  std::vector<std::vector<char>> member(inputs.size(), std::vector<char>(g.size, 0));
  for (std::size_t r = 0; r < inputs.size(); ++r)
    for (const auto& b : *inputs[r]) mark_box(g, b, member[r]);

  std::vector<char> occ(g.size, 0);
  std::vector<bool> m(inputs.size());
  for (std::size_t c = 0; c < g.size; ++c) {
    for (std::size_t r = 0; r < inputs.size(); ++r) m[r] = member[r][c] != 0;
    occ[c] = keep(m) ? 1 : 0;
  }

  prune(g, occ);

  std::vector<Ranges> boxes;
  for (std::size_t flat = 0; flat < g.size; ++flat) {
    if (!occ[flat]) continue;
    Ranges r(n);
    std::size_t rem = flat;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t i = rem / g.strides[j];
      rem %= g.strides[j];
      r[j] = {i, i};
    }
    boxes.push_back(std::move(r));
  }
  for (std::size_t axis = n; axis-- > 0;) merge_along(boxes, axis);
  std::sort(boxes.begin(), boxes.end());

  std::vector<Box> out;
  out.reserve(boxes.size());
  for (const auto& r : boxes) {
    std::vector<Interval> dims;
    dims.reserve(n);
    for (std::size_t j = 0; j < n; ++j) dims.push_back(piece_interval(g.vals[j], r[j].first, r[j].second));
    out.emplace_back(std::move(dims));
  }
  return Region(n, std::move(out));
}

Region Region::empty(std::size_t n) {
  if (n == 0) throw Error("regions need dimension >= 1");
  return Region(n, {});
}

Region Region::full(std::size_t n) {
  if (n == 0) throw Error("regions need dimension >= 1");
  return Region(n, {Box(std::vector<Interval>(n, Interval::all()))});
}

Region Region::from_boxes(std::size_t n, const std::vector<Box>& boxes) {
  return combine_regions(n, {&boxes}, [](const std::vector<bool>& m) { return m[0]; });
}

bool Region::contains(const Point& p) const {
  if (p.size() != n_) throw Error("dimension mismatch in Region::contains");
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(p); });
}

namespace {
void require_dim(const Region& a, const Region& b) {
  if (a.dim() != b.dim()) throw Error("dimension mismatch between regions");
}
}  // namespace

Region region_union(const Region& a, const Region& b) {
  require_dim(a, b);
  return combine_regions(a.dim(), {&a.boxes(), &b.boxes()}, [](const std::vector<bool>& m) { return m[0] || m[1]; });
}

Region region_intersect(const Region& a, const Region& b) {
  require_dim(a, b);
  return combine_regions(a.dim(), {&a.boxes(), &b.boxes()}, [](const std::vector<bool>& m) { return m[0] && m[1]; });
}

Region region_difference(const Region& a, const Region& b) {
  require_dim(a, b);
  return combine_regions(a.dim(), {&a.boxes(), &b.boxes()}, [](const std::vector<bool>& m) { return m[0] && !m[1]; });
}

Region region_complement(const Region& a) { return region_difference(Region::full(a.dim()), a); }

bool region_equal(const Region& a, const Region& b) {
  require_dim(a, b);
  return a == b;
}

bool region_subset(const Region& a, const Region& b) { return region_difference(a, b).is_empty(); }

Region lower_orthant(const Point& s) {
  std::vector<Interval> dims;
  for (const auto& x : s) dims.emplace_back(Endpoint::neg_inf(), false, x, false);
  return Region::from_boxes(s.size(), {Box(std::move(dims))});
}

Region open_upper_orthant(const Point& t) {
  std::vector<Interval> dims;
  for (const auto& x : t) dims.emplace_back(x, false, Endpoint::pos_inf(), false);
  return Region::from_boxes(t.size(), {Box(std::move(dims))});
}

Region halfopen_box(const Point& a, const Point& b) {
  if (a.size() != b.size() || a.empty()) throw Error("halfopen_box: corner dimensions differ");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (b[j] < a[j]) throw Error("halfopen_box: lower corner not below upper corner");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] == b[j]) return Region::empty(a.size());
  std::vector<Interval> dims;
  for (std::size_t j = 0; j < a.size(); ++j) dims.push_back(Interval::closed_open(a[j], b[j]));
  return Region::from_boxes(a.size(), {Box(std::move(dims))});
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Region& r) {
  if (r.is_empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < r.boxes().size(); ++i) {
    if (i) out += " u ";
    out += to_string(r.boxes()[i]);
  }
  return out;
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Endpoint parse_endpoint(const std::string& s) {
  if (s == "-inf" || s == "-infinity") return Endpoint::neg_inf();
  if (s == "+inf" || s == "inf" || s == "+infinity") return Endpoint::pos_inf();
  return parse_rational(s);
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return out;
}

}  // namespace

Interval parse_interval(std::string_view text) {
  std::string s = strip(text);
  if (s.size() < 3) throw ParseError("malformed interval '" + std::string(text) + "'");
  char open = s.front(), close = s.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    throw ParseError("malformed interval '" + std::string(text) + "'");
  std::string body = s.substr(1, s.size() - 2);
  auto comma = body.find(',');
  try {
    if (comma == std::string::npos) {
      if (open != '[' || close != ']') throw ParseError("malformed interval '" + std::string(text) + "'");
      Endpoint v = parse_endpoint(body);
      return Interval(v, true, v, true);
    }
    return Interval(parse_endpoint(body.substr(0, comma)), open == '[', parse_endpoint(body.substr(comma + 1)),
                    close == ']');
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid interval '") + std::string(text) + "': " + e.what());
  }
}

Box parse_box(std::string_view text) {
  std::vector<Interval> dims;
  for (const auto& part : split(text, "x")) dims.push_back(parse_interval(part));
  return Box(std::move(dims));
}

Region parse_region(std::string_view text, std::size_t n) {
  std::string s = strip(text);
  if (s == "empty" || s == "\xE2\x88\x85") return Region::empty(n);
  std::vector<Box> boxes;
  for (const auto& part : split(text, " u ")) {
    Box b = parse_box(part);
    if (b.dim() != n) throw ParseError("region box has wrong dimension: '" + part + "'");
    boxes.push_back(std::move(b));
  }
  return Region::from_boxes(n, boxes);
}

}  // namespace lexspec
