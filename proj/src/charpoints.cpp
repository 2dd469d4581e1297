#include "lexspec/charpoints.hpp"

#include <algorithm>
#include <set>

namespace lexspec {

std::string to_string(const ExtPoint& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) out += ",";
    out += to_string(p[j]);
  }
  return out + ")";
}

LevelDecomposition level_regions(const StepResolution& f) {
  const int k = f.signature().k;
  std::vector<std::vector<Box>> per_level(static_cast<std::size_t>(k) + 1);
  for (std::size_t flat = 0; flat < f.cell_count(); ++flat)
    per_level[static_cast<std::size_t>(height_class(f.value(flat)))].push_back(f.cell_box(f.unflat(flat)));
  LevelDecomposition out;
  for (const auto& boxes : per_level) out.regions.push_back(Region::from_boxes(f.dim(), boxes));
  out.pathological = !check_axioms(f).all_passed();
  return out;
}

namespace {

// Lowest cell index of the contiguous run of same-level cells below c along
// `axis`.
std::size_t run_start(const StepResolution& f, const CellIndex& c, std::size_t axis) {
  int level = f.level(c);
  CellIndex probe = c;
  while (probe[axis] > 0) {
    --probe[axis];
    if (f.level(probe) != level) return probe[axis] + 1;
  }
  return 0;
}

Endpoint start_endpoint(const StepResolution& f, std::size_t axis, std::size_t start) {
  if (start == 0) return Endpoint::neg_inf();
  return f.breakpoints(axis)[start - 1];
}

CellIndex char_key(const StepResolution& f, const CellIndex& c) {
  CellIndex key(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) key[j] = run_start(f, c, j);
  return key;
}

}  // namespace

Endpoint projection(const StepResolution& f, const Point& s, std::size_t axis) {
  if (axis >= f.dim()) throw Error("projection: axis out of range");
  CellIndex c = f.cell_of(s);
  if (f.level(c) == 0) throw Error("projection: " + to_string(s) + " lies in T_0");
  return start_endpoint(f, axis, run_start(f, c, axis));
}

ExtPoint char_point(const StepResolution& f, const Point& s) {
  ExtPoint p;
  for (std::size_t j = 0; j < f.dim(); ++j) p.push_back(projection(f, s, j));
  return p;
}

std::optional<LexElement> block_infimum(const StepResolution& f, const Block& b) {
  if (b.cells.empty()) return std::nullopt;
  LexElement m = f.value(b.cells.front());
  for (const auto& c : b.cells) m = meet(m, f.value(c));
  if (height_class(m) != b.level) return std::nullopt;
  return m;
}

bool t0_adjoined(const StepResolution& f, const Block& b) {
  for (const auto& c : b.cells) {
    bool all_zero = true;
    for (std::size_t j = 0; j < f.dim() && all_zero; ++j) {
      std::size_t start = run_start(f, c, j);
      if (start == 0) {
        all_zero = false;
        break;
      }
      CellIndex landed = c;
      landed[j] = start - 1;
      all_zero = f.level(landed) == 0;
    }
    if (all_zero) return true;
  }
  return false;
}

std::vector<Block> blocks(const StepResolution& f, int level) {
  if (level < 1 || level > f.signature().k) throw Error("blocks: level out of range");
  std::map<CellIndex, std::vector<CellIndex>> groups;
  for (std::size_t flat = 0; flat < f.cell_count(); ++flat) {
    CellIndex c = f.unflat(flat);
    if (f.level(c) != level) continue;
    groups[char_key(f, c)].push_back(std::move(c));
  }
  std::vector<Block> out;
  for (auto& [key, cells] : groups) {
    Block b;
    b.level = level;
    for (std::size_t j = 0; j < f.dim(); ++j) b.char_point.push_back(start_endpoint(f, j, key[j]));
    std::vector<Box> boxes;
    for (const auto& c : cells) boxes.push_back(f.cell_box(c));
    b.region = Region::from_boxes(f.dim(), boxes);
    b.cells = std::move(cells);

    const CellIndex& lowest = b.cells.front();
    bool finite = true;
    for (std::size_t j = 0; j < f.dim(); ++j) {
      if (key[j] == 0) {
        b.landing_levels.push_back(std::nullopt);
        finite = false;
        continue;
      }
      CellIndex landed = lowest;
      landed[j] = key[j] - 1;
      b.landing_levels.push_back(f.level(landed));
    }
    if (finite) {
      CellIndex at(f.dim());
      for (std::size_t j = 0; j < f.dim(); ++j) at[j] = key[j] - 1;
      b.char_level = f.level(at);
    }
    b.t0_adjoined = t0_adjoined(f, b);
    b.infimum = block_infimum(f, b);
    b.pathological = !finite || !b.infimum ||
                     std::any_of(b.landing_levels.begin(), b.landing_levels.end(),
                                 [&](const std::optional<int>& l) { return l && *l >= level; });
    out.push_back(std::move(b));
  }
  return out;
}

BlockReport all_blocks(const StepResolution& f) {
  BlockReport r;
  r.n = f.dim();
  r.k = f.signature().k;
  r.blocks.resize(static_cast<std::size_t>(r.k) + 1);
  for (int i = 1; i <= r.k; ++i) {
    r.blocks[static_cast<std::size_t>(i)] = blocks(f, i);
    for (const auto& b : r.blocks[static_cast<std::size_t>(i)]) r.pathological = r.pathological || b.pathological;
  }
  return r;
}

std::vector<std::size_t> BlockReport::counts() const {
  std::vector<std::size_t> c;
  for (const auto& level : blocks) c.push_back(level.size());
  return c;
}

std::size_t BlockReport::total() const {
  std::size_t t = 0;
  for (const auto& level : blocks) t += level.size();
  return t;
}

std::vector<ExtPoint> BlockReport::char_points() const {
  std::set<ExtPoint> s;
  for (const auto& level : blocks)
    for (const auto& b : level) s.insert(b.char_point);
  return {s.begin(), s.end()};
}

std::string_view to_string(ReconstructResult::Status s) {
  switch (s) {
    case ReconstructResult::Status::Ok: return "ok";
    case ReconstructResult::Status::NotReconstructible: return "not_reconstructible";
    case ReconstructResult::Status::Pathological: return "pathological";
    case ReconstructResult::Status::Mismatch: return "mismatch";
  }
  return "?";
}

ReconstructResult reconstruct(const StepResolution& f) {
  using Status = ReconstructResult::Status;
  ReconstructResult res;
  BlockReport report = all_blocks(f);
  std::vector<LexElement> weights;
  for (const auto& level : report.blocks)
    for (const auto& b : level) {
      if (!b.t0_adjoined) continue;
      if (!b.infimum) {
        res.status = Status::Pathological;
        res.detail = "block " + to_string(b.char_point) + " of T_" + std::to_string(b.level) + " has no infimum in M_" +
                     std::to_string(b.level);
        return res;
      }
      Point p;
      for (const auto& e : b.char_point) {
        if (!e.finite()) {
          res.status = Status::Pathological;
          res.detail = "characteristic point " + to_string(b.char_point) + " is not finite";
          return res;
        }
        p.push_back(e.value());
      }
      res.candidate.push_back({std::move(p), *b.infimum});
      weights.push_back(*b.infimum);
    }
  std::sort(res.candidate.begin(), res.candidate.end(), [](const Atom& a, const Atom& b) { return a.point < b.point; });

  auto total = sum_finite(f.signature(), weights);
  if (!total || *total != LexElement::unit(f.signature())) {
    res.status = Status::NotReconstructible;
    res.detail = total ? "block infima sum to " + to_string(*total) + ", not 1" : "block infima are not summable";
    return res;
  }
  for (std::size_t i = 1; i < res.candidate.size(); ++i)
    if (res.candidate[i - 1].point == res.candidate[i].point) {
      res.status = Status::Pathological;
      res.detail = "two T_0-adjoined blocks share characteristic point " + to_string(res.candidate[i].point);
      return res;
    }
  DiscreteObservable x = DiscreteObservable::make(f.signature(), f.dim(), res.candidate);
  StepResolution fx = StepResolution::from_observable(x);
  for (std::size_t flat = 0; flat < f.cell_count(); ++flat) {
    CellIndex c = f.unflat(flat);
    LexElement other = eval_F(fx, f.representative(c));
    if (other != f.value(flat)) {
      res.status = Status::Mismatch;
      res.detail = "F differs from the resolution of the reconstructed observable at " + to_string(f.representative(c));
      res.witness_cell = c;
      res.f_value = f.value(flat);
      res.candidate_value = other;
      return res;
    }
  }
  res.observable = std::move(x);
  return res;
}

BoundsReport bounds_check(const BlockReport& report, int k) {
  BoundsReport out;
  out.counts = report.counts();
  out.counts.resize(static_cast<std::size_t>(k) + 1, 0);
  out.limits.assign(static_cast<std::size_t>(k) + 1, 0);
  out.total = report.total();
  out.total_limit = static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2;
  for (int i = 1; i <= k; ++i) {
    std::size_t limit = static_cast<std::size_t>(std::min(k, k - i + 1));
    out.limits[static_cast<std::size_t>(i)] = limit;
    if (out.counts[static_cast<std::size_t>(i)] > limit && out.passed) {
      out.passed = false;
      out.witness = "T_" + std::to_string(i) + " has " + std::to_string(out.counts[static_cast<std::size_t>(i)]) +
                    " characteristic points, limit " + std::to_string(limit);
    }
  }
  if (out.total > out.total_limit && out.passed) {
    out.passed = false;
    out.witness = std::to_string(out.total) + " characteristic points in total, limit " + std::to_string(out.total_limit);
  }
  return out;
}

namespace {

// Sample coordinates hitting every cell of an axis and every breakpoint.
std::vector<Rational> probe_coordinates(const StepResolution& f, std::size_t axis) {
  const auto& b = f.breakpoints(axis);
  std::vector<Rational> out;
  if (b.empty()) return {Rational(0)};
  out.push_back(b.front() - 1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.push_back(b[i]);
    out.push_back(i + 1 < b.size() ? (b[i] + b[i + 1]) / 2 : b[i] + 1);
  }
  return out;
}

// One direction of the ray lemma: along = axis crossed by the ray, the ray
// itself runs parallel to axis `across`.
CheckResult ray_direction(const StepResolution& f, const ExtPoint& p, std::size_t along, std::size_t across) {
  CheckResult out;
  if (!p[along].finite() || !p[across].finite()) return out;
  const Rational& p_along = p[along].value();
  const Rational& p_across = p[across].value();
  auto level_at = [&](const Rational& a, const Rational& c) {
    Point s(2);
    s[along] = a;
    s[across] = c;
    return f.level(f.cell_of(s));
  };
  auto coords = probe_coordinates(f, along);
  for (const auto& t : probe_coordinates(f, across)) {
    if (!(p_across < t)) continue;
    int below_max = -1, above_min = f.signature().k + 1;
    Rational s1, s2;
    for (const auto& s : coords) {
      int l = level_at(s, t);
      if (s <= p_along) {
        if (l > below_max) { below_max = l; s1 = s; }
      } else if (l < above_min) {
        above_min = l;
        s2 = s;
      }
    }
    if (below_max >= 0 && above_min <= f.signature().k && !(below_max < above_min)) {
      out.passed = false;
      out.witness = "ray through " + to_string(p) + " at " + to_string(t) + ": level " + std::to_string(below_max) +
                    " at " + to_string(s1) + " vs level " + std::to_string(above_min) + " at " + to_string(s2);
      return out;
    }
  }
  return out;
}

}  // namespace

CheckResult rays_check(const StepResolution& f, const ExtPoint& p) {
  if (f.dim() != 2 || p.size() != 2) throw Error("rays_check requires n = 2");
  CheckResult vertical = ray_direction(f, p, 0, 1);
  if (!vertical.passed) return vertical;
  return ray_direction(f, p, 1, 0);
}

CheckResult block_cube_check(const StepResolution& f, const BlockReport& report) {
  CheckResult out;
  std::size_t n = f.dim();
  for (const auto& level : report.blocks)
    for (const auto& b : level) {
      CellIndex corner(n);
      bool finite = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b.char_point[j].finite()) finite = false;
        else corner[j] = f.axis_cell(j, b.char_point[j].value()) + 1;
      }
      if (!finite) continue;
      std::set<std::size_t> members;
      for (const auto& c : b.cells) members.insert(f.flat(c));
      for (const auto& s : b.cells) {
        bool dominated = true;
        for (std::size_t j = 0; j < n; ++j) dominated = dominated && corner[j] <= s[j];
        if (!dominated) {
          out.passed = false;
          out.witness = "block " + to_string(b.char_point) + " has a member not above its characteristic point";
          return out;
        }
        CellIndex t = corner;
        while (true) {
          if (!members.count(f.flat(t))) {
            out.passed = false;
            out.witness = "cell " + to_string(f.representative(t)) + " lies between " + to_string(b.char_point) +
                          " and block member " + to_string(f.representative(s)) + " but is outside the block";
            return out;
          }
          std::size_t j = n;
          while (j-- > 0) {
            if (++t[j] <= s[j]) break;
            t[j] = corner[j];
          }
          if (j == static_cast<std::size_t>(-1)) break;
        }
      }
    }
  return out;
}

std::optional<std::size_t> max_antichain(const BlockReport& report) {
  if (report.n != 2) return std::nullopt;
  std::vector<ExtPoint> pts = report.char_points();  // sorted by (x, y) ascending
  // Longest strictly decreasing subsequence in y; equal x never qualifies
  // because y ascends within equal x.
  std::vector<std::size_t> best(pts.size(), 1);
  std::size_t answer = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (pts[j][0] < pts[i][0] && pts[i][1] < pts[j][1]) best[i] = std::max(best[i], best[j] + 1);
    answer = std::max(answer, best[i]);
  }
  return answer;
}

}  // namespace lexspec
