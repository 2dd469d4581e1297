#include "lexspec/verify.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace lexspec {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error("uniform: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (index * 0xD1B54A32D192ED69ull));
  return SplitMix64(mixer.next());
}

void TrialConfig::validate() const {
  if (k_min < 1 || k_max < k_min) throw Error("TrialConfig: bad k range");
  if (d_min < 1 || d_max < d_min) throw Error("TrialConfig: bad d range");
  if (n_min < 1 || n_max < n_min || n_max > 3) throw Error("TrialConfig: n range must lie in {1,2,3}");
  if (max_atoms < 1) throw Error("TrialConfig: max_atoms must be positive");
  if (coord_denominator_bound < 1 || coord_range < 1) throw Error("TrialConfig: coordinate bounds must be positive");
  if (infinitesimal_range < 1) throw Error("TrialConfig: infinitesimal_range must be positive");
}

namespace {

DiscreteObservable draw_observable(const TrialConfig& c, SplitMix64& rng) {
  const int k = static_cast<int>(rng.uniform(c.k_min, c.k_max));
  const int d = static_cast<int>(rng.uniform(c.d_min, c.d_max));
  const auto n = static_cast<std::size_t>(rng.uniform(c.n_min, c.n_max));
  const Signature sig(k, d);
  int m = static_cast<int>(rng.uniform(1, c.max_atoms));
  if (c.positive_heights) m = std::min(m, k);

  std::set<Point> seen;
  std::vector<Point> points;
  for (int attempt = 0; attempt < 64 * m && static_cast<int>(points.size()) < m; ++attempt) {
    Point p(n);
    for (auto& x : p) {
      std::int64_t den = rng.uniform(1, c.coord_denominator_bound);
      std::int64_t num = rng.uniform(-c.coord_range * den, c.coord_range * den);
      x = Rational(num, den);
    }
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  m = static_cast<int>(points.size());

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<int> heights(static_cast<std::size_t>(m), c.positive_heights ? 1 : 0);
    for (int unit = c.positive_heights ? m : 0; unit < k; ++unit)
      ++heights[static_cast<std::size_t>(rng.uniform(0, m - 1))];
    // The balancing atom absorbs the infinitesimal remainder: an interior
    // height if one exists, else the unique atom of height k.
    std::size_t balancer = 0;
    for (std::size_t i = 0; i < heights.size(); ++i)
      if (heights[i] > 0 && heights[i] < k) balancer = i;
    if (heights[balancer] == 0 || heights[balancer] == k)
      for (std::size_t i = 0; i < heights.size(); ++i)
        if (heights[i] == k) balancer = i;

    std::vector<Atom> atoms;
    std::vector<Integer> remainder(static_cast<std::size_t>(d), Integer(0));
    for (std::size_t i = 0; i < heights.size(); ++i) {
      std::vector<Integer> g(static_cast<std::size_t>(d));
      if (i != balancer) {
        std::int64_t lo = heights[i] == 0 ? 0 : -c.infinitesimal_range;
        std::int64_t hi = heights[i] == k ? 0 : c.infinitesimal_range;
        bool nonzero = false;
        for (auto& x : g) {
          x = rng.uniform(lo, hi);
          nonzero = nonzero || x != 0;
        }
        if (heights[i] == 0 && !nonzero) g[static_cast<std::size_t>(rng.uniform(0, d - 1))] = rng.uniform(1, c.infinitesimal_range);
        for (int j = 0; j < d; ++j) remainder[static_cast<std::size_t>(j)] -= g[static_cast<std::size_t>(j)];
      }
      atoms.push_back({points[i], LexElement(sig, heights[i], std::move(g))});
    }
    atoms[balancer].weight = LexElement(sig, heights[balancer], remainder);
    try {
      return DiscreteObservable::make(sig, n, std::move(atoms));
    } catch (const Error&) {
      // Rejected draw; try again.
    }
  }
  return DiscreteObservable::make(sig, n, {{points.front(), LexElement::unit(sig)}});
}

}  // namespace

DiscreteObservable random_observable(const TrialConfig& config, std::uint64_t index) {
  config.validate();
  SplitMix64 rng = trial_rng(config.seed, index);
  return draw_observable(config, rng);
}

DiscreteObservable saturating_family(int k) {
  Signature sig(k, 1);
  std::vector<Atom> atoms;
  for (int j = 1; j <= k; ++j) atoms.push_back({{Rational(j), Rational(k + 1 - j)}, LexElement(sig, 1, {0})});
  return DiscreteObservable::make(sig, 2, std::move(atoms));
}

StepResolution pathological_family(int m, int k, PathologyShape shape) {
  if (m < 1 || k < 1) throw Error("pathological_family requires m >= 1 and k >= 1");
  Signature sig(k, 1);
  std::vector<Point> corners;
  for (int j = 1; j <= m; ++j) {
    if (shape == PathologyShape::Staircase) {
      corners.push_back({Rational(j), Rational(m + 1 - j)});
    } else {
      Rational half_pow(1, Integer(1) << j);
      corners.push_back({1 - half_pow, half_pow});
    }
  }
  std::vector<std::vector<Rational>> bps(2);
  Point top = corners.front();
  for (const auto& c : corners)
    for (std::size_t j = 0; j < 2; ++j) {
      bps[j].push_back(c[j]);
      top[j] = std::max(top[j], c[j]);
    }
  for (auto& v : bps) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  // A cell (b_{c-1}, b_c] lies strictly above coordinate x iff x <= b_{c-1}.
  auto above = [&](std::size_t axis, std::size_t cell, const Rational& x) {
    return cell > 0 && x <= bps[axis][cell - 1];
  };
  std::vector<LexElement> values;
  for (std::size_t a = 0; a <= bps[0].size(); ++a)
    for (std::size_t b = 0; b <= bps[1].size(); ++b) {
      if (above(0, a, top[0]) && above(1, b, top[1])) {
        values.push_back(LexElement::unit(sig));
        continue;
      }
      bool in_union = std::any_of(corners.begin(), corners.end(),
                                  [&](const Point& c) { return above(0, a, c[0]) && above(1, b, c[1]); });
      values.push_back(in_union ? LexElement(sig, 1, {0}) : LexElement::zero(sig));
    }
  return StepResolution::from_cells(sig, 2, std::move(bps), std::move(values));
}

StepResolution mismatch_resolution() {
  Signature sig(2, 1);
  DiscreteObservable x = DiscreteObservable::make(sig, 2,
                                                  {
                                                      {{1, 3}, LexElement(sig, 1, {2})},
                                                      {{3, 2}, LexElement(sig, 1, {-3})},
                                                      {{2, 0}, LexElement(sig, 0, {1})},
                                                  });
  StepResolution f = StepResolution::from_observable(x);
  return StepResolution::from_cells(sig, 2, f.breakpoints(), f.values());
}

void Summary::merge(const Summary& other) {
  trials += other.trials;
  for (const auto& [name, c] : other.checks) {
    auto& mine = checks[name];
    mine.passed += c.passed;
    mine.failed += c.failed;
    mine.skipped += c.skipped;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  std::stable_sort(failures.begin(), failures.end(),
                   [](const TrialFailure& a, const TrialFailure& b) { return a.index < b.index; });
}

const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> names = {
      "axioms",       "unique_top_charpoint", "level_bounds",   "rays",           "block_cube",
      "block_points", "observable_laws",      "point_mass",     "reconstruction", "perfect_case",
  };
  return names;
}

bool atoms_at_adjoined_points(const DiscreteObservable& x, const BlockReport& report) {
  std::set<ExtPoint> adjoined;
  for (const auto& level : report.blocks)
    for (const auto& b : level)
      if (b.t0_adjoined) adjoined.insert(b.char_point);
  for (const auto& a : x.atoms()) {
    ExtPoint p(a.point.begin(), a.point.end());
    if (!adjoined.count(p)) return false;
  }
  return true;
}

namespace {

Region random_region(const DiscreteObservable& x, SplitMix64& rng) {
  std::size_t n = x.dim();
  std::vector<std::vector<Rational>> coords(n);
  for (const auto& a : x.atoms())
    for (std::size_t j = 0; j < n; ++j) {
      coords[j].push_back(a.point[j]);
      coords[j].push_back(a.point[j] + Rational(1, 2));
    }
  auto pick_end = [&](std::size_t j) -> Endpoint {
    if (rng.uniform(0, 7) == 0) return rng.uniform(0, 1) ? Endpoint::pos_inf() : Endpoint::neg_inf();
    return coords[j][static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(coords[j].size()) - 1))];
  };
  std::vector<Box> boxes;
  int count = static_cast<int>(rng.uniform(1, 3));
  for (int b = 0; b < count; ++b) {
    std::vector<Interval> dims;
    for (std::size_t j = 0; j < n; ++j) {
      Endpoint lo = pick_end(j), hi = pick_end(j);
      if (hi < lo) std::swap(lo, hi);
      bool lo_closed = lo.finite() && rng.uniform(0, 1);
      bool hi_closed = hi.finite() && rng.uniform(0, 1);
      if (lo == hi) {
        if (!lo.finite()) {
          dims.push_back(Interval::all());
          continue;
        }
        lo_closed = hi_closed = true;
      }
      dims.emplace_back(lo, lo_closed, hi, hi_closed);
    }
    boxes.emplace_back(std::move(dims));
  }
  return Region::from_boxes(n, boxes);
}

std::string check_observable_laws(const DiscreteObservable& x, SplitMix64& rng) {
  for (int round = 0; round < 3; ++round) {
    Region a = random_region(x, rng);
    Region b = random_region(x, rng);
    LexElement xa = x.eval(a), xb = x.eval(b);
    if (x.eval(region_complement(a)) != mv_neg(xa)) return "complement law fails on " + to_string(a);
    Region ab = region_union(a, b);
    LexElement xab = x.eval(ab);
    if (!lex_le(xa, xab)) return "monotonicity fails for " + to_string(a) + " within " + to_string(ab);
    if (x.eval(region_difference(ab, a)) != xab - xa) return "difference law fails on " + to_string(ab);
    LexElement xmeet = x.eval(region_intersect(a, b));
    if (xa + xb != xab + xmeet) return "modularity fails for " + to_string(a) + " and " + to_string(b);
    if (partial_add(xa, xb).has_value() != partial_add(xab, xmeet).has_value())
      return "modularity definedness differs for " + to_string(a) + " and " + to_string(b);
    if (x.eval(Region::full(x.dim())) != LexElement::unit(x.signature())) return "x(R^n) != 1";
    if (!x.eval(Region::empty(x.dim())).is_zero()) return "x(empty) != 0";
  }
  return {};
}

std::string check_point_masses(const DiscreteObservable& x, const StepResolution& f) {
  for (const auto& a : x.atoms())
    if (point_mass_via_deltas(f, a.point) != a.weight)
      return "point mass at " + to_string(a.point) + " is " + to_string(point_mass_via_deltas(f, a.point));
  // Every grid point that carries no atom has zero mass.
  std::size_t n = f.dim();
  CellIndex idx(n, 0);
  while (true) {
    Point p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = f.breakpoints(j)[idx[j]];
    if (point_mass_via_deltas(f, p) != x.point_mass(p)) return "point mass mismatch at grid point " + to_string(p);
    std::size_t j = n;
    while (j-- > 0) {
      if (++idx[j] < f.breakpoints(j).size()) break;
      idx[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return {};
}

}  // namespace

Summary run_trial(const DiscreteObservable& x, SplitMix64& rng, std::uint64_t index) {
  Summary s;
  s.trials = 1;
  auto record = [&](const std::string& name, bool applicable, const std::string& failure) {
    auto& c = s.checks[name];
    if (!applicable) {
      ++c.skipped;
    } else if (failure.empty()) {
      ++c.passed;
    } else {
      ++c.failed;
      s.failures.push_back({index, name, failure});
    }
  };

  const int k = x.signature().k;
  StepResolution f = StepResolution::from_observable(x);
  AxiomReport axioms = check_axioms(f);
  std::string axiom_failure;
  for (const auto& r : axioms.results)
    if (!r.passed && axiom_failure.empty()) axiom_failure = r.name + ": " + r.witness;
  record("axioms", true, axiom_failure);

  BlockReport report = all_blocks(f);
  std::size_t top = report.blocks[static_cast<std::size_t>(k)].size();
  record("unique_top_charpoint", true, top == 1 ? "" : "T_k has " + std::to_string(top) + " characteristic points");

  BoundsReport bounds = bounds_check(report, k);
  record("level_bounds", true, bounds.passed ? "" : bounds.witness);

  if (x.dim() == 2) {
    std::string ray_failure;
    for (const auto& p : report.char_points()) {
      CheckResult r = rays_check(f, p);
      if (!r.passed) {
        ray_failure = r.witness;
        break;
      }
    }
    record("rays", true, ray_failure);
  } else {
    record("rays", false, "");
  }

  CheckResult cube = block_cube_check(f, report);
  record("block_cube", true, cube.passed ? "" : cube.witness);

  std::string bijection;
  for (const auto& level : report.blocks) {
    std::set<ExtPoint> pts;
    for (const auto& b : level) pts.insert(b.char_point);
    if (pts.size() != level.size()) bijection = "two blocks share a characteristic point";
  }
  record("block_points", true, bijection);

  record("observable_laws", true, check_observable_laws(x, rng));
  record("point_mass", true, check_point_masses(x, f));

  if (atoms_at_adjoined_points(x, report)) {
    ReconstructResult r = reconstruct(f);
    std::string failure;
    if (r.status != ReconstructResult::Status::Ok)
      failure = std::string(to_string(r.status)) + ": " + r.detail;
    else if (*r.observable != x)
      failure = "reconstructed observable differs from the input";
    record("reconstruction", true, failure);
  } else {
    record("reconstruction", false, "");
  }

  if (k == 1) {
    std::string failure;
    const Atom* heavy = nullptr;
    for (const auto& a : x.atoms())
      if (a.weight.height() == 1) heavy = &a;
    if (!heavy) {
      failure = "no atom of height 1";
    } else {
      LevelDecomposition levels = level_regions(f);
      if (levels.regions[1] != open_upper_orthant(heavy->point))
        failure = "T_1 = " + to_string(levels.regions[1]) + " is not the open orthant above " + to_string(heavy->point);
      else if (point_mass_via_deltas(f, heavy->point).height() != 1)
        failure = "point mass at the characteristic point is not in Rad(M)'";
      else if (report.blocks[1].size() != 1 || report.blocks[1][0].char_point != ExtPoint(heavy->point.begin(), heavy->point.end()))
        failure = "T_1 characteristic point is not " + to_string(heavy->point);
    }
    record("perfect_case", true, failure);
  } else {
    record("perfect_case", false, "");
  }
  return s;
}

Summary run_suite(const TrialConfig& config) {
  config.validate();
  Summary total;
  total.seed = config.seed;
  for (const auto& name : suite_checks()) total.checks[name];
  if (config.trials == 0) return total;

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.trials));
  std::vector<Summary> partial(threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t i = t; i < config.trials; i += threads) {
      SplitMix64 rng = trial_rng(config.seed, i);
      DiscreteObservable x = draw_observable(config, rng);
      partial[t].merge(run_trial(x, rng, i));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace lexspec
